// End-to-end exit-code and determinism checks for the command line tool.
// argv[1] = path to the binary, argv[2] = directory with descriptor fixtures.
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

namespace {

int failures = 0;

#define EXPECT(cond, msg)                            \
    do {                                             \
        if (!(cond)) {                               \
            std::fprintf(stderr, "FAIL: %s\n", msg); \
            ++failures;                              \
        }                                            \
    } while (0)

std::string g_bin, g_data, g_tmp;

int run(const std::string& args, const std::string& outfile) {
    std::string cmd = g_bin + " " + args + " > " + outfile + " 2>&1";
    int status = std::system(cmd.c_str());
    if (status < 0) return -1;
    return WEXITSTATUS(status);
}

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

bool contains(const std::string& hay, const std::string& needle) {
    return hay.find(needle) != std::string::npos;
}

}  // namespace

int main(int argc, char** argv) {
    if (argc < 3) {
        std::fprintf(stderr, "usage: test_cli <binary> <data dir>\n");
        return 2;
    }
    g_bin = argv[1];
    g_data = argv[2];
    g_tmp = "cli_out";

    // exit 0 on a valid descriptor
    EXPECT(run("semiring check " + g_data + "/bool2.json", g_tmp + "1") == 0,
           "valid semiring should exit 0");

    // exit 1 with a witness on a broken table
    EXPECT(run("semiring check " + g_data + "/broken_z2.json --format json", g_tmp + "2") == 1,
           "broken semiring should exit 1");
    EXPECT(contains(slurp(g_tmp + "2"), "witness"), "failure report should carry a witness");
    EXPECT(contains(slurp(g_tmp + "2"), "\"status\":\"fail\""), "json status should be fail");

    // exit 2 on malformed json, unknown subcommands, bad flags
    EXPECT(run("semiring check " + g_data + "/malformed.json", g_tmp + "3") == 2,
           "malformed json should exit 2");
    EXPECT(run("frobnicate", g_tmp + "4") == 2, "unknown subcommand should exit 2");
    EXPECT(run("duality report --format yaml", g_tmp + "5") == 2, "bad format should exit 2");

    // checked-property failure: a non-surjective table space
    EXPECT(run("space validate --space " + g_data + "/broken_space.json --depth 2", g_tmp + "6") == 1,
           "broken space should exit 1");
    EXPECT(run("space validate --space cantor --depth 6", g_tmp + "7") == 0,
           "cantor should validate");

    // measure evaluation on fixtures
    EXPECT(run("measure eval --space cantor --semiring bool2 --measure " + g_data +
                   "/dirac_z.json --clopen " + g_data + "/clopen_b0.json --format json",
               g_tmp + "8") == 0,
           "measure eval should exit 0");
    EXPECT(contains(slurp(g_tmp + "8"), "\"value\":1"), "dirac at z gives b0 measure 1");

    // witness subcommand answers both ways with exit 0
    EXPECT(run("measure witness --space cantor --semiring zmod:2 --constraints " + g_data +
                   "/constraints_b0.json --format json",
               g_tmp + "9") == 0,
           "witness should exit 0");
    EXPECT(contains(slurp(g_tmp + "9"), "\"satisfiable\":true"), "b0 constraint is satisfiable");
    EXPECT(run("measure witness --space cantor --semiring zmod:2 --constraints " + g_data +
                   "/constraints_unsat.json --format json",
               g_tmp + "10") == 0,
           "unsat witness should still exit 0");
    EXPECT(contains(slurp(g_tmp + "10"), "\"satisfiable\":false"), "contradiction is unsatisfiable");

    // semimodule descriptors go through the same check subcommand
    EXPECT(run("semiring check " + g_data + "/module_chain3.json", g_tmp + "m") == 0,
           "valid semimodule should exit 0");

    // pushing a dirac along the first character lands on the constant stage
    EXPECT(run("measure pushforward --space cantor --semiring bool2 --measure " + g_data +
                   "/dirac_z.json --map " + g_data + "/first_bit.json --depth 3 --format json",
               g_tmp + "p") == 0,
           "pushforward should exit 0");
    EXPECT(contains(slurp(g_tmp + "p"), "[[1,0],[1,0],[1,0],[1,0]]"),
           "pushed dirac concentrates on the zero cell");

    // density stages for a tropical dirac
    EXPECT(run("density compute --space cantor --semiring trop_trunc:2 --measure " + g_data +
                   "/finsupp_z2.json --depth 3 --format json",
               g_tmp + "11") == 0,
           "density compute should exit 0");
    EXPECT(contains(slurp(g_tmp + "11"), "\"stabilised\":true"), "finsupp densities stabilise");

    // oracle subcommands
    EXPECT(run("duality report --size 2 --semiring bool2 --format json", g_tmp + "12") == 0,
           "duality report should pass");
    EXPECT(contains(slurp(g_tmp + "12"), "\"atom_count\":4"), "bool2 on two points has 4 atoms");
    EXPECT(run("monad laws --semiring zmod:2 --format json", g_tmp + "13") == 0,
           "monad laws should pass");
    EXPECT(run("roundtrip check --semiring trop_trunc:2 --space cantor --depth 5 --cases 200 "
               "--seed 7 --format json",
               g_tmp + "14") == 0,
           "roundtrip check should pass");

    // an empty run reports no-op rather than pass
    EXPECT(run("roundtrip check --semiring bool2 --space cantor --cases 0 --format json",
               g_tmp + "n") == 0,
           "empty roundtrip run should exit 0");
    EXPECT(contains(slurp(g_tmp + "n"), "\"status\":\"no-op\""), "empty run reports no-op");

    // fixed seed means byte-identical json output
    EXPECT(run("props run --cases 40 --seed 9 --format json", g_tmp + "15a") == 0,
           "props run should pass");
    EXPECT(run("props run --cases 40 --seed 9 --format json", g_tmp + "15b") == 0,
           "props run rerun should pass");
    EXPECT(slurp(g_tmp + "15a") == slurp(g_tmp + "15b"), "json output must be deterministic");
    EXPECT(!slurp(g_tmp + "15a").empty(), "props run must produce output");

    if (failures) {
        std::fprintf(stderr, "%d cli check(s) failed\n", failures);
        return 1;
    }
    std::printf("all cli checks passed\n");
    return 0;
}
