#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "profsemi/duality.hpp"
#include "profsemi/json_io.hpp"
#include "profsemi/props.hpp"

using namespace profsemi;

namespace {

// exit codes: 0 all pass, 1 a checked property failed, 2 usage or descriptor error
constexpr int kPass = 0;
constexpr int kFail = 1;
constexpr int kUsage = 2;

FiniteSemiring load_semiring(const std::string& spec) {
    if (spec.find(".json") != std::string::npos || spec.find('/') != std::string::npos)
        return semiring_from_json(load_json_file(spec));
    return builtin_semiring_spec(spec);
}

Space load_space(const std::string& spec) {
    if (spec.find(".json") != std::string::npos || spec.find('/') != std::string::npos)
        return space_from_json(load_json_file(spec));
    return make_space_spec(spec);
}

void print_text(const ojson& j, int indent) {
    std::string pad(indent, ' ');
    if (j.is_object()) {
        for (auto it = j.begin(); it != j.end(); ++it) {
            if (it->is_object() || it->is_array()) {
                std::cout << pad << it.key() << ":\n";
                print_text(*it, indent + 2);
            } else {
                std::cout << pad << it.key() << ": " << it->dump() << "\n";
            }
        }
    } else if (j.is_array()) {
        for (const auto& e : j) {
            if (e.is_object() || e.is_array()) {
                std::cout << pad << "-\n";
                print_text(e, indent + 2);
            } else {
                std::cout << pad << "- " << e.dump() << "\n";
            }
        }
    } else {
        std::cout << pad << j.dump() << "\n";
    }
}

int emit(const std::string& command, const std::string& status, ojson body,
         const std::string& format) {
    ojson envelope;
    envelope["version"] = 1;
    envelope["command"] = command;
    envelope["status"] = status;
    for (auto it = body.begin(); it != body.end(); ++it) envelope[it.key()] = *it;
    if (format == "json")
        std::cout << envelope.dump() << "\n";
    else
        print_text(envelope, 0);
    if (status == "pass" || status == "no-op") return kPass;
    return kFail;
}

ojson suites_to_json(const std::vector<SuiteResult>& results) {
    ojson arr = ojson::array();
    for (const auto& r : results) {
        ojson e;
        e["suite"] = r.name;
        e["status"] = r.pass ? "pass" : "fail";
        e["cases"] = r.cases;
        if (!r.witness.empty()) e["witness"] = r.witness;
        arr.push_back(e);
    }
    return arr;
}

ojson point_to_json(const Point& p) {
    ojson j;
    int lvl = std::max(p.prefix_level(), 0);
    j["level"] = lvl;
    j["cell"] = p.at(lvl);
    return j;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"finite semirings, profinite spaces and semiring-valued measures"};
    app.require_subcommand(1);
    app.fallthrough();  // global flags may follow the subcommand

    std::string format = "text";
    app.add_option("--format", format, "output format")->check(CLI::IsMember({"text", "json"}));

    std::string semiring_spec = "bool2", space_spec = "cantor";
    int depth = 5, cases = 1000, max_base = 2;
    std::uint64_t seed = 7;
    long long budget = 1 << 17;

    // semiring check / builtins
    auto* sr = app.add_subcommand("semiring", "validate semiring and semimodule descriptors");
    auto* sr_check = sr->add_subcommand("check", "validate a descriptor file");
    std::string check_file;
    sr_check->add_option("file", check_file, "descriptor JSON")->required();
    auto* sr_builtins = sr->add_subcommand("builtins", "list and validate the builtin families");

    // space validate
    auto* sp = app.add_subcommand("space", "inverse-system spaces");
    auto* sp_validate = sp->add_subcommand("validate", "check transition surjectivity");
    sp_validate->add_option("--space", space_spec, "space spec or descriptor path");
    sp_validate->add_option("--depth", depth, "levels to check");

    // measure eval / pushforward / witness
    auto* me = app.add_subcommand("measure", "measures on a space");
    std::string measure_file, clopen_file, map_file, constraints_file;
    auto* me_eval = me->add_subcommand("eval", "evaluate a measure on a clopen");
    me_eval->add_option("--space", space_spec);
    me_eval->add_option("--semiring", semiring_spec);
    me_eval->add_option("--measure", measure_file)->required();
    me_eval->add_option("--clopen", clopen_file)->required();
    me_eval->add_option("--depth", depth);
    auto* me_push = me->add_subcommand("pushforward", "push a measure along a continuous map");
    me_push->add_option("--space", space_spec);
    me_push->add_option("--semiring", semiring_spec);
    me_push->add_option("--measure", measure_file)->required();
    me_push->add_option("--map", map_file)->required();
    me_push->add_option("--depth", depth);
    auto* me_wit = me->add_subcommand("witness", "find a finitely supported measure for constraints");
    me_wit->add_option("--space", space_spec);
    me_wit->add_option("--semiring", semiring_spec);
    me_wit->add_option("--constraints", constraints_file)->required();
    me_wit->add_option("--depth", depth);

    // density compute
    auto* de = app.add_subcommand("density", "density functions of idempotent-valued measures");
    auto* de_compute = de->add_subcommand("compute", "stage and pointwise data of the density");
    de_compute->add_option("--space", space_spec);
    de_compute->add_option("--semiring", semiring_spec);
    de_compute->add_option("--measure", measure_file)->required();
    de_compute->add_option("--depth", depth);

    // roundtrip check
    auto* rt = app.add_subcommand("roundtrip", "density/integration inversion");
    auto* rt_check = rt->add_subcommand("check", "seeded round-trip suite");
    rt_check->add_option("--semiring", semiring_spec);
    rt_check->add_option("--space", space_spec);
    rt_check->add_option("--depth", depth);
    rt_check->add_option("--cases", cases);
    rt_check->add_option("--seed", seed);

    // duality report
    auto* du = app.add_subcommand("duality", "finite Stone duality oracles");
    int duality_size = 2;
    auto* du_report = du->add_subcommand("report", "bracket-algebra bijection report");
    du_report->add_option("--size", duality_size, "size of the finite base set");
    du_report->add_option("--semiring", semiring_spec);
    du_report->add_option("--budget", budget);

    // monad laws
    auto* mo = app.add_subcommand("monad", "semiring monad");
    auto* mo_laws = mo->add_subcommand("laws", "unit, associativity and naturality checks");
    mo_laws->add_option("--semiring", semiring_spec);
    mo_laws->add_option("--max-base", max_base);
    mo_laws->add_option("--budget", budget);

    // props run
    auto* pr = app.add_subcommand("props", "bundled property suites");
    auto* pr_run = pr->add_subcommand("run", "run every suite");
    pr_run->add_option("--cases", cases);
    pr_run->add_option("--seed", seed);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }

    try {
        if (sr_check->parsed()) {
            ojson j = load_json_file(check_file);
            ValidationReport rep;
            std::string label;
            if (j.contains("madd")) {
                FiniteSemimodule m = semimodule_from_json(j);
                label = m.label;
                rep = validate_semimodule(m);
            } else {
                FiniteSemiring s = semiring_from_json(j);
                label = s.label;
                rep = validate_semiring(s);
            }
            ojson body;
            body["label"] = label;
            body["report"] = report_to_json(rep);
            if (!rep.structural_ok()) {
                emit("semiring check", "error", body, format);
                return kUsage;
            }
            return emit("semiring check", rep.pass() ? "pass" : "fail", body, format);
        }
        if (sr_builtins->parsed()) {
            ojson arr = ojson::array();
            bool all = true;
            std::vector<std::string> specs = {"bool2"};
            for (int n = 2; n <= 5; ++n) specs.push_back("zmod:" + std::to_string(n));
            for (int kk = 1; kk <= 3; ++kk) specs.push_back("trop_trunc:" + std::to_string(kk));
            for (int n = 1; n <= 4; ++n) specs.push_back("nat_sat:" + std::to_string(n));
            for (const std::string& spec : specs) {
                FiniteSemiring s = builtin_semiring_spec(spec);
                bool ok = validate_semiring(s).pass();
                all = all && ok;
                ojson e;
                e["label"] = s.label;
                e["size"] = s.size;
                e["idempotent"] = s.idempotent();
                e["status"] = ok ? "pass" : "fail";
                arr.push_back(e);
            }
            ojson body;
            body["builtins"] = arr;
            return emit("semiring builtins", all ? "pass" : "fail", body, format);
        }
        if (sp_validate->parsed()) {
            Space space = load_space(space_spec);
            ValidationReport rep = validate_system(space, std::min(depth, space.max_depth()));
            ojson body;
            body["space"] = space.describe();
            body["depth"] = depth;
            body["report"] = report_to_json(rep);
            return emit("space validate", rep.pass() ? "pass" : "fail", body, format);
        }
        if (me_eval->parsed()) {
            Space space = load_space(space_spec);
            FiniteSemiring s = load_semiring(semiring_spec);
            Measure m = measure_from_json(space, s, load_json_file(measure_file), depth);
            Clopen b = clopen_from_json(space, load_json_file(clopen_file));
            ojson body;
            body["semiring"] = s.label;
            body["clopen"] = clopen_to_json(b);
            body["value"] = eval(m, b);
            return emit("measure eval", "pass", body, format);
        }
        if (me_push->parsed()) {
            Space space = load_space(space_spec);
            FiniteSemiring s = load_semiring(semiring_spec);
            Measure m = measure_from_json(space, s, load_json_file(measure_file), depth + 1);
            ContinuousMap h = map_from_json(space, load_json_file(map_file), depth);
            Measure out = pushforward(m, h);
            int d = std::min(depth, out.certified_depth());
            ojson stages = ojson::array();
            for (int n = 0; n <= d; ++n) stages.push_back(finfn_to_json(out.stage_at(n)));
            ojson body;
            body["semiring"] = s.label;
            body["target"] = out.space().describe();
            body["stages"] = stages;
            return emit("measure pushforward", "pass", body, format);
        }
        if (me_wit->parsed()) {
            Space space = load_space(space_spec);
            FiniteSemiring s = load_semiring(semiring_spec);
            auto constraints = constraints_from_json(space, s, load_json_file(constraints_file));
            WitnessResult wr = density_witness(space, s, constraints, depth);
            ojson body;
            body["semiring"] = s.label;
            body["constraints"] = static_cast<int>(constraints.size());
            body["satisfiable"] = wr.satisfiable;
            if (wr.satisfiable) {
                ojson support = ojson::array();
                for (const auto& wp : wr.witness->support()) {
                    ojson e;
                    e["point"] = point_to_json(wp.point);
                    e["value"] = wp.value;
                    support.push_back(e);
                }
                body["support"] = support;
            }
            return emit("measure witness", "pass", body, format);
        }
        if (de_compute->parsed()) {
            Space space = load_space(space_spec);
            FiniteSemiring s = load_semiring(semiring_spec);
            Measure m = measure_from_json(space, s, load_json_file(measure_file), depth);
            ScottFn d = density(m);
            int dd = std::min(depth, m.certified_depth());
            ojson stages = ojson::array();
            for (int n = 0; n <= dd; ++n) stages.push_back(finfn_to_json(d.stage_at(n)));
            ojson pointwise = ojson::array();
            for (int c = 0; c < space.level_size(dd); ++c) {
                PointwiseValue v = eval_pointwise(d, Point::from_prefix(space, dd, c, dd), dd);
                ojson e;
                e["cell"] = c;
                e["value"] = v.value;
                e["stabilised"] = v.stabilised;
                pointwise.push_back(e);
            }
            ojson body;
            body["semiring"] = s.label;
            body["depth"] = dd;
            body["stages"] = stages;
            body["pointwise"] = pointwise;
            return emit("density compute", "pass", body, format);
        }
        if (rt_check->parsed()) {
            Space space = load_space(space_spec);
            FiniteSemiring s = load_semiring(semiring_spec);
            SuiteResult r = roundtrip_suite(space, s, depth, cases, seed);
            ojson body;
            body["suites"] = suites_to_json({r});
            std::string status = r.cases == 0 ? "no-op" : (r.pass ? "pass" : "fail");
            return emit("roundtrip check", status, body, format);
        }
        if (du_report->parsed()) {
            FiniteSemiring s = load_semiring(semiring_spec);
            BijectionReport rep = bijection_report(duality_size, s, budget);
            ojson body;
            body["semiring"] = s.label;
            body["report"] = bijection_report_to_json(rep);
            return emit("duality report", rep.pass ? "pass" : "fail", body, format);
        }
        if (mo_laws->parsed()) {
            FiniteSemiring s = load_semiring(semiring_spec);
            MonadLawReport rep = check_monad_laws(s, max_base, budget);
            ojson body;
            body["semiring"] = s.label;
            body["report"] = monad_report_to_json(rep);
            return emit("monad laws", rep.pass ? "pass" : "fail", body, format);
        }
        if (pr_run->parsed()) {
            std::vector<SuiteResult> results = run_all_suites(cases, seed);
            bool all = true;
            long long total = 0;
            for (const auto& r : results) {
                all = all && r.pass;
                total += r.cases;
            }
            ojson body;
            body["suites"] = suites_to_json(results);
            std::string status = total == 0 ? "no-op" : (all ? "pass" : "fail");
            return emit("props run", status, body, format);
        }
    } catch (const descriptor_error& e) {
        std::cerr << "descriptor error: " << e.what() << "\n";
        return kUsage;
    } catch (const error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    }
    std::cerr << "no subcommand selected\n";
    return kUsage;
}
