#include "profsemi/json_io.hpp"

#include <fstream>
#include <sstream>

namespace profsemi {

namespace {

const ojson& field(const ojson& j, const char* key) {
    auto it = j.find(key);
    if (it == j.end()) throw descriptor_error(std::string("missing field '") + key + "'");
    return *it;
}

int int_field(const ojson& j, const char* key) {
    const ojson& v = field(j, key);
    if (!v.is_number_integer()) throw descriptor_error(std::string("field '") + key + "' must be an integer");
    return v.get<int>();
}

int int_field_or(const ojson& j, const char* key, int fallback) {
    auto it = j.find(key);
    if (it == j.end()) return fallback;
    if (!it->is_number_integer())
        throw descriptor_error(std::string("field '") + key + "' must be an integer");
    return it->get<int>();
}

std::string str_field(const ojson& j, const char* key) {
    const ojson& v = field(j, key);
    if (!v.is_string()) throw descriptor_error(std::string("field '") + key + "' must be a string");
    return v.get<std::string>();
}

std::vector<int> int_vector(const ojson& v, const char* what) {
    if (!v.is_array()) throw descriptor_error(std::string(what) + " must be an array");
    std::vector<int> out;
    for (const auto& e : v) {
        if (!e.is_number_integer()) throw descriptor_error(std::string(what) + " must hold integers");
        out.push_back(e.get<int>());
    }
    return out;
}

std::vector<std::vector<int>> int_matrix(const ojson& v, const char* what) {
    if (!v.is_array()) throw descriptor_error(std::string(what) + " must be an array of arrays");
    std::vector<std::vector<int>> out;
    for (const auto& row : v) out.push_back(int_vector(row, what));
    return out;
}

}  // namespace

ojson load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw descriptor_error("cannot open file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_json(buf.str(), path);
}

ojson parse_json(const std::string& text, const std::string& origin) {
    try {
        return ojson::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw descriptor_error(origin + ": " + e.what());
    }
}

FiniteSemiring semiring_from_json(const ojson& j) {
    FiniteSemiring s;
    s.label = j.contains("label") ? str_field(j, "label") : "anonymous";
    s.size = int_field(j, "size");
    s.zero = int_field(j, "zero");
    s.one = int_field(j, "one");
    s.add_table = int_matrix(field(j, "add"), "add");
    s.mul_table = int_matrix(field(j, "mul"), "mul");
    return s;
}

ojson semiring_to_json(const FiniteSemiring& s) {
    ojson j;
    j["label"] = s.label;
    j["size"] = s.size;
    j["zero"] = s.zero;
    j["one"] = s.one;
    j["add"] = s.add_table;
    j["mul"] = s.mul_table;
    return j;
}

FiniteSemimodule semimodule_from_json(const ojson& j) {
    FiniteSemimodule m;
    m.label = j.contains("label") ? str_field(j, "label") : "anonymous";
    const ojson& sr = field(j, "semiring");
    if (sr.is_string())
        m.semiring = builtin_semiring_spec(sr.get<std::string>());
    else
        m.semiring = semiring_from_json(sr);
    m.madd = int_matrix(field(j, "madd"), "madd");
    m.size = static_cast<int>(m.madd.size());
    m.mzero = int_field(j, "mzero");
    m.action = int_matrix(field(j, "action"), "action");
    return m;
}

Space space_from_json(const ojson& j) {
    std::string kind = str_field(j, "kind");
    if (kind == "cantor") return Space::cantor();
    if (kind == "nat_infty") return Space::nat_infty();
    if (kind == "finite") return Space::finite(int_field(j, "size"));
    if (kind == "depth_product")
        return Space::depth_product(int_vector(field(j, "factors"), "factors"));
    if (kind == "table")
        return Space::table(int_vector(field(j, "level_sizes"), "level_sizes"),
                            int_matrix(field(j, "transitions"), "transitions"));
    throw descriptor_error("unknown space kind '" + kind + "'");
}

ojson space_to_json(const Space& s) {
    ojson j;
    switch (s.kind()) {
        case Space::Kind::cantor:
            j["kind"] = "cantor";
            break;
        case Space::Kind::nat_infty:
            j["kind"] = "nat_infty";
            break;
        case Space::Kind::finite:
            j["kind"] = "finite";
            j["size"] = s.level_size(0);
            break;
        default:
            j["kind"] = "table";
            break;
    }
    return j;
}

Clopen clopen_from_json(const Space& space, const ojson& j) {
    int level = int_field(j, "level");
    std::vector<int> cells = int_vector(field(j, "cells"), "cells");
    return Clopen(space, level, cells);
}

ojson clopen_to_json(const Clopen& c) {
    ojson j;
    j["level"] = c.level();
    j["cells"] = c.cells();
    return j;
}

Point point_from_json(const Space& space, const ojson& j, int default_depth) {
    int level = int_field(j, "level");
    int cell = int_field(j, "cell");
    int depth = int_field_or(j, "depth", std::max(default_depth, level));
    return Point::from_prefix(space, level, cell, std::max(depth, level));
}

Measure measure_from_json(const Space& space, const FiniteSemiring& s, const ojson& j,
                          int point_depth) {
    std::string prov = str_field(j, "provenance");
    if (prov == "dirac") return dirac(s, point_from_json(space, field(j, "point"), point_depth));
    if (prov == "finsupp") {
        std::vector<WeightedPoint> support;
        for (const auto& e : field(j, "support"))
            support.push_back(
                {point_from_json(space, field(e, "point"), point_depth), int_field(e, "value")});
        return integrate(FinSuppFn(space, s, std::move(support)));
    }
    if (prov == "stages") {
        std::vector<FinFn> stages;
        for (const auto& row : field(j, "stages")) {
            FinFn f;
            f.values = int_vector(row, "stages");
            for (int v : f.values)
                if (v < 0 || v >= s.size) throw descriptor_error("stage value out of carrier range");
            stages.push_back(std::move(f));
        }
        return measure_from_stages(space, s, std::move(stages));
    }
    throw descriptor_error("unknown measure provenance '" + prov + "'");
}

std::vector<SubbasicConstraint> constraints_from_json(const Space& space, const FiniteSemiring& s,
                                                      const ojson& j) {
    if (!j.is_array()) throw descriptor_error("constraints must be an array");
    std::vector<SubbasicConstraint> out;
    for (const auto& e : j) {
        SubbasicConstraint c{clopen_from_json(space, field(e, "clopen")),
                             std::vector<char>(s.size, 0)};
        for (int v : int_vector(field(e, "allowed"), "allowed")) {
            if (v < 0 || v >= s.size) throw descriptor_error("allowed value out of carrier range");
            c.allowed[v] = 1;
        }
        out.push_back(std::move(c));
    }
    return out;
}

ContinuousMap map_from_json(const Space& source, const ojson& j, int depth) {
    std::string kind = str_field(j, "kind");
    int d = int_field_or(j, "depth", depth);
    if (kind == "identity") return ContinuousMap::identity(source, d);
    if (kind == "first_bit") {
        if (source != Space::cantor()) throw descriptor_error("first_bit maps out of cantor");
        return ContinuousMap::first_bit(d);
    }
    if (kind == "stage_quotient")
        return ContinuousMap::stage_quotient(source, int_field(j, "level"),
                                             int_vector(field(j, "table"), "table"),
                                             int_field(j, "target_size"), d);
    throw descriptor_error("unknown map kind '" + kind + "'");
}

ojson report_to_json(const ValidationReport& r) {
    ojson j;
    j["status"] = r.pass() ? "pass" : "fail";
    ojson vi = ojson::array();
    for (const auto& v : r.violations) {
        ojson e;
        e["kind"] = v.kind;
        e["law"] = v.law;
        e["witness"] = v.witness;
        e["detail"] = v.detail;
        vi.push_back(e);
    }
    j["violations"] = vi;
    return j;
}

ojson monad_report_to_json(const MonadLawReport& r) {
    ojson j;
    j["status"] = r.pass ? "pass" : "fail";
    j["partial"] = r.partial;
    ojson checks = ojson::array();
    for (const auto& c : r.checks) {
        ojson e;
        e["law"] = c.law;
        e["status"] = c.status;
        e["partial"] = c.partial;
        e["checked"] = c.checked;
        if (!c.witness.empty()) e["witness"] = c.witness;
        checks.push_back(e);
    }
    j["checks"] = checks;
    return j;
}

ojson bijection_report_to_json(const BijectionReport& r) {
    ojson j;
    j["universe_size"] = r.universe_size;
    j["atom_count"] = r.atom_count;
    j["expected"] = r.expected;
    j["bijection"] = r.pass ? "pass" : "fail";
    if (r.partial) j["partial"] = true;
    if (!r.witness.empty()) j["witness"] = r.witness;
    return j;
}

ojson continuity_report_to_json(const ContinuityReport& r) {
    ojson j;
    j["status"] = r.pass ? "pass" : "fail";
    ojson fs = ojson::array();
    for (const auto& f : r.failures) {
        ojson e;
        e["target"] = f.target;
        e["input"] = f.input;
        e["level"] = f.level;
        e["parent_cell"] = f.parent_cell;
        e["cells_in"] = f.cells_in;
        e["cells_out"] = f.cells_out;
        fs.push_back(e);
    }
    j["failures"] = fs;
    return j;
}

ojson galois_report_to_json(const GaloisReport& r) {
    ojson j;
    j["integral_leq"] = r.integral_leq;
    j["pointwise_leq"] = r.pointwise_leq;
    j["agree"] = r.agree();
    if (!r.witness.empty()) j["witness"] = r.witness;
    return j;
}

ojson finfn_to_json(const FinFn& f) {
    ojson j = ojson::array();
    for (int v : f.values) j.push_back(v);
    return j;
}

}  // namespace profsemi
