#include "profsemi/semiring.hpp"

#include <algorithm>
#include <sstream>

namespace profsemi {

namespace {

bool table_ok(const std::vector<std::vector<int>>& t, int rows, int cols) {
    if (static_cast<int>(t.size()) != rows) return false;
    for (const auto& row : t) {
        if (static_cast<int>(row.size()) != cols) return false;
        for (int v : row)
            if (v < 0 || v >= cols) return false;
    }
    return true;
}

std::string tuple_str(std::initializer_list<int> xs) {
    std::ostringstream os;
    os << "(";
    bool first = true;
    for (int x : xs) {
        if (!first) os << ",";
        os << x;
        first = false;
    }
    os << ")";
    return os.str();
}

}  // namespace

bool FiniteSemiring::idempotent() const {
    for (int a = 0; a < size; ++a)
        if (add(a, a) != a) return false;
    return true;
}

bool FiniteSemiring::same_as(const FiniteSemiring& other) const {
    return size == other.size && zero == other.zero && one == other.one &&
           add_table == other.add_table && mul_table == other.mul_table;
}

ValidationReport validate_semiring(const FiniteSemiring& s) {
    ValidationReport r;
    if (s.size < 1) {
        r.fail_structural("carrier", {}, "carrier must be nonempty");
        return r;
    }
    if (s.zero < 0 || s.zero >= s.size || s.one < 0 || s.one >= s.size) {
        r.fail_structural("constants", {s.zero, s.one}, "zero/one index out of range");
        return r;
    }
    if (!table_ok(s.add_table, s.size, s.size)) {
        r.fail_structural("add_table", {}, "add table malformed (dimensions or entry range)");
        return r;
    }
    if (!table_ok(s.mul_table, s.size, s.size)) {
        r.fail_structural("mul_table", {}, "mul table malformed (dimensions or entry range)");
        return r;
    }

    const int n = s.size;
    for (int a = 0; a < n; ++a) {
        if (s.add(a, s.zero) != a)
            r.fail_law("add_identity", {a}, "a+0 = " + std::to_string(s.add(a, s.zero)));
        if (s.mul(a, s.one) != a || s.mul(s.one, a) != a)
            r.fail_law("mul_identity", {a},
                       "a*1 = " + std::to_string(s.mul(a, s.one)) +
                           ", 1*a = " + std::to_string(s.mul(s.one, a)));
        if (s.mul(a, s.zero) != s.zero || s.mul(s.zero, a) != s.zero)
            r.fail_law("annihilation", {a}, "a*0 or 0*a differs from 0");
    }
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (s.add(a, b) != s.add(b, a))
                r.fail_law("add_commutative", {a, b}, tuple_str({a, b}));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c) {
                if (s.add(s.add(a, b), c) != s.add(a, s.add(b, c)))
                    r.fail_law("add_associative", {a, b, c}, tuple_str({a, b, c}));
                if (s.mul(s.mul(a, b), c) != s.mul(a, s.mul(b, c)))
                    r.fail_law("mul_associative", {a, b, c}, tuple_str({a, b, c}));
                if (s.mul(a, s.add(b, c)) != s.add(s.mul(a, b), s.mul(a, c)))
                    r.fail_law("distributivity_left", {a, b, c}, tuple_str({a, b, c}));
                if (s.mul(s.add(b, c), a) != s.add(s.mul(b, a), s.mul(c, a)))
                    r.fail_law("distributivity_right", {a, b, c}, tuple_str({a, b, c}));
            }
    if (s.size > 1 && s.zero == s.one)
        r.fail_law("zero_one_distinct", {s.zero}, "zero equals one in a nontrivial carrier");
    return r;
}

FiniteSemiring builtin_semiring(const std::string& name, const std::vector<int>& params) {
    auto need_param = [&](const char* what) {
        if (params.size() != 1 || params[0] < 1)
            throw domain_error(std::string("builtin ") + name + " needs one parameter " + what);
        return params[0];
    };

    FiniteSemiring s;
    if (name == "bool2") {
        s.label = "bool2";
        s.size = 2;
        s.zero = 0;
        s.one = 1;
        s.add_table = {{0, 1}, {1, 1}};
        s.mul_table = {{0, 0}, {0, 1}};
        return s;
    }
    if (name == "zmod") {
        int n = need_param(">= 1");
        s.label = "zmod:" + std::to_string(n);
        s.size = n;
        s.zero = 0;
        s.one = n == 1 ? 0 : 1;
        s.add_table.assign(n, std::vector<int>(n));
        s.mul_table.assign(n, std::vector<int>(n));
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b) {
                s.add_table[a][b] = (a + b) % n;
                s.mul_table[a][b] = (a * b) % n;
            }
        return s;
    }
    if (name == "trop_trunc") {
        // carrier 0..k are the numbers, index k+1 is infinity
        int k = need_param(">= 1");
        int inf = k + 1;
        s.label = "trop_trunc:" + std::to_string(k);
        s.size = k + 2;
        s.zero = inf;
        s.one = 0;
        s.add_table.assign(s.size, std::vector<int>(s.size));
        s.mul_table.assign(s.size, std::vector<int>(s.size));
        for (int a = 0; a < s.size; ++a)
            for (int b = 0; b < s.size; ++b) {
                s.add_table[a][b] = std::min(a, b);  // inf is the largest index
                if (a == inf || b == inf)
                    s.mul_table[a][b] = inf;
                else
                    s.mul_table[a][b] = (a + b > k) ? inf : a + b;
            }
        return s;
    }
    if (name == "nat_sat") {
        // carrier 0..n-1 are the numbers, index n is the saturation value
        int n = need_param(">= 1");
        int top = n;
        s.label = "nat_sat:" + std::to_string(n);
        s.size = n + 1;
        s.zero = 0;
        s.one = n == 1 ? top : 1;
        s.add_table.assign(s.size, std::vector<int>(s.size));
        s.mul_table.assign(s.size, std::vector<int>(s.size));
        for (int a = 0; a < s.size; ++a)
            for (int b = 0; b < s.size; ++b) {
                if (a == top || b == top)
                    s.add_table[a][b] = top;
                else
                    s.add_table[a][b] = (a + b >= n) ? top : a + b;
                if (a == top || b == top) {
                    int other = a == top ? b : a;
                    s.mul_table[a][b] = (other == 0) ? 0 : top;
                } else {
                    s.mul_table[a][b] = (a * b >= n) ? top : a * b;
                }
            }
        return s;
    }
    throw domain_error("unknown builtin semiring: " + name);
}

FiniteSemiring builtin_semiring_spec(const std::string& spec) {
    auto colon = spec.find(':');
    if (colon == std::string::npos) return builtin_semiring(spec);
    std::string name = spec.substr(0, colon);
    std::string rest = spec.substr(colon + 1);
    std::vector<int> params;
    std::istringstream is(rest);
    std::string tok;
    while (std::getline(is, tok, ':')) {
        try {
            params.push_back(std::stoi(tok));
        } catch (const std::exception&) {
            throw domain_error("bad builtin parameter '" + tok + "' in " + spec);
        }
    }
    return builtin_semiring(name, params);
}

std::vector<std::string> builtin_semiring_names() {
    return {"bool2", "zmod", "trop_trunc", "nat_sat"};
}

std::optional<int> idempotency_witness(const FiniteSemiring& s) {
    for (int a = 0; a < s.size; ++a)
        if (s.add(a, a) != a) return a;
    return std::nullopt;
}

int NaturalOrder::meet(int a, int b) const {
    // greatest lower bound; exists since the order is a finite lattice
    int best = -1;
    for (int c = 0; c < size; ++c)
        if (leq(c, a) && leq(c, b) && (best < 0 || leq(best, c))) best = c;
    for (int c = 0; c < size; ++c)
        if (leq(c, a) && leq(c, b) && !leq(c, best))
            throw domain_error("natural order lacks a meet of " + std::to_string(a) + " and " +
                               std::to_string(b));
    return best;
}

NaturalOrder natural_order(const FiniteSemiring& s) {
    if (auto w = idempotency_witness(s))
        throw domain_error("not idempotent: " + std::to_string(*w) + "+" + std::to_string(*w) +
                           " = " + std::to_string(s.add(*w, *w)));
    NaturalOrder o;
    o.size = s.size;
    o.bottom = s.zero;
    o.leq_table.assign(s.size, std::vector<char>(s.size, 0));
    for (int a = 0; a < s.size; ++a)
        for (int b = 0; b < s.size; ++b) o.leq_table[a][b] = (s.add(a, b) == b) ? 1 : 0;
    return o;
}

ValidationReport validate_semimodule(const FiniteSemimodule& m) {
    ValidationReport r;
    const FiniteSemiring& s = m.semiring;
    if (!validate_semiring(s).pass()) {
        r.fail_structural("semiring", {}, "underlying semiring is invalid");
        return r;
    }
    if (m.size < 1 || m.mzero < 0 || m.mzero >= m.size) {
        r.fail_structural("carrier", {m.mzero}, "module carrier or zero malformed");
        return r;
    }
    if (!table_ok(m.madd, m.size, m.size)) {
        r.fail_structural("madd", {}, "module addition table malformed");
        return r;
    }
    if (static_cast<int>(m.action.size()) != s.size) {
        r.fail_structural("action", {}, "action table must have one row per scalar");
        return r;
    }
    for (const auto& row : m.action) {
        if (static_cast<int>(row.size()) != m.size) {
            r.fail_structural("action", {}, "action row has wrong length");
            return r;
        }
        for (int v : row)
            if (v < 0 || v >= m.size) {
                r.fail_structural("action", {v}, "action entry out of range");
                return r;
            }
    }

    for (int a = 0; a < m.size; ++a) {
        if (m.add(a, m.mzero) != a)
            r.fail_law("madd_identity", {a}, "m+0 differs from m");
        for (int b = 0; b < m.size; ++b) {
            if (m.add(a, b) != m.add(b, a)) r.fail_law("madd_commutative", {a, b}, tuple_str({a, b}));
            for (int c = 0; c < m.size; ++c)
                if (m.add(m.add(a, b), c) != m.add(a, m.add(b, c)))
                    r.fail_law("madd_associative", {a, b, c}, tuple_str({a, b, c}));
        }
    }
    for (int t = 0; t < s.size; ++t) {
        for (int a = 0; a < m.size; ++a)
            for (int b = 0; b < m.size; ++b)
                if (m.act(t, m.add(a, b)) != m.add(m.act(t, a), m.act(t, b)))
                    r.fail_law("action_distributes_over_madd", {t, a, b}, tuple_str({t, a, b}));
        for (int u = 0; u < s.size; ++u)
            for (int a = 0; a < m.size; ++a) {
                if (m.act(s.add(t, u), a) != m.add(m.act(t, a), m.act(u, a)))
                    r.fail_law("action_distributes_over_add", {t, u, a}, tuple_str({t, u, a}));
                if (m.act(s.mul(t, u), a) != m.act(t, m.act(u, a)))
                    r.fail_law("action_associative", {t, u, a}, tuple_str({t, u, a}));
            }
    }
    for (int a = 0; a < m.size; ++a)
        if (m.act(s.one, a) != a) r.fail_law("action_identity", {a}, "1*m differs from m");
    for (int a = 0; a < m.size; ++a)
        if (m.act(s.zero, a) != m.mzero)
            r.fail_law("action_annihilates_scalar_zero", {a}, "0*m differs from module zero");
    for (int t = 0; t < s.size; ++t)
        if (m.act(t, m.mzero) != m.mzero)
            r.fail_law("action_annihilates_module_zero", {t}, "s*0 differs from module zero");
    return r;
}

FiniteSemimodule self_module(const FiniteSemiring& s) {
    FiniteSemimodule m;
    m.label = s.label + ":self";
    m.semiring = s;
    m.size = s.size;
    m.mzero = s.zero;
    m.madd = s.add_table;
    m.action = s.mul_table;
    return m;
}

FiniteSemimodule three_chain_module(const FiniteSemiring& nat_sat) {
    // carrier 0 < 1 < 2 with join as addition; scalar j acts by j-fold sum,
    // which on a chain is the identity for every nonzero j
    FiniteSemimodule m;
    m.label = "chain3/" + nat_sat.label;
    m.semiring = nat_sat;
    m.size = 3;
    m.mzero = 0;
    m.madd = {{0, 1, 2}, {1, 1, 2}, {2, 2, 2}};
    m.action.assign(nat_sat.size, std::vector<int>(3));
    for (int j = 0; j < nat_sat.size; ++j)
        for (int a = 0; a < 3; ++a) m.action[j][a] = (j == 0 || a == 0) ? 0 : a;
    return m;
}

SemiringChain nat_sat_chain(int depth) {
    if (depth < 0) throw domain_error("chain depth must be >= 0");
    SemiringChain c;
    for (int n = 0; n <= depth; ++n) c.stages.push_back(builtin_semiring("nat_sat", {n + 1}));
    for (int n = 0; n < depth; ++n) {
        // stage n+1 has numbers 0..n+1 and top at index n+2; collapse n+1 into top
        std::vector<int> q(c.stages[n + 1].size);
        for (int x = 0; x < c.stages[n + 1].size; ++x) q[x] = std::min(x, n + 1);
        c.quotients.push_back(std::move(q));
    }
    return c;
}

SemiringChain constant_chain(const FiniteSemiring& s, int depth) {
    if (depth < 0) throw domain_error("chain depth must be >= 0");
    SemiringChain c;
    for (int n = 0; n <= depth; ++n) c.stages.push_back(s);
    for (int n = 0; n < depth; ++n) {
        std::vector<int> q(s.size);
        for (int x = 0; x < s.size; ++x) q[x] = x;
        c.quotients.push_back(std::move(q));
    }
    return c;
}

ValidationReport validate_chain(const SemiringChain& chain) {
    ValidationReport r;
    if (chain.stages.empty()) {
        r.fail_structural("stages", {}, "chain needs at least one stage");
        return r;
    }
    if (chain.quotients.size() + 1 != chain.stages.size()) {
        r.fail_structural("quotients", {}, "need exactly one quotient per adjacent stage pair");
        return r;
    }
    for (size_t n = 0; n < chain.quotients.size(); ++n) {
        const FiniteSemiring& hi = chain.stages[n + 1];
        const FiniteSemiring& lo = chain.stages[n];
        const std::vector<int>& q = chain.quotients[n];
        if (static_cast<int>(q.size()) != hi.size) {
            r.fail_structural("quotient_size", {static_cast<int>(n)}, "quotient length mismatch");
            continue;
        }
        std::vector<char> hit(lo.size, 0);
        for (int x = 0; x < hi.size; ++x) {
            if (q[x] < 0 || q[x] >= lo.size) {
                r.fail_structural("quotient_range", {static_cast<int>(n), x}, "target out of range");
                return r;
            }
            hit[q[x]] = 1;
        }
        for (int y = 0; y < lo.size; ++y)
            if (!hit[y])
                r.fail_law("quotient_surjective", {static_cast<int>(n), y},
                           "stage " + std::to_string(n) + " element " + std::to_string(y) + " missed");
        if (q[hi.zero] != lo.zero)
            r.fail_law("quotient_zero", {static_cast<int>(n)}, "zero not preserved");
        if (q[hi.one] != lo.one) r.fail_law("quotient_one", {static_cast<int>(n)}, "one not preserved");
        for (int x = 0; x < hi.size; ++x)
            for (int y = 0; y < hi.size; ++y) {
                if (q[hi.add(x, y)] != lo.add(q[x], q[y]))
                    r.fail_law("quotient_add", {static_cast<int>(n), x, y}, tuple_str({x, y}));
                if (q[hi.mul(x, y)] != lo.mul(q[x], q[y]))
                    r.fail_law("quotient_mul", {static_cast<int>(n), x, y}, tuple_str({x, y}));
            }
    }
    return r;
}

ValidationReport validate_stage_action(const StageAction& a) {
    ValidationReport r = validate_chain(a.chain);
    if (!r.pass()) return r;
    if (a.module_size < 1 || !table_ok(a.madd, a.module_size, a.module_size)) {
        r.fail_structural("module", {}, "module carrier or addition malformed");
        return r;
    }
    if (a.action_at.size() != a.chain.stages.size()) {
        r.fail_structural("action_at", {}, "need one action table per stage");
        return r;
    }
    for (size_t n = 0; n < a.action_at.size(); ++n)
        if (!table_ok(a.action_at[n], a.chain.stages[n].size, a.module_size)) {
            r.fail_structural("action_at", {static_cast<int>(n)}, "action table malformed");
            return r;
        }
    // Where a quotient fibre is a singleton the profinite element is already
    // resolved, so the presented value may not change with the resolution.
    for (size_t n = 0; n + 1 < a.action_at.size(); ++n) {
        const std::vector<int>& q = a.chain.quotients[n];
        std::vector<int> fibre_size(a.chain.stages[n].size, 0);
        for (int x : q) ++fibre_size[x];
        for (int x = 0; x < static_cast<int>(q.size()); ++x)
            if (fibre_size[q[x]] == 1)
                for (int m = 0; m < a.module_size; ++m)
                    if (a.action_at[n + 1][x][m] != a.action_at[n][q[x]][m])
                        r.fail_law("resolved_value_stable", {static_cast<int>(n), x, m},
                                   "singleton fibre changes action value");
    }
    return r;
}

ContinuityReport check_action_joint_continuity(const StageAction& a, int depth) {
    int exact = a.chain.exactness_depth();
    if (depth < 0 || depth > exact)
        throw depth_error("continuity check at depth " + std::to_string(depth) +
                          " exceeds exactness depth " + std::to_string(exact));
    ContinuityReport rep;
    for (int target = 0; target < a.module_size; ++target) {
        for (int m = 0; m < a.module_size; ++m) {
            for (int n = depth; n < exact; ++n) {
                const std::vector<int>& q = a.chain.quotients[n];
                int lo_size = a.chain.stages[n].size;
                for (int parent = 0; parent < lo_size; ++parent) {
                    bool parent_in = a.action_at[n][parent][m] == target;
                    std::vector<int> in, out;
                    for (int x = 0; x < static_cast<int>(q.size()); ++x) {
                        if (q[x] != parent) continue;
                        (a.action_at[n + 1][x][m] == target ? in : out).push_back(x);
                    }
                    // stable iff the fibre refines the parent's membership wholesale
                    bool bad = parent_in ? !out.empty() : !in.empty();
                    if (bad) {
                        rep.pass = false;
                        rep.failures.push_back({target, m, n, parent, in, out});
                    }
                }
            }
        }
    }
    return rep;
}

StageAction saturated_three_chain_action(int depth) {
    StageAction a;
    a.chain = nat_sat_chain(depth);
    a.module_size = 3;
    a.mzero = 0;
    a.madd = {{0, 1, 2}, {1, 1, 2}, {2, 2, 2}};
    for (const FiniteSemiring& st : a.chain.stages) {
        int top = st.size - 1;
        std::vector<std::vector<int>> t(st.size, std::vector<int>(3));
        for (int j = 0; j < st.size; ++j)
            for (int m = 0; m < 3; ++m) {
                if (j == 0 || m == 0)
                    t[j][m] = 0;
                else if (j == top)
                    t[j][m] = 2;
                else
                    t[j][m] = m;
            }
        a.action_at.push_back(std::move(t));
    }
    return a;
}

StageAction constant_self_action(const FiniteSemiring& s, int depth) {
    StageAction a;
    a.chain = constant_chain(s, depth);
    a.module_size = s.size;
    a.mzero = s.zero;
    a.madd = s.add_table;
    a.action_at.assign(depth + 1, s.mul_table);
    return a;
}

StageAction trivial_action(const SemiringChain& chain, int module_size) {
    StageAction a;
    a.chain = chain;
    a.module_size = module_size;
    a.mzero = 0;
    a.madd.assign(module_size, std::vector<int>(module_size));
    for (int i = 0; i < module_size; ++i)
        for (int j = 0; j < module_size; ++j) a.madd[i][j] = std::max(i, j);
    for (const FiniteSemiring& st : chain.stages) {
        std::vector<std::vector<int>> t(st.size, std::vector<int>(module_size));
        for (int j = 0; j < st.size; ++j)
            for (int m = 0; m < module_size; ++m) t[j][m] = m;
        a.action_at.push_back(std::move(t));
    }
    return a;
}

}  // namespace profsemi
