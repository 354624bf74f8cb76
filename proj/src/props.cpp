#include "profsemi/props.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace profsemi {

namespace {

std::string case_tag(std::uint64_t seed, long long cs) {
    return "seed=" + std::to_string(seed) + " case=" + std::to_string(cs);
}

// proj[n][y] = the level-n ancestor of the level-`depth` cell y
std::vector<std::vector<int>> ancestor_table(const Space& space, int depth) {
    int cells = space.level_size(depth);
    std::vector<std::vector<int>> proj(depth + 1, std::vector<int>(cells));
    for (int y = 0; y < cells; ++y) proj[depth][y] = y;
    for (int n = depth - 1; n >= 0; --n)
        for (int y = 0; y < cells; ++y) proj[n][y] = space.transition(n, proj[n + 1][y]);
    return proj;
}

int fold_mask(const FiniteSemiring& s, const std::vector<int>& values, unsigned mask) {
    int acc = s.zero;
    for (unsigned m = mask; m; m &= m - 1) acc = s.add(acc, values[__builtin_ctz(m)]);
    return acc;
}

}  // namespace

SuiteResult additivity_suite(const Space& space, const FiniteSemiring& s, int level, int cases,
                             std::uint64_t seed) {
    SuiteResult res{"measure_additivity/" + s.label + "/" + space.describe(), true, 0, ""};
    int cells = space.level_size(level);
    if (cells > 12) throw domain_error("additivity level too wide to enumerate clopen pairs");
    int nmask = 1 << cells;
    for (int cs = 0; cs < cases; ++cs) {
        CaseRng rng(seed, cs);
        Measure m = integrate(random_finsupp(space, s, 5, 8, rng));
        if (eval(m, Clopen::empty(space)) != s.zero) {
            res.pass = false;
            res.witness = case_tag(seed, cs) + ": mu(empty) != 0";
            return res;
        }
        FinFn st = m.stage_at(level);
        std::vector<int> mu(nmask);
        mu[0] = s.zero;
        for (int mask = 1; mask < nmask; ++mask) {
            int low = mask & -mask;
            mu[mask] = s.add(mu[mask ^ low], st.values[__builtin_ctz(low)]);
        }
        for (int a = 0; a < nmask; ++a)
            for (int b = a; b < nmask; ++b)
                if (s.add(mu[a | b], mu[a & b]) != s.add(mu[a], mu[b])) {
                    res.pass = false;
                    std::ostringstream w;
                    w << case_tag(seed, cs) << ": modular law fails at masks " << a << "," << b;
                    res.witness = w.str();
                    return res;
                }
        ++res.cases;
    }
    return res;
}

SuiteResult stage_compatibility_suite(const Space& space, const FiniteSemiring& s, int cases,
                                      std::uint64_t seed) {
    SuiteResult res{"stage_compatibility/" + s.label + "/" + space.describe(), true, 0, ""};
    auto check = [&](const Measure& m, int depth, long long cs) {
        for (int n = 0; n < depth; ++n) {
            int lo = space.level_size(n), hi = space.level_size(n + 1);
            std::vector<int> tr(hi);
            for (int x = 0; x < hi; ++x) tr[x] = space.transition(n, x);
            if (!(functor_map(s, tr, lo, m.stage_at(n + 1)) == m.stage_at(n))) {
                res.pass = false;
                res.witness = case_tag(seed, cs) + ": stage family breaks at level " +
                              std::to_string(n);
                return false;
            }
        }
        return true;
    };
    for (int cs = 0; cs < cases; ++cs) {
        CaseRng rng(seed, cs);
        Measure m1 = integrate(random_finsupp(space, s, 5, 8, rng));
        Measure m2 = combine(m1, dirac(s, Point::from_prefix(space, 5, rng.below(space.level_size(5)), 8)));
        Measure m3 = scale(rng.below(s.size), m2);
        if (!check(m1, 5, cs) || !check(m2, 5, cs) || !check(m3, 5, cs)) return res;
        if (space == Space::cantor()) {
            Measure m4 = pushforward(m1, ContinuousMap::first_bit(6));
            for (int n = 0; n < 5; ++n)
                if (!(m4.stage_at(n) == m4.stage_at(n + 1))) {
                    res.pass = false;
                    res.witness = case_tag(seed, cs) + ": pushforward stages drift on a constant chain";
                    return res;
                }
        }
        ++res.cases;
    }
    return res;
}

SuiteResult tau_injectivity_suite(const Space& space, const FiniteSemiring& s, int cases,
                                  std::uint64_t seed) {
    SuiteResult res{"tau_injectivity/" + s.label + "/" + space.describe(), true, 0, ""};
    for (int cs = 0; cs < cases; ++cs) {
        CaseRng rng(seed, cs);
        FinSuppFn f = random_finsupp(space, s, 5, 8, rng);
        FinSuppFn g = random_finsupp(space, s, 5, 8, rng);
        if (integrate(f).stage_at(5) == integrate(g).stage_at(5)) continue;  // astronomically rare
        Clopen b = separating_clopen(f, g);
        if (eval(integrate(f), b) == eval(integrate(g), b)) {
            res.pass = false;
            res.witness = case_tag(seed, cs) + ": produced clopen does not separate";
            return res;
        }
        ++res.cases;
    }
    return res;
}

SuiteResult tau_density_suite(const Space& space, const FiniteSemiring& s) {
    SuiteResult res{"tau_density/" + s.label + "/" + space.describe(), true, 0, ""};
    const int level = 2;
    int cells = space.level_size(level);
    if (cells > 8) throw domain_error("density suite level too wide");
    long long nfn_ll = fn_space_size(s.size, cells);
    if (nfn_ll > 20000) throw domain_error("density suite carrier too large");
    int nfn = static_cast<int>(nfn_ll);
    int k = s.size;

    // the pool of subbasic constraints: every clopen mask at the level, every
    // allowed subset of the carrier
    struct PoolEntry {
        unsigned bmask;
        unsigned allowed;
    };
    std::vector<PoolEntry> pool;
    for (unsigned bm = 0; bm < (1u << cells); ++bm)
        for (unsigned al = 0; al < (1u << k); ++al) pool.push_back({bm, al});

    // oracle table: which level-2 stage functions satisfy each constraint
    std::vector<std::vector<char>> sat(pool.size(), std::vector<char>(nfn));
    for (int i = 0; i < nfn; ++i) {
        FinFn v = fn_at(s, cells, i);
        for (size_t c = 0; c < pool.size(); ++c) {
            int total = fold_mask(s, v.values, pool[c].bmask);
            sat[c][i] = (pool[c].allowed >> total) & 1;
        }
    }

    std::vector<Clopen> pool_clopens;
    pool_clopens.reserve(1u << cells);
    for (unsigned bm = 0; bm < (1u << cells); ++bm) {
        std::vector<char> mask(cells);
        for (int c = 0; c < cells; ++c) mask[c] = (bm >> c) & 1;
        pool_clopens.push_back(clopen_from_mask(space, level, mask));
    }

    auto run_list = [&](const std::vector<size_t>& list) -> bool {
        bool oracle_sat = false;
        for (int i = 0; i < nfn && !oracle_sat; ++i) {
            bool ok = true;
            for (size_t c : list)
                if (!sat[c][i]) {
                    ok = false;
                    break;
                }
            oracle_sat = ok;
        }
        std::vector<SubbasicConstraint> constraints;
        for (size_t c : list) {
            SubbasicConstraint sc{pool_clopens[pool[c].bmask], std::vector<char>(k, 0)};
            for (int v = 0; v < k; ++v) sc.allowed[v] = (pool[c].allowed >> v) & 1;
            constraints.push_back(std::move(sc));
        }
        WitnessResult wr = density_witness(space, s, constraints, level);
        if (wr.satisfiable != oracle_sat) {
            res.pass = false;
            std::ostringstream w;
            w << "verdict mismatch (witness " << wr.satisfiable << ", oracle " << oracle_sat
              << ") on list";
            for (size_t c : list) w << " (b=" << pool[c].bmask << ",U=" << pool[c].allowed << ")";
            res.witness = w.str();
            return false;
        }
        if (wr.satisfiable) {
            Measure m = integrate(*wr.witness);
            for (size_t c : list)
                if (!((pool[c].allowed >> eval(m, pool_clopens[pool[c].bmask])) & 1)) {
                    res.pass = false;
                    res.witness = "witness fails its own constraint (b=" +
                                  std::to_string(pool[c].bmask) + ")";
                    return false;
                }
        }
        ++res.cases;
        return true;
    };

    if (!run_list({})) return res;
    for (size_t i = 0; i < pool.size(); ++i) {
        if (!run_list({i})) return res;
        for (size_t j = i; j < pool.size(); ++j) {
            if (!run_list({i, j})) return res;
            for (size_t l = j; l < pool.size(); ++l)
                if (!run_list({i, j, l})) return res;
        }
    }
    return res;
}

SuiteResult pushforward_suite(const FiniteSemiring& s, int cases, std::uint64_t seed) {
    SuiteResult res{"pushforward_functoriality/" + s.label, true, 0, ""};
    Space c = Space::cantor();
    Space f2 = Space::finite(2);
    ContinuousMap h = ContinuousMap::first_bit(6);
    ContinuousMap swap = ContinuousMap::stage_quotient(f2, 0, {1, 0}, 2, 6);
    ContinuousMap idmap = ContinuousMap::identity(c, 6);
    ContinuousMap composed = h.then(swap);
    for (int cs = 0; cs < cases; ++cs) {
        CaseRng rng(seed, cs);
        Measure m = integrate(random_finsupp(c, s, 5, 8, rng));
        if (!equal_to_depth(pushforward(m, idmap), m, 5)) {
            res.pass = false;
            res.witness = case_tag(seed, cs) + ": identity pushforward changed the measure";
            return res;
        }
        if (!equal_to_depth(pushforward(m, composed), pushforward(pushforward(m, h), swap), 5)) {
            res.pass = false;
            res.witness = case_tag(seed, cs) + ": composition does not commute with pushforward";
            return res;
        }
        std::vector<char> mask = {static_cast<char>(rng.coin()), static_cast<char>(rng.coin())};
        Clopen b = clopen_from_mask(f2, 0, mask);
        if (eval(pushforward(m, h), b) != eval(m, h.preimage(b))) {
            res.pass = false;
            res.witness = case_tag(seed, cs) + ": pushforward eval differs from preimage eval";
            return res;
        }
        ++res.cases;
    }
    return res;
}

SuiteResult roundtrip_suite(const Space& space, const FiniteSemiring& s, int depth, int cases,
                            std::uint64_t seed) {
    SuiteResult res{"roundtrip/" + s.label + "/" + space.describe(), true, 0, ""};
    NaturalOrder ord = natural_order(s);
    int cells = space.level_size(depth);
    auto proj = ancestor_table(space, depth);
    std::vector<Point> reps;
    reps.reserve(cells);
    for (int y = 0; y < cells; ++y) reps.push_back(Point::from_prefix(space, depth, y, depth));

    for (int cs = 0; cs < cases; ++cs) {
        CaseRng rng(seed, cs);
        Measure m = integrate(random_finsupp(space, s, depth, depth + 3, rng));
        ScottFn d = density(m);

        std::vector<int> pw(cells);
        for (int y = 0; y < cells; ++y) {
            PointwiseValue v = eval_pointwise(d, reps[y], depth);
            if (!v.stabilised) {
                res.pass = false;
                res.witness = case_tag(seed, cs) + ": pointwise value not stabilised at cell " +
                              std::to_string(y);
                return res;
            }
            pw[y] = v.value;
        }

        // integrating the density recovers every stage value as a join of
        // pointwise densities over the resolved cells underneath
        for (int n = 0; n <= depth; ++n) {
            FinFn st = m.stage_at(n);
            std::vector<int> rebuilt(st.base_size(), s.zero);
            for (int y = 0; y < cells; ++y) rebuilt[proj[n][y]] = s.add(rebuilt[proj[n][y]], pw[y]);
            if (rebuilt != st.values) {
                res.pass = false;
                res.witness = case_tag(seed, cs) + ": to_measure(density(m)) != m at level " +
                              std::to_string(n);
                return res;
            }
        }

        // the density of the integrated function returns the pointwise values:
        // the cylinder chain of measures decreases onto them
        Measure m2 = to_measure(d);
        if (!equal_to_depth(m, m2, depth)) {
            res.pass = false;
            res.witness = case_tag(seed, cs) + ": stage families diverged in the round trip";
            return res;
        }
        ScottFn d2 = density(m2);
        for (int y = 0; y < cells; ++y) {
            int prev = -1;
            for (int n = 0; n <= depth; ++n) {
                int v = eval(m2, Clopen(space, n, {proj[n][y]}));
                if (n > 0 && !ord.leq(v, prev)) {
                    res.pass = false;
                    res.witness = case_tag(seed, cs) + ": cylinder chain is not decreasing";
                    return res;
                }
                prev = v;
            }
            if (prev != pw[y] || eval_pointwise(d2, reps[y], depth).value != pw[y]) {
                res.pass = false;
                res.witness = case_tag(seed, cs) + ": density(to_measure(f)) != f at cell " +
                              std::to_string(y);
                return res;
            }
        }
        ++res.cases;
    }
    return res;
}

SuiteResult pointwise_join_suite(const Space& space, const FiniteSemiring& s, int level, int cases,
                                 std::uint64_t seed) {
    SuiteResult res{"pointwise_join/" + s.label + "/" + space.describe(), true, 0, ""};
    const int depth = 5;
    int cells = space.level_size(depth);
    int lcells = space.level_size(level);
    if (lcells > 12) throw domain_error("pointwise join level too wide");
    auto proj = ancestor_table(space, depth);
    std::vector<Point> reps;
    for (int y = 0; y < cells; ++y) reps.push_back(Point::from_prefix(space, depth, y, depth));
    std::vector<Clopen> clopens;
    for (unsigned bm = 0; bm < (1u << lcells); ++bm) {
        std::vector<char> mask(lcells);
        for (int c = 0; c < lcells; ++c) mask[c] = (bm >> c) & 1;
        clopens.push_back(clopen_from_mask(space, level, mask));
    }

    for (int cs = 0; cs < cases; ++cs) {
        CaseRng rng(seed, cs);
        Measure m = integrate(random_finsupp(space, s, depth, depth + 3, rng));
        ScottFn d = density(m);
        std::vector<int> joincell(lcells, s.zero);
        for (int y = 0; y < cells; ++y) {
            int c = proj[level][y];
            joincell[c] = s.add(joincell[c], eval_pointwise(d, reps[y], depth).value);
        }
        for (unsigned bm = 0; bm < (1u << lcells); ++bm) {
            int rhs = fold_mask(s, joincell, bm);
            if (eval(m, clopens[bm]) != rhs) {
                res.pass = false;
                res.witness = case_tag(seed, cs) + ": mask " + std::to_string(bm) +
                              " disagrees with the pointwise join";
                return res;
            }
        }
        ++res.cases;
    }
    return res;
}

SuiteResult galois_suite(const Space& space, const FiniteSemiring& s, int cases,
                         std::uint64_t seed) {
    SuiteResult res{"galois/" + s.label + "/" + space.describe(), true, 0, ""};
    NaturalOrder ord = natural_order(s);
    const int depth = 5;
    int cells = space.level_size(depth);
    std::vector<Point> reps;
    for (int y = 0; y < cells; ++y) reps.push_back(Point::from_prefix(space, depth, y, depth));

    for (int cs = 0; cs < cases; ++cs) {
        CaseRng rng(seed, cs);
        Measure m1 = integrate(random_finsupp(space, s, depth, depth + 3, rng));
        Measure m2 = integrate(random_finsupp(space, s, depth, depth + 3, rng));
        ScottFn f = density(m1);

        GaloisReport g = galois_holds(f, m2, depth);
        if (!g.agree()) {
            res.pass = false;
            res.witness = case_tag(seed, cs) + ": adjunction sides disagree: " + g.witness;
            return res;
        }
        GaloisReport refl = galois_holds(f, m1, depth);
        if (!refl.integral_leq || !refl.pointwise_leq) {
            res.pass = false;
            res.witness = case_tag(seed, cs) + ": f vs its own measure must satisfy both sides";
            return res;
        }

        // monotonicity of density and integration
        Measure m3 = combine(m2, integrate(random_finsupp(space, s, depth, depth + 3, rng)));
        ScottFn d2 = density(m2), d3 = density(m3);
        for (int y = 0; y < cells; ++y)
            if (!ord.leq(eval_pointwise(d2, reps[y], depth).value,
                         eval_pointwise(d3, reps[y], depth).value)) {
                res.pass = false;
                res.witness = case_tag(seed, cs) + ": density is not monotone";
                return res;
            }
        for (int n = 0; n <= depth; ++n) {
            FinFn a = m2.stage_at(n), b = m3.stage_at(n);
            for (int c = 0; c < a.base_size(); ++c)
                if (!ord.leq(a.values[c], b.values[c])) {
                    res.pass = false;
                    res.witness = case_tag(seed, cs) + ": integration is not monotone";
                    return res;
                }
        }
        ++res.cases;
    }
    return res;
}

SuiteResult vietoris_suite(const Space& space, int max_level) {
    SuiteResult res{"vietoris/" + space.describe(), true, 0, ""};
    FiniteSemiring b2 = builtin_semiring("bool2");

    for (int n = 0; n <= max_level; ++n) {
        int cells = space.level_size(n);
        if (cells > 10) throw domain_error("vietoris level too wide");
        int point_depth = std::max(n, max_level);

        std::vector<Clopen> clopens;
        for (unsigned bm = 0; bm < (1u << cells); ++bm) {
            std::vector<char> mask(cells);
            for (int c = 0; c < cells; ++c) mask[c] = (bm >> c) & 1;
            clopens.push_back(clopen_from_mask(space, n, mask));
        }

        for (unsigned cm = 0; cm < (1u << cells); ++cm) {
            std::vector<WeightedPoint> pts;
            for (int c = 0; c < cells; ++c)
                if ((cm >> c) & 1) pts.push_back({Point::from_prefix(space, n, c, point_depth), 1});
            Measure m = integrate(FinSuppFn(space, b2, pts));
            ClosedSetFamily fam = ClosedSetFamily::from_measure(m);

            // the level-n stage is exactly the indicator of the set
            FinFn st = m.stage_at(n);
            for (int c = 0; c < cells; ++c)
                if ((st.values[c] == 1) != (((cm >> c) & 1) != 0)) {
                    res.pass = false;
                    res.witness = "level " + std::to_string(n) + ": stage is not the indicator";
                    return res;
                }

            // shallower cell sets are transition images
            for (int lo = 0; lo < n; ++lo) {
                std::set<int> expect;
                for (int c = 0; c < cells; ++c)
                    if ((cm >> c) & 1) {
                        int down = c;
                        for (int lev = n; lev > lo; --lev) down = space.transition(lev - 1, down);
                        expect.insert(down);
                    }
                std::vector<int> got = fam.cells_at(lo);
                if (std::set<int>(got.begin(), got.end()) != expect) {
                    res.pass = false;
                    res.witness = "level " + std::to_string(n) + ": projected cells differ";
                    return res;
                }
            }

            // subbasic membership matches the set semantics
            for (unsigned bm = 0; bm < (1u << cells); ++bm) {
                bool meets = (cm & bm) != 0;
                bool inside_comp = (cm & bm) == 0;  // contained in the complement
                if (family_meets(fam, clopens[bm]) != meets ||
                    (eval(m, clopens[bm]) == b2.zero) != inside_comp ||
                    family_inside(fam, clopen_not(clopens[bm])) != inside_comp) {
                    res.pass = false;
                    res.witness = "level " + std::to_string(n) + ": subbasic membership differs";
                    return res;
                }
                ++res.cases;
            }
        }

        // level-wise monad identities for singleton and union
        if (cells <= 3) {
            auto family_of = [&](unsigned cm) {
                std::vector<WeightedPoint> pts;
                for (int c = 0; c < cells; ++c)
                    if ((cm >> c) & 1) pts.push_back({Point::from_prefix(space, n, c, point_depth), 1});
                return ClosedSetFamily::from_measure(integrate(FinSuppFn(space, b2, pts)));
            };
            auto cells_of = [&](const ClosedSetFamily& f) {
                std::vector<int> v = f.cells_at(n);
                return std::set<int>(v.begin(), v.end());
            };
            for (unsigned cm = 1; cm < (1u << cells); ++cm) {
                // the union of the singletons of a set is the set
                std::vector<ClosedSetFamily> singles;
                for (int c = 0; c < cells; ++c)
                    if ((cm >> c) & 1)
                        singles.push_back(
                            ClosedSetFamily::singleton(Point::from_prefix(space, n, c, point_depth)));
                std::set<int> expect;
                for (int c = 0; c < cells; ++c)
                    if ((cm >> c) & 1) expect.insert(c);
                if (cells_of(ClosedSetFamily::union_of(singles)) != expect) {
                    res.pass = false;
                    res.witness = "union of singletons differs at level " + std::to_string(n);
                    return res;
                }
                if (cells_of(ClosedSetFamily::union_of({family_of(cm)})) != expect) {
                    res.pass = false;
                    res.witness = "unary union differs at level " + std::to_string(n);
                    return res;
                }
            }
            for (unsigned c1 = 1; c1 < (1u << cells); ++c1)
                for (unsigned c2 = 1; c2 < (1u << cells); ++c2)
                    for (unsigned c3 = 1; c3 < (1u << cells); ++c3) {
                        ClosedSetFamily left = ClosedSetFamily::union_of(
                            {ClosedSetFamily::union_of({family_of(c1), family_of(c2)}),
                             family_of(c3)});
                        ClosedSetFamily right = ClosedSetFamily::union_of(
                            {family_of(c1),
                             ClosedSetFamily::union_of({family_of(c2), family_of(c3)})});
                        if (cells_of(left) != cells_of(right)) {
                            res.pass = false;
                            res.witness = "union is not associative at level " + std::to_string(n);
                            return res;
                        }
                        ++res.cases;
                    }
        }
    }
    return res;
}

namespace {

std::vector<FiniteSemimodule> module_catalog(const FiniteSemiring& s) {
    std::vector<FiniteSemimodule> out;
    FiniteSemimodule triv;
    triv.label = "trivial/" + s.label;
    triv.semiring = s;
    triv.size = 1;
    triv.mzero = 0;
    triv.madd = {{0}};
    triv.action.assign(s.size, {0});
    out.push_back(triv);
    out.push_back(self_module(s));

    if (s.same_as(builtin_semiring("bool2"))) {
        FiniteSemimodule chain3;
        chain3.label = "chain3/bool2";
        chain3.semiring = s;
        chain3.size = 3;
        chain3.mzero = 0;
        chain3.madd = {{0, 1, 2}, {1, 1, 2}, {2, 2, 2}};
        chain3.action = {{0, 0, 0}, {0, 1, 2}};
        out.push_back(chain3);

        FiniteSemimodule chain4;
        chain4.label = "chain4/bool2";
        chain4.semiring = s;
        chain4.size = 4;
        chain4.mzero = 0;
        chain4.madd.assign(4, std::vector<int>(4));
        for (int a = 0; a < 4; ++a)
            for (int b = 0; b < 4; ++b) chain4.madd[a][b] = std::max(a, b);
        chain4.action = {{0, 0, 0, 0}, {0, 1, 2, 3}};
        out.push_back(chain4);

        // the diamond 0 < a,b < 1 with join
        FiniteSemimodule diamond;
        diamond.label = "diamond/bool2";
        diamond.semiring = s;
        diamond.size = 4;
        diamond.mzero = 0;
        diamond.madd = {{0, 1, 2, 3}, {1, 1, 3, 3}, {2, 3, 2, 3}, {3, 3, 3, 3}};
        diamond.action = {{0, 0, 0, 0}, {0, 1, 2, 3}};
        out.push_back(diamond);
    }
    if (s.same_as(builtin_semiring("zmod", {2}))) {
        // the four-element vector space over zmod2, addition is xor
        FiniteSemimodule plane;
        plane.label = "plane/zmod2";
        plane.semiring = s;
        plane.size = 4;
        plane.mzero = 0;
        plane.madd.assign(4, std::vector<int>(4));
        for (int a = 0; a < 4; ++a)
            for (int b = 0; b < 4; ++b) plane.madd[a][b] = a ^ b;
        plane.action = {{0, 0, 0, 0}, {0, 1, 2, 3}};
        out.push_back(plane);
    }
    return out;
}

}  // namespace

SuiteResult freeness_suite() {
    SuiteResult res{"freeness", true, 0, ""};
    for (std::string spec : {"bool2", "zmod:2"}) {
        FiniteSemiring s = builtin_semiring_spec(spec);
        for (int base = 1; base <= 2; ++base) {
            Space X = Space::finite(base);
            int nfn = static_cast<int>(fn_space_size(s.size, base));

            // all level-0-definable measures, one per stage function
            std::vector<Measure> ms;
            for (int i = 0; i < nfn; ++i) {
                FinFn v = fn_at(s, base, i);
                std::vector<WeightedPoint> pts;
                for (int x = 0; x < base; ++x)
                    pts.push_back({Point::from_prefix(X, 0, x, 2), v.values[x]});
                ms.push_back(integrate(FinSuppFn(X, s, pts)));
                // distinct functions stay distinct as measures
                if (!(ms.back().stage_at(0) == v)) {
                    res.pass = false;
                    res.witness = "stage of the integrated function is not the function";
                    return res;
                }
            }

            for (const FiniteSemimodule& y : module_catalog(s)) {
                if (!validate_semimodule(y).pass()) {
                    res.pass = false;
                    res.witness = "catalog module " + y.label + " is invalid";
                    return res;
                }
                long long ntables = fn_space_size(y.size, base);
                for (long long ti = 0; ti < ntables; ++ti) {
                    std::vector<int> table(base);
                    long long t = ti;
                    for (int i = base - 1; i >= 0; --i) {
                        table[i] = static_cast<int>(t % y.size);
                        t /= y.size;
                    }
                    ContinuousMap f = ContinuousMap::stage_quotient(X, 0, table, y.size, 2);

                    std::vector<int> g(nfn);
                    for (int i = 0; i < nfn; ++i) g[i] = free_extension(y, f, ms[i]);

                    // g extends the stage map along dirac
                    for (int x = 0; x < base; ++x) {
                        Measure dm = dirac(s, Point::from_prefix(X, 0, x, 2));
                        if (free_extension(y, f, dm) != table[x]) {
                            res.pass = false;
                            res.witness = y.label + ": g(dirac(x)) != f(x)";
                            return res;
                        }
                    }
                    // semimodule homomorphism laws
                    for (int i = 0; i < nfn; ++i) {
                        for (int j = 0; j < nfn; ++j) {
                            if (free_extension(y, f, combine(ms[i], ms[j])) != y.add(g[i], g[j])) {
                                res.pass = false;
                                res.witness = y.label + ": g is not additive";
                                return res;
                            }
                            ++res.cases;
                        }
                        for (int c = 0; c < s.size; ++c)
                            if (free_extension(y, f, scale(c, ms[i])) != y.act(c, g[i])) {
                                res.pass = false;
                                res.witness = y.label + ": g does not respect scaling";
                                return res;
                            }
                    }

                    // uniqueness: every stage homomorphism agreeing on the unit
                    // functions is g itself
                    long long ncand = fn_space_size(y.size, nfn);
                    int matches = 0;
                    for (long long hi = 0; hi < ncand; ++hi) {
                        std::vector<int> h(nfn);
                        long long u = hi;
                        for (int i = nfn - 1; i >= 0; --i) {
                            h[i] = static_cast<int>(u % y.size);
                            u /= y.size;
                        }
                        bool hom = true;
                        for (int i = 0; i < nfn && hom; ++i) {
                            FinFn fi = fn_at(s, base, i);
                            for (int j = 0; j < nfn && hom; ++j) {
                                int sum = static_cast<int>(fn_index(s, add_fn(s, fi, fn_at(s, base, j))));
                                hom = h[sum] == y.add(h[i], h[j]);
                            }
                            for (int c = 0; c < s.size && hom; ++c) {
                                int scaled = static_cast<int>(fn_index(s, scale_fn(s, c, fi)));
                                hom = h[scaled] == y.act(c, h[i]);
                            }
                        }
                        if (!hom) continue;
                        bool on_units = true;
                        for (int x = 0; x < base && on_units; ++x)
                            on_units = h[fn_index(s, unit(s, base, x))] == table[x];
                        if (!on_units) continue;
                        ++matches;
                        if (h != g) {
                            res.pass = false;
                            res.witness = y.label + ": a second extension agrees on units";
                            return res;
                        }
                    }
                    if (matches != 1) {
                        res.pass = false;
                        res.witness = y.label + ": expected exactly one extension, found " +
                                      std::to_string(matches);
                        return res;
                    }
                }
            }
        }
    }
    return res;
}

std::vector<SuiteResult> run_all_suites(int cases, std::uint64_t seed) {
    std::vector<SuiteResult> out;
    Space cantor = Space::cantor();
    Space nat = Space::nat_infty();
    FiniteSemiring b2 = builtin_semiring("bool2");
    FiniteSemiring z2 = builtin_semiring("zmod", {2});
    FiniteSemiring t2 = builtin_semiring("trop_trunc", {2});

    for (const FiniteSemiring& s : {b2, z2, t2})
        out.push_back(additivity_suite(cantor, s, 3, cases, seed));
    for (const FiniteSemiring& s : {b2, z2, t2})
        out.push_back(stage_compatibility_suite(cantor, s, cases, seed));
    for (const FiniteSemiring& s : {b2, z2, t2})
        out.push_back(tau_injectivity_suite(cantor, s, cases, seed));
    out.push_back(tau_density_suite(cantor, b2));
    out.push_back(tau_density_suite(cantor, builtin_semiring("zmod", {3})));
    for (const FiniteSemiring& s : {b2, z2, t2}) out.push_back(pushforward_suite(s, cases, seed));
    for (const Space& sp : {cantor, nat})
        for (const FiniteSemiring& s : {b2, t2})
            out.push_back(roundtrip_suite(sp, s, 5, cases, seed));
    for (const Space& sp : {cantor, nat})
        out.push_back(pointwise_join_suite(sp, t2, 3, cases, seed));
    for (const Space& sp : {cantor, nat}) out.push_back(galois_suite(sp, t2, cases, seed));
    out.push_back(vietoris_suite(cantor, 3));
    out.push_back(vietoris_suite(Space::finite(3), 2));
    out.push_back(freeness_suite());
    return out;
}

}  // namespace profsemi
