#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>

#include "profsemi/monad.hpp"

using namespace profsemi;

TEST_CASE("functor action sums over fibres") {
    FiniteSemiring z2 = builtin_semiring("zmod", {2});
    FiniteSemiring b2 = builtin_semiring("bool2");

    FinFn f{{1, 1}};
    CHECK(functor_map(z2, {0, 0}, 1, f).values == std::vector<int>{0});  // 1+1 = 0 in zmod2
    CHECK(functor_map(b2, {0, 0}, 1, f).values == std::vector<int>{1});  // 1 or 1 = 1
    CHECK(functor_map(z2, {0, 1}, 2, f) == f);
}

TEST_CASE("unit is the characteristic function") {
    CHECK(unit(builtin_semiring("bool2"), 2, 0).values == std::vector<int>{1, 0});
    // the tropical one is the number 0, its zero is infinity (index 3)
    CHECK(unit(builtin_semiring("trop_trunc", {2}), 1, 0).values == std::vector<int>{0});
    CHECK(unit(builtin_semiring("trop_trunc", {2}), 2, 1).values == std::vector<int>{3, 0});
    CHECK(unit(builtin_semiring("zmod", {2}), 2, 1).values == std::vector<int>{0, 1});
    CHECK_THROWS_AS(unit(builtin_semiring("bool2"), 2, 2), domain_error);
}

TEST_CASE("mult weighs functions by their coefficients") {
    FiniteSemiring b2 = builtin_semiring("bool2");
    // base {a}: the enumeration of S^X is [{0},{1}]
    DoubleFinFn F{1, FinFn{{0, 1}}};
    CHECK(mult(b2, F).values == std::vector<int>{1});

    FiniteSemiring z2 = builtin_semiring("zmod", {2});
    DoubleFinFn G{1, FinFn{{1, 1}}};  // 1*f0 + 1*f1 with f0={0}, f1={1}
    CHECK(mult(z2, G).values == std::vector<int>{1});
}

TEST_CASE("mult after unit is the identity") {
    for (std::string spec : {"bool2", "zmod:2", "trop_trunc:1"}) {
        FiniteSemiring s = builtin_semiring_spec(spec);
        for (int base = 0; base <= 2; ++base) {
            long long n = fn_space_size(s.size, base);
            for (long long i = 0; i < n; ++i) {
                FinFn f = fn_at(s, base, i);
                DoubleFinFn F{base, unit(s, static_cast<int>(n), static_cast<int>(i))};
                CHECK(mult(s, F) == f);
            }
        }
    }
}

TEST_CASE("enumeration round trip") {
    FiniteSemiring s = builtin_semiring("zmod", {3});
    for (long long i = 0; i < fn_space_size(3, 2); ++i) CHECK(fn_index(s, fn_at(s, 2, i)) == i);
}

TEST_CASE("monad laws hold for the builtin semirings") {
    const long long budget = 1 << 17;
    SUBCASE("bool2 and zmod2 are fully exhaustive") {
        for (std::string spec : {"bool2", "zmod:2"}) {
            MonadLawReport r = check_monad_laws(builtin_semiring_spec(spec), 2, budget);
            CHECK(r.pass);
            CHECK_FALSE(r.partial);
        }
    }
    SUBCASE("larger carriers pass with the oversized layers marked partial") {
        for (std::string spec : {"zmod:3", "zmod:4", "trop_trunc:1", "nat_sat:2"}) {
            MonadLawReport r = check_monad_laws(builtin_semiring_spec(spec), 2, budget);
            CHECK(r.pass);
        }
    }
}

TEST_CASE("a coefficient-dropping mult fails with a witness") {
    MonadOps broken = standard_monad_ops();
    broken.mult_impl = [](const FiniteSemiring& s, const DoubleFinFn& F) {
        FinFn out = zero_fn(s, F.inner_base);
        for (long long i = 0; i < F.outer.base_size(); ++i) {
            FinFn f = fn_at(s, F.inner_base, i);
            for (int x = 0; x < F.inner_base; ++x) out.values[x] = s.add(out.values[x], f.values[x]);
        }
        return out;
    };
    for (std::string spec : {"bool2", "zmod:3"}) {
        MonadLawReport r = check_monad_laws(builtin_semiring_spec(spec), 2, 1 << 17, broken);
        CHECK_FALSE(r.pass);
        bool witnessed = false;
        for (const auto& c : r.checks)
            if (c.status == "fail" && !c.witness.empty()) witnessed = true;
        CHECK(witnessed);
    }
}

TEST_CASE("functoriality: identities and composition") {
    for (std::string spec : {"bool2", "zmod:3", "zmod:4"}) {
        FiniteSemiring s = builtin_semiring_spec(spec);
        for (int m1 = 0; m1 <= 3; ++m1) {
            // identity
            std::vector<int> id(m1);
            for (int i = 0; i < m1; ++i) id[i] = i;
            long long nf = fn_space_size(s.size, m1);
            for (long long fi = 0; fi < nf; ++fi) {
                FinFn f = fn_at(s, m1, fi);
                CHECK(functor_map(s, id, m1, f) == f);
            }
            // composition over all map pairs out of small bases
            for (int m2 = 1; m2 <= 3; ++m2)
                for (int m3 = 1; m3 <= 3; ++m3) {
                    long long nphi = fn_space_size(m2, m1), npsi = fn_space_size(m3, m2);
                    for (long long pi = 0; pi < nphi; ++pi)
                        for (long long qi = 0; qi < npsi; ++qi) {
                            std::vector<int> phi(m1), psi(m2), comp(m1);
                            long long t = pi;
                            for (int i = m1 - 1; i >= 0; --i) {
                                phi[i] = static_cast<int>(t % m2);
                                t /= m2;
                            }
                            t = qi;
                            for (int i = m2 - 1; i >= 0; --i) {
                                psi[i] = static_cast<int>(t % m3);
                                t /= m3;
                            }
                            for (int i = 0; i < m1; ++i) comp[i] = psi[phi[i]];
                            for (long long fi = 0; fi < nf; ++fi) {
                                FinFn f = fn_at(s, m1, fi);
                                CHECK(functor_map(s, comp, m3, f) ==
                                      functor_map(s, psi, m3, functor_map(s, phi, m2, f)));
                            }
                        }
                }
        }
    }
}

TEST_CASE("over bool2 the monad is the finite powerset monad") {
    FiniteSemiring b2 = builtin_semiring("bool2");
    for (int base = 0; base <= 3; ++base) {
        long long n = fn_space_size(2, base);
        // functor action is direct image of subsets
        for (int m2 = 1; m2 <= 3; ++m2) {
            long long nphi = fn_space_size(m2, base);
            for (long long pi = 0; pi < nphi; ++pi) {
                std::vector<int> phi(base);
                long long t = pi;
                for (int i = base - 1; i >= 0; --i) {
                    phi[i] = static_cast<int>(t % m2);
                    t /= m2;
                }
                for (long long fi = 0; fi < n; ++fi) {
                    FinFn f = fn_at(b2, base, fi);
                    std::set<int> image;
                    for (int x = 0; x < base; ++x)
                        if (f.values[x]) image.insert(phi[x]);
                    FinFn g = functor_map(b2, phi, m2, f);
                    for (int y = 0; y < m2; ++y) CHECK((g.values[y] == 1) == (image.count(y) > 0));
                }
            }
        }
        // unit is singleton
        for (int x = 0; x < base; ++x) {
            FinFn u = unit(b2, base, x);
            for (int y = 0; y < base; ++y) CHECK((u.values[y] == 1) == (y == x));
        }
        // mult is union
        long long nn = fn_space_size(2, static_cast<int>(n));
        for (long long Fi = 0; Fi < nn && base <= 2; ++Fi) {
            FinFn outer = fn_at(b2, static_cast<int>(n), Fi);
            std::set<int> expected;
            for (long long i = 0; i < n; ++i)
                if (outer.values[static_cast<size_t>(i)]) {
                    FinFn f = fn_at(b2, base, i);
                    for (int x = 0; x < base; ++x)
                        if (f.values[x]) expected.insert(x);
                }
            FinFn joined = mult(b2, {base, outer});
            for (int x = 0; x < base; ++x) CHECK((joined.values[x] == 1) == (expected.count(x) > 0));
        }
    }
}

TEST_CASE("semimodule tables give algebras for the monad") {
    // h(f) = sum f(x)*x satisfies the two Eilenberg-Moore laws
    std::vector<FiniteSemimodule> modules;
    modules.push_back(self_module(builtin_semiring("bool2")));
    modules.push_back(self_module(builtin_semiring("zmod", {2})));
    modules.push_back(three_chain_module(builtin_semiring("nat_sat", {3})));
    {
        // the three-element chain as a bool2 semilattice
        FiniteSemimodule chain;
        chain.label = "chain3/bool2";
        chain.semiring = builtin_semiring("bool2");
        chain.size = 3;
        chain.mzero = 0;
        chain.madd = {{0, 1, 2}, {1, 1, 2}, {2, 2, 2}};
        chain.action = {{0, 0, 0}, {0, 1, 2}};
        modules.push_back(chain);
    }

    for (const FiniteSemimodule& mod : modules) {
        REQUIRE(validate_semimodule(mod).pass());
        const FiniteSemiring& s = mod.semiring;
        auto h = [&](const FinFn& f) {
            int acc = mod.mzero;
            for (int x = 0; x < mod.size; ++x) acc = mod.add(acc, mod.act(f.values[x], x));
            return acc;
        };
        // h . eta = id
        for (int x = 0; x < mod.size; ++x) CHECK(h(unit(s, mod.size, x)) == x);
        // h . S(h) = h . mu on S^2 M
        long long sm = fn_space_size(s.size, mod.size);
        if (sm > (1 << 16)) continue;
        std::vector<int> hmap(static_cast<size_t>(sm));
        for (long long i = 0; i < sm; ++i) hmap[static_cast<size_t>(i)] = h(fn_at(s, mod.size, i));
        long long ssm = fn_space_size(s.size, static_cast<int>(sm));
        if (ssm > (1 << 16)) continue;
        for (long long Fi = 0; Fi < ssm; ++Fi) {
            FinFn outer = fn_at(s, static_cast<int>(sm), Fi);
            int via_h = h(functor_map(s, hmap, mod.size, outer));
            int via_mu = h(mult(s, {mod.size, outer}));
            CHECK(via_h == via_mu);
        }
    }
}
