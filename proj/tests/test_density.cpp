#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>

#include "profsemi/density.hpp"
#include "profsemi/props.hpp"

using namespace profsemi;

namespace {

Space cantor = Space::cantor();
FiniteSemiring b2 = builtin_semiring("bool2");
FiniteSemiring t2 = builtin_semiring("trop_trunc", {2});

Point z() { return Point::from_prefix(cantor, 0, 0, 8); }
Point o() { return Point::from_prefix(cantor, 1, 1, 8); }
Clopen b0() { return Clopen(cantor, 1, {0}); }

}  // namespace

TEST_CASE("density of a dirac is the characteristic function of the point") {
    ScottFn d = density(dirac(b2, z()));
    PointwiseValue at_z = eval_pointwise(d, z(), 0);
    CHECK(at_z.value == 1);
    CHECK(at_z.stabilised);

    PointwiseValue at_o = eval_pointwise(d, o(), 1);
    CHECK(at_o.value == 0);
    CHECK(at_o.stabilised);  // the threads separate at level 1
}

TEST_CASE("tropical densities") {
    ScottFn d = density(integrate(FinSuppFn(cantor, t2, {{z(), 2}})));
    CHECK(eval_pointwise(d, z(), 5).value == 2);
    CHECK(eval_pointwise(d, z(), 5).stabilised);
    CHECK(eval_pointwise(d, o(), 5).value == t2.zero);

    ScottFn zero = density(zero_measure(cantor, t2, 8));
    CHECK(eval_pointwise(zero, o(), 4).value == t2.zero);
}

TEST_CASE("density requires an idempotent semiring") {
    CHECK_THROWS_AS(density(dirac(builtin_semiring("zmod", {2}), z())), domain_error);
}

TEST_CASE("integration of the density recovers the measure on clopens") {
    Measure m = dirac(b2, z());
    ScottFn d = density(m);
    CHECK(integral(d, Clopen::empty(cantor)) == b2.zero);
    CHECK(integral(d, b0()) == 1);
    CHECK(integral(d, clopen_not(b0())) == 0);
    CHECK(integral(d, b0()) == eval(m, b0()));

    Measure tm = integrate(FinSuppFn(cantor, t2, {{z(), 2}}));
    ScottFn td = density(tm);
    CHECK(integral(td, b0()) == 2);
    CHECK(integral(td, clopen_not(b0())) == t2.zero);
}

TEST_CASE("pointwise density equals the meet over enclosing clopens") {
    // oracle over all level-2-definable measures: delta(p) is the
    // natural-order meet of mu(b) over the sixteen level-2 clopens with p in b
    FiniteSemiring t1 = builtin_semiring("trop_trunc", {1});
    NaturalOrder ord = natural_order(t1);
    int cells = cantor.level_size(2);
    long long nfn = fn_space_size(t1.size, cells);
    for (long long i = 0; i < nfn; ++i) {
        FinFn v = fn_at(t1, cells, i);
        std::vector<WeightedPoint> pts;
        for (int c = 0; c < cells; ++c)
            if (v.values[c] != t1.zero) pts.push_back({Point::from_prefix(cantor, 2, c, 4), v.values[c]});
        Measure m = integrate(FinSuppFn(cantor, t1, pts));
        ScottFn d = density(m);
        for (int c = 0; c < cells; ++c) {
            Point p = Point::from_prefix(cantor, 2, c, 4);
            int expect = -1;
            for (unsigned bm = 0; bm < 16u; ++bm) {
                if (!((bm >> c) & 1)) continue;
                std::vector<char> mask(cells);
                for (int x = 0; x < cells; ++x) mask[x] = (bm >> x) & 1;
                int mu = eval(m, clopen_from_mask(cantor, 2, mask));
                expect = expect < 0 ? mu : ord.meet(expect, mu);
            }
            PointwiseValue got = eval_pointwise(d, p, 2);
            CHECK(got.value == expect);
            CHECK(got.stabilised);
        }
    }
}

TEST_CASE("round trips between measures and densities") {
    Measure m = integrate(FinSuppFn(cantor, t2, {{z(), 1}, {o(), 2}}));
    ScottFn d = density(m);
    CHECK(equal_to_depth(to_measure(d), m, 6));
    ScottFn d2 = density(to_measure(d));
    for (int c = 0; c < cantor.level_size(5); ++c) {
        Point p = Point::from_prefix(cantor, 5, c, 5);
        CHECK(eval_pointwise(d2, p, 5).value == eval_pointwise(d, p, 5).value);
    }
    CHECK(equal_to_depth(to_measure(density(zero_measure(cantor, t2, 8))),
                         zero_measure(cantor, t2, 8), 6));
}

TEST_CASE("custom-provenance densities are flagged depth-bounded") {
    Measure m = measure_from_stages(cantor, b2, {FinFn{{1}}, FinFn{{1, 1}}});
    ScottFn d = density(m);
    PointwiseValue v = eval_pointwise(d, Point::from_prefix(cantor, 1, 0, 1), 1);
    CHECK_FALSE(v.stabilised);
}

TEST_CASE("galois adjunction on chosen pairs") {
    Measure m = dirac(b2, z());
    ScottFn dm = density(m);
    GaloisReport refl = galois_holds(dm, m, 5);
    CHECK(refl.integral_leq);
    CHECK(refl.pointwise_leq);

    // the constant-one function against a dirac fails on both sides
    std::vector<WeightedPoint> everywhere;
    for (int c = 0; c < cantor.level_size(5); ++c)
        everywhere.push_back({Point::from_prefix(cantor, 5, c, 8), 1});
    ScottFn ones = density(integrate(FinSuppFn(cantor, b2, everywhere)));
    GaloisReport g = galois_holds(ones, m, 5);
    CHECK_FALSE(g.integral_leq);
    CHECK_FALSE(g.pointwise_leq);
    CHECK(g.agree());

    ScottFn zero = density(zero_measure(cantor, b2, 8));
    GaloisReport bottom = galois_holds(zero, m, 5);
    CHECK(bottom.integral_leq);
    CHECK(bottom.pointwise_leq);
}

TEST_CASE("closed set families") {
    ClosedSetFamily single = ClosedSetFamily::singleton(z());
    ClosedSetFamily viaMeasure = ClosedSetFamily::from_measure(dirac(b2, z()));
    for (int n = 0; n <= 4; ++n) CHECK(single.cells_at(n) == viaMeasure.cells_at(n));

    ClosedSetFamily both = ClosedSetFamily::from_measure(combine(dirac(b2, z()), dirac(b2, o())));
    ClosedSetFamily joined = ClosedSetFamily::union_of(
        {ClosedSetFamily::singleton(z()), ClosedSetFamily::singleton(o())});
    for (int n = 0; n <= 4; ++n) CHECK(both.cells_at(n) == joined.cells_at(n));

    CHECK(family_meets(both, b0()));
    CHECK(family_meets(both, clopen_not(b0())));
    CHECK_FALSE(family_inside(both, b0()));
    CHECK(family_inside(single, b0()));

    CHECK_THROWS_AS(ClosedSetFamily::from_measure(dirac(builtin_semiring("zmod", {2}), z())),
                    domain_error);
}

TEST_CASE("suite smoke runs") {
    CHECK(roundtrip_suite(cantor, t2, 5, 80, 21).pass);
    CHECK(roundtrip_suite(Space::nat_infty(), b2, 5, 80, 21).pass);
    CHECK(pointwise_join_suite(cantor, t2, 3, 40, 21).pass);
    CHECK(galois_suite(cantor, b2, 60, 21).pass);
    CHECK(vietoris_suite(Space::finite(2), 2).pass);
}
