#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>

#include "profsemi/rng.hpp"
#include "profsemi/space.hpp"

using namespace profsemi;

TEST_CASE("builtin space level sizes") {
    Space c = Space::cantor();
    CHECK(c.level_size(0) == 1);
    CHECK(c.level_size(1) == 2);
    CHECK(c.level_size(2) == 4);
    CHECK(c.level_size(3) == 8);

    Space n = Space::nat_infty();
    CHECK(n.level_size(0) == 1);
    CHECK(n.level_size(1) == 2);
    CHECK(n.level_size(2) == 3);
    // the saturation transition folds the new number into the star
    CHECK(n.transition(2, 2) == 2);
    CHECK(n.transition(2, 3) == 2);
    CHECK(n.transition(2, 1) == 1);

    Space f = Space::finite(3);
    for (int lvl = 0; lvl < 5; ++lvl) CHECK(f.level_size(lvl) == 3);

    Space d = Space::depth_product({2, 3});
    CHECK(d.level_size(0) == 1);
    CHECK(d.level_size(1) == 2);
    CHECK(d.level_size(2) == 6);
    CHECK(d.level_size(5) == 6);
}

TEST_CASE("clopen boolean algebra on cantor") {
    Space c = Space::cantor();
    Clopen b0(c, 1, {0});

    CHECK(clopen_and(b0, clopen_not(b0)).is_empty());
    CHECK(clopen_equal(clopen_or(b0, clopen_not(b0)), Clopen::full(c)));

    // lifting b0 to level 2 yields the cells whose first character is 0
    std::vector<char> lifted = b0.mask_at(2);
    CHECK(lifted == std::vector<char>{1, 0, 1, 0});

    // a full-fibre set canonicalises back down
    Clopen same(c, 2, {0, 2});
    CHECK(same.level() == 1);
    CHECK(clopen_equal(same, b0));
}

TEST_CASE("atoms of generated clopen subalgebras") {
    Space c = Space::cantor();
    CHECK(atoms(c, {}).size() == 1);
    CHECK(clopen_equal(atoms(c, {})[0], Clopen::full(c)));

    Clopen b0(c, 1, {0});
    auto two = atoms(c, {b0});
    REQUIRE(two.size() == 2);
    CHECK(clopen_equal(two[0], b0));
    CHECK(clopen_equal(two[1], clopen_not(b0)));

    // second generator: second character 0 -> four sign patterns
    Clopen c0(c, 2, {0, 1});
    auto four = atoms(c, {b0, c0});
    CHECK(four.size() == 4);

    // oracle: group level-2 cells by the sign pattern directly
    std::vector<char> m0 = b0.mask_at(2), m1 = c0.mask_at(2);
    for (const Clopen& a : four) {
        std::vector<char> am = a.mask_at(2);
        int seen = -1;
        for (int x = 0; x < 4; ++x) {
            if (!am[x]) continue;
            int pat = m0[x] * 2 + m1[x];
            if (seen < 0) seen = pat;
            CHECK(seen == pat);
        }
    }
}

TEST_CASE("points and membership") {
    Space c = Space::cantor();
    Point z = Point::from_prefix(c, 0, 0, 6);
    Point o = Point::from_prefix(c, 1, 1, 6);
    Clopen b0(c, 1, {0});

    for (int n = 0; n <= 6; ++n) CHECK(z.at(n) == 0);
    CHECK(o.at(1) == 1);
    CHECK(o.at(2) == 1);  // least extension of "1" is "10"

    CHECK(point_in(z, b0));
    CHECK_FALSE(point_in(o, b0));
    CHECK(point_in(z, Clopen::full(c)));
    CHECK(point_in(o, Clopen::full(c)));
    CHECK_FALSE(point_in(o, Clopen::empty(c)));

    CHECK_THROWS_AS(z.at(7), depth_error);
    CHECK(separation_level({z, o}, 6) == 1);
}

TEST_CASE("system validation flags a missed cell") {
    CHECK(validate_system(Space::cantor(), 6).pass());

    Space broken = Space::table({1, 2, 2}, {{0, 0}, {0, 0}});
    ValidationReport r = validate_system(broken, 2);
    CHECK_FALSE(r.pass());
    REQUIRE(r.violations.size() == 1);
    CHECK(r.violations[0].law == "transition_surjective");
    CHECK(r.violations[0].witness == std::vector<int>{1, 1});
}

TEST_CASE("the first-bit map sends the zero thread to the constant zero thread") {
    ContinuousMap h = ContinuousMap::first_bit(5);
    CHECK(validate_map(h).pass());

    Space c = Space::cantor();
    Point z = Point::from_prefix(c, 0, 0, 6);
    Point image = h.apply(z);
    for (int n = 0; n <= image.depth(); ++n) CHECK(image.at(n) == 0);

    Clopen ones(Space::finite(2), 0, {1});
    Clopen pre = h.preimage(ones);
    CHECK(clopen_equal(pre, Clopen(c, 1, {1})));
}

TEST_CASE("identity and composition") {
    Space c = Space::cantor();
    ContinuousMap id = ContinuousMap::identity(c, 5);
    CHECK(validate_map(id).pass());

    ContinuousMap h = ContinuousMap::first_bit(5);
    ContinuousMap composed = id.then(h);
    CHECK(validate_map(composed).pass());

    Point o = Point::from_prefix(c, 1, 1, 6);
    CHECK(composed.apply(o).at(3) == h.apply(o).at(3));
}

TEST_CASE("canonicalisation respects the boolean operations") {
    Space c = Space::cantor();
    for (int cs = 0; cs < 60; ++cs) {
        CaseRng rng(11, cs);
        int la = 1 + rng.below(5), lb = 1 + rng.below(5);
        std::vector<char> ma(c.level_size(la)), mb(c.level_size(lb));
        for (auto& v : ma) v = rng.coin();
        for (auto& v : mb) v = rng.coin();
        Clopen a = clopen_from_mask(c, la, ma), b = clopen_from_mask(c, lb, mb);

        // rebuilding from a lifted presentation lands on the same canonical form
        Clopen relift = clopen_from_mask(c, la + 2, a.mask_at(la + 2));
        CHECK(clopen_equal(relift, a));

        // (a and b) or (a minus b) = a
        CHECK(clopen_equal(clopen_or(clopen_and(a, b), clopen_diff(a, b)), a));
        CHECK(clopen_leq(clopen_and(a, b), a));
        CHECK(clopen_leq(a, clopen_or(a, b)));
    }
}

TEST_CASE("atoms partition the space and refine the generators") {
    Space c = Space::cantor();
    for (int cs = 0; cs < 40; ++cs) {
        CaseRng rng(12, cs);
        int ngen = rng.below(5);
        std::vector<Clopen> gens;
        for (int i = 0; i < ngen; ++i) {
            int lvl = 1 + rng.below(4);
            std::vector<char> m(c.level_size(lvl));
            for (auto& v : m) v = rng.coin();
            gens.push_back(clopen_from_mask(c, lvl, m));
        }
        std::vector<Clopen> parts = atoms(c, gens);

        Clopen join = Clopen::empty(c);
        for (size_t i = 0; i < parts.size(); ++i) {
            CHECK_FALSE(parts[i].is_empty());
            join = clopen_or(join, parts[i]);
            for (size_t j = i + 1; j < parts.size(); ++j)
                CHECK(clopen_and(parts[i], parts[j]).is_empty());
        }
        CHECK(clopen_equal(join, Clopen::full(c)));

        for (const Clopen& g : gens) {
            Clopen covered = Clopen::empty(c);
            for (const Clopen& a : parts)
                if (clopen_leq(a, g)) covered = clopen_or(covered, a);
            CHECK(clopen_equal(covered, g));
        }
    }
}

TEST_CASE("operations across spaces and depths fail loudly") {
    Space c = Space::cantor();
    Space n = Space::nat_infty();
    CHECK_THROWS_AS(Space::finite(0), domain_error);
    CHECK_THROWS_AS(clopen_and(Clopen(c, 1, {0}), Clopen(n, 1, {0})), mismatch_error);
    CHECK_THROWS_AS(point_in(Point::from_prefix(n, 0, 0, 2), Clopen(c, 1, {0})), mismatch_error);
    // a clopen deeper than the point's certification
    Point shallow = Point::from_prefix(c, 0, 0, 1);
    CHECK_THROWS_AS(point_in(shallow, Clopen(c, 2, {1})), depth_error);
    CHECK_THROWS_AS(Clopen(c, 1, {2}), domain_error);
}

TEST_CASE("apply then membership agrees with preimage membership") {
    Space c = Space::cantor();
    ContinuousMap h = ContinuousMap::first_bit(5);
    ContinuousMap q = ContinuousMap::stage_quotient(c, 2, {0, 1, 2, 3}, 4, 5);
    for (int cs = 0; cs < 60; ++cs) {
        CaseRng rng(13, cs);
        Point p = Point::from_prefix(c, 3, rng.below(8), 6);
        const ContinuousMap& f = rng.coin() ? h : q;
        std::vector<char> mask(f.target().level_size(0));
        for (auto& v : mask) v = rng.coin();
        Clopen b = clopen_from_mask(f.target(), 0, mask);
        CHECK(point_in(f.apply(p), b) == point_in(p, f.preimage(b)));
    }
}
