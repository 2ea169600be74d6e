#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "arcgon/arc.hpp"

using namespace arcgon;

TEST_CASE("admissibility by length and congruence") {
    CHECK(is_admissible(Weight{-3}, Arc{0, -3}));
    CHECK_FALSE(is_admissible(Weight{-3}, Arc{0, -4}));
    CHECK_FALSE(is_admissible(Weight{-1}, Arc{2, 0}));
    CHECK(is_admissible(Weight{-1}, Arc{5, 0}));
    CHECK_FALSE(is_admissible(Weight{-2}, Arc{1, 0}));  // below minimum length
    CHECK(is_admissible(Weight{-2}, Arc{2, 0}));
    CHECK(is_admissible(Weight{-2}, Arc{5, 0}));
}

TEST_CASE("weight invariants") {
    CHECK_THROWS_AS(Weight{0}, std::invalid_argument);
    const Weight w{-3};
    CHECK(w.d() == -4);
    CHECK(w.modulus() == 4);
    CHECK(w.abs_w() == 3);
}

TEST_CASE("functor actions on coordinates") {
    CHECK(suspend(Arc{3, 0}) == Arc{2, -1});
    CHECK(tau_shift(Weight{-2}, Arc{3, 0}) == Arc{6, 3});
    CHECK(serre_shift(Weight{-2}, Arc{3, 0}) == Arc{5, 2});
}

TEST_CASE("functors preserve length and admissibility; tau = Sigma^d") {
    for (std::int64_t wv : {-1, -2, -3, -4}) {
        const Weight w{wv};
        for (std::int64_t u = -12; u <= 12; ++u)
            for (std::int64_t len = 1; len <= 10; ++len) {
                const Arc a{u + len, u};
                if (!is_admissible(w, a)) continue;
                for (std::int64_t k = -3; k <= 3; ++k) {
                    CHECK(suspend(a, k).length() == a.length());
                    CHECK(is_admissible(w, suspend(a, k)));
                }
                CHECK(tau_shift(w, a) == suspend(a, w.d()));
                CHECK(serre_shift(w, a) == suspend(a, w.w));
            }
    }
}

TEST_CASE("relate: spec triples") {
    {
        const Relation r = relate(Arc{3, 0}, Arc{5, 2});
        CHECK(r.kind == RelationKind::StrictCross);
        // d(a,b) = min(|3-5|,|0-2|,|3-2|,|0-5|) = 1, attained by (3,2).
        CHECK(r.distance == 1);
        CHECK(r.crossing());
        CHECK_FALSE(r.neighbouring);
    }
    {
        const Relation r = relate(Arc{3, 0}, Arc{7, 4});
        CHECK(r.kind == RelationKind::Disjoint);
        CHECK(r.distance == 1);
        CHECK(r.neighbouring);
        REQUIRE(r.witness.has_value());
        CHECK(*r.witness == std::pair<std::int64_t, std::int64_t>{3, 4});
    }
    {
        const Relation r = relate(Arc{3, 0}, Arc{4, 3});
        CHECK(r.kind == RelationKind::SharedVertex);
        CHECK(r.crossing());
    }
    {
        const Relation r = relate(Arc{1, 0}, Arc{2, -1});
        CHECK(r.kind == RelationKind::Nested);
        REQUIRE(r.overarc.has_value());
        CHECK(*r.overarc == Arc{2, -1});
        CHECK(r.neighbouring);
    }
    CHECK_THROWS_AS(relate(Arc{3, 0}, Arc{3, 0}), std::invalid_argument);
}

TEST_CASE("relate symmetry; nested keeps the same overarc from both sides") {
    std::vector<Arc> arcs;
    for (std::int64_t u = -4; u <= 4; ++u)
        for (std::int64_t s = u + 1; s <= 5; ++s) arcs.push_back(Arc{s, u});
    for (const Arc& a : arcs)
        for (const Arc& b : arcs) {
            if (a == b) continue;
            const Relation r1 = relate(a, b);
            const Relation r2 = relate(b, a);
            CHECK(r1.kind == r2.kind);
            CHECK(r1.distance == r2.distance);
            CHECK(r1.neighbouring == r2.neighbouring);
            if (r1.kind == RelationKind::Nested) CHECK(*r1.overarc == *r2.overarc);
        }
}

TEST_CASE("component index") {
    const Weight w{-2};
    CHECK(component_index(w, Arc{3, 0}) == 0);
    CHECK(component_index(w, Arc{2, -1}) == 2);  // Sigma(3,0)
    CHECK(component_index(w, Arc{6, 3}) == 0);   // tau(3,0)
    CHECK_THROWS_AS(component_index(w, Arc{0, 1}), std::invalid_argument);
}

TEST_CASE("component index: tau-invariant, suspension decrements mod |w|+1") {
    for (std::int64_t wv : {-1, -2, -3, -4}) {
        const Weight w{wv};
        const std::int64_t m = w.modulus();
        for (std::int64_t u = -100; u <= 100; u += 7)
            for (std::int64_t len = w.abs_w(); len <= w.abs_w() + 3 * m; len += m) {
                const Arc a{u + len, u};
                REQUIRE(is_admissible(w, a));
                const std::int64_t c = component_index(w, a);
                CHECK(component_index(w, tau_shift(w, a)) == c);
                CHECK(component_index(w, suspend(a)) == floor_mod(c - 1, m));
            }
    }
}
