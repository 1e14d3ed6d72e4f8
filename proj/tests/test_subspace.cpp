#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "cwc/field.hpp"
#include "cwc/subspace.hpp"

using namespace cwc;

TEST_CASE("rref of a two-dimensional span over F_2^3") {
    FieldPtr f = build_field(2, 3);
    const Subspace X = rref_of(f, std::vector<Vec>{{0, 1, 1}, {1, 0, 1}});
    CHECK(X.dim() == 2);
    CHECK(X.rref() == std::vector<Vec>{{1, 0, 1}, {0, 1, 1}});
}

TEST_CASE("rref edge cases") {
    FieldPtr f = build_field(2, 3);
    const Subspace single = rref_of(f, std::vector<Vec>{{0, 0, 1}});
    CHECK(single.dim() == 1);
    CHECK(single.rref() == std::vector<Vec>{{0, 0, 1}});
    const Subspace dup = rref_of(f, std::vector<Vec>{{1, 1, 0}, {1, 1, 0}});
    CHECK(dup.dim() == 1);
    CHECK(dup.rref() == std::vector<Vec>{{1, 1, 0}});
    const Subspace zero = rref_of(f, std::vector<Vec>{{0, 0, 0}});
    CHECK(zero.dim() == 0);
}

TEST_CASE("rref over F_3 normalizes leading coefficients") {
    FieldPtr f = build_field(3, 3);
    const Subspace X = rref_of(f, std::vector<Vec>{{2, 1, 0}, {0, 0, 2}});
    CHECK(X.dim() == 2);
    CHECK(X.rref() == std::vector<Vec>{{1, 2, 0}, {0, 0, 1}});
}

TEST_CASE("invalid rref rows are rejected") {
    FieldPtr f = build_field(2, 3);
    CHECK_THROWS_AS(Subspace(f, {{0, 1, 1}, {1, 0, 1}}), std::invalid_argument);  // pivot order
    CHECK_THROWS_AS(Subspace(f, {{1, 1, 0}, {0, 1, 1}}), std::invalid_argument);  // dirty column
}

TEST_CASE("element enumeration") {
    FieldPtr f = build_field(2, 3);
    const Subspace zero = rref_of(f, std::vector<Vec>{{0, 0, 0}});
    CHECK(zero.elements() == std::vector<FieldElement>{FieldElement::zero()});

    const Subspace line = rref_of(f, std::vector<Vec>{{1, 0, 0}});
    const auto le = line.elements();
    REQUIRE(le.size() == 2);
    CHECK(le[0] == FieldElement::zero());
    CHECK(le[1] == f->element_of(Vec{1, 0, 0}));

    const Subspace X = rref_of(f, std::vector<Vec>{{1, 0, 1}, {0, 1, 1}});
    const auto xe = X.elements();
    REQUIRE(xe.size() == 4);
    CHECK(xe[0] == FieldElement::zero());
    CHECK(std::set<FieldElement>(xe.begin(), xe.end()).size() == 4);
    for (FieldElement e : xe) CHECK(X.contains(e));
}

TEST_CASE("element set is closed under addition and scalar multiplication") {
    FieldPtr f = build_field(3, 3);
    const Subspace X = rref_of(f, std::vector<Vec>{{1, 0, 2}, {0, 1, 1}});
    const auto elems = X.elements();
    REQUIRE(elems.size() == 9);
    const std::set<FieldElement> s(elems.begin(), elems.end());
    REQUIRE(s.size() == 9);
    for (FieldElement a : elems)
        for (FieldElement b : elems) CHECK(s.count(f->add(a, b)) == 1);
    for (FieldElement a : elems)
        for (int c = 0; c < 3; ++c) CHECK(s.count(f->scalar_mul(c, a)) == 1);
}

TEST_CASE("distance and intersection dimension") {
    FieldPtr f4 = build_field(2, 4);
    const Subspace X = rref_of(f4, std::vector<Vec>{{1, 0, 0, 0}, {0, 1, 0, 0}});
    CHECK(subspace_distance(X, X) == 0);
    // shares the line spanned by e1
    const Subspace Y = rref_of(f4, std::vector<Vec>{{1, 0, 0, 0}, {0, 0, 1, 0}});
    CHECK(intersection_dim(X, Y) == 1);
    CHECK(subspace_distance(X, Y) == 2);
    CHECK(subspace_distance(Y, X) == 2);

    FieldPtr other = build_field(2, 4);
    const Subspace Z = rref_of(other, std::vector<Vec>{{1, 0, 0, 0}});
    CHECK_THROWS_AS(subspace_distance(X, Z), std::invalid_argument);
}

TEST_CASE("pivot profile") {
    FieldPtr f = build_field(2, 3);
    const Subspace X = rref_of(f, std::vector<Vec>{{1, 0, 1}, {0, 1, 1}});
    const PivotProfile p = pivot_profile(X);
    CHECK(p.pivot_mask == Vec{1, 1, 0});
    CHECK(p.free_positions == std::vector<int>{2});
    CHECK(p.coset_selector == std::vector<Vec>{{0, 0, 1}});

    const Subspace full = rref_of(f, std::vector<Vec>{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
    CHECK(pivot_profile(full).free_positions.empty());
    CHECK(pivot_profile(full).coset_selector.empty());

    FieldPtr f5 = build_field(2, 5);
    const Subspace tail =
        rref_of(f5, std::vector<Vec>{{0, 0, 1, 0, 0}, {0, 0, 0, 1, 0}, {0, 0, 0, 0, 1}});
    CHECK(pivot_profile(tail).pivot_mask == Vec{0, 0, 1, 1, 1});
}

TEST_CASE("grassmannian enumeration counts") {
    FieldPtr f3 = build_field(2, 3);
    CHECK(enumerate_grassmannian(f3, 2).size() == 7);
    FieldPtr f2 = build_field(2, 2);
    CHECK(enumerate_grassmannian(f2, 1).size() == 3);
    CHECK(enumerate_grassmannian(f3, 3).size() == 1);
    CHECK_THROWS_AS(enumerate_grassmannian(f3, 2, 3), std::invalid_argument);
}

TEST_CASE("grassmannian enumeration is exhaustive and duplicate-free") {
    FieldPtr f = build_field(3, 3);
    const auto all = enumerate_grassmannian(f, 2);
    CHECK(all.size() == 13);  // (3^3-1)(3^2-1) / ((3^2-1)(3-1)) = 13
    std::set<std::vector<Vec>> seen;
    for (const Subspace& s : all) {
        CHECK(s.dim() == 2);
        CHECK(seen.insert(s.rref()).second);
    }
}

TEST_CASE("canonicity round-trip through elements") {
    FieldPtr f = build_field(2, 4);
    for (const Subspace& X : enumerate_grassmannian(f, 2)) {
        const Subspace back = rref_of(f, X.elements());
        CHECK(back == X);
    }
}

TEST_CASE("triangle inequality on small Grassmannians") {
    FieldPtr f = build_field(2, 4);
    const auto all = enumerate_grassmannian(f, 2);
    for (const Subspace& a : all)
        for (const Subspace& b : all)
            for (const Subspace& c : all)
                REQUIRE(subspace_distance(a, c) <=
                        subspace_distance(a, b) + subspace_distance(b, c));
}

TEST_CASE("cyclic shift") {
    FieldPtr f = build_field(2, 4);
    const Subspace X = rref_of(
        f, std::vector<FieldElement>{FieldElement::power(0), FieldElement::power(5),
                                     FieldElement::power(10)});
    Subspace cur = cyclic_shift(X);
    CHECK(cur ==
          rref_of(f, std::vector<FieldElement>{FieldElement::power(1), FieldElement::power(6),
                                               FieldElement::power(11)}));
    // full orbit returns to the start
    cur = X;
    for (long long i = 0; i < f->group_order(); ++i) cur = cyclic_shift(cur);
    CHECK(cur == X);

    // k = 1: {0, alpha^e} shifts to {0, alpha^{e+1}}
    const Subspace line = rref_of(f, std::vector<FieldElement>{FieldElement::power(3)});
    const Subspace shifted = cyclic_shift(line);
    CHECK(shifted == rref_of(f, std::vector<FieldElement>{FieldElement::power(4)}));
}
