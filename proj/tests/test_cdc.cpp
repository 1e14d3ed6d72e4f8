#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "cwc/cdc.hpp"

using namespace cwc;

TEST_CASE("spread of F_2^4 into planes") {
    FieldPtr f = build_field(2, 4);
    const ConstantDimensionCode c = spread(f, 2);
    REQUIRE(c.size() == 5);
    CHECK(c.declared_d == 4);
    CHECK(min_subspace_distance(c) == 4);
}

TEST_CASE("spread edge cases") {
    FieldPtr f = build_field(2, 4);
    const ConstantDimensionCode full = spread(f, 4);
    REQUIRE(full.size() == 1);
    CHECK(full.words[0].dim() == 4);
    CHECK_THROWS_AS(spread(f, 3), std::invalid_argument);  // 3 does not divide 4

    FieldPtr f6 = build_field(2, 6);
    CHECK(spread(f6, 2).size() == 21);
}

TEST_CASE("spread partitions the nonzero elements") {
    for (auto [q, n, k] : {std::tuple{2, 4, 2}, {2, 6, 3}, {3, 4, 2}}) {
        FieldPtr f = build_field(q, n);
        const ConstantDimensionCode c = spread(f, k);
        std::set<long long> covered;
        for (const Subspace& X : c.words)
            for (FieldElement e : X.elements())
                if (!e.is_zero()) CHECK(covered.insert(e.exp).second);
        CHECK(static_cast<long long>(covered.size()) == f->group_order());
    }
}

TEST_CASE("full grassmannian code") {
    FieldPtr f = build_field(2, 3);
    CHECK(full_grassmannian(f, 2).size() == 7);
    CHECK(full_grassmannian(f, 1).size() == 7);
    CHECK(full_grassmannian(f, 3).size() == 1);
    CHECK(full_grassmannian(f, 2).declared_d == 2);
}

TEST_CASE("lifted rank-one code of size q^m + 1") {
    const ConstantDimensionCode c = lemma1_code(3, 2);
    REQUIRE(c.size() == 9);
    CHECK(c.ctx->n() == 5);
    CHECK(c.k == 3);
    CHECK(c.declared_d == 4);
    CHECK(min_subspace_distance(c) == 4);
}

TEST_CASE("lifted rank-one code at m = 2 has distance exactly 2") {
    const ConstantDimensionCode c = lemma1_code(2, 2);
    REQUIRE(c.size() == 5);
    CHECK(c.ctx->n() == 3);
    CHECK(min_subspace_distance(c) == 2);
    CHECK(full_grassmannian(c.ctx, 2).size() == 7);
}

TEST_CASE("pendant word sits at the design distance from every lifted word") {
    const ConstantDimensionCode c = lemma1_code(3, 2);
    // the pendant is the unique word with pivot indicator 0^{m-1} 1^m
    const Subspace* pendant = nullptr;
    for (const Subspace& X : c.words)
        if (pivot_profile(X).pivot_mask == Vec{0, 0, 1, 1, 1}) pendant = &X;
    REQUIRE(pendant != nullptr);
    for (const Subspace& X : c.words)
        if (&X != pendant) CHECK(subspace_distance(*pendant, X) == 4);
}

TEST_CASE("lifted words differ by full-rank matrices") {
    for (auto [m, q] : {std::pair{3, 2}, {2, 3}}) {
        const ConstantDimensionCode c = lemma1_code(m, q);
        // every pair of words intersects in at most a line
        for (std::size_t i = 0; i < c.size(); ++i)
            for (std::size_t j = i + 1; j < c.size(); ++j)
                CHECK(intersection_dim(c.words[i], c.words[j]) <= 1);
    }
}

TEST_CASE("greedy search at d = 2 returns the whole Grassmannian") {
    FieldPtr f = build_field(2, 3);
    CHECK(greedy_search(f, 2, 2, 0).size() == 7);
}

TEST_CASE("greedy search recovers a spread") {
    FieldPtr f = build_field(2, 4);
    const ConstantDimensionCode c = greedy_search(f, 2, 4, 0);
    CHECK(c.size() == 5);
    CHECK(min_subspace_distance(c) >= 4);
}

TEST_CASE("greedy search is reproducible and hits the optimum at [5,4,3]") {
    FieldPtr f = build_field(2, 5);
    std::size_t best = 0;
    for (std::uint64_t seed = 0; seed < 8; ++seed) {
        const ConstantDimensionCode c = greedy_search(f, 3, 4, seed);
        CHECK(min_subspace_distance(c) >= 4);
        CHECK(c.size() <= 9);  // optimal size is q^m + 1 = 9
        best = std::max(best, c.size());
        const ConstantDimensionCode again = greedy_search(f, 3, 4, seed);
        CHECK(again.words == c.words);
    }
    CHECK(best == 9);
}

TEST_CASE("index encoding map is a bijection") {
    FieldPtr f = build_field(2, 4);
    const ConstantDimensionCode c = spread(f, 2);
    REQUIRE(c.size() == 5);
    for (std::size_t i = 0; i < c.size(); ++i) CHECK(ea_decode(c, ea_encode(c, i)) == i);
    CHECK_THROWS_AS(ea_encode(c, 5), std::out_of_range);
    // a non-member subspace is rejected
    const Subspace outsider = rref_of(f, std::vector<Vec>{{1, 0, 0, 0}, {0, 1, 0, 0}});
    CHECK_THROWS_AS(ea_decode(c, outsider), CodecError);
}

TEST_CASE("canonical order is sorted rref serialization") {
    const ConstantDimensionCode c = lemma1_code(3, 2);
    for (std::size_t i = 1; i < c.size(); ++i) CHECK(c.words[i - 1] < c.words[i]);
}
