#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <random>

#include "cwc/io.hpp"

using namespace cwc;

namespace {

struct TempDir {
    std::filesystem::path path;
    TempDir() {
        path = std::filesystem::temp_directory_path() /
               ("cwc_test_" + std::to_string(std::random_device{}()));
        std::filesystem::create_directories(path);
    }
    ~TempDir() { std::filesystem::remove_all(path); }
};

}  // namespace

TEST_CASE("word rendering") {
    CHECK(emit_support(CWWord{{0, 3}}) == "0,3");
    CHECK(emit_support(CWWord{}) == "-");
    CHECK(emit_hex(CWWord{{0, 3}}, 8) == "90");
    CHECK(emit_hex(CWWord{}, 8) == "00");
    CHECK(emit_hex(CWWord{{0, 4, 5}}, 6) == "8c");
}

TEST_CASE("word parsing") {
    CHECK(parse_word("0,3", 8) == CWWord{{0, 3}});
    CHECK(parse_word("-", 8) == CWWord{});
    CHECK(parse_word("hex:90", 8) == CWWord{{0, 3}});
    CHECK_THROWS_AS(parse_word("3,0", 8), std::invalid_argument);   // not increasing
    CHECK_THROWS_AS(parse_word("0,8", 8), std::invalid_argument);   // out of range
    CHECK_THROWS_AS(parse_word("hex:9", 8), std::invalid_argument); // wrong length
    CHECK_THROWS_AS(parse_word("hex:01", 6), std::invalid_argument);  // bit beyond length
}

TEST_CASE("word forms interconvert over random words") {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 200; ++trial) {
        const long long n = 1 + rng() % 40;
        CWWord w;
        for (long long p = 0; p < n; ++p)
            if (rng() % 3 == 0) w.support.push_back(static_cast<std::uint32_t>(p));
        CHECK(parse_word(emit_support(w), n) == w);
        CHECK(parse_word("hex:" + emit_hex(w, n), n) == w);
    }
}

TEST_CASE("dimension code round trip") {
    TempDir tmp;
    FieldPtr f = build_field(2, 4);
    const ConstantDimensionCode code = spread(f, 2);
    const auto path = tmp.path / "spread.cdc";
    save_cdc(code, path);
    const ConstantDimensionCode back = load_cdc(path);
    CHECK(back.k == code.k);
    CHECK(back.declared_d == code.declared_d);
    CHECK(back.tag == code.tag);
    CHECK(back.distance_verified);
    REQUIRE(back.size() == code.size());
    for (std::size_t i = 0; i < code.size(); ++i)
        CHECK(back.words[i].rref() == code.words[i].rref());
    // byte-identical rewrite
    const auto path2 = tmp.path / "spread2.cdc";
    save_cdc(back, path2);
    std::ifstream a(path), b(path2);
    std::string sa((std::istreambuf_iterator<char>(a)), {});
    std::string sb((std::istreambuf_iterator<char>(b)), {});
    CHECK(sa == sb);
}

TEST_CASE("dimension code file with duplicate subspace is rejected") {
    TempDir tmp;
    const auto path = tmp.path / "dup.cdc";
    std::ofstream out(path);
    out << "2 3 1,1,0,1 1 2 file 2\n100\n100\n";
    out.close();
    CHECK_THROWS_AS(load_cdc(path), VerificationError);
}

TEST_CASE("dimension code file with an understated distance is rejected") {
    TempDir tmp;
    const auto path = tmp.path / "bad_d.cdc";
    std::ofstream out(path);
    // two planes of F_2^3 intersect in a line: distance 2, header claims 4
    out << "2 3 1,1,0,1 2 4 file 2\n";
    out << "101\n011\n";
    out << "110\n001\n";
    out.close();
    CHECK_THROWS_AS(load_cdc(path), VerificationError);
}

TEST_CASE("oversized dimension codes load unverified") {
    TempDir tmp;
    FieldPtr f = build_field(2, 4);
    const ConstantDimensionCode code = spread(f, 2);
    const auto path = tmp.path / "spread.cdc";
    save_cdc(code, path);
    const ConstantDimensionCode back = load_cdc(path, /*pair_cap=*/1);
    CHECK(!back.distance_verified);
}

TEST_CASE("malformed dimension code files are rejected") {
    TempDir tmp;
    const auto path = tmp.path / "bad.cdc";
    std::ofstream(path) << "2 3 1,1,0,1 2 2 file\n";
    CHECK_THROWS_AS(load_cdc(path), std::invalid_argument);
    std::ofstream(path) << "2 3 1,1,0,1 2 2 file 1\n10\n";  // short row
    CHECK_THROWS_AS(load_cdc(path), std::invalid_argument);
    std::ofstream(path) << "2 3 1,1,0,1 2 2 file 1\n011\n101\n";  // not RREF
    CHECK_THROWS_AS(load_cdc(path), std::invalid_argument);
    CHECK_THROWS_AS(load_cdc(tmp.path / "missing.cdc"), std::invalid_argument);
}

TEST_CASE("weight code round trip") {
    TempDir tmp;
    FieldPtr f = build_field(2, 4);
    const ConstantWeightCode code = fdtw_construct(spread(f, 2));
    const auto path = tmp.path / "code.cwf";
    save_cw(code, path);
    const ConstantWeightCode back = load_cw(path);
    CHECK(back.length == code.length);
    CHECK(back.weight == code.weight);
    CHECK(back.declared_d == code.declared_d);
    CHECK(back.words == code.words);
}
