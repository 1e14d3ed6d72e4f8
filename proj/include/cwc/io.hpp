#pragma once

// Plain-text file formats and word rendering.
//
// Dimension code file:  header `q n poly k d tag count`, poly as comma
// separated digits low-to-high, then `count` subspaces of k rows, each row a
// line of n digit characters.
//
// Weight code file:  header `N w d count`, then one word per line as comma
// separated support positions (`-` for the empty support).
//
// Words render either as a support list or as a hexadecimal bitmap with the
// most significant bit of the first digit at position 0.

#include <cctype>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "cwc/cdc.hpp"
#include "cwc/errors.hpp"
#include "cwc/fdtw.hpp"

namespace cwc {

namespace detail {

inline std::vector<long long> parse_number_list(const std::string& s) {
    std::vector<long long> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) throw std::invalid_argument("io: empty entry in list '" + s + "'");
        out.push_back(std::stoll(item));
    }
    return out;
}

}  // namespace detail

inline std::string emit_support(const CWWord& w) {
    if (w.support.empty()) return "-";
    std::string out;
    for (std::size_t i = 0; i < w.support.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(w.support[i]);
    }
    return out;
}

inline std::string emit_hex(const CWWord& w, long long length) {
    const std::size_t digits = static_cast<std::size_t>((length + 3) / 4);
    std::string out(digits, '0');
    for (std::uint32_t pos : w.support) {
        if (pos >= static_cast<std::uint64_t>(length))
            throw std::invalid_argument("io: support position out of range");
        const std::size_t digit = pos / 4;
        const int bit = 3 - static_cast<int>(pos % 4);  // MSB first
        int v = out[digit] <= '9' ? out[digit] - '0' : out[digit] - 'a' + 10;
        v |= 1 << bit;
        out[digit] = static_cast<char>(v < 10 ? '0' + v : 'a' + v - 10);
    }
    return out;
}

// Accepts `a,b,c`, `-` (empty), or `hex:...`.
inline CWWord parse_word(const std::string& text, long long length) {
    CWWord w;
    if (text == "-") return w;
    if (text.rfind("hex:", 0) == 0) {
        const std::string hex = text.substr(4);
        if (hex.size() != static_cast<std::size_t>((length + 3) / 4))
            throw std::invalid_argument("io: hex word of wrong length");
        for (std::size_t d = 0; d < hex.size(); ++d) {
            const char c = static_cast<char>(std::tolower(hex[d]));
            int v;
            if (c >= '0' && c <= '9') v = c - '0';
            else if (c >= 'a' && c <= 'f') v = c - 'a' + 10;
            else throw std::invalid_argument("io: bad hex digit");
            for (int bit = 0; bit < 4; ++bit)
                if (v & (1 << (3 - bit))) {
                    const long long pos = static_cast<long long>(d) * 4 + bit;
                    if (pos >= length)
                        throw std::invalid_argument("io: hex word has bits beyond length");
                    w.support.push_back(static_cast<std::uint32_t>(pos));
                }
        }
        return w;
    }
    for (long long v : detail::parse_number_list(text)) {
        if (v < 0 || v >= length)
            throw std::invalid_argument("io: support position out of range");
        w.support.push_back(static_cast<std::uint32_t>(v));
    }
    for (std::size_t i = 1; i < w.support.size(); ++i)
        if (w.support[i] <= w.support[i - 1])
            throw std::invalid_argument("io: support must be strictly increasing");
    return w;
}

inline void save_cdc(const ConstantDimensionCode& code, const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) throw std::invalid_argument("io: cannot open " + path.string());
    const FieldContext& ctx = *code.ctx;
    out << ctx.q() << ' ' << ctx.n() << ' ';
    const Vec& poly = ctx.primitive_poly();
    for (std::size_t i = 0; i < poly.size(); ++i) {
        if (i) out << ',';
        out << int(poly[i]);
    }
    out << ' ' << code.k << ' ' << code.declared_d << ' ' << code.tag << ' ' << code.size()
        << '\n';
    for (const Subspace& w : code.words)
        for (const Vec& row : w.rref()) {
            for (Digit d : row) out << int(d);
            out << '\n';
        }
    if (!out) throw std::invalid_argument("io: write failed for " + path.string());
}

// Loads and re-validates a dimension code.  The declared distance is verified
// exhaustively when the pair count stays below pair_cap; above it the code is
// accepted with distance_verified = false.
inline ConstantDimensionCode load_cdc(const std::filesystem::path& path,
                                      unsigned long long pair_cap = 100'000'000ULL,
                                      long long field_cap = 1LL << 20) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("io: cannot open " + path.string());
    int q, n, k, d;
    std::string poly_text, tag;
    std::size_t count;
    if (!(in >> q >> n >> poly_text >> k >> d >> tag >> count))
        throw std::invalid_argument("io: malformed dimension code header");
    Vec poly;
    for (long long c : detail::parse_number_list(poly_text)) {
        if (c < 0 || c >= q) throw std::invalid_argument("io: polynomial digit out of range");
        poly.push_back(static_cast<Digit>(c));
    }
    FieldPtr ctx = build_field(q, n, poly, field_cap);

    ConstantDimensionCode code{ctx, k, d, tag, {}};
    std::string line;
    std::getline(in, line);  // rest of header line
    for (std::size_t w = 0; w < count; ++w) {
        std::vector<Vec> rows;
        for (int r = 0; r < k; ++r) {
            if (!std::getline(in, line) || static_cast<int>(line.size()) != n)
                throw std::invalid_argument("io: malformed subspace row");
            Vec row(n);
            for (int c = 0; c < n; ++c) {
                if (!std::isdigit(static_cast<unsigned char>(line[c])) || line[c] - '0' >= q)
                    throw std::invalid_argument("io: bad digit in subspace row");
                row[c] = static_cast<Digit>(line[c] - '0');
            }
            rows.push_back(std::move(row));
        }
        code.words.emplace_back(ctx, std::move(rows));  // validates RREF shape
    }
    std::sort(code.words.begin(), code.words.end());
    for (std::size_t i = 1; i < code.words.size(); ++i)
        if (code.words[i - 1] == code.words[i])
            throw VerificationError("io: duplicate subspace in " + path.string());
    const unsigned long long m = code.size();
    if (m >= 2 && m * (m - 1) / 2 <= pair_cap) {
        verify_cdc(code);
    } else {
        code.distance_verified = false;
    }
    return code;
}

inline void save_cw(const ConstantWeightCode& code, const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) throw std::invalid_argument("io: cannot open " + path.string());
    out << code.length << ' ' << code.weight << ' ' << code.declared_d << ' ' << code.size()
        << '\n';
    for (const CWWord& w : code.words) out << emit_support(w) << '\n';
    if (!out) throw std::invalid_argument("io: write failed for " + path.string());
}

inline ConstantWeightCode load_cw(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("io: cannot open " + path.string());
    ConstantWeightCode code;
    std::size_t count;
    if (!(in >> code.length >> code.weight >> code.declared_d >> count))
        throw std::invalid_argument("io: malformed weight code header");
    std::string line;
    std::getline(in, line);
    for (std::size_t i = 0; i < count; ++i) {
        if (!std::getline(in, line))
            throw std::invalid_argument("io: missing word line");
        code.words.push_back(parse_word(line, code.length));
    }
    return code;
}

}  // namespace cwc
