// Command-line front end: builds constant dimension codes, applies the
// dimension-to-weight construction, verifies parameters by brute force,
// evaluates bounds, and runs encode/decode/correct on stored codes.
//
// Exit codes: 0 ok, 2 usage error, 3 verification failure, 4 decode/correct
// failure.

#include <cstdio>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cwc/bounds.hpp"
#include "cwc/cdc.hpp"
#include "cwc/codec.hpp"
#include "cwc/errors.hpp"
#include "cwc/fdtw.hpp"
#include "cwc/field.hpp"
#include "cwc/io.hpp"
#include "cwc/verify.hpp"

namespace {

using namespace cwc;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitVerification = 3;
constexpr int kExitCodec = 4;

std::optional<Vec> parse_poly_flag(const std::string& text, int q) {
    if (text.empty()) return std::nullopt;
    Vec poly;
    for (long long c : detail::parse_number_list(text)) {
        if (c < 0 || c >= q) throw CLI::ValidationError("--poly", "digit out of range");
        poly.push_back(static_cast<Digit>(c));
    }
    return poly;
}

struct ConstructOptions {
    int q = 2;
    int n = 0;
    std::string poly;
    bool src_spread = false;
    bool src_grassmannian = false;
    bool src_lemma1 = false;
    bool src_search = false;
    std::string src_file;
    int k = 0;
    int m = 0;
    int d = 0;
    std::uint64_t seed = 0;
    bool hadamard = false;
    bool no_verify = false;
    unsigned long long pair_cap = 100'000'000ULL;
    std::string out;
    std::string cdc_out;
};

int run_construct(const ConstructOptions& opt) {
    ConstantDimensionCode cdc;
    if (opt.src_spread || opt.src_grassmannian || opt.src_search) {
        if (opt.n <= 0) throw CLI::ValidationError("--n", "field degree required");
        FieldPtr ctx = build_field(opt.q, opt.n, parse_poly_flag(opt.poly, opt.q));
        if (opt.src_spread) cdc = spread(ctx, opt.k);
        else if (opt.src_grassmannian) cdc = full_grassmannian(ctx, opt.k);
        else cdc = greedy_search(ctx, opt.k, opt.d, opt.seed);
    } else if (opt.src_lemma1) {
        cdc = lemma1_code(opt.m, opt.q);
    } else if (!opt.src_file.empty()) {
        cdc = load_cdc(opt.src_file, opt.pair_cap);
        if (!cdc.distance_verified)
            std::cout << "warning: declared distance accepted unverified (pair cap)\n";
    } else {
        throw CLI::ValidationError("construct", "choose a source");
    }

    const PredictedParams p = predicted_params(cdc);
    std::cout << "source: " << cdc.tag << " [" << cdc.ctx->n() << ", " << cdc.declared_d
              << ", " << cdc.k << "]_" << cdc.ctx->q() << " with " << cdc.size()
              << " words\n";
    std::cout << "predicted: (" << p.length << ", " << p.distance << ", " << p.weight
              << ") code of size " << p.size << "\n";

    ConstantWeightCode code = fdtw_construct(cdc);
    if (opt.hadamard) code = pad_hadamard(code);

    const unsigned long long m = code.size();
    const bool can_verify = m >= 2 && m * (m - 1) / 2 <= opt.pair_cap;
    if (!opt.no_verify || can_verify) {
        if (!can_verify && !opt.no_verify)
            throw CLI::ValidationError("construct",
                                       "pair count exceeds cap; pass --no-verify to skip");
        if (can_verify) {
            const long long d = min_distance(code, opt.pair_cap);
            std::cout << "verify: d=" << d << " exhaustive\n";
            if (d < code.declared_d) {
                std::cerr << "error: min distance below declared " << code.declared_d << "\n";
                return kExitVerification;
            }
        }
    }

    if (!opt.out.empty()) {
        save_cw(code, opt.out);
        std::cout << "wrote " << code.size() << " words to " << opt.out << "\n";
    }
    if (!opt.cdc_out.empty()) {
        save_cdc(cdc, opt.cdc_out);
        std::cout << "wrote source code to " << opt.cdc_out << "\n";
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"constant weight codes from constant dimension (subspace) codes"};
    app.require_subcommand(1);

    // ---- construct ----
    ConstructOptions copt;
    CLI::App* construct = app.add_subcommand("construct", "build a weight code from a source");
    construct->add_option("--q", copt.q, "prime base field");
    construct->add_option("--n", copt.n, "extension degree");
    construct->add_option("--poly", copt.poly, "primitive polynomial, digits low-to-high");
    construct->add_flag("--spread", copt.src_spread, "spread source (k | n)");
    construct->add_flag("--grassmannian", copt.src_grassmannian, "all k-dim subspaces");
    construct->add_flag("--lemma1", copt.src_lemma1, "lifted rank-one code of size q^m + 1");
    construct->add_flag("--search", copt.src_search, "greedy search source");
    construct->add_option("--from-file", copt.src_file, "load a stored dimension code");
    construct->add_option("--k", copt.k, "subspace dimension");
    construct->add_option("--m", copt.m, "parameter m for the lifted source");
    construct->add_option("--d", copt.d, "target subspace distance for search");
    construct->add_option("--seed", copt.seed, "search order seed");
    construct->add_flag("--pad-hadamard", copt.hadamard, "join the all-zero/all-one words");
    construct->add_flag("--no-verify", copt.no_verify, "skip exhaustive distance check");
    construct->add_option("--pair-cap", copt.pair_cap, "max pairs for exhaustive checks");
    construct->add_option("--out", copt.out, "output weight code file");
    construct->add_option("--cdc-out", copt.cdc_out, "also store the source code");

    // ---- shorten ----
    std::string sh_code, sh_out;
    long long sh_coord = 0;
    int sh_bit = 0;
    CLI::App* sh = app.add_subcommand("shorten", "shorten a stored weight code");
    sh->add_option("--code", sh_code, "weight code file")->required();
    sh->add_option("--coord", sh_coord, "coordinate to remove")->required();
    sh->add_option("--bit", sh_bit, "kept bit value (0 or 1)")->required();
    sh->add_option("--out", sh_out, "output file")->required();

    // ---- bounds ----
    CLI::App* bounds_cmd = app.add_subcommand("bounds", "evaluate exact bounds");
    bounds_cmd->require_subcommand(1);
    int b_n = 0, b_l = 0, b_q = 2, b_k = 0, b_w = 0, b_d = 0, b_delta = 0, b_m = 0;
    long long b_cap = 0, b_aprev = 0;
    CLI::App* bg = bounds_cmd->add_subcommand("gaussian", "Gaussian coefficient");
    bg->add_option("--n", b_n)->required();
    bg->add_option("--l", b_l)->required();
    bg->add_option("--q", b_q);
    CLI::App* bj = bounds_cmd->add_subcommand("johnson", "one Johnson recursion step");
    bj->add_option("--n", b_n)->required();
    bj->add_option("--d", b_d)->required();
    bj->add_option("--w", b_w)->required();
    bj->add_option("--a-prev", b_aprev, "bound on A(n-1, d, w-1)")->required();
    CLI::App* ba = bounds_cmd->add_subcommand("avz", "implicit upper bound on A(n, 2 delta, w)");
    ba->add_option("--n", b_n)->required();
    ba->add_option("--delta", b_delta)->required();
    ba->add_option("--w", b_w)->required();
    ba->add_option("--cap", b_cap)->required();
    CLI::App* be = bounds_cmd->add_subcommand("eq2", "partial spread lower bound");
    be->add_option("--n", b_n)->required();
    be->add_option("--k", b_k)->required();
    be->add_option("--q", b_q);
    CLI::App* bf = bounds_cmd->add_subcommand("fdtw-size", "derived weight code size");
    bf->add_option("--n", b_n)->required();
    bf->add_option("--k", b_k)->required();
    bf->add_option("--q", b_q);
    CLI::App* bt = bounds_cmd->add_subcommand("theorem5", "optimal size pair at parameter m");
    bt->add_option("--m", b_m)->required();

    // ---- encode / decode / correct ----
    std::string cd_code, cd_word;
    long long cd_i = 0, cd_j = 0;
    bool cd_hex = false;
    CLI::App* enc = app.add_subcommand("encode", "encode an information word");
    enc->add_option("--code", cd_code, "dimension code file")->required();
    enc->add_option("--i", cd_i, "codeword index")->required();
    enc->add_option("--j", cd_j, "coset index")->required();
    enc->add_flag("--hex", cd_hex, "emit the word as a hex bitmap");
    CLI::App* dec = app.add_subcommand("decode", "decode a codeword");
    dec->add_option("--code", cd_code, "dimension code file")->required();
    dec->add_option("--word", cd_word, "support list or hex: bitmap")->required();
    CLI::App* cor = app.add_subcommand("correct", "correct a received word");
    cor->add_option("--code", cd_code, "dimension code file")->required();
    cor->add_option("--word", cd_word, "support list or hex: bitmap")->required();
    cor->add_flag("--hex", cd_hex, "emit the word as a hex bitmap");

    // ---- verify ----
    std::string v_code;
    bool v_distance = false, v_cyclic = false;
    int v_steiner = 0;
    unsigned long long v_pair_cap = 100'000'000ULL;
    CLI::App* ver = app.add_subcommand("verify", "brute-force checks on a weight code");
    ver->add_option("--code", v_code, "weight code file")->required();
    ver->add_flag("--distance", v_distance, "exhaustive minimum distance");
    ver->add_option("--steiner", v_steiner, "check the Steiner property at t");
    ver->add_flag("--cyclic", v_cyclic, "check closure under the cyclic shift");
    ver->add_option("--pair-cap", v_pair_cap, "max pairs for exhaustive checks");

    // ---- ooc ----
    std::string o_code, o_out;
    int o_lambda = 0;
    CLI::App* ooc_cmd = app.add_subcommand("ooc", "extract orbit representatives");
    ooc_cmd->add_option("--code", o_code, "cyclic weight code file")->required();
    ooc_cmd->add_option("--lambda", o_lambda, "maximum correlation")->required();
    ooc_cmd->add_option("--out", o_out, "output file for the representatives");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (construct->parsed()) return run_construct(copt);

        if (sh->parsed()) {
            const ConstantWeightCode code = load_cw(sh_code);
            const ConstantWeightCode out = shorten(code, static_cast<std::uint32_t>(sh_coord),
                                                   sh_bit);
            save_cw(out, sh_out);
            std::cout << "wrote (" << out.length << ", " << out.declared_d << ", "
                      << out.weight << ") code of size " << out.size() << " to " << sh_out
                      << "\n";
            return kExitOk;
        }

        if (bg->parsed()) { std::cout << gaussian(b_n, b_l, b_q) << "\n"; return kExitOk; }
        if (bj->parsed()) {
            std::cout << johnson_step(b_n, b_d, b_w, BigInt(b_aprev)) << "\n";
            return kExitOk;
        }
        if (ba->parsed()) {
            const BigInt v = avz_bound(b_n, b_delta, b_w, BigInt(b_cap));
            std::cout << "avz_bound(n=" << b_n << ", delta=" << b_delta << ", w=" << b_w
                      << ", cap=" << b_cap << ") = " << v << "\n";
            if (v < b_cap) {
                const BigInt witness = v + 1;
                const Rational b = avz_b(b_n, b_delta, b_w, witness);
                std::cout << "witness: M=" << witness << " excluded, b=" << b
                          << ", floor(delta/b)=" << detail::floor_rational(Rational(b_delta) / b)
                          << "\n";
            }
            return kExitOk;
        }
        if (be->parsed()) { std::cout << eq2_lower_bound(b_n, b_k, b_q) << "\n"; return kExitOk; }
        if (bf->parsed()) { std::cout << fdtw_size_from_eq2(b_n, b_k, b_q) << "\n"; return kExitOk; }
        if (bt->parsed()) {
            const auto [shortened, full] = theorem5_values(b_m);
            std::cout << shortened << " " << full << "\n";
            return kExitOk;
        }

        if (enc->parsed() || dec->parsed() || cor->parsed()) {
            const ConstantDimensionCode cdc = load_cdc(cd_code);
            if (enc->parsed()) {
                const CWWord w = encode(cdc, {static_cast<std::size_t>(cd_i), cd_j});
                std::cout << (cd_hex ? "hex:" + emit_hex(w, cdc.ctx->order())
                                     : emit_support(w))
                          << "\n";
                return kExitOk;
            }
            const CWWord w = parse_word(cd_word, cdc.ctx->order());
            if (dec->parsed()) {
                const InfoWord info = decode(cdc, w);
                std::cout << info.codeword_index << " " << info.coset_index << "\n";
                return kExitOk;
            }
            const CorrectOutcome out = correct(cdc, w);
            if (!out.ok()) {
                std::cout << "status: " << reason_code(out.failure) << "\n";
                return kExitCodec;
            }
            std::cout << (cd_hex ? "hex:" + emit_hex(*out.corrected, cdc.ctx->order())
                                 : emit_support(*out.corrected))
                      << "\n";
            std::cout << "status: ok\n";
            return kExitOk;
        }

        if (ver->parsed()) {
            const ConstantWeightCode code = load_cw(v_code);
            int rc = kExitOk;
            if (v_distance) {
                const long long d = min_distance(code, v_pair_cap);
                std::cout << "claim: min distance >= " << code.declared_d
                          << "; method: exhaustive; d=" << d << "\n";
                if (d < code.declared_d) rc = kExitVerification;
            }
            if (v_steiner > 0) {
                const SteinerReport r = check_steiner(code, v_steiner);
                std::cout << "claim: Steiner t=" << v_steiner << "; method: exhaustive; "
                          << (r.ok ? "holds" : "fails: " + r.message) << "\n";
                if (!r.ok) {
                    if (r.witness) {
                        std::cout << "witness: " << emit_support(CWWord{*r.witness}) << "\n";
                    }
                    rc = kExitVerification;
                }
            }
            if (v_cyclic) {
                const bool c = is_cyclic(code);
                std::cout << "claim: cyclic; method: exhaustive; "
                          << (c ? "holds" : "fails") << "\n";
                if (!c) rc = kExitVerification;
            }
            return rc;
        }

        if (ooc_cmd->parsed()) {
            const ConstantWeightCode code = load_cw(o_code);
            const OOC ooc = ooc_extract(code, o_lambda);
            std::cout << "(" << ooc.length << ", " << ooc.weight << ", " << ooc.lambda
                      << ") family with " << ooc.representatives.size()
                      << " representatives\n";
            for (const CWWord& w : ooc.representatives)
                std::cout << emit_support(w) << "\n";
            for (const auto& [w, size] : ooc.discarded)
                std::cout << "discarded orbit of size " << size << ": " << emit_support(w)
                          << "\n";
            if (!o_out.empty()) {
                ConstantWeightCode reps{ooc.length, ooc.weight, code.declared_d, "ooc",
                                        ooc.representatives, {}};
                save_cw(reps, o_out);
            }
            return kExitOk;
        }
    } catch (const CLI::ValidationError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const VerificationError& e) {
        std::cerr << "verification failure: " << e.what() << "\n";
        return kExitVerification;
    } catch (const CodecError& e) {
        std::cerr << "codec failure: " << e.what() << "\n";
        return kExitCodec;
    } catch (const std::out_of_range& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
