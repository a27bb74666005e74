#pragma once

// Implementations behind the CLI subcommands, stream-injectable so tests
// can drive them without a process boundary.
//
// Exit codes: 0 all checks pass, 1 a pointwise verification failed,
// 2 the spec itself is invalid, 3 a resource bound was exceeded.

#include <algorithm>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <functional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "decomposition.hpp"
#include "errors.hpp"
#include "inverses.hpp"
#include "oracle.hpp"
#include "perms.hpp"
#include "specfile.hpp"

namespace bipp {

inline constexpr int kExitOk = 0;
inline constexpr int kExitMismatch = 1;
inline constexpr int kExitInvalidSpec = 2;
inline constexpr int kExitResource = 3;

inline int exit_code_for(const error& e) {
    return dynamic_cast<const field_too_large*>(&e) != nullptr ? kExitResource
                                                               : kExitInvalidSpec;
}

/// Uniform closed-form inverse evaluator for any family (owns whatever
/// per-family state it needs, e.g. the tabulated g).
inline std::function<Element(Element)> make_inverse_fn(const PermSpec& spec) {
    switch (spec.family) {
        case Family::bipp: {
            const FieldCtx* ctx = spec.ctx;
            const Element a = spec.a;
            return [ctx, a](Element x) { return eval_inv_bipp(*ctx, a, x); };
        }
        case Family::gbipp: {
            SubfieldInverse g = build_g(*spec.ctx, spec.L);
            return [spec, g = std::move(g)](Element x) {
                return eval_inv_gbipp_closed(spec, g, x);
            };
        }
        case Family::tower: {
            const TowerSpec t = spec.tower;
            const unsigned top = t.h() + 1;
            return [t, top](Element x) { return eval_inv_tower(t, top, x); };
        }
    }
    throw invalid_parameter("unknown family");
}

inline int cmd_construct(const SpecFile& sf, std::ostream& os) {
    try {
        const LoadedSpec ls = load_spec(sf);
        const FieldCtx& ctx = *ls.ctx;
        os << "family: " << family_name(ls.perm.family) << "\n";
        os << "field: " << ctx.serialize() << "  (2^" << ctx.degree() << " elements, q = 2^"
           << ctx.subfield_degree() << ", n = " << ctx.rel_degree() << ")\n";
        switch (ls.perm.family) {
            case Family::bipp:
                os << "a: " << to_hex(ls.perm.a) << "\n";
                break;
            case Family::gbipp:
                os << "a: " << to_hex(ls.perm.a) << "\n";
                os << "L: " << to_string(ls.perm.L) << "\n";
                break;
            case Family::tower: {
                const TowerSpec& t = ls.perm.tower;
                os << "degrees:";
                for (unsigned d : t.degrees)
                    os << ' ' << d;
                os << " | " << ctx.degree() << "\n";
                os << "coeffs:";
                for (Element c : t.coeffs)
                    os << ' ' << to_hex(c);
                os << "\nc0: " << to_hex(t.c0) << "  l: " << t.l << "  u: " << t.u << "\n";
                break;
            }
        }
        os << "hypotheses: all verified\n";
        return kExitOk;
    } catch (const error& e) {
        os << "error: " << e.what() << "\n";
        return exit_code_for(e);
    }
}

namespace detail {

struct CheckResult {
    std::uint64_t mismatches = 0;
    Element first_witness;
    bool have_witness = false;

    void record(Element x, bool ok) {
        if (ok)
            return;
        ++mismatches;
        if (!have_witness) {
            first_witness = x;
            have_witness = true;
        }
    }

    void report(std::ostream& os, const std::string& name, std::uint64_t total) const {
        if (mismatches == 0)
            os << "check " << name << ": ok (" << total << " elements)\n";
        else
            os << "check " << name << ": FAIL (" << mismatches << "/" << total
               << " mismatches, first at x=" << to_hex(first_witness) << ")\n";
    }
};

/// Four-way pointwise agreement of the forward/inverse machinery for one
/// spec: oracle table, closed form, and the family's alternative paths.
inline bool verify_agreement(const LoadedSpec& ls, const PermTable& table,
                             std::ostream& os) {
    const FieldCtx& ctx = *ls.ctx;
    const std::uint64_t size = ctx.order();
    bool all_ok = true;
    if (!table.bijective) {
        os << "check agreement: FAIL (forward map is not a bijection)\n";
        return false;
    }
    switch (ls.perm.family) {
        case Family::gbipp: {
            const SubfieldInverse g = build_g(ctx, ls.perm.L);
            CheckResult closed_vs_oracle, piecewise, decomposition;
            for (std::uint64_t i = 0; i < size; ++i) {
                const Element x{static_cast<std::uint32_t>(i)};
                const Element want = table.inverse[i];
                const Element c = eval_inv_gbipp_closed(ls.perm, g, x);
                closed_vs_oracle.record(x, c == want);
                piecewise.record(x, eval_inv_gbipp_piecewise(ls.perm, g, x) == c);
                decomposition.record(x, inverse_via_decomposition(ls.perm, g, x) == c);
            }
            closed_vs_oracle.report(os, "agreement/closed-vs-oracle", size);
            piecewise.report(os, "agreement/piecewise-vs-closed", size);
            decomposition.report(os, "agreement/decomposition-vs-closed", size);
            all_ok = closed_vs_oracle.mismatches == 0 && piecewise.mismatches == 0 &&
                     decomposition.mismatches == 0;
            break;
        }
        case Family::bipp: {
            // The same map scaled into the generalized family: L = id and
            // parameter a/(1+a), applied to x/(1+a).
            const Element a = ls.perm.a;
            const Element one_a = Element::one() + a;
            const Element inv_one_a = ctx.inv_total(one_a);
            const PermSpec assoc =
                make_gbipp(ctx, ctx.mul(a, inv_one_a), make_lin(ctx, 1, {Element::one()}));
            const SubfieldInverse g = build_g(ctx, assoc.L);
            CheckResult inv_vs_oracle, substitution;
            for (std::uint64_t i = 0; i < size; ++i) {
                const Element x{static_cast<std::uint32_t>(i)};
                const Element inv = eval_inv_bipp(ctx, a, x);
                inv_vs_oracle.record(x, inv == table.inverse[i]);
                substitution.record(
                    x, inv == eval_inv_gbipp_closed(assoc, g, ctx.mul(x, inv_one_a)));
            }
            inv_vs_oracle.report(os, "agreement/inverse-vs-oracle", size);
            substitution.report(os, "agreement/substitution-identity", size);
            all_ok = inv_vs_oracle.mismatches == 0 && substitution.mismatches == 0;
            break;
        }
        case Family::tower: {
            const TowerSpec& t = ls.perm.tower;
            const unsigned top = t.h() + 1;
            CheckResult inv_vs_oracle, decomposition, direct_vs_recursive, diagram;
            for (std::uint64_t i = 0; i < size; ++i) {
                const Element x{static_cast<std::uint32_t>(i)};
                const Element inv = eval_inv_tower(t, top, x);
                inv_vs_oracle.record(x, inv == table.inverse[i]);
                decomposition.record(x, tower_inverse_via_decomposition(t, x) == inv);
                direct_vs_recursive.record(
                    x, tower_L_direct(t, x) == tower_L_recursive(t, top, x));
                diagram.record(x, tower_split(t, table.forward[i]) ==
                                      tower_triangular_system(t, tower_split(t, x)));
            }
            inv_vs_oracle.report(os, "agreement/inverse-vs-oracle", size);
            decomposition.report(os, "agreement/decomposition-vs-inverse", size);
            direct_vs_recursive.report(os, "agreement/direct-vs-recursive", size);
            diagram.report(os, "agreement/split-diagram", size);
            all_ok = inv_vs_oracle.mismatches == 0 && decomposition.mismatches == 0 &&
                     direct_vs_recursive.mismatches == 0 && diagram.mismatches == 0;
            break;
        }
    }
    return all_ok;
}

/// The supporting lemmas: the trace identity behind the cross-term
/// cancellation, and the ker-trace inverse of z^2 + cz on this field.
inline bool verify_lemmas(const LoadedSpec& ls, unsigned max_n, std::ostream& os) {
    bool all_ok = true;
    const unsigned r_top = std::min(12u, max_n);
    bool lemma_ok = true;
    for (unsigned r = 1; r <= r_top; ++r)
        lemma_ok = lemma_ok && aux_trace_lemma_check(r);
    os << "check lemmas/trace-identity: " << (lemma_ok ? "ok" : "FAIL")
       << " (r = 1.." << r_top << ")\n";
    all_ok = all_ok && lemma_ok;

    const FieldCtx& ctx = *ls.ctx;
    if (ctx.rel_degree() % 2 == 1) {
        std::vector<Element> kernel;
        for (std::uint64_t i = 0; i < ctx.order(); ++i) {
            const Element x{static_cast<std::uint32_t>(i)};
            if (ctx.trace(x).is_zero())
                kernel.push_back(x);
        }
        CheckResult roundtrip, coeff_match;
        std::uint64_t points = 0;
        for (Element c : ctx.subfield_elements(ctx.subfield_degree())) {
            if (c.is_zero())
                continue;
            const std::vector<Element> coeffs = p_c_inverse_coeffs(ctx, c);
            const LinearizedPoly as_lin = make_lin(ctx, 1, coeffs);
            for (Element z : kernel) {
                ++points;
                const Element w = p_c_eval(ctx, c, z);
                roundtrip.record(z, p_c_inverse(ctx, c, w) == z);
                coeff_match.record(w, eval_lin(as_lin, w) == p_c_inverse(ctx, c, w));
            }
        }
        roundtrip.report(os, "lemmas/kernel-quadratic-roundtrip", points);
        coeff_match.report(os, "lemmas/kernel-quadratic-coeffs", points);
        all_ok = all_ok && roundtrip.mismatches == 0 && coeff_match.mismatches == 0;
    }
    return all_ok;
}

}  // namespace detail

inline int cmd_verify(const SpecFile& sf, std::ostream& os,
                      const std::string& check = "all",
                      unsigned max_n = kEnumerationBound) {
    try {
        const LoadedSpec ls = load_spec(sf);
        const FieldCtx& ctx = *ls.ctx;
        const std::uint64_t size = ctx.order();
        bool all_ok = true;

        const bool want_roundtrip = check == "all" || check == "roundtrip";
        const bool want_agreement = check == "all" || check == "agreement";
        const bool want_lemmas = check == "all" || check == "lemmas";
        if (!(want_roundtrip || want_agreement || want_lemmas))
            throw invalid_parameter("unknown check '" + check +
                                    "'; expected roundtrip, agreement, lemmas, or all");

        PermTable table;
        if (want_roundtrip || want_agreement)
            table = tabulate(ctx, [&](Element x) { return eval_perm(ls.perm, x); },
                             max_n);

        if (want_roundtrip) {
            if (!table.bijective) {
                os << "check roundtrip: FAIL (forward map is not a bijection)\n";
                all_ok = false;
            } else {
                const auto inv = make_inverse_fn(ls.perm);
                detail::CheckResult rt;
                for (std::uint64_t i = 0; i < size; ++i) {
                    const Element x{static_cast<std::uint32_t>(i)};
                    rt.record(x, inv(table.forward[i]) == x &&
                                     table.forward[inv(x).bits] == x);
                }
                rt.report(os, "roundtrip", size);
                all_ok = all_ok && rt.mismatches == 0;
            }
        }
        if (want_agreement)
            all_ok = detail::verify_agreement(ls, table, os) && all_ok;
        if (want_lemmas)
            all_ok = detail::verify_lemmas(ls, max_n, os) && all_ok;

        os << (all_ok ? "verification passed\n" : "verification FAILED\n");
        return all_ok ? kExitOk : kExitMismatch;
    } catch (const error& e) {
        os << "error: " << e.what() << "\n";
        return exit_code_for(e);
    }
}

inline int cmd_export(const SpecFile& sf, const std::string& format,
                      const std::string& out_dir, std::ostream& os) {
    try {
        if (format != "hex" && format != "bin")
            throw invalid_parameter("unknown export format '" + format +
                                    "'; expected hex or bin");
        const LoadedSpec ls = load_spec(sf);
        const FieldCtx& ctx = *ls.ctx;
        const PermTable table =
            tabulate(ctx, [&](Element x) { return eval_perm(ls.perm, x); });
        if (!table.bijective) {
            os << "error: forward map is not a bijection; nothing to export\n";
            return kExitMismatch;
        }
        std::filesystem::create_directories(out_dir);
        const std::string base = family_name(ls.perm.family) + "_n" +
                                 std::to_string(ctx.degree());
        auto emit = [&](const std::string& name, auto&& writer) {
            const std::filesystem::path path = std::filesystem::path(out_dir) / name;
            std::ofstream f(path, std::ios::binary);
            if (!f)
                throw invalid_parameter("cannot open " + path.string() + " for writing");
            writer(f);
            os << "wrote " << path.string() << "\n";
        };
        if (format == "hex") {
            emit(base + "_forward.hex",
                 [&](std::ostream& f) { write_table_hex(f, table.forward); });
            emit(base + "_inverse.hex",
                 [&](std::ostream& f) { write_table_hex(f, table.inverse); });
        } else {
            emit(base + "_tables.bin", [&](std::ostream& f) {
                write_tables_bin(f, ctx, table.forward, table.inverse);
            });
        }
        if (ctx.degree() <= kInterpolationBound)
            emit(base + "_coeffs.hex", [&](std::ostream& f) {
                write_table_hex(f, interpolate_coeffs(table));
            });
        return kExitOk;
    } catch (const error& e) {
        os << "error: " << e.what() << "\n";
        return exit_code_for(e);
    }
}

}  // namespace bipp
