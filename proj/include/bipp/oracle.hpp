#pragma once

// Brute-force ground truth on enumerable fields.
//
// Every formula in the library is ultimately certified against these:
// exhaustive tabulation with collision detection, inverse-table lookup,
// and full-field interpolation back to coefficients.  Tables are the
// canonical comparison; coefficient vectors are a secondary diagnostic.

#include <cstdint>
#include <istream>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "element.hpp"
#include "errors.hpp"
#include "field.hpp"

namespace bipp {

/// Ceiling for coefficient recovery (quadratic in the field size).
inline constexpr unsigned kInterpolationBound = 12;

struct PermTable {
    const FieldCtx* ctx = nullptr;
    bool bijective = false;
    std::vector<Element> forward;  ///< indexed by element bits
    std::vector<Element> inverse;  ///< empty unless bijective
};

/// Evaluates f on the whole field; the inverse table is kept only when no
/// collision shows up.
template <typename Fn>
PermTable tabulate(const FieldCtx& ctx, Fn&& f, unsigned bound = kEnumerationBound) {
    if (ctx.degree() > bound)
        throw field_too_large("tabulation over GF(2^" + std::to_string(ctx.degree()) +
                              ") exceeds bound 2^" + std::to_string(bound));
    const std::uint64_t size = ctx.order();
    PermTable t;
    t.ctx = &ctx;
    t.bijective = true;
    t.forward.resize(size);
    t.inverse.resize(size);
    std::vector<char> seen(size, 0);
    for (std::uint64_t i = 0; i < size; ++i) {
        const Element x{static_cast<std::uint32_t>(i)};
        const Element y = f(x);
        if (!ctx.contains(y))
            throw invalid_parameter("function value " + to_hex(y) +
                                    " lies outside the field");
        t.forward[i] = y;
        if (seen[y.bits])
            t.bijective = false;
        else {
            seen[y.bits] = 1;
            t.inverse[y.bits] = x;
        }
    }
    if (!t.bijective)
        t.inverse.clear();
    return t;
}

/// True iff h(f(x)) = x and f(h(x)) = x across the whole field.
template <typename Fn, typename Gn>
bool check_inverse_pair(const FieldCtx& ctx, Fn&& f, Gn&& h,
                        unsigned bound = kEnumerationBound) {
    if (ctx.degree() > bound)
        throw field_too_large("inverse-pair check over GF(2^" +
                              std::to_string(ctx.degree()) + ") exceeds bound 2^" +
                              std::to_string(bound));
    for (std::uint64_t i = 0; i < ctx.order(); ++i) {
        const Element x{static_cast<std::uint32_t>(i)};
        if (h(f(x)) != x || f(h(x)) != x)
            return false;
    }
    return true;
}

/// Coefficients (degree 0 .. 2^N - 1) of the unique reduced polynomial with
/// the table's values: c_0 = f(0), c_i = sum over nonzero b of f(b) b^(Q-1-i),
/// and the top coefficient additionally picks up f(0).
inline std::vector<Element> interpolate_coeffs(const PermTable& t) {
    const FieldCtx& ctx = *t.ctx;
    if (ctx.degree() > kInterpolationBound)
        throw field_too_large("interpolation over GF(2^" + std::to_string(ctx.degree()) +
                              ") exceeds bound 2^" + std::to_string(kInterpolationBound));
    const std::uint64_t size = ctx.order();
    std::vector<Element> coeffs(size);
    coeffs[0] = t.forward[0];
    for (std::uint64_t b = 1; b < size; ++b) {
        const Element fb = t.forward[b];
        if (fb.is_zero())
            continue;
        const Element inv_b = ctx.inv_total(Element{static_cast<std::uint32_t>(b)});
        Element p = inv_b;  // b^(Q-1-i) for i = 1, then decreasing
        for (std::uint64_t i = 1; i < size; ++i) {
            coeffs[i] += ctx.mul(fb, p);
            p = ctx.mul(p, inv_b);
        }
    }
    coeffs[size - 1] += t.forward[0];  // b = 0 contributes via 0^0 = 1
    return coeffs;
}

/// Horner evaluation of a reduced coefficient vector.
inline Element eval_poly(const FieldCtx& ctx, const std::vector<Element>& coeffs,
                         Element x) {
    Element acc = Element::zero();
    for (std::size_t i = coeffs.size(); i-- > 0;)
        acc = ctx.mul(acc, x) + coeffs[i];
    return acc;
}

// ---- table serialization ---------------------------------------------------

/// One lowercase-hex element per line.
inline void write_table_hex(std::ostream& os, const std::vector<Element>& table) {
    for (Element e : table)
        os << to_hex(e) << '\n';
}

inline std::vector<Element> read_table_hex(std::istream& is) {
    std::vector<Element> out;
    std::string line;
    while (std::getline(is, line)) {
        if (line.empty())
            continue;
        out.push_back(element_from_hex(line));
    }
    return out;
}

/// Bytes per record in the fixed-width binary format.
inline unsigned record_width(const FieldCtx& ctx) { return (ctx.degree() + 7) / 8; }

/// Forward then inverse table, 2 * 2^N records of ceil(N/8) little-endian
/// bytes each.
inline void write_tables_bin(std::ostream& os, const FieldCtx& ctx,
                             const std::vector<Element>& forward,
                             const std::vector<Element>& inverse) {
    const unsigned w = record_width(ctx);
    for (const auto* table : {&forward, &inverse})
        for (Element e : *table)
            for (unsigned b = 0; b < w; ++b)
                os.put(static_cast<char>((e.bits >> (8 * b)) & 0xff));
}

inline std::pair<std::vector<Element>, std::vector<Element>>
read_tables_bin(std::istream& is, const FieldCtx& ctx) {
    const unsigned w = record_width(ctx);
    auto read_one = [&] {
        std::vector<Element> table(ctx.order());
        for (auto& e : table) {
            std::uint32_t bits = 0;
            for (unsigned b = 0; b < w; ++b) {
                const int byte = is.get();
                if (byte < 0)
                    throw invalid_parameter("truncated binary table");
                bits |= static_cast<std::uint32_t>(byte) << (8 * b);
            }
            e = Element{bits};
        }
        return table;
    };
    auto forward = read_one();
    auto inverse = read_one();
    return {std::move(forward), std::move(inverse)};
}

}  // namespace bipp
