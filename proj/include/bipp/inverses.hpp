#pragma once

// Closed-form compositional inverses for the three families.
//
// Division is never symbolic: every 1/y is rendered as pow(y, q-2) inside
// the subfield that owns y, which extends it by 0 -> 0 and turns the
// selector power S^(q-1) into an exact 0/1 indicator.  That convention is
// load-bearing: with it the single closed formula reproduces both branches
// of the piecewise inverse, including the degenerate q = 2 case where the
// selector vanishes identically through pow(0, 0) = 1.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "element.hpp"
#include "errors.hpp"
#include "field.hpp"
#include "linearized.hpp"
#include "perms.hpp"

namespace bipp {

/// Tabulated inverse g of y -> y*L(y) on the distinguished subfield, with
/// an exponent form (x*scale)^exponent attached when L is a monomial.
struct SubfieldInverse {
    const FieldCtx* ctx = nullptr;
    unsigned d = 1;                 ///< subfield degree
    std::vector<Element> domain;    ///< subfield elements, sorted by bits
    std::vector<Element> values;    ///< g(domain[i])
    std::optional<std::pair<Element, std::uint64_t>> closed_form;
};

inline Element eval_g(const SubfieldInverse& g, Element y) {
    auto it = std::lower_bound(g.domain.begin(), g.domain.end(), y);
    if (it == g.domain.end() || *it != y)
        throw invalid_subfield("argument " + to_hex(y) +
                               " lies outside the tabulated subfield");
    return g.values[static_cast<std::size_t>(it - g.domain.begin())];
}

/// Builds g by exhausting the subfield; rejects L if y*L(y) collides.
inline SubfieldInverse build_g(const FieldCtx& ctx, const LinearizedPoly& L) {
    detail::require_subfield_poly(ctx, L);
    const unsigned d = ctx.subfield_degree();
    const std::vector<Element> elems = ctx.subfield_elements(d);
    std::vector<std::pair<Element, Element>> pairs;  // (y*L(y), y)
    pairs.reserve(elems.size());
    for (Element y : elems)
        pairs.emplace_back(ctx.mul(y, eval_lin(L, y)), y);
    std::sort(pairs.begin(), pairs.end());
    for (std::size_t i = 0; i + 1 < pairs.size(); ++i)
        if (pairs[i].first == pairs[i + 1].first)
            throw invalid_parameter("x*L(x) is not a permutation of the subfield F_q");
    SubfieldInverse g;
    g.ctx = &ctx;
    g.d = d;
    g.domain.reserve(pairs.size());
    g.values.reserve(pairs.size());
    for (const auto& [key, val] : pairs) {
        g.domain.push_back(key);
        g.values.push_back(val);
    }
    // Monomial L(x) = c x^(2^(s*i)) gives x*L(x) = c x^(2^(s*i)+1), whose
    // inverse is the power map (x/c)^u.
    std::size_t nonzero = 0, idx = 0;
    for (std::size_t i = 0; i < L.coeffs.size(); ++i)
        if (!L.coeffs[i].is_zero()) {
            ++nonzero;
            idx = i;
        }
    if (nonzero == 1) {
        const std::uint64_t qm1 = ctx.subfield_order() - 1;
        const std::uint64_t e = (std::uint64_t{1} << ((L.step * idx) % d)) + 1;
        std::uint64_t u = 1;
        if (qm1 > 1) {
            std::int64_t r0 = static_cast<std::int64_t>(qm1);
            std::int64_t r1 = static_cast<std::int64_t>(e % qm1);
            std::int64_t s0 = 0, s1 = 1;
            while (r1 != 0) {
                const std::int64_t quot = r0 / r1;
                std::int64_t t = r0 - quot * r1;
                r0 = r1;
                r1 = t;
                t = s0 - quot * s1;
                s0 = s1;
                s1 = t;
            }
            if (r0 == 1) {
                s0 %= static_cast<std::int64_t>(qm1);
                if (s0 < 0)
                    s0 += static_cast<std::int64_t>(qm1);
                u = static_cast<std::uint64_t>(s0 == 0 ? qm1 : s0);
            }
        }
        g.closed_form = {ctx.inv_total(L.coeffs[idx]), u};
    }
    return g;
}

namespace detail {

/// sum_{k=0}^{(n-1)/2} x^(q^(2k)) — the even-Frobenius partial trace that
/// appears in every inverse formula; step and count are per level.
inline Element even_frobenius_sum(const FieldCtx& F, Element x, unsigned step,
                                  unsigned rel) {
    Element acc = Element::zero();
    for (unsigned k = 0; k <= (rel - 1) / 2; ++k)
        acc += F.frobenius(x, (2 * k * step) % F.degree());
    return acc;
}

/// sum_{k=1}^{(n-1)/2} x^(2^((2k-1)step - 1)).
inline Element odd_frobenius_sum(const FieldCtx& F, Element x, unsigned step,
                                 unsigned rel) {
    Element acc = Element::zero();
    for (unsigned k = 1; k <= (rel - 1) / 2; ++k)
        acc += F.frobenius(x, (2 * k - 1) * step - 1);
    return acc;
}

}  // namespace detail

/// The one-line closed form of the generalized-family inverse:
///   F^{-1}(x) = a^(2^(m-1)-1) x^(2^(nm-1))
///             + (g(Tr x) + a^(2^(m-1)-1) * odd-sum) * S^(q-1)
///             + sum_{j=0}^{m-2} a^(2^j-1) S^(2^m-2^(j+1)) (even-sum)^(2^j)
/// with selector S = Tr(x)/g(Tr(x)) + a*g(Tr(x)).
inline Element eval_inv_gbipp_closed(const PermSpec& spec, const SubfieldInverse& g,
                                     Element x) {
    if (spec.family != Family::gbipp)
        throw invalid_parameter("eval_inv_gbipp_closed needs a gbipp spec");
    const FieldCtx& F = *spec.ctx;
    const unsigned m = F.subfield_degree();
    const unsigned n = F.rel_degree();
    const std::uint64_t q = F.subfield_order();
    const Element a = spec.a;
    const Element tr = F.trace(x);
    const Element gt = eval_g(g, tr);
    const Element sel = F.mul(tr, F.pow(gt, q - 2)) + F.mul(a, gt);
    const Element a_half = F.pow(a, (std::uint64_t{1} << (m - 1)) - 1);
    Element acc = F.mul(a_half, F.frobenius(x, F.degree() - 1));
    const Element odd = detail::odd_frobenius_sum(F, x, m, n);
    acc += F.mul(gt + F.mul(a_half, odd), F.pow(sel, q - 1));
    const Element even = detail::even_frobenius_sum(F, x, m, n);
    for (unsigned j = 0; j + 1 < m; ++j)
        acc += F.mul(F.mul(F.pow(a, (std::uint64_t{1} << j) - 1),
                           F.pow(sel, q - (std::uint64_t{1} << (j + 1)))),
                     F.frobenius(even, j));
    return acc;
}

/// The two-branch form the closed formula interpolates:
/// (x/a)^(1/2) on the selector-zero locus, otherwise
/// g(Tr x) + sum_{j=0}^{m-1} [a^(2^j-1)/S^(2^(j+1)-1)] (even-sum)^(2^j).
inline Element eval_inv_gbipp_piecewise(const PermSpec& spec, const SubfieldInverse& g,
                                        Element x) {
    if (spec.family != Family::gbipp)
        throw invalid_parameter("eval_inv_gbipp_piecewise needs a gbipp spec");
    const FieldCtx& F = *spec.ctx;
    const unsigned m = F.subfield_degree();
    const unsigned n = F.rel_degree();
    const std::uint64_t q = F.subfield_order();
    const Element a = spec.a;
    const Element tr = F.trace(x);
    const Element gt = eval_g(g, tr);
    const Element sel = F.mul(tr, F.pow(gt, q - 2)) + F.mul(a, gt);
    if (sel.is_zero())
        return F.sqrt(F.mul(x, F.inv_total(a)));
    const Element inv_sel = F.pow(sel, q - 2);
    const Element even = detail::even_frobenius_sum(F, x, m, n);
    Element acc = gt;
    for (unsigned j = 0; j < m; ++j)
        acc += F.mul(F.mul(F.pow(a, (std::uint64_t{1} << j) - 1),
                           F.pow(inv_sel, (std::uint64_t{1} << (j + 1)) - 1)),
                     F.frobenius(even, j));
    return acc;
}

/// Specialized inverse of f(x) = x(Tr(x) + ax):
///   f^{-1}(x) = a^(2^(m-1)-1) x^(2^(nm-1))
///             + (1+a)^(2^(m-1)-1) Tr(x)^(2^(m-1))
///             + a^(2^(m-1)-1) Tr(x)^(2^(m-1)(2^m-1)) * odd-sum
///             + sum_{j=0}^{m-2} a^(2^j-1) (1+a)^(2^(m-1)+2^j-1)
///                 Tr(x)^(2^(m-1)-2^j) (even-sum)^(2^j).
inline Element eval_inv_bipp(const FieldCtx& ctx, Element a, Element x) {
    detail::require_bipp_a(ctx, a);
    const unsigned m = ctx.subfield_degree();
    const unsigned n = ctx.rel_degree();
    const std::uint64_t q = ctx.subfield_order();
    const std::uint64_t half = std::uint64_t{1} << (m - 1);
    const Element one_a = Element::one() + a;
    const Element tr = ctx.trace(x);
    const Element a_half = ctx.pow(a, half - 1);
    Element acc = ctx.mul(a_half, ctx.frobenius(x, ctx.degree() - 1));
    acc += ctx.mul(ctx.pow(one_a, half - 1), ctx.pow(tr, half));
    const Element odd = detail::odd_frobenius_sum(ctx, x, m, n);
    acc += ctx.mul(ctx.mul(a_half, ctx.pow(tr, half * (q - 1))), odd);
    const Element even = detail::even_frobenius_sum(ctx, x, m, n);
    for (unsigned j = 0; j + 1 < m; ++j)
        acc += ctx.mul(ctx.mul(ctx.pow(a, (std::uint64_t{1} << j) - 1),
                               ctx.pow(one_a, half + (std::uint64_t{1} << j) - 1)),
                       ctx.mul(ctx.pow(tr, half - (std::uint64_t{1} << j)),
                               ctx.frobenius(even, j)));
    return acc;
}

/// F_i^{-1} by the recursion: the base level is the power map (x/c_0)^u;
/// each higher level applies the closed form above with the previous
/// inverse playing the role of g, the partial sum a_i the role of a, and
/// the pair (d_{i-1}, d_i) the roles of (m, nm).
inline Element eval_inv_tower(const TowerSpec& spec, unsigned i, Element x) {
    const FieldCtx& F = *spec.ctx;
    const unsigned hi = spec.level_degree(i);
    if (!F.is_in_subfield(x, hi))
        throw invalid_subfield("argument " + to_hex(x) + " lies outside the 2^" +
                               std::to_string(hi) + "-subfield of level " +
                               std::to_string(i));
    if (i == 1)
        return F.pow(F.mul(x, F.inv_total(spec.c0)), spec.u);
    const unsigned lo = spec.level_degree(i - 1);
    const unsigned rel = hi / lo;
    const std::uint64_t q = std::uint64_t{1} << lo;
    const Element a = spec.partial_sum(i - 1);
    const Element tr = F.trace_between(x, hi, lo);
    const Element gt = eval_inv_tower(spec, i - 1, tr);
    const Element sel = F.mul(tr, F.pow(gt, q - 2)) + F.mul(a, gt);
    const Element a_half = F.pow(a, (std::uint64_t{1} << (lo - 1)) - 1);
    Element acc = F.mul(a_half, F.frobenius(x, hi - 1));
    const Element odd = detail::odd_frobenius_sum(F, x, lo, rel);
    acc += F.mul(gt + F.mul(a_half, odd), F.pow(sel, q - 1));
    const Element even = detail::even_frobenius_sum(F, x, lo, rel);
    for (unsigned j = 0; j + 1 < lo; ++j)
        acc += F.mul(F.mul(F.pow(a, (std::uint64_t{1} << j) - 1),
                           F.pow(sel, q - (std::uint64_t{1} << (j + 1)))),
                     F.frobenius(even, j));
    return acc;
}

}  // namespace bipp
