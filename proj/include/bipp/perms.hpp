#pragma once

// The three bilinear permutation families.
//
// Each family is x * M(x) for a suitable linearized M:
//   bipp   f(x) = x(Tr(x) + ax),             a in F_q \ {0,1}
//   gbipp  F(x) = x(L(Tr(x)) + aTr(x) + ax), a in F_q*, xL(x) a
//          permutation of F_q (generalizes bipp, which is L = id)
//   tower  F_{h+1}(x) = x L_{h+1}(x) built over a chain of subfields
//
// Every factory validates the full hypothesis list of its family and names
// the violated condition; the inverse formulas only hold under those
// hypotheses, so silent misuse would poison everything downstream.

#include <cstdint>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "element.hpp"
#include "errors.hpp"
#include "field.hpp"
#include "linearized.hpp"

namespace bipp {

enum class Family { bipp, gbipp, tower };

inline std::string family_name(Family f) {
    switch (f) {
        case Family::bipp: return "bipp";
        case Family::gbipp: return "gbipp";
        case Family::tower: return "tower";
    }
    return "?";
}

/// Least positive u with u*(2^l + 1) = 1 mod (2^d1 - 1), by extended Euclid.
inline std::uint64_t compute_u(unsigned d1, unsigned l) {
    if (l == 0 || l >= d1)
        throw invalid_parameter("exponent l = " + std::to_string(l) +
                                " must satisfy 1 <= l < d_1 = " +
                                std::to_string(d1));
    const std::int64_t mod = (std::int64_t{1} << d1) - 1;
    std::int64_t r0 = mod, r1 = ((std::int64_t{1} << l) + 1) % mod;
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
    if (r0 != 1)
        throw no_inverse("gcd(2^d_1 - 1, 2^l + 1) != 1 for d_1 = " +
                         std::to_string(d1) + ", l = " + std::to_string(l) +
                         " (gcd = " + std::to_string(r0) + ")");
    s0 %= mod;
    if (s0 < 0)
        s0 += mod;
    return static_cast<std::uint64_t>(s0 == 0 ? mod : s0);
}

/// Parameters of the tower family: subfield chain d_1 | ... | d_h | n,
/// coefficients c_1..c_h with nonzero partial sums, the base exponent
/// 2^l + 1 and its scale c_0.  `u` inverts 2^l + 1 mod 2^{d_1} - 1.
struct TowerSpec {
    const FieldCtx* ctx = nullptr;
    std::vector<unsigned> degrees;  ///< d_1 .. d_h
    std::vector<Element> coeffs;    ///< c_1 .. c_h
    Element c0;
    unsigned l = 1;
    std::uint64_t u = 0;

    unsigned h() const { return static_cast<unsigned>(degrees.size()); }

    /// d_i for 1 <= i <= h+1, with d_{h+1} = n.
    unsigned level_degree(unsigned i) const {
        if (i == 0 || i > h() + 1)
            throw invalid_parameter("tower level " + std::to_string(i) +
                                    " outside [1, " + std::to_string(h() + 1) + "]");
        return i <= h() ? degrees[i - 1] : ctx->degree();
    }

    /// c_1 + ... + c_i (zero for i = 0).
    Element partial_sum(unsigned i) const {
        Element s = Element::zero();
        for (unsigned j = 0; j < i && j < coeffs.size(); ++j)
            s += coeffs[j];
        return s;
    }
};

inline TowerSpec make_tower(const FieldCtx& ctx, std::vector<unsigned> degrees,
                            std::vector<Element> coeffs, Element c0, unsigned l) {
    if (degrees.empty())
        throw invalid_parameter("tower needs at least one subfield degree");
    if (coeffs.size() != degrees.size())
        throw invalid_parameter("tower has " + std::to_string(degrees.size()) +
                                " degrees but " + std::to_string(coeffs.size()) +
                                " coefficients");
    const unsigned n = ctx.degree();
    const unsigned hh = static_cast<unsigned>(degrees.size());
    for (unsigned i = 0; i < hh; ++i) {
        const unsigned lo = degrees[i];
        const unsigned hi = (i + 1 < hh) ? degrees[i + 1] : n;
        if (lo == 0 || hi % lo != 0)
            throw invalid_parameter("tower degrees must form a divisibility chain: " +
                                    std::to_string(lo) + " does not divide " +
                                    std::to_string(hi));
        if ((hi / lo) % 2 == 0)
            throw invalid_parameter("every tower quotient must be odd: " +
                                    std::to_string(hi) + "/" + std::to_string(lo) +
                                    " is even");
    }
    if ((n / degrees[0]) % 2 == 0)
        throw invalid_parameter("n/d_1 = " + std::to_string(n / degrees[0]) +
                                " must be odd");
    Element running = Element::zero();
    for (unsigned i = 0; i < hh; ++i) {
        if (!ctx.is_in_subfield(coeffs[i], degrees[i]))
            throw invalid_parameter("c_" + std::to_string(i + 1) + " = " +
                                    to_hex(coeffs[i]) + " lies outside the 2^" +
                                    std::to_string(degrees[i]) + "-subfield");
        running += coeffs[i];
        if (running.is_zero())
            throw invalid_parameter("partial sum c_1 + ... + c_" +
                                    std::to_string(i + 1) +
                                    " is zero; every partial sum must be nonzero");
    }
    if (c0.is_zero() || !ctx.is_in_subfield(c0, degrees[0]))
        throw invalid_parameter("c_0 = " + to_hex(c0) +
                                " must be a nonzero element of the 2^" +
                                std::to_string(degrees[0]) + "-subfield");
    TowerSpec spec;
    spec.ctx = &ctx;
    spec.degrees = std::move(degrees);
    spec.coeffs = std::move(coeffs);
    spec.c0 = c0;
    spec.l = l;
    spec.u = compute_u(spec.degrees[0], l);  // also enforces the gcd condition
    return spec;
}

/// A validated member of one of the three families.
struct PermSpec {
    Family family = Family::bipp;
    const FieldCtx* ctx = nullptr;
    Element a;          ///< bipp / gbipp parameter
    LinearizedPoly L;   ///< gbipp subfield polynomial
    TowerSpec tower;    ///< tower parameters
};

namespace detail {

inline void require_odd_rel_degree(const FieldCtx& ctx) {
    if (ctx.rel_degree() % 2 == 0)
        throw invalid_parameter("extension degree over the subfield must be odd; n = " +
                                std::to_string(ctx.rel_degree()) + " is even");
}

inline void require_bipp_a(const FieldCtx& ctx, Element a) {
    if (ctx.subfield_order() == 2)
        throw invalid_parameter("parameter set F_2 \\ {0,1} is empty; the family needs a subfield larger than F_2");
    require_odd_rel_degree(ctx);
    if (!ctx.in_base_subfield(a))
        throw invalid_parameter("a = " + to_hex(a) + " lies outside the subfield F_q");
    if (a.is_zero() || a == Element::one())
        throw invalid_parameter("a = " + to_hex(a) + " must avoid {0, 1}");
}

inline void require_subfield_poly(const FieldCtx& ctx, const LinearizedPoly& L) {
    if (L.ctx != &ctx)
        throw invalid_parameter("linearized polynomial is bound to a different field");
    for (Element c : L.coeffs)
        if (!ctx.in_base_subfield(c))
            throw invalid_parameter("linearized coefficient " + to_hex(c) +
                                    " lies outside the subfield F_q");
}

/// The gbipp side condition: y -> y*L(y) is a bijection of F_q.
inline void require_subfield_bilinear_perm(const FieldCtx& ctx, const LinearizedPoly& L) {
    std::set<std::uint32_t> seen;
    for (Element y : ctx.subfield_elements(ctx.subfield_degree()))
        seen.insert(ctx.mul(y, eval_lin(L, y)).bits);
    if (seen.size() != ctx.subfield_order())
        throw invalid_parameter("x*L(x) is not a permutation of the subfield F_q");
}

}  // namespace detail

/// f(x) = x(Tr(x) + ax); validates a on every call (cheap at these sizes).
inline Element eval_bipp(const FieldCtx& ctx, Element a, Element x) {
    detail::require_bipp_a(ctx, a);
    return ctx.mul(x, ctx.trace(x) + ctx.mul(a, x));
}

inline PermSpec make_bipp(const FieldCtx& ctx, Element a) {
    detail::require_bipp_a(ctx, a);
    PermSpec spec;
    spec.family = Family::bipp;
    spec.ctx = &ctx;
    spec.a = a;
    return spec;
}

inline PermSpec make_gbipp(const FieldCtx& ctx, Element a, LinearizedPoly L) {
    detail::require_odd_rel_degree(ctx);
    if (!ctx.in_base_subfield(a) || a.is_zero())
        throw invalid_parameter("a = " + to_hex(a) +
                                " must be a nonzero element of the subfield F_q");
    detail::require_subfield_poly(ctx, L);
    detail::require_subfield_bilinear_perm(ctx, L);
    PermSpec spec;
    spec.family = Family::gbipp;
    spec.ctx = &ctx;
    spec.a = a;
    spec.L = std::move(L);
    return spec;
}

inline PermSpec make_tower_perm(TowerSpec tower) {
    PermSpec spec;
    spec.family = Family::tower;
    spec.ctx = tower.ctx;
    spec.tower = std::move(tower);
    return spec;
}

/// F(x) = x(L(Tr(x)) + aTr(x) + ax).
inline Element eval_gbipp(const PermSpec& spec, Element x) {
    if (spec.family != Family::gbipp)
        throw invalid_parameter("eval_gbipp needs a gbipp spec");
    const FieldCtx& F = *spec.ctx;
    const Element tr = F.trace(x);
    return F.mul(x, eval_lin(spec.L, tr) + F.mul(spec.a, tr) + F.mul(spec.a, x));
}

/// L_i by the recursion: L_1(x) = c_0 x^(2^l) and
/// L_i(x) = L_{i-1}(T(x)) + a_i T(x) + a_i x with T = T_{d_i : d_{i-1}}
/// and a_i = c_1 + ... + c_{i-1}.
inline Element tower_L_recursive(const TowerSpec& spec, unsigned i, Element x) {
    const FieldCtx& F = *spec.ctx;
    if (i == 1)
        return F.mul(spec.c0, F.frobenius(x, spec.l));
    const unsigned hi = spec.level_degree(i);      // range-checks i
    const unsigned lo = spec.level_degree(i - 1);
    const Element t = F.trace_between(x, hi, lo);
    const Element a = spec.partial_sum(i - 1);
    return tower_L_recursive(spec, i - 1, t) + F.mul(a, t) + F.mul(a, x);
}

/// The flattened form of L_{h+1}:
/// (sum c_i) x + sum_i c_i T_{n:d_i}(x) + c_0 T_{n:d_1}(x)^(2^l).
inline Element tower_L_direct(const TowerSpec& spec, Element x) {
    const FieldCtx& F = *spec.ctx;
    Element acc = F.mul(spec.partial_sum(spec.h()), x);
    for (unsigned i = 1; i <= spec.h(); ++i)
        acc += F.mul(spec.coeffs[i - 1], F.trace_to(x, spec.degrees[i - 1]));
    acc += F.mul(spec.c0, F.frobenius(F.trace_to(x, spec.degrees[0]), spec.l));
    return acc;
}

/// F_i(x) = x L_i(x), defined on the 2^{d_i}-subfield.
inline Element eval_tower_F(const TowerSpec& spec, unsigned i, Element x) {
    const FieldCtx& F = *spec.ctx;
    const unsigned d = spec.level_degree(i);
    if (!F.is_in_subfield(x, d))
        throw invalid_subfield("argument " + to_hex(x) + " lies outside the 2^" +
                               std::to_string(d) + "-subfield of level " +
                               std::to_string(i));
    return F.mul(x, tower_L_recursive(spec, i, x));
}

/// Unified forward evaluation for any family.
inline Element eval_perm(const PermSpec& spec, Element x) {
    switch (spec.family) {
        case Family::bipp:
            return eval_bipp(*spec.ctx, spec.a, x);
        case Family::gbipp:
            return eval_gbipp(spec, x);
        case Family::tower:
            return eval_tower_F(spec.tower, spec.tower.h() + 1, x);
    }
    throw invalid_parameter("unknown family");
}

}  // namespace bipp
