#pragma once

// Arithmetic context for GF(2^N) with a distinguished subfield GF(2^m).
//
// Elements are bit vectors over GF(2): bit i of Element::bits is the
// coefficient of t^i in the residue-class representative modulo a fixed
// irreducible modulus.  All operations live on FieldCtx so several fields
// of different shapes can coexist (e.g. a field and a strict subfield of
// another context during table cross-checks).

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <string>
#include <vector>

#include "element.hpp"
#include "errors.hpp"

namespace bipp {

namespace detail {

/// Degree of a GF(2)[t] polynomial held as a bit mask (-1 for the zero poly).
constexpr int poly_degree(std::uint64_t p) {
    int d = -1;
    while (p) {
        ++d;
        p >>= 1;
    }
    return d;
}

/// Remainder of a carry-less product modulo f (plain GF(2)[t] division).
constexpr std::uint64_t poly_rem(std::uint64_t a, std::uint64_t f) {
    const int df = poly_degree(f);
    for (int d = poly_degree(a); d >= df; --d)
        if (a >> d & 1)
            a ^= f << (d - df);
    return a;
}

/// Carry-less multiplication followed by reduction mod f.
constexpr std::uint64_t poly_mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t f) {
    std::uint64_t acc = 0;
    while (b) {
        if (b & 1)
            acc ^= a;
        b >>= 1;
        a = poly_rem(a << 1, f);
    }
    return poly_rem(acc, f);
}

constexpr std::uint64_t poly_gcd(std::uint64_t a, std::uint64_t b) {
    while (b) {
        a = poly_rem(a, b);
        std::uint64_t t = a;
        a = b;
        b = t;
    }
    return a;
}

/// x^(2^k) mod f, by k modular squarings of x.
constexpr std::uint64_t poly_x_pow_pow2(unsigned k, std::uint64_t f) {
    std::uint64_t r = 2;  // the polynomial t
    for (unsigned i = 0; i < k; ++i)
        r = poly_mulmod(r, r, f);
    return r;
}

/// Irreducibility over GF(2) for degree-N f: requires x^(2^N) = x mod f and,
/// for every prime p | N, gcd(x^(2^(N/p)) - x, f) = 1.  The gcd form rejects
/// reducible polynomials whose factor degrees merely avoid dividing N/p.
constexpr bool is_irreducible(std::uint64_t f, unsigned n) {
    if (poly_degree(f) != static_cast<int>(n))
        return false;
    if (n == 1)
        return true;
    if ((f & 1) == 0)
        return false;  // divisible by t
    if (poly_x_pow_pow2(n, f) != 2)
        return false;
    unsigned rest = n;
    for (unsigned p = 2; p * p <= rest; ++p) {
        if (rest % p)
            continue;
        while (rest % p == 0)
            rest /= p;
        if (poly_gcd(poly_x_pow_pow2(n / p, f) ^ 2u, f) != 1)
            return false;
    }
    if (rest > 1 && poly_gcd(poly_x_pow_pow2(n / rest, f) ^ 2u, f) != 1)
        return false;
    return true;
}

/// Distinct prime factors by trial division; inputs stay below 2^31 here.
inline std::vector<std::uint64_t> prime_factors(std::uint64_t v) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t p = 2; p * p <= v; ++p) {
        if (v % p)
            continue;
        out.push_back(p);
        while (v % p == 0)
            v /= p;
    }
    if (v > 1)
        out.push_back(v);
    return out;
}

}  // namespace detail

/// Largest extension degree a context will construct.  Products of two
/// reduced representatives must stay inside 64 bits, and every consumer of
/// these fields enumerates them sooner or later, so the cap is deliberately
/// small.
inline constexpr unsigned kMaxDegree = 30;

/// Default ceiling (in bits) for full-field enumeration.
inline constexpr unsigned kEnumerationBound = 20;

/// Lexicographically smallest irreducible polynomial of each degree,
/// used when a context is built from degrees alone.
inline constexpr std::uint64_t kDefaultModulus[] = {
    0,        // degree 0: unused
    0x2,      // t
    0x7,      // t^2+t+1
    0xb,      // t^3+t+1
    0x13,     // t^4+t+1
    0x25,     // t^5+t^2+1
    0x43,     // t^6+t+1
    0x83,     // t^7+t+1
    0x11b,    // t^8+t^4+t^3+t+1
    0x203,    // t^9+t+1
    0x409,    // t^10+t^3+1
    0x805,    // t^11+t^2+1
    0x1009,   // t^12+t^3+1
    0x201b,   // t^13+t^4+t^3+t+1
    0x4021,   // t^14+t^5+1
    0x8003,   // t^15+t+1
    0x1002b,  // t^16+t^5+t^3+t+1
    0x20009,  // t^17+t^3+1
    0x40009,  // t^18+t^3+1
    0x80027,  // t^19+t^5+t^2+t+1
    0x100009, // t^20+t^3+1
};

class FieldCtx {
public:
    /// Builds GF(2^n) with the given degree-n irreducible modulus and marks
    /// GF(2^m) as the distinguished subfield (m must divide n).
    FieldCtx(unsigned n, std::uint64_t modulus, unsigned m = 1)
        : n_(n), m_(m), modulus_(modulus) {
        if (n == 0 || n > kMaxDegree)
            throw invalid_parameter("extension degree " + std::to_string(n) +
                                    " outside supported range [1, " +
                                    std::to_string(kMaxDegree) + "]");
        if (m == 0 || n % m != 0)
            throw invalid_subfield("subfield degree " + std::to_string(m) +
                                   " does not divide extension degree " +
                                   std::to_string(n));
        if (!detail::is_irreducible(modulus, n))
            throw invalid_parameter("modulus 0x" + hex64(modulus) +
                                    " is not irreducible of degree " +
                                    std::to_string(n));
        mask_ = (n < 64) ? ((std::uint64_t{1} << n) - 1) : ~std::uint64_t{0};
    }

    /// Context over the table modulus for degree n.
    static FieldCtx make(unsigned n, unsigned m = 1) {
        if (n == 0 || n > kMaxDegree)
            throw invalid_parameter("extension degree " + std::to_string(n) +
                                    " outside supported range [1, " +
                                    std::to_string(kMaxDegree) + "]");
        if (n <= 20)
            return FieldCtx(n, kDefaultModulus[n], m);
        return FieldCtx(n, smallest_modulus(n), m);
    }

    unsigned degree() const { return n_; }            ///< N: [GF(2^N) : GF(2)]
    unsigned subfield_degree() const { return m_; }   ///< m: [GF(2^m) : GF(2)]
    unsigned rel_degree() const { return n_ / m_; }   ///< n = N/m
    std::uint64_t modulus() const { return modulus_; }

    /// |F| = 2^N.
    std::uint64_t order() const { return std::uint64_t{1} << n_; }
    /// |F^*| = 2^N - 1.
    std::uint64_t group_order() const { return order() - 1; }
    /// |F_q| = 2^m, the size of the distinguished subfield.
    std::uint64_t subfield_order() const { return std::uint64_t{1} << m_; }

    bool contains(Element x) const { return (x.bits & ~mask_) == 0; }

    Element mul(Element a, Element b) const {
        std::uint64_t acc = 0;
        std::uint64_t x = a.bits;
        std::uint64_t y = b.bits;
        while (y) {
            if (y & 1)
                acc ^= x;
            y >>= 1;
            x <<= 1;
            if (x >> n_ & 1)
                x ^= modulus_;
        }
        return {static_cast<std::uint32_t>(acc)};
    }

    Element sqr(Element a) const { return mul(a, a); }

    /// a^e with the conventions 0^0 = 1 and 0^e = 0 for e > 0.  The exponent
    /// is reduced mod 2^N - 1 for nonzero bases, so inverse-style exponents
    /// like 2^N - 2 are cheap at any degree.
    Element pow(Element a, std::uint64_t e) const {
        if (a.is_zero())
            return e == 0 ? Element::one() : Element::zero();
        e %= group_order();
        Element r = Element::one();
        Element base = a;
        while (e) {
            if (e & 1)
                r = mul(r, base);
            base = sqr(base);
            e >>= 1;
        }
        return r;
    }

    /// Multiplicative inverse extended by 0 -> 0.  The zero case is explicit
    /// because pow(0, order - 2) would hit the 0^0 = 1 convention in GF(2).
    Element inv_total(Element a) const {
        return a.is_zero() ? Element::zero() : pow(a, order() - 2);
    }

    /// Multiplicative inverse; rejects 0.
    Element inv_checked(Element a) const {
        if (a.is_zero())
            throw division_by_zero("inverse of zero requested");
        return inv_total(a);
    }

    /// x^(2^k); k is taken mod N since the Frobenius has order N.
    Element frobenius(Element x, unsigned k) const {
        k %= n_;
        for (unsigned i = 0; i < k; ++i)
            x = sqr(x);
        return x;
    }

    /// The unique square root: x^(2^(N-1)).
    Element sqrt(Element x) const { return frobenius(x, n_ - 1); }

    /// Trace from GF(2^N) onto GF(2^d): sum of x^(2^(d*i)) for i < N/d.
    Element trace_to(Element x, unsigned d) const {
        require_subfield_degree(d);
        Element acc = Element::zero();
        Element term = x;
        for (unsigned i = 0; i < n_ / d; ++i) {
            acc += term;
            term = frobenius(term, d);
        }
        return acc;
    }

    /// Relative trace from GF(2^d_hi) onto GF(2^d_lo), both seen inside this
    /// field; x must lie in GF(2^d_hi) for the result to mean anything.
    Element trace_between(Element x, unsigned d_hi, unsigned d_lo) const {
        require_subfield_degree(d_hi);
        require_subfield_degree(d_lo);
        if (d_hi % d_lo != 0)
            throw invalid_subfield("trace between GF(2^" + std::to_string(d_hi) +
                                   ") and GF(2^" + std::to_string(d_lo) +
                                   "): lower degree does not divide upper");
        Element acc = Element::zero();
        Element term = x;
        for (unsigned i = 0; i < d_hi / d_lo; ++i) {
            acc += term;
            term = frobenius(term, d_lo);
        }
        return acc;
    }

    /// Trace onto the distinguished subfield GF(2^m).
    Element trace(Element x) const { return trace_to(x, m_); }

    /// Membership in GF(2^d) = fixed field of Frobenius^d.
    bool is_in_subfield(Element x, unsigned d) const {
        require_subfield_degree(d);
        return frobenius(x, d) == x;
    }

    bool in_base_subfield(Element x) const { return is_in_subfield(x, m_); }

    /// All 2^N elements in bit order.  Refuses degrees above the bound so a
    /// mistyped context cannot silently allocate gigabytes.
    std::vector<Element> enumerate(unsigned bound = kEnumerationBound) const {
        if (n_ > bound)
            throw field_too_large("enumeration of GF(2^" + std::to_string(n_) +
                                  ") exceeds bound 2^" + std::to_string(bound));
        std::vector<Element> all(order());
        for (std::uint64_t i = 0; i < order(); ++i)
            all[i] = {static_cast<std::uint32_t>(i)};
        return all;
    }

    /// A fixed generator of F^*: the smallest representative of full order.
    Element generator() const {
        for (std::uint64_t c = 2; c < order(); ++c) {
            Element g{static_cast<std::uint32_t>(c)};
            if (element_order(g) == group_order())
                return g;
        }
        return Element::one();  // GF(2): the group is trivial
    }

    /// Multiplicative order of a nonzero element, via the factored group order.
    std::uint64_t element_order(Element x) const {
        if (x.is_zero())
            throw invalid_parameter("order of zero requested");
        std::uint64_t ord = group_order();
        for (std::uint64_t p : detail::prime_factors(group_order()))
            while (ord % p == 0 && pow(x, ord / p) == Element::one())
                ord /= p;
        return ord;
    }

    /// The 2^d elements of GF(2^d), in increasing bit order.
    std::vector<Element> subfield_elements(unsigned d) const {
        require_subfield_degree(d);
        std::vector<Element> out;
        out.reserve(std::size_t{1} << d);
        if (d == n_) {
            return enumerate();
        }
        Element g = generator();
        Element h = pow(g, group_order() / ((std::uint64_t{1} << d) - 1));
        out.push_back(Element::zero());
        Element acc = Element::one();
        do {
            out.push_back(acc);
            acc = mul(acc, h);
        } while (acc != Element::one());
        std::sort(out.begin(), out.end());
        return out;
    }

    /// "gf2:N:modulus-hex" or "gf2:N:modulus-hex:m" when m > 1.
    std::string serialize() const {
        std::string s = "gf2:" + std::to_string(n_) + ":" + hex64(modulus_);
        if (m_ > 1)
            s += ":" + std::to_string(m_);
        return s;
    }

    static FieldCtx parse(const std::string& text) {
        std::vector<std::string> parts;
        std::size_t start = 0;
        while (true) {
            std::size_t colon = text.find(':', start);
            if (colon == std::string::npos) {
                parts.push_back(text.substr(start));
                break;
            }
            parts.push_back(text.substr(start, colon - start));
            start = colon + 1;
        }
        if (parts.size() < 2 || parts.size() > 4 || parts[0] != "gf2")
            throw invalid_parameter("malformed field descriptor '" + text + "'");
        unsigned n = parse_unsigned(parts[1], text);
        if (parts.size() == 2)
            return make(n);
        std::uint64_t modulus = parse_hex64(parts[2], text);
        unsigned m = parts.size() == 4 ? parse_unsigned(parts[3], text) : 1;
        return FieldCtx(n, modulus, m);
    }

    friend bool operator==(const FieldCtx& a, const FieldCtx& b) {
        return a.n_ == b.n_ && a.m_ == b.m_ && a.modulus_ == b.modulus_;
    }

    /// Smallest irreducible of degree n (linear scan over odd masks).
    static std::uint64_t smallest_modulus(unsigned n) {
        std::uint64_t top = std::uint64_t{1} << n;
        for (std::uint64_t low = 1; low < top; low += 2)
            if (detail::is_irreducible(top | low, n))
                return top | low;
        throw invalid_parameter("no irreducible polynomial of degree " +
                                std::to_string(n));  // unreachable for n >= 1
    }

private:
    void require_subfield_degree(unsigned d) const {
        if (d == 0 || n_ % d != 0)
            throw invalid_subfield("degree " + std::to_string(d) +
                                   " does not divide extension degree " +
                                   std::to_string(n_));
    }

    static std::string hex64(std::uint64_t v) {
        char buf[20];
        std::snprintf(buf, sizeof buf, "%llx", static_cast<unsigned long long>(v));
        return buf;
    }

    static unsigned parse_unsigned(const std::string& s, const std::string& ctx) {
        if (s.empty())
            throw invalid_parameter("malformed field descriptor '" + ctx + "'");
        unsigned v = 0;
        for (char c : s) {
            if (c < '0' || c > '9')
                throw invalid_parameter("malformed field descriptor '" + ctx + "'");
            v = v * 10 + static_cast<unsigned>(c - '0');
            if (v > 1000)
                throw invalid_parameter("malformed field descriptor '" + ctx + "'");
        }
        return v;
    }

    static std::uint64_t parse_hex64(const std::string& s, const std::string& ctx) {
        if (s.empty() || s.size() > 16)
            throw invalid_parameter("malformed field descriptor '" + ctx + "'");
        std::uint64_t v = 0;
        for (char c : s) {
            int digit;
            if (c >= '0' && c <= '9')
                digit = c - '0';
            else if (c >= 'a' && c <= 'f')
                digit = c - 'a' + 10;
            else if (c >= 'A' && c <= 'F')
                digit = c - 'A' + 10;
            else
                throw invalid_parameter("malformed field descriptor '" + ctx + "'");
            v = (v << 4) | static_cast<std::uint64_t>(digit);
        }
        return v;
    }

    unsigned n_;
    unsigned m_;
    std::uint64_t modulus_;
    std::uint64_t mask_ = 0;
};

}  // namespace bipp
