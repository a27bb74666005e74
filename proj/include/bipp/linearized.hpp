#pragma once

// Linearized polynomials L(x) = sum a_i x^(2^(s*i)) over a FieldCtx.
//
// `step` fixes the base power: s = m gives the q-linearized shape used by
// the permutation families, s = 1 the plain 2-linearized shape used by the
// kernel-space machinery.  Evaluation is GF(2)-linear either way, so rank,
// kernel and permutation questions all reduce to bit linear algebra.

#include <cstdint>
#include <string>
#include <vector>

#include "element.hpp"
#include "errors.hpp"
#include "field.hpp"

namespace bipp {

struct LinearizedPoly {
    const FieldCtx* ctx = nullptr;
    unsigned step = 1;             ///< base power is 2^step
    std::vector<Element> coeffs;   ///< a_0, a_1, ..., a_{k-1}
};

inline LinearizedPoly make_lin(const FieldCtx& ctx, unsigned step,
                               std::vector<Element> coeffs) {
    if (step == 0)
        throw invalid_parameter("linearized step must be positive");
    return LinearizedPoly{&ctx, step, std::move(coeffs)};
}

inline Element eval_lin(const LinearizedPoly& L, Element x) {
    const FieldCtx& F = *L.ctx;
    Element acc = Element::zero();
    Element power = x;  // x^(2^(step*i))
    for (std::size_t i = 0; i < L.coeffs.size(); ++i) {
        acc += F.mul(L.coeffs[i], power);
        power = F.frobenius(power, L.step);
    }
    return acc;
}

/// The n x n matrix with entry (r, c) = a_{(c-r) mod n}^(q^r), q = 2^step,
/// n = N/step; L permutes the field exactly when this matrix is
/// non-singular.  Coefficients past the supplied list count as zero.
inline std::vector<std::vector<Element>> dickson_matrix(const LinearizedPoly& L) {
    const FieldCtx& F = *L.ctx;
    const unsigned s = L.step;
    if (F.degree() % s != 0)
        throw invalid_subfield("linearized step " + std::to_string(s) +
                               " does not divide extension degree " +
                               std::to_string(F.degree()));
    const unsigned n = F.degree() / s;
    if (L.coeffs.size() > n)
        throw invalid_parameter("linearized polynomial has " +
                                std::to_string(L.coeffs.size()) +
                                " coefficients but the matrix order is " +
                                std::to_string(n));
    std::vector<std::vector<Element>> D(n, std::vector<Element>(n));
    for (unsigned r = 0; r < n; ++r)
        for (unsigned c = 0; c < n; ++c) {
            unsigned idx = (c >= r) ? c - r : c + n - r;
            Element a = idx < L.coeffs.size() ? L.coeffs[idx] : Element::zero();
            D[r][c] = F.frobenius(a, s * r);
        }
    return D;
}

/// GF(2)-basis of {x : L(x) = 0}, found by reducing the images of the
/// monomial basis and recording the combinations that cancel.
inline std::vector<Element> kernel_basis(const LinearizedPoly& L) {
    const FieldCtx& F = *L.ctx;
    const unsigned N = F.degree();
    std::vector<std::uint32_t> pivot_val(N, 0);
    std::vector<std::uint32_t> pivot_combo(N, 0);
    std::vector<Element> basis;
    for (unsigned j = 0; j < N; ++j) {
        std::uint32_t val = eval_lin(L, Element{std::uint32_t{1} << j}).bits;
        std::uint32_t combo = std::uint32_t{1} << j;
        bool placed = false;
        for (int b = static_cast<int>(N) - 1; b >= 0; --b) {
            if ((val >> b & 1) == 0)
                continue;
            if (pivot_val[b] == 0) {
                pivot_val[b] = val;
                pivot_combo[b] = combo;
                placed = true;
                break;
            }
            val ^= pivot_val[b];
            combo ^= pivot_combo[b];
        }
        if (!placed)
            basis.push_back(Element{combo});
    }
    return basis;
}

/// GF(2)-rank of the evaluation map.
inline unsigned rank_linear(const LinearizedPoly& L) {
    return L.ctx->degree() - static_cast<unsigned>(kernel_basis(L).size());
}

/// True iff x -> L(x) permutes the field (full GF(2)-rank).
inline bool is_permutation_linear(const LinearizedPoly& L) {
    return kernel_basis(L).empty();
}

/// "lin:s:a0,a1,..." with hex coefficients.
inline std::string to_string(const LinearizedPoly& L) {
    std::string s = "lin:" + std::to_string(L.step) + ":";
    for (std::size_t i = 0; i < L.coeffs.size(); ++i) {
        if (i)
            s += ',';
        s += to_hex(L.coeffs[i]);
    }
    return s;
}

inline LinearizedPoly parse_lin(const FieldCtx& ctx, const std::string& text) {
    if (text.rfind("lin:", 0) != 0)
        throw invalid_parameter("malformed linearized descriptor '" + text + "'");
    std::size_t second = text.find(':', 4);
    if (second == std::string::npos)
        throw invalid_parameter("malformed linearized descriptor '" + text + "'");
    const std::string step_part = text.substr(4, second - 4);
    if (step_part.empty())
        throw invalid_parameter("malformed linearized descriptor '" + text + "'");
    unsigned step = 0;
    for (char c : step_part) {
        if (c < '0' || c > '9')
            throw invalid_parameter("malformed linearized descriptor '" + text + "'");
        step = step * 10 + static_cast<unsigned>(c - '0');
        if (step > 1000)
            throw invalid_parameter("malformed linearized descriptor '" + text + "'");
    }
    std::vector<Element> coeffs;
    std::size_t start = second + 1;
    if (start < text.size()) {
        while (true) {
            std::size_t comma = text.find(',', start);
            std::string tok = comma == std::string::npos
                                  ? text.substr(start)
                                  : text.substr(start, comma - start);
            coeffs.push_back(element_from_hex(tok));
            if (comma == std::string::npos)
                break;
            start = comma + 1;
        }
    }
    return make_lin(ctx, step, std::move(coeffs));
}

}  // namespace bipp
