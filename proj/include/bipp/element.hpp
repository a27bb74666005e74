#pragma once

#include <compare>
#include <cstdint>
#include <cstdio>
#include <string>

#include "bipp/errors.hpp"

namespace bipp {

/// An element of a binary field GF(2^N), stored as the coefficient vector of
/// its polynomial-basis representation: bit i is the coefficient of t^i.
/// Addition is coefficient-wise XOR and needs no field context; everything
/// else (mul, pow, trace, ...) lives on FieldCtx.
struct Element {
    std::uint32_t bits = 0;

    friend constexpr auto operator<=>(const Element&, const Element&) = default;

    constexpr bool is_zero() const { return bits == 0; }

    static constexpr Element zero() { return {0}; }
    static constexpr Element one() { return {1}; }
};

constexpr Element operator+(Element a, Element b) { return {a.bits ^ b.bits}; }

constexpr Element& operator+=(Element& a, Element b) {
    a.bits ^= b.bits;
    return a;
}

/// Lowercase hex of the coefficient bits, least-significant bit = constant term.
inline std::string to_hex(Element x) {
    char buf[16];
    std::snprintf(buf, sizeof(buf), "%x", x.bits);
    return buf;
}

inline Element element_from_hex(const std::string& s) {
    if (s.empty()) throw invalid_parameter("empty element literal");
    std::uint64_t v = 0;
    for (char ch : s) {
        int d;
        if (ch >= '0' && ch <= '9') d = ch - '0';
        else if (ch >= 'a' && ch <= 'f') d = ch - 'a' + 10;
        else if (ch >= 'A' && ch <= 'F') d = ch - 'A' + 10;
        else throw invalid_parameter("bad hex digit in element literal: " + s);
        v = (v << 4) | static_cast<std::uint64_t>(d);
        if (v > 0xffffffffull) throw invalid_parameter("element literal out of range: " + s);
    }
    return {static_cast<std::uint32_t>(v)};
}

} // namespace bipp
