#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <random>
#include <sstream>

#include <bipp/oracle.hpp>
#include <bipp/perms.hpp>

using namespace bipp;

namespace {
const Element t{0x2};
}

TEST_CASE("tabulation of a bijection fills both tables") {
    const FieldCtx F = FieldCtx::make(3);
    const PermTable tab = tabulate(F, [&](Element x) { return F.sqr(x); });
    REQUIRE(tab.bijective);
    CHECK(tab.forward[t.bits] == Element{0x4});
    CHECK(tab.inverse[0x4] == t);
    CHECK(tab.forward.size() == 8);
    CHECK(tab.inverse.size() == 8);
}

TEST_CASE("tabulation flags collisions and clears the inverse") {
    const FieldCtx F = FieldCtx::make(3);
    const PermTable tab = tabulate(F, [&](Element x) { return F.sqr(x) + x; });
    CHECK_FALSE(tab.bijective);
    CHECK(tab.inverse.empty());
    CHECK(tab.forward.size() == 8);  // forward values are still recorded
}

TEST_CASE("tabulation rejects out-of-field values and oversized fields") {
    const FieldCtx F = FieldCtx::make(3);
    CHECK_THROWS_AS(tabulate(F, [](Element) { return Element{0x100}; }),
                    invalid_parameter);
    const FieldCtx big = FieldCtx::make(21);
    CHECK_THROWS_AS(tabulate(big, [](Element x) { return x; }), field_too_large);
    CHECK_NOTHROW(tabulate(big, [](Element x) { return x; }, 21));
}

TEST_CASE("inverse-pair checking") {
    const FieldCtx F = FieldCtx::make(3);
    auto sq = [&](Element x) { return F.sqr(x); };
    auto sqrt = [&](Element x) { return F.sqrt(x); };
    CHECK(check_inverse_pair(F, sq, sqrt));
    CHECK_FALSE(check_inverse_pair(F, sq, sq));
}

TEST_CASE("interpolation recovers monomials") {
    const FieldCtx F = FieldCtx::make(3);
    const auto sq = interpolate_coeffs(tabulate(F, [&](Element x) { return F.sqr(x); }));
    for (std::size_t i = 0; i < sq.size(); ++i)
        CHECK(sq[i] == (i == 2 ? Element::one() : Element::zero()));

    const auto id = interpolate_coeffs(tabulate(F, [](Element x) { return x; }));
    for (std::size_t i = 0; i < id.size(); ++i)
        CHECK(id[i] == (i == 1 ? Element::one() : Element::zero()));

    const auto cube = interpolate_coeffs(tabulate(F, [&](Element x) { return F.pow(x, 3); }));
    for (std::size_t i = 0; i < cube.size(); ++i)
        CHECK(cube[i] == (i == 3 ? Element::one() : Element::zero()));
}

TEST_CASE("interpolation of a constant keeps only the constant term") {
    // The zero argument contributes through 0^0 = 1 at the top exponent;
    // a constant table is where getting that wrong shows up.
    const FieldCtx F = FieldCtx::make(3);
    PermTable tab;
    tab.ctx = &F;
    tab.bijective = false;
    tab.forward.assign(8, Element{0x5});
    const auto coeffs = interpolate_coeffs(tab);
    CHECK(coeffs[0] == Element{0x5});
    for (std::size_t i = 1; i < coeffs.size(); ++i)
        CHECK(coeffs[i] == Element::zero());
}

TEST_CASE("interpolation then evaluation reproduces any table") {
    const FieldCtx F = FieldCtx::make(6, 2);
    PermTable tab;
    tab.ctx = &F;
    tab.bijective = true;
    tab.forward.resize(64);
    for (std::uint32_t i = 0; i < 64; ++i)
        tab.forward[i] = Element{i};
    std::shuffle(tab.forward.begin(), tab.forward.end(), std::mt19937{12345});
    const auto coeffs = interpolate_coeffs(tab);
    for (std::uint64_t i = 0; i < 64; ++i) {
        const Element x{static_cast<std::uint32_t>(i)};
        CHECK(eval_poly(F, coeffs, x) == tab.forward[i]);
    }
}

TEST_CASE("interpolation refuses oversized fields") {
    const FieldCtx F = FieldCtx::make(13);
    PermTable tab;
    tab.ctx = &F;
    tab.forward.assign(1u << 13, Element::zero());
    CHECK_THROWS_AS(interpolate_coeffs(tab), field_too_large);
}

TEST_CASE("hex tables round-trip") {
    const FieldCtx F = FieldCtx::make(4);
    const PermTable tab = tabulate(F, [&](Element x) { return F.sqr(x); });
    std::stringstream ss;
    write_table_hex(ss, tab.forward);
    CHECK(read_table_hex(ss) == tab.forward);
}

TEST_CASE("binary tables round-trip with fixed-width records") {
    const FieldCtx F = FieldCtx::make(9);
    CHECK(record_width(F) == 2);
    const PermTable tab = tabulate(F, [&](Element x) { return F.sqr(x); });
    std::stringstream ss;
    write_tables_bin(ss, F, tab.forward, tab.inverse);
    CHECK(ss.str().size() == 2u * 2u * 512u);
    const auto [fwd, inv] = read_tables_bin(ss, F);
    CHECK(fwd == tab.forward);
    CHECK(inv == tab.inverse);

    std::stringstream truncated(ss.str().substr(0, 100));
    CHECK_THROWS_AS(read_tables_bin(truncated, F), invalid_parameter);
}
