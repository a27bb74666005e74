#include <catch2/catch_amalgamated.hpp>

#include <bipp/inverses.hpp>
#include <bipp/oracle.hpp>

using namespace bipp;

namespace {

Element subfield_pick(const FieldCtx& ctx, unsigned d, unsigned index_beyond_01) {
    unsigned seen = 0;
    for (Element y : ctx.subfield_elements(d)) {
        if (y.is_zero() || y == Element::one())
            continue;
        if (seen++ == index_beyond_01)
            return y;
    }
    throw invalid_parameter("subfield too small for pick");
}

}  // namespace

TEST_CASE("g inverts y*L(y) on the subfield") {
    const FieldCtx F = FieldCtx::make(6, 2);
    const LinearizedPoly id = make_lin(F, 1, {Element::one()});
    const SubfieldInverse g = build_g(F, id);
    for (Element y : F.subfield_elements(2)) {
        CHECK(eval_g(g, F.mul(y, eval_lin(id, y))) == y);
        // y*L(y) = y^2, so g is the square root, which on F_4 is y^2 again.
        CHECK(eval_g(g, y) == F.sqr(y));
    }
    REQUIRE(g.closed_form.has_value());
    CHECK(g.closed_form->first == Element::one());
    CHECK(g.closed_form->second == 2);  // inverse exponent of 2 mod 3
}

TEST_CASE("monomial closed form over F_8") {
    const FieldCtx F = FieldCtx::make(9, 3);
    // L(y) = y^2: y*L(y) = y^3, and 3*5 = 15 = 2*7 + 1.
    const LinearizedPoly L = make_lin(F, 1, {Element::zero(), Element::one()});
    const SubfieldInverse g = build_g(F, L);
    REQUIRE(g.closed_form.has_value());
    CHECK(g.closed_form->second == 5);
    for (Element y : F.subfield_elements(3))
        CHECK(eval_g(g, y) == F.pow(y, 5));

    // A scaled monomial picks up the 1/c factor.
    const Element c = subfield_pick(F, 3, 2);
    const SubfieldInverse gc = build_g(F, make_lin(F, 1, {Element::zero(), c}));
    REQUIRE(gc.closed_form.has_value());
    CHECK(gc.closed_form->first == F.inv_total(c));
    for (Element y : F.subfield_elements(3))
        CHECK(eval_g(gc, F.mul(c, F.pow(y, 3))) == y);
}

TEST_CASE("g rejects non-permutations and off-subfield arguments") {
    const FieldCtx F = FieldCtx::make(6, 2);
    // y^3 = 1 on F_4^*: y*L(y) collides for L(y) = y^2.
    CHECK_THROWS_AS(build_g(F, make_lin(F, 1, {Element::zero(), Element::one()})),
                    invalid_parameter);
    const SubfieldInverse g = build_g(F, make_lin(F, 1, {Element::one()}));
    const Element outside{0x2};  // the polynomial class generates all of GF(64)
    REQUIRE_FALSE(F.is_in_subfield(outside, 2));
    CHECK_THROWS_AS(eval_g(g, outside), invalid_subfield);
}

TEST_CASE("base family inverse round-trips and matches the oracle") {
    const FieldCtx F = FieldCtx::make(6, 2);
    for (unsigned pick = 0; pick < 2; ++pick) {
        const Element a = subfield_pick(F, 2, pick);
        const PermTable table = tabulate(F, [&](Element x) { return eval_bipp(F, a, x); });
        REQUIRE(table.bijective);
        for (std::uint64_t i = 0; i < F.order(); ++i) {
            const Element x{static_cast<std::uint32_t>(i)};
            CHECK(eval_inv_bipp(F, a, x) == table.inverse[i]);
        }
    }
}

TEST_CASE("generalized inverse: closed form, piecewise form, oracle agree") {
    const FieldCtx F = FieldCtx::make(9, 3);
    const Element a = subfield_pick(F, 3, 4);
    const LinearizedPoly L = make_lin(F, 1, {Element::zero(), Element::one()});
    const PermSpec spec = make_gbipp(F, a, L);
    const SubfieldInverse g = build_g(F, L);
    const PermTable table = tabulate(F, [&](Element x) { return eval_perm(spec, x); });
    REQUIRE(table.bijective);
    for (std::uint64_t i = 0; i < F.order(); ++i) {
        const Element x{static_cast<std::uint32_t>(i)};
        const Element closed = eval_inv_gbipp_closed(spec, g, x);
        CHECK(closed == table.inverse[i]);
        CHECK(eval_inv_gbipp_piecewise(spec, g, x) == closed);
    }
}

TEST_CASE("the subfield shadow identity g(Tr(F(x))) = Tr(x)") {
    const FieldCtx F = FieldCtx::make(9, 3);
    const Element a = subfield_pick(F, 3, 1);
    const LinearizedPoly L = make_lin(F, 1, {Element::zero(), Element::one()});
    const PermSpec spec = make_gbipp(F, a, L);
    const SubfieldInverse g = build_g(F, L);
    for (Element x : F.enumerate())
        CHECK(eval_g(g, F.trace(eval_perm(spec, x))) == F.trace(x));
}

TEST_CASE("q = 2 collapse: the map becomes squaring, the inverse square root") {
    const FieldCtx F = FieldCtx::make(5);
    const PermSpec spec = make_gbipp(F, Element::one(), make_lin(F, 1, {Element::one()}));
    const SubfieldInverse g = build_g(F, spec.L);
    for (Element x : F.enumerate()) {
        CHECK(eval_perm(spec, x) == F.sqr(x));
        CHECK(eval_inv_gbipp_closed(spec, g, x) == F.sqrt(x));
    }
}

TEST_CASE("scaling bridge between the two parametric families") {
    // f_a^(-1)(x) = F^(-1)(x / (1+a)) where F uses L = id and a/(1+a).
    const FieldCtx F = FieldCtx::make(6, 2);
    const Element a = subfield_pick(F, 2, 1);
    const Element inv_one_a = F.inv_checked(Element::one() + a);
    const PermSpec assoc =
        make_gbipp(F, F.mul(a, inv_one_a), make_lin(F, 1, {Element::one()}));
    const SubfieldInverse g = build_g(F, assoc.L);
    for (Element x : F.enumerate())
        CHECK(eval_inv_bipp(F, a, x) ==
              eval_inv_gbipp_closed(assoc, g, F.mul(x, inv_one_a)));
}

TEST_CASE("tower inverse: base level is the u-th power") {
    const FieldCtx F = FieldCtx::make(9);
    const Element c0 = subfield_pick(F, 3, 0);
    const Element c1 = subfield_pick(F, 3, 3);
    const TowerSpec tower = make_tower(F, {3}, {c1}, c0, 1);
    REQUIRE(tower.u == 5);
    for (Element y : F.subfield_elements(3)) {
        const Element image = eval_tower_F(tower, 1, y);
        CHECK(eval_inv_tower(tower, 1, image) == y);
        CHECK(eval_inv_tower(tower, 1, y) == F.pow(F.mul(y, F.inv_total(c0)), 5));
    }
}

TEST_CASE("tower inverse: full field round-trip at both l values") {
    const FieldCtx F = FieldCtx::make(9);
    const Element c0 = subfield_pick(F, 3, 1);
    const Element c1 = subfield_pick(F, 3, 2);
    for (unsigned l : {1u, 2u}) {
        const TowerSpec tower = make_tower(F, {3}, {c1}, c0, l);
        const PermTable table =
            tabulate(F, [&](Element x) { return eval_tower_F(tower, 2, x); });
        REQUIRE(table.bijective);
        for (std::uint64_t i = 0; i < F.order(); ++i) {
            const Element x{static_cast<std::uint32_t>(i)};
            CHECK(eval_inv_tower(tower, 2, x) == table.inverse[i]);
        }
    }
}

TEST_CASE("tower inverse refuses arguments outside the level's field") {
    const FieldCtx F = FieldCtx::make(9);
    const Element c0 = subfield_pick(F, 3, 0);
    const TowerSpec tower = make_tower(F, {3}, {c0}, c0, 1);
    const Element outside{0x2};
    REQUIRE_FALSE(F.is_in_subfield(outside, 3));
    CHECK_THROWS_AS(eval_inv_tower(tower, 1, outside), invalid_subfield);
}
