// Build one member of each bilinear family over GF(2^6) = GF(4^3) and
// invert a few points through the closed forms.

#include <cstdio>

#include <bipp/bipp.hpp>

int main() {
    using namespace bipp;
    const FieldCtx ctx = FieldCtx::make(6, 2);  // q = 4, n = 3

    // Pick a in F_4 beyond {0,1}: any generator of the subfield works.
    Element a;
    for (Element y : ctx.subfield_elements(2))
        if (!y.is_zero() && y != Element::one())
            a = y;

    const PermSpec f = make_bipp(ctx, a);
    std::printf("f(x) = x(Tr(x) + %sx) over %s\n", to_hex(a).c_str(),
                ctx.serialize().c_str());
    for (std::uint32_t bits : {0x01u, 0x17u, 0x2au, 0x3fu}) {
        const Element x{bits};
        const Element y = eval_perm(f, x);
        const Element back = eval_inv_bipp(ctx, a, y);
        std::printf("  x=%-3s f(x)=%-3s f^-1(f(x))=%-3s %s\n", to_hex(x).c_str(),
                    to_hex(y).c_str(), to_hex(back).c_str(),
                    back == x ? "ok" : "MISMATCH");
    }

    // The generalized family with L(x) = x^4 (so x*L(x) = x^5 permutes F_4).
    const PermSpec F = make_gbipp(ctx, a, make_lin(ctx, 2, {Element::zero(), Element::one()}));
    const SubfieldInverse g = build_g(ctx, F.L);
    std::printf("\nF(x) = x(L(Tr(x)) + aTr(x) + ax) with L(y) = y^4\n");
    for (std::uint32_t bits : {0x02u, 0x1cu, 0x31u}) {
        const Element x{bits};
        const Element y = eval_perm(F, x);
        const Element back = eval_inv_gbipp_closed(F, g, y);
        std::printf("  x=%-3s F(x)=%-3s F^-1(F(x))=%-3s %s\n", to_hex(x).c_str(),
                    to_hex(y).c_str(), to_hex(back).c_str(),
                    back == x ? "ok" : "MISMATCH");
    }
    return 0;
}
