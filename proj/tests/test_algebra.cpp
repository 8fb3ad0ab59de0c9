#include <doctest.h>

#include "wittrb/algebra.hpp"
#include "wittrb/json_util.hpp"

using namespace wittrb;

namespace {
CoeffPoly k(long long v) { return CoeffPoly::constant(make_rational(v)); }
Element e(const BasisVector& bv, long long coeff = 1) { return Element(bv, k(coeff)); }
} // namespace

TEST_CASE("bracket on basis vectors") {
    CHECK(bracket(L(2), L(3)) == e(L(5), -1));
    CHECK(bracket(L(1), G(0)).is_zero()); // (1-0-1) = 0
    CHECK(bracket(L(0), G(3)) == e(G(3), -4));
    CHECK(bracket(G(5), G(-2)).is_zero());
    CHECK(bracket(G(0), L(1)).is_zero());
    CHECK(bracket(G(-1), L(2)) == e(G(1), -2)); // -[L_2, G_{-1}] = -(2+1-1) G_1
}

TEST_CASE("super skew-symmetry on homogeneous basis vectors") {
    for (int m = -4; m <= 4; ++m)
        for (int n = -4; n <= 4; ++n) {
            // mixed parity product is even, so [y,x] = -[x,y] in all three cases
            CHECK(bracket(L(m), L(n)) == -bracket(L(n), L(m)));
            CHECK(bracket(L(m), G(n)) == -bracket(G(n), L(m)));
            // both odd: [x,y] = +[y,x]
            CHECK(bracket(G(m), G(n)) == bracket(G(n), G(m)));
        }
}

TEST_CASE("grading: result degree m+n, parity |x|+|y|") {
    for (int m = -3; m <= 3; ++m)
        for (int n = -3; n <= 3; ++n) {
            const Element b = bracket(L(m), G(n));
            for (const auto& [bv, coeff] : b.terms()) {
                CHECK(bv.degree == m + n);
                CHECK(bv.parity() == Parity::Odd);
            }
            const Element bl = bracket(L(m), L(n));
            for (const auto& [bv, coeff] : bl.terms()) {
                CHECK(bv.degree == m + n);
                CHECK(bv.parity() == Parity::Even);
            }
        }
}

TEST_CASE("bilinearity of the bracket") {
    const CoeffPoly c = CoeffPoly::c();
    const Element x = k(2) * e(L(1)) + c * e(G(0)) + k(-1) * e(L(-2));
    const Element y = c * e(G(2)) + k(3) * e(L(0));
    const Element z = k(5) * e(G(-1)) + (c * c) * e(L(3));
    CHECK(bracket(x + y, z) == bracket(x, z) + bracket(y, z));
    CHECK(bracket(x, y + z) == bracket(x, y) + bracket(x, z));
    CHECK(bracket(c * x, y) == c * bracket(x, y));
    CHECK(bracket(x, c * y) == c * bracket(x, y));
}

TEST_CASE("jacobi residual vanishes on spec'd triples") {
    CHECK(jacobi_residual(L(1), L(2), G(0)).is_zero());
    CHECK(jacobi_residual(L(1), L(2), L(3)).is_zero());
    CHECK(jacobi_residual(G(1), G(2), L(0)).is_zero());
}

TEST_CASE("jacobi residual vanishes on a [-6,6] sweep") {
    // the acceptance suite does [-10,10]; keep the unit sweep smaller
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b)
            for (int c2 = 0; c2 < 2; ++c2)
                for (int m = -6; m <= 6; m += 3)
                    for (int n = -5; n <= 6; n += 3)
                        for (int p = -6; p <= 5; p += 3) {
                            const BasisVector x = a ? G(m) : L(m);
                            const BasisVector y = b ? G(n) : L(n);
                            const BasisVector z = c2 ? G(p) : L(p);
                            CAPTURE(x.str());
                            CAPTURE(y.str());
                            CAPTURE(z.str());
                            CHECK(jacobi_residual(x, y, z).is_zero());
                        }
}

TEST_CASE("adjoint") {
    const Element a = e(L(0));
    CHECK(adjoint(a, e(L(5))) == e(L(5), -5));
    CHECK(adjoint(a, e(G(2))) == e(G(2), -3));
    CHECK(adjoint(e(G(3)), e(G(7))).is_zero());
}

TEST_CASE("element normalization drops zero coefficients") {
    Element x = e(L(1));
    x.add_term(L(1), k(-1));
    CHECK(x.is_zero());
    x.add_term(G(0), CoeffPoly{});
    CHECK(x.is_zero());
    CHECK(Element(L(3), CoeffPoly{}).is_zero());
}

TEST_CASE("parity components") {
    const Element x = e(L(1), 2) + e(G(2), 3) + e(L(-1), -1);
    CHECK(x.parity_component(Parity::Even) == e(L(1), 2) + e(L(-1), -1));
    CHECK(x.parity_component(Parity::Odd) == e(G(2), 3));
    CHECK(x.parity_component(Parity::Even) + x.parity_component(Parity::Odd) == x);
    CHECK(x.is_homogeneous(Parity::Even) == false);
    CHECK(e(L(1)).is_homogeneous(Parity::Even));
    CHECK(Element{}.is_homogeneous(Parity::Odd));
}

TEST_CASE("element JSON round trip") {
    const Element x = CoeffPoly::c() * e(G(-1)) + k(-4) * e(L(2));
    CHECK(element_from_json(element_to_json(x)) == x);
    CHECK(element_to_json(Element{}).dump() == "[]");
    const Json j = element_to_json(x);
    CHECK(j[0].at("family") == "L"); // canonical order: L before G
}
