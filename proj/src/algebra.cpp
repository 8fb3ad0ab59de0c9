#include "wittrb/algebra.hpp"

namespace wittrb {

std::string Element::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [bv, coeff] : terms_) {
        if (!out.empty()) out += " + ";
        out += "(" + coeff.str() + ")*" + bv.str();
    }
    return out;
}

Element bracket(const BasisVector& x, const BasisVector& y) {
    using F = BasisVector::Family;
    const int m = x.degree, n = y.degree;
    if (x.family == F::L && y.family == F::L)
        return Element(L(m + n), CoeffPoly::constant(make_rational(m - n)));
    if (x.family == F::L && y.family == F::G)
        return Element(G(m + n), CoeffPoly::constant(make_rational(m - n - 1)));
    if (x.family == F::G && y.family == F::L)
        return Element(G(m + n), CoeffPoly::constant(make_rational(-(n - m - 1))));
    return {}; // [G, G] = 0
}

Element bracket(const Element& x, const Element& y) {
    Element out;
    for (const auto& [bx, cx] : x.terms())
        for (const auto& [by, cy] : y.terms()) {
            const Element b = bracket(bx, by);
            if (!b.is_zero()) out += (cx * cy) * b;
        }
    return out;
}

Element jacobi_residual(const BasisVector& x, const BasisVector& y, const BasisVector& z) {
    const Element ex(x, CoeffPoly::constant(Rational(1)));
    const Element ey(y, CoeffPoly::constant(Rational(1)));
    const Element ez(z, CoeffPoly::constant(Rational(1)));
    const int sign = (x.parity() == Parity::Odd && y.parity() == Parity::Odd) ? -1 : 1;
    const CoeffPoly s = CoeffPoly::constant(make_rational(sign));
    return bracket(ex, bracket(ey, ez)) - s * bracket(ey, bracket(ex, ez)) -
           bracket(bracket(ex, ey), ez);
}

Element adjoint(const Element& a, const Element& x) { return bracket(a, x); }

} // namespace wittrb
