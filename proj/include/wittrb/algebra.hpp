#pragma once

#include <compare>
#include <map>
#include <string>

#include "wittrb/coeff_poly.hpp"

namespace wittrb {

enum class Parity { Even = 0, Odd = 1 };

inline Parity operator+(Parity a, Parity b) {
    return static_cast<Parity>((static_cast<int>(a) + static_cast<int>(b)) % 2);
}
inline Parity opposite(Parity p) { return p == Parity::Even ? Parity::Odd : Parity::Even; }

/// Basis vector of the modified Witt-type Lie superalgebra W:
/// L_m (even) and G_n (odd), m, n ranging over all integers.
struct BasisVector {
    enum class Family { L, G };
    Family family;
    int degree;

    Parity parity() const { return family == Family::L ? Parity::Even : Parity::Odd; }
    auto operator<=>(const BasisVector&) const = default;

    std::string str() const {
        return (family == Family::L ? "L_" : "G_") + std::to_string(degree);
    }
};

inline BasisVector L(int m) { return {BasisVector::Family::L, m}; }
inline BasisVector G(int n) { return {BasisVector::Family::G, n}; }

/// Finitely supported formal sum of basis vectors with CoeffPoly coefficients.
/// Zero coefficients are never stored, so an Element is zero iff empty and
/// structural equality is mathematical equality.
class Element {
  public:
    Element() = default;
    Element(const BasisVector& bv, CoeffPoly coeff) {
        if (!coeff.is_zero()) terms_[bv] = std::move(coeff);
    }

    bool is_zero() const { return terms_.empty(); }
    const std::map<BasisVector, CoeffPoly>& terms() const { return terms_; }

    const CoeffPoly& coeff(const BasisVector& bv) const {
        static const CoeffPoly zero{};
        auto it = terms_.find(bv);
        return it == terms_.end() ? zero : it->second;
    }

    void add_term(const BasisVector& bv, const CoeffPoly& coeff) {
        if (coeff.is_zero()) return;
        auto [it, inserted] = terms_.try_emplace(bv, coeff);
        if (!inserted) {
            it->second += coeff;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    friend Element operator+(Element a, const Element& b) {
        for (const auto& [bv, coeff] : b.terms_) a.add_term(bv, coeff);
        return a;
    }
    friend Element operator-(const Element& a, const Element& b) { return a + (-b); }
    Element operator-() const {
        Element out;
        for (const auto& [bv, coeff] : terms_) out.terms_[bv] = -coeff;
        return out;
    }
    friend Element operator*(const CoeffPoly& s, const Element& e) {
        Element out;
        if (s.is_zero()) return out;
        for (const auto& [bv, coeff] : e.terms_) out.add_term(bv, s * coeff);
        return out;
    }
    Element& operator+=(const Element& o) { return *this = *this + o; }
    Element& operator-=(const Element& o) { return *this = *this - o; }

    bool operator==(const Element& o) const { return terms_ == o.terms_; }
    bool operator!=(const Element& o) const { return !(*this == o); }

    /// The part supported on basis vectors of the given parity.
    Element parity_component(Parity p) const {
        Element out;
        for (const auto& [bv, coeff] : terms_)
            if (bv.parity() == p) out.terms_[bv] = coeff;
        return out;
    }

    /// True when every term has parity p (vacuously true for zero).
    bool is_homogeneous(Parity p) const {
        for (const auto& [bv, coeff] : terms_)
            if (bv.parity() != p) return false;
        return true;
    }

    std::string str() const;

  private:
    std::map<BasisVector, CoeffPoly> terms_;
};

/// Graded bracket of W on basis vectors:
///   [L_m, L_n] = (m-n) L_{m+n}
///   [L_m, G_n] = (m-n-1) G_{m+n}
///   [G_n, L_m] = -[L_m, G_n]        (super skew-symmetry; both parities mixed)
///   [G_m, G_n] = 0
Element bracket(const BasisVector& x, const BasisVector& y);

/// Bilinear extension to Elements.
Element bracket(const Element& x, const Element& y);

/// [x,[y,z]] - (-1)^{|x||y|} [y,[x,z]] - [[x,y],z]; zero certifies the graded
/// Jacobi identity on the triple.
Element jacobi_residual(const BasisVector& x, const BasisVector& y, const BasisVector& z);

/// ad_a(x) = [a, x].
Element adjoint(const Element& a, const Element& x);

} // namespace wittrb
