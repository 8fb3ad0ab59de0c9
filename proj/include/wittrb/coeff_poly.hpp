#pragma once

#include <algorithm>
#include <initializer_list>
#include <string>
#include <vector>

#include "wittrb/rational.hpp"

namespace wittrb {

/// Univariate polynomial in the formal family parameter c over Rational.
/// Coefficients are stored by degree with trailing zeros stripped; the zero
/// polynomial is the empty vector, so structural equality is mathematical
/// equality.
class CoeffPoly {
  public:
    CoeffPoly() = default;
    explicit CoeffPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }
    CoeffPoly(std::initializer_list<Rational> coeffs) : coeffs_(coeffs) { trim(); }

    static CoeffPoly constant(Rational r) {
        return CoeffPoly(std::vector<Rational>{std::move(r)});
    }
    // r * c^deg
    static CoeffPoly monomial(std::size_t deg, Rational r) {
        if (r == 0) return {};
        std::vector<Rational> v(deg + 1);
        v[deg] = std::move(r);
        return CoeffPoly(std::move(v));
    }
    // The formal parameter itself, optionally scaled.
    static CoeffPoly c(Rational scale = Rational(1)) { return monomial(1, std::move(scale)); }

    bool is_zero() const { return coeffs_.empty(); }
    // degree of 0 is -1 by convention
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }

    const Rational& coeff(std::size_t deg) const {
        static const Rational zero{};
        return deg < coeffs_.size() ? coeffs_[deg] : zero;
    }
    const std::vector<Rational>& coeffs() const { return coeffs_; }

    friend CoeffPoly operator+(const CoeffPoly& a, const CoeffPoly& b) {
        std::vector<Rational> v(std::max(a.coeffs_.size(), b.coeffs_.size()));
        for (std::size_t i = 0; i < v.size(); ++i) v[i] = a.coeff(i) + b.coeff(i);
        return CoeffPoly(std::move(v));
    }
    friend CoeffPoly operator-(const CoeffPoly& a, const CoeffPoly& b) {
        std::vector<Rational> v(std::max(a.coeffs_.size(), b.coeffs_.size()));
        for (std::size_t i = 0; i < v.size(); ++i) v[i] = a.coeff(i) - b.coeff(i);
        return CoeffPoly(std::move(v));
    }
    CoeffPoly operator-() const {
        std::vector<Rational> v(coeffs_.size());
        for (std::size_t i = 0; i < v.size(); ++i) v[i] = -coeffs_[i];
        return CoeffPoly(std::move(v));
    }
    friend CoeffPoly operator*(const CoeffPoly& a, const CoeffPoly& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<Rational> v(a.coeffs_.size() + b.coeffs_.size() - 1);
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
                v[i + j] += a.coeffs_[i] * b.coeffs_[j];
        return CoeffPoly(std::move(v));
    }
    friend CoeffPoly operator*(const Rational& s, const CoeffPoly& p) {
        if (s == 0) return {};
        std::vector<Rational> v(p.coeffs_.size());
        for (std::size_t i = 0; i < v.size(); ++i) v[i] = s * p.coeffs_[i];
        return CoeffPoly(std::move(v));
    }
    friend CoeffPoly operator*(const CoeffPoly& p, const Rational& s) { return s * p; }

    CoeffPoly& operator+=(const CoeffPoly& o) { return *this = *this + o; }
    CoeffPoly& operator-=(const CoeffPoly& o) { return *this = *this - o; }
    CoeffPoly& operator*=(const CoeffPoly& o) { return *this = *this * o; }

    bool operator==(const CoeffPoly& o) const { return coeffs_ == o.coeffs_; }
    bool operator!=(const CoeffPoly& o) const { return !(*this == o); }
    // Lexicographic by degree then coefficients; used for deterministic ordering only.
    bool operator<(const CoeffPoly& o) const {
        if (coeffs_.size() != o.coeffs_.size()) return coeffs_.size() < o.coeffs_.size();
        for (std::size_t i = coeffs_.size(); i-- > 0;)
            if (coeffs_[i] != o.coeffs_[i]) return coeffs_[i] < o.coeffs_[i];
        return false;
    }

    // Evaluation at a rational point; a ring homomorphism.
    Rational evaluate_at(const Rational& v) const {
        Rational acc;
        for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * v + coeffs_[i];
        return acc;
    }

    // Human text form, highest degree first, e.g. "-20/3*c^2 + 2*c - 1".
    std::string str(const std::string& var = "c") const;

  private:
    void trim() {
        while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
    }
    std::vector<Rational> coeffs_;
};

inline std::string CoeffPoly::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::string out;
    for (std::size_t i = coeffs_.size(); i-- > 0;) {
        const Rational& r = coeffs_[i];
        if (r == 0) continue;
        const bool neg = r < 0;
        const Rational mag = neg ? Rational(-r) : r;
        if (out.empty())
            out += neg ? "-" : "";
        else
            out += neg ? " - " : " + ";
        const bool unit = (mag == 1) && i > 0;
        if (!unit) out += rational_str(mag);
        if (i > 0) {
            if (!unit) out += "*";
            out += var;
            if (i > 1) out += "^" + std::to_string(i);
        }
    }
    return out;
}

} // namespace wittrb
