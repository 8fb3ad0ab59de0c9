#include "wittrb/derivations.hpp"

#include <algorithm>

#include "wittrb/exact_linalg.hpp"

namespace wittrb {

namespace {
const CoeffPoly kZero{};
const CoeffPoly& look(const std::map<int, CoeffPoly>& table, int idx) {
    auto it = table.find(idx);
    return it == table.end() ? kZero : it->second;
}
} // namespace

Element DegreeDerivation::apply(const BasisVector& x) const {
    if (!window.contains(x.degree)) throw OutsideWindow(x.degree);
    if (!window.contains(x.degree + degree)) throw OutsideWindow(x.degree + degree);
    Element out;
    if (x.family == BasisVector::Family::L) {
        out.add_term(L(x.degree + degree), look(lambda, x.degree));
        out.add_term(G(x.degree + degree), look(phi, x.degree));
    } else {
        out.add_term(L(x.degree + degree), look(beta, x.degree));
        out.add_term(G(x.degree + degree), look(gamma, x.degree));
    }
    return out;
}

Element derivation_residual(const DegreeDerivation& D, const BasisVector& x,
                            const BasisVector& y) {
    try {
        const Element ex(x, CoeffPoly::constant(Rational(1)));
        const Element ey(y, CoeffPoly::constant(Rational(1)));
        const Element br = bracket(ex, ey);
        Element d_of_bracket;
        for (const auto& [bv, coeff] : br.terms()) d_of_bracket += coeff * D.apply(bv);
        // the bracket degree must itself be representable even when [x,y] = 0
        if (!D.window.contains(x.degree + y.degree))
            throw OutsideWindow(x.degree + y.degree);
        if (!D.window.contains(x.degree + y.degree + D.degree))
            throw OutsideWindow(x.degree + y.degree + D.degree);
        const int sign =
            (D.odd_parity && x.parity() == Parity::Odd) ? -1 : 1;
        return d_of_bracket - bracket(D.apply(x), ey) -
               CoeffPoly::constant(make_rational(sign)) * bracket(ex, D.apply(y));
    } catch (const OutsideWindow& e) {
        throw Inadmissible("derivation pair touches degree " + std::to_string(e.index));
    }
}

DegreeDerivation ad_derivation(int d, Window window) {
    DegreeDerivation D;
    D.degree = d;
    D.window = window;
    for (int m = window.lo; m <= window.hi; ++m) {
        if (!window.contains(m + d)) continue;
        if (d - m != 0) D.lambda[m] = CoeffPoly::constant(make_rational(d - m));
        if (d - m - 1 != 0) D.gamma[m] = CoeffPoly::constant(make_rational(d - m - 1));
    }
    return D;
}

DerivationSolveReport solve_derivations(int d, Window window, bool odd_parity) {
    DerivationSolveReport rep;
    rep.degree = d;
    rep.window = window;
    rep.odd_parity = odd_parity;

    // unknown index set: sources whose image degree stays in the window
    std::vector<int> idx;
    for (int m = window.lo; m <= window.hi; ++m)
        if (window.contains(m + d)) idx.push_back(m);
    const std::size_t per = idx.size();
    if (per == 0) return rep;
    const auto pos = [&](int m) {
        return static_cast<std::size_t>(
            std::lower_bound(idx.begin(), idx.end(), m) - idx.begin());
    };
    // columns: even ansatz [lambda | beta | gamma], odd ansatz [phi | psi]
    const std::size_t ncols = odd_parity ? 2 * per : 3 * per;
    const std::size_t B = per, C = 2 * per; // group offsets

    std::vector<std::vector<Rational>> rows;
    const auto add_row = [&](std::initializer_list<std::pair<std::size_t, long long>> entries) {
        std::vector<Rational> row(ncols);
        bool nonzero = false;
        for (const auto& [col, v] : entries) {
            if (v == 0) continue;
            row[col] += make_rational(v);
            nonzero = true;
        }
        if (nonzero) rows.push_back(std::move(row));
    };

    const auto interior = [&](int m, int n) {
        return window.contains(m) && window.contains(n) && window.contains(m + n) &&
               window.contains(m + d) && window.contains(n + d) && window.contains(m + n + d);
    };

    for (int m : idx)
        for (int n : idx) {
            if (!interior(m, n)) continue;
            ++rep.interior_pairs;
            const std::size_t pm = pos(m), pn = pos(n), ps = pos(m + n);
            if (!odd_parity) {
                // (L_m, L_n): (m-n) lam(m+n) - (m+d-n) lam(m) - (m-n-d) lam(n)
                add_row({{ps, m - n}, {pm, -(m + d - n)}, {pn, -(m - n - d)}});
                // (L_m, G_n) L-part: (m-n-1) beta(m+n) - (m-n-d) beta(n)
                add_row({{B + ps, m - n - 1}, {B + pn, -(m - n - d)}});
                // (L_m, G_n) G-part:
                // (m-n-1) gam(m+n) - (m+d-n-1) lam(m) - (m-n-d-1) gam(n)
                add_row({{C + ps, m - n - 1}, {pm, -(m + d - n - 1)}, {C + pn, -(m - n - d - 1)}});
                // (G_m, L_n) L-part: (m-n+1) beta(m+n) - (m+d-n) beta(m)
                add_row({{B + ps, m - n + 1}, {B + pm, -(m + d - n)}});
                // (G_m, L_n) G-part:
                // (m-n+1) gam(m+n) - (m+d-n+1) gam(m) - (m-n-d+1) lam(n)
                add_row({{C + ps, m - n + 1}, {C + pm, -(m + d - n + 1)}, {pn, -(m - n - d + 1)}});
                // (G_m, G_n): (m+d-n-1) beta(m) - (n+d-m-1) beta(n)
                add_row({{B + pm, m + d - n - 1}, {B + pn, -(n + d - m - 1)}});
            } else {
                // (L_m, L_n): (m-n) phi(m+n) - (m+d-n+1) phi(m) - (m-n-d-1) phi(n)
                add_row({{ps, m - n}, {pm, -(m + d - n + 1)}, {pn, -(m - n - d - 1)}});
                // (L_m, G_n): (m-n-1) psi(m+n) - (m-n-d) psi(n)
                add_row({{B + ps, m - n - 1}, {B + pn, -(m - n - d)}});
                // (G_m, L_n): (m-n+1) psi(m+n) - (m+d-n) psi(m)
                add_row({{B + ps, m - n + 1}, {B + pm, -(m + d - n)}});
                // (G_m, G_n): (m+d-n-1) psi(m) - (m-n-d+1) psi(n)
                add_row({{B + pm, m + d - n - 1}, {B + pn, -(m - n - d + 1)}});
            }
        }

    // drop unknowns no interior equation touches; they are boundary artifacts
    std::vector<bool> touched(ncols, false);
    for (const auto& row : rows)
        for (std::size_t j = 0; j < ncols; ++j)
            if (row[j] != 0) touched[j] = true;
    std::vector<std::size_t> keep;
    for (std::size_t j = 0; j < ncols; ++j) {
        if (touched[j]) {
            keep.push_back(j);
        } else {
            const std::size_t grp = j / per;
            const int m = idx[j % per];
            const char* names_even[3] = {"lambda", "beta", "gamma"};
            const char* names_odd[2] = {"phi", "psi"};
            rep.unconstrained.push_back(
                std::string(odd_parity ? names_odd[grp] : names_even[grp]) + "(" +
                std::to_string(m) + ")");
        }
    }
    std::vector<std::vector<Rational>> compact;
    compact.reserve(rows.size());
    for (const auto& row : rows) {
        std::vector<Rational> r(keep.size());
        for (std::size_t j = 0; j < keep.size(); ++j) r[j] = row[keep[j]];
        compact.push_back(std::move(r));
    }

    for (const auto& vec : nullspace(std::move(compact), keep.size())) {
        DegreeDerivation D;
        D.degree = d;
        D.window = window;
        D.odd_parity = odd_parity;
        for (std::size_t j = 0; j < keep.size(); ++j) {
            if (vec[j] == 0) continue;
            const std::size_t col = keep[j];
            const std::size_t grp = col / per;
            const int m = idx[col % per];
            const CoeffPoly v = CoeffPoly::constant(vec[j]);
            if (!odd_parity) {
                if (grp == 0) D.lambda[m] = v;
                if (grp == 1) D.beta[m] = v;
                if (grp == 2) D.gamma[m] = v;
            } else {
                if (grp == 0) D.phi[m] = v;
                if (grp == 1) D.beta[m] = v; // psi: L-part of D(G)
            }
        }
        rep.basis.push_back(std::move(D));
    }
    return rep;
}

InnerMatch inner_match(const DegreeDerivation& D) {
    InnerMatch res;
    const int d = D.degree;
    const DegreeDerivation ad = ad_derivation(d, D.window);

    // the Witt part determines the inner element: a = alpha L_d is read off
    // the first lambda entry with a nonzero ad coefficient
    std::optional<Rational> alpha;
    for (int m = D.window.lo; m <= D.window.hi && !alpha; ++m) {
        if (!D.window.contains(m + d)) continue;
        if (d - m != 0 && !look(D.lambda, m).is_zero())
            alpha = look(D.lambda, m).coeff(0) / make_rational(d - m);
    }
    if (!alpha) alpha = Rational(0);
    res.alpha = *alpha;

    const CoeffPoly a = CoeffPoly::constant(*alpha);
    for (int m = D.window.lo; m <= D.window.hi; ++m) {
        if (!D.window.contains(m + d)) continue;
        if (look(D.lambda, m) != a * look(ad.lambda, m) || !look(D.phi, m).is_zero()) {
            res.mismatch = L(m);
            return res;
        }
        if (look(D.gamma, m) != a * look(ad.gamma, m) || !look(D.beta, m).is_zero()) {
            res.mismatch = G(m);
            return res;
        }
    }
    res.matched = true;
    return res;
}

} // namespace wittrb
