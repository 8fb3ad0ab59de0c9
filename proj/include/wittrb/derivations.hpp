#pragma once

#include <map>
#include <optional>
#include <vector>

#include "wittrb/algebra.hpp"
#include "wittrb/window.hpp"

namespace wittrb {

/// Degree-homogeneous derivation candidate on a window, as coefficient
/// tables. For parity-even candidates phi is identically zero and a valid
/// derivation also forces beta to vanish; the odd (parity-reversing) ansatz
/// uses phi/beta with lambda and gamma zero.
struct DegreeDerivation {
    int degree = 0;
    Window window;
    bool odd_parity = false;
    std::map<int, CoeffPoly> lambda; // coefficient of L_{m+d} in D(L_m)
    std::map<int, CoeffPoly> phi;    // coefficient of G_{m+d} in D(L_m)
    std::map<int, CoeffPoly> beta;   // coefficient of L_{n+d} in D(G_n)
    std::map<int, CoeffPoly> gamma;  // coefficient of G_{n+d} in D(G_n)

    Element apply(const BasisVector& x) const; // throws OutsideWindow
    bool is_zero() const { return lambda.empty() && phi.empty() && beta.empty() && gamma.empty(); }
};

/// D([x,y]) - [D(x),y] - (-1)^{|D||x|} [x,D(y)]; the sign matters only for
/// odd-parity candidates. Throws Inadmissible when images or the bracket
/// leave the window.
Element derivation_residual(const DegreeDerivation& D, const BasisVector& x,
                            const BasisVector& y);

/// Tables of ad_{L_d} restricted to the window.
DegreeDerivation ad_derivation(int d, Window window);

struct DerivationSolveReport {
    int degree = 0;
    Window window;
    bool odd_parity = false;
    std::vector<DegreeDerivation> basis;
    long interior_pairs = 0;
    std::vector<std::string> unconstrained; // unknowns with no interior equation, excluded
    std::size_t dimension() const { return basis.size(); }
};

/// Solves derivation_residual = 0 over all interior pairs (arguments, bracket
/// and all images inside the window) for the degree-d tables, by exact
/// rational elimination. Boundary unknowns that appear in no interior
/// equation are excluded from the system and the dimension count.
DerivationSolveReport solve_derivations(int d, Window window, bool odd_parity = false);

struct InnerMatch {
    bool matched = false;
    Rational alpha;                      // D = alpha * ad_{L_d} when matched
    std::optional<BasisVector> mismatch; // first disagreeing basis vector
};

/// Matches an even-parity solution against ad_{alpha L_d} on the interior.
InnerMatch inner_match(const DegreeDerivation& D);

} // namespace wittrb
