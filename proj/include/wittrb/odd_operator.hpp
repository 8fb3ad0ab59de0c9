#pragma once

#include <optional>
#include <vector>

#include "wittrb/algebra.hpp"
#include "wittrb/json_util.hpp"
#include "wittrb/window.hpp"

namespace wittrb {

/// Homogeneous odd operator of degree k on W, tabulated over a window in the
/// canonical shifted-argument convention:
///   R(L_m) = f(m+k) G_{m+k},   R(G_n) = g(n+k) L_{n+k},
/// with f and g stored as functions of their own (shifted) argument. Tables
/// are total on the window; indices outside it are unknown, not zero.
class OddOperator {
  public:
    OddOperator(int shift, Window window);

    int shift() const { return shift_; }
    const Window& window() const { return window_; }

    void set_f(int index, CoeffPoly value);
    void set_g(int index, CoeffPoly value);
    const CoeffPoly& f_at(int index) const; // throws OutsideWindow
    const CoeffPoly& g_at(int index) const; // throws OutsideWindow

    bool f_identically_zero() const;
    bool g_identically_zero() const;

    /// Linear extension of the defining action. Throws OutsideWindow when a
    /// needed table entry is not tabulated.
    Element apply(const Element& x) const;

    /// All table indices a generator pair touches lie in the window. The same
    /// condition governs every pair family and the functional residuals.
    bool admissible(int M, int N) const {
        return window_.contains(M) && window_.contains(N) && window_.contains(M + N);
    }

    /// [Rx, Ry] - R([Rx,y] + [x,Ry]) on a generator pair; throws Inadmissible.
    Element rb_residual(const BasisVector& x, const BasisVector& y) const;

    // Functional-equation residuals in shifted arguments, oriented LHS - RHS
    // of the displayed equations. Each equals (up to the recorded sign) the
    // coefficient of the corresponding generator-pair rb_residual.
    CoeffPoly residual_LL(int M, int N) const;
    CoeffPoly residual_GG(int M, int N) const;
    CoeffPoly residual_LG(int M, int N) const;
    CoeffPoly residual_GL(int M, int N) const;

    /// (M+k-1) g(M) - (k-1) g(0); the n=0 specialization of (GG).
    CoeffPoly fundamental_residual(int M) const;

    Json to_json() const;
    static OddOperator from_json(const Json& j);

  private:
    int shift_;
    Window window_;
    std::vector<CoeffPoly> f_, g_;

    std::size_t slot(int index) const {
        if (!window_.contains(index)) throw OutsideWindow(index);
        return static_cast<std::size_t>(index - window_.lo);
    }
};

enum class Eq { LL, GG, LG, GL };
const char* eq_name(Eq eq);

/// One checked tuple of a sweep: the functional residual at (M,N) plus the
/// matching generator-pair residual and their cross-consistency status.
struct FunctionalCheck {
    Eq eq;
    int M, N;
    CoeffPoly residual;
    BasisVector gen_x, gen_y;
    Element rb_residual;
    int cross_sign; // rb coefficient == cross_sign * residual
    bool cross_ok;
    bool pass; // both residuals zero
};

struct SweepReport {
    int k = 0;
    Window window;
    Json operator_table; // self-contained replay data
    std::vector<FunctionalCheck> checks;
    long skipped = 0;          // (M,N) in window^2 with M+N outside
    long internal_errors = 0;  // cross-consistency mismatches
    std::optional<std::size_t> first_fail;

    bool pass() const { return !first_fail.has_value() && internal_errors == 0; }
    const FunctionalCheck* first_counterexample() const {
        return first_fail ? &checks[*first_fail] : nullptr;
    }
    const FunctionalCheck* find(Eq eq, int M, int N) const;
};

/// Full sweep: every admissible (M,N) in the window, enumerated by
/// admissibility radius max(|M|,|N|,|M+N|) then lexicographically, equations
/// in order LL, GG, LG, GL. Inadmissible pairs are counted, not errors.
SweepReport sweep(const OddOperator& op);

struct InvertibilityReport {
    std::string image; // "zero" | "even" | "odd" | "mixed"
    std::optional<BasisVector> witness;
    bool witness_attained = false; // verified against the image span
    bool parity_confined = false;
};

/// Parity of the image span plus an explicit cokernel witness, certifying
/// non-surjectivity of any odd operator with single-sided tables.
InvertibilityReport invertibility_report(const OddOperator& op);

/// Admissible (M,N) pairs of the window sorted by (radius, M, N).
std::vector<std::pair<int, int>> admissible_pairs(const Window& w);

} // namespace wittrb
