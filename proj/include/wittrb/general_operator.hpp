#pragma once

#include <optional>
#include <vector>

#include "wittrb/odd_operator.hpp"

namespace wittrb {

/// Window-bounded linear operator with arbitrary Element images; no parity or
/// degree-homogeneity restriction.
class GeneralOperator {
  public:
    explicit GeneralOperator(Window window) : window_(window) {
        if (!window_.valid()) throw InvalidParameters("operator window lo > hi");
    }

    const Window& window() const { return window_; }

    void set_image(const BasisVector& from, Element to);
    const Element& image(const BasisVector& from) const; // throws OutsideWindow

    /// Linear extension; throws OutsideWindow when a source degree is not
    /// tabulated.
    Element apply(const Element& x) const;

    /// [Tx, Ty] - T([Tx,y] + [x,Ty]) on a generator pair.
    Element rb_residual(const BasisVector& x, const BasisVector& y) const;

    /// Every degree this pair's computation can touch lies in the window.
    bool admissible(const BasisVector& x, const BasisVector& y) const;

    bool is_zero() const;

    Json to_json() const;
    static GeneralOperator from_json(const Json& j);

    static GeneralOperator from_odd(const OddOperator& op);

  private:
    Window window_;
    std::map<BasisVector, Element> images_;
};

/// Output-parity projection: T_even(x) keeps the parity-|x| component of
/// T(x), T_odd(x) the opposite one; T_even + T_odd = T exactly.
std::pair<GeneralOperator, GeneralOperator> split_parity(const GeneralOperator& T);

/// The parity-(|x|+|y|) and parity-(|x|+|y|+1) components of the rb residual;
/// their sum is the full residual.
std::pair<Element, Element> projected_rb_residuals(const GeneralOperator& T,
                                                   const BasisVector& x, const BasisVector& y);

struct GeneralSweepReport {
    std::vector<std::pair<BasisVector, BasisVector>> failures;
    long checked = 0;
    long skipped = 0;
    bool pass() const { return failures.empty(); }
};

/// rb residual over every admissible generator pair of the window.
GeneralSweepReport sweep_general(const GeneralOperator& T);

struct ClaimSearchEntry {
    std::string label;
    Json operator_json;
    bool full_rb = false;
    bool even_rb = false;
    bool odd_rb = false;
    std::optional<std::pair<BasisVector, BasisVector>> counterexample; // component failure
    std::string failing_component;
};

struct ClaimSearchReport {
    long candidates = 0;
    long full_rb_passers = 0;
    std::vector<ClaimSearchEntry> passers;
    bool claim_holds_for_all = true;
};

/// For every candidate passing the full RB sweep, sweeps T_even and T_odd
/// separately and records whether both pass.
ClaimSearchReport componentwise_claim_search(const std::vector<std::pair<std::string, GeneralOperator>>& candidates);

/// Deterministic built-in candidate set: the solved odd families, the even
/// diagonal projections, their sums, and an exhaustive sparse enumeration of
/// single-term-image operators with integer coefficients in {-2..2} on the
/// given tiny window.
std::vector<std::pair<std::string, GeneralOperator>> builtin_claim_candidates(Window window);

} // namespace wittrb
