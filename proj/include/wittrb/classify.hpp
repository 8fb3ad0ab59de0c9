#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "wittrb/odd_operator.hpp"

namespace wittrb {

enum class FamilyTag { TrivialG, DeltaOneMinusK, DeltaZeroK1, TwoPointFinite, RationalInfinite };

const char* family_name(FamilyTag tag);
std::optional<FamilyTag> family_from_name(const std::string& name);

/// Parameters of one of the named solution families; the scale c stays
/// formal. TrivialG carries the caller's f table.
struct FamilySpec {
    FamilyTag tag;
    int k = 0;
    std::map<int, CoeffPoly> f_table; // TrivialG only
};

/// Operator table of the family on the window; f is zero for every family
/// except TrivialG. Throws InvalidParameters when the family's constraints
/// (parity of k, support inside the window) are not met.
OddOperator build_family(const FamilySpec& spec, Window window);

/// Support of g within the window plus its complement.
struct SupportSet {
    std::vector<int> J;
    std::vector<int> I;
};
SupportSet support_set(const OddOperator& op);

struct LemmaInstance {
    std::string lemma; // "symmetry" | "propagation"
    int n = 0;
    int m = 0;
    bool pass = true;
    std::string note;
};

struct LemmaCheckReport {
    bool applicable = false; // g(0) != 0 and k != 1
    std::vector<LemmaInstance> instances;
    long failures = 0;
};

/// Checks the symmetry identity for every m in J (excluding (1-k)/2) and the
/// propagation biconditional for every n in J and admissible m, instance by
/// instance. Works on any g table, solution or not.
LemmaCheckReport lemma_checks(const OddOperator& op);

/// A g-solution of (GG) on the window, scale-normalized: g(0) = c in the
/// g(0) != 0 branch, the single support value is c otherwise.
struct GSolution {
    int k = 0;
    Window window;
    std::map<int, CoeffPoly> g_table; // nonzero entries only
    std::string branch;               // "g0_zero" | "g0_nonzero"

    OddOperator to_operator() const;
    std::vector<int> support() const;
    bool operator==(const GSolution& o) const {
        return k == o.k && window == o.window && g_table == o.g_table;
    }
};

/// Complete list of g-solutions of residual_GG = 0 on all admissible pairs of
/// the window, by lemma-guided backtracking over support subsets with values
/// forced by the fundamental relation. Every candidate is accepted only after
/// a full residual check. Requires 0 in the window and window symmetric about
/// 0. Prune events are appended to prune_log when given.
std::vector<GSolution> solve_g(int k, Window window,
                               std::vector<LemmaInstance>* prune_log = nullptr);

/// Independent completeness oracle: enumerate every support subset of the
/// window with fundamental-relation values and keep those with zero residual
/// on all admissible pairs. Exponential; meant for small windows.
std::vector<GSolution> brute_force_solve_g(int k, Window window);

enum class FStatusKind { Free, Zero, Parametric };

struct FStatus {
    FStatusKind kind = FStatusKind::Free;
    // Parametric: basis of the f-solution space, entries are coefficients of
    // the formal parameter t, normalized so the smallest-|index| nonzero
    // entry is 1.
    std::vector<std::map<int, Rational>> basis;
};

/// Solves the linear system the functional equations impose on f given g:
/// all (LL), (LG) and (GL) rows over admissible pairs of the window.
FStatus solve_f(const GSolution& gsol);

struct SolutionDescriptor {
    int k = 0;
    Window window;
    std::map<int, CoeffPoly> g_table;
    std::string branch;
    FStatus f_status;
    std::optional<FamilyTag> matched; // nullopt = Unmatched
    bool window_robust = false;
    bool reverified = false; // independent full sweep passed
    LemmaCheckReport lemma_report;

    std::vector<int> support() const;
};

/// Structural match against the five family shapes after scale normalization;
/// the f status must agree with the family (Free for TrivialG, Zero
/// otherwise).
std::optional<FamilyTag> match_family(const SolutionDescriptor& desc);

/// True when the support fits inside the margin-2-shrunk window and the
/// restricted table still has zero residual on every admissible pair there.
bool window_robust(const GSolution& sol, int margin = 2);

struct ClassifyReport {
    int k = 0;
    Window window;
    std::vector<SolutionDescriptor> solutions;
    Window oracle_window;
    bool solver_oracle_agree = false;
    bool all_reverified = false;
    std::vector<LemmaInstance> prune_log;

    bool pass() const { return solver_oracle_agree && all_reverified; }
};

/// Full pipeline: solve_g, solve_f per solution, family matching, robustness,
/// lemma checks, independent re-verification sweeps, and the brute-force
/// oracle comparison on the window intersected with [-4,4].
ClassifyReport classify(int k, Window window);

/// Representative operator for a descriptor (f = 0 / constant c / first basis
/// vector scaled by c, matching the descriptor's f status).
OddOperator descriptor_operator(const SolutionDescriptor& desc);

} // namespace wittrb
