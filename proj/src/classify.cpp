#include "wittrb/classify.hpp"

#include <algorithm>

#include "wittrb/exact_linalg.hpp"

namespace wittrb {

const char* family_name(FamilyTag tag) {
    switch (tag) {
        case FamilyTag::TrivialG: return "trivial-g";
        case FamilyTag::DeltaOneMinusK: return "delta-one-minus-k";
        case FamilyTag::DeltaZeroK1: return "delta-zero";
        case FamilyTag::TwoPointFinite: return "two-point";
        case FamilyTag::RationalInfinite: return "rational";
    }
    return "?";
}

std::optional<FamilyTag> family_from_name(const std::string& name) {
    for (FamilyTag tag : {FamilyTag::TrivialG, FamilyTag::DeltaOneMinusK, FamilyTag::DeltaZeroK1,
                          FamilyTag::TwoPointFinite, FamilyTag::RationalInfinite})
        if (name == family_name(tag)) return tag;
    return std::nullopt;
}

namespace {

CoeffPoly fundamental_value(int k, int M) {
    // (k-1)c / (M+k-1); callers exclude the pole M = 1-k
    return CoeffPoly::c(make_rational(k - 1, M + k - 1));
}

bool is_pole(int k, int M) { return M + k - 1 == 0; }

} // namespace

OddOperator build_family(const FamilySpec& spec, Window window) {
    if (!window.valid()) throw InvalidParameters("family window lo > hi");
    const int k = spec.k;
    OddOperator op(k, window);
    switch (spec.tag) {
        case FamilyTag::TrivialG:
            for (const auto& [idx, poly] : spec.f_table) {
                if (!window.contains(idx))
                    throw InvalidParameters("f table index " + std::to_string(idx) +
                                            " outside window");
                op.set_f(idx, poly);
            }
            break;
        case FamilyTag::DeltaOneMinusK:
            if (!window.contains(1 - k))
                throw InvalidParameters("support 1-k outside window");
            op.set_g(1 - k, CoeffPoly::c());
            break;
        case FamilyTag::DeltaZeroK1:
            if (k != 1) throw InvalidParameters("delta-zero family requires k = 1");
            if (!window.contains(0)) throw InvalidParameters("support 0 outside window");
            op.set_g(0, CoeffPoly::c());
            break;
        case FamilyTag::TwoPointFinite: {
            if (k % 2 == 0 || k == 1)
                throw InvalidParameters("two-point family requires odd k != 1");
            const int p = (1 - k) / 2;
            if (!window.contains(0) || !window.contains(p))
                throw InvalidParameters("two-point support outside window");
            op.set_g(0, CoeffPoly::c());
            op.set_g(p, CoeffPoly::c(make_rational(2)));
            break;
        }
        case FamilyTag::RationalInfinite:
            if (k % 2 == 0 || k == 1)
                throw InvalidParameters("rational family requires odd k != 1");
            for (int M = window.lo; M <= window.hi; ++M)
                if (!is_pole(k, M)) op.set_g(M, fundamental_value(k, M));
            break;
    }
    return op;
}

SupportSet support_set(const OddOperator& op) {
    SupportSet s;
    for (int M = op.window().lo; M <= op.window().hi; ++M)
        (op.g_at(M).is_zero() ? s.I : s.J).push_back(M);
    return s;
}

LemmaCheckReport lemma_checks(const OddOperator& op) {
    LemmaCheckReport rep;
    const int k = op.shift();
    const Window& w = op.window();
    if (!w.contains(0) || op.g_at(0).is_zero() || k == 1) return rep;
    rep.applicable = true;
    const SupportSet s = support_set(op);
    const CoeffPoly rhs = CoeffPoly::constant(make_rational(k - 1)) * op.g_at(0);

    for (int m : s.J) {
        LemmaInstance inst;
        inst.lemma = "symmetry";
        inst.m = m;
        if (2 * m == 1 - k) {
            inst.note = "skipped (m = (1-k)/2)";
        } else if (!w.contains(-m)) {
            inst.note = "skipped (-m outside window)";
        } else {
            const CoeffPoly lhs = CoeffPoly::constant(make_rational(-m + k - 1)) * op.g_at(-m);
            inst.pass = !op.g_at(-m).is_zero() && lhs == rhs;
            if (!inst.pass) {
                inst.note = "(-m+k-1)g(-m) != (k-1)g(0)";
                ++rep.failures;
            }
        }
        rep.instances.push_back(std::move(inst));
    }
    for (int n : s.J) {
        for (int m = w.lo; m <= w.hi; ++m) {
            if (m == n || m == n + k - 1) continue;
            if (!w.contains(m + n)) continue;
            LemmaInstance inst;
            inst.lemma = "propagation";
            inst.n = n;
            inst.m = m;
            const bool m_ann = op.g_at(m).is_zero();
            const bool sum_ann = op.g_at(m + n).is_zero();
            inst.pass = (m_ann == sum_ann);
            if (!inst.pass) {
                inst.note = m_ann ? "m in I but m+n in J" : "m in J but m+n in I";
                ++rep.failures;
            }
            rep.instances.push_back(std::move(inst));
        }
    }
    return rep;
}

OddOperator GSolution::to_operator() const {
    OddOperator op(k, window);
    for (const auto& [M, poly] : g_table) op.set_g(M, poly);
    return op;
}

std::vector<int> GSolution::support() const {
    std::vector<int> J;
    for (const auto& [M, poly] : g_table)
        if (!poly.is_zero()) J.push_back(M);
    return J;
}

std::vector<int> SolutionDescriptor::support() const {
    std::vector<int> J;
    for (const auto& [M, poly] : g_table)
        if (!poly.is_zero()) J.push_back(M);
    return J;
}

namespace {

/// Partial-assignment (GG) evaluator used by the backtracking search. Values
/// are indexed by window slot; unassigned entries are unknown, not zero.
class PartialTable {
  public:
    PartialTable(int k, Window w) : k_(k), w_(w), vals_(w.size()), known_(w.size(), false) {}

    int k() const { return k_; }
    const Window& window() const { return w_; }
    bool known(int M) const { return known_[slot(M)]; }
    const CoeffPoly& value(int M) const { return vals_[slot(M)]; }

    void assign(int M, CoeffPoly v) {
        vals_[slot(M)] = std::move(v);
        known_[slot(M)] = true;
    }
    void unassign(int M) { known_[slot(M)] = false; }

    bool decidable(int M, int N) const {
        return w_.contains(M) && w_.contains(N) && w_.contains(M + N) && known(M) && known(N) &&
               known(M + N);
    }

    CoeffPoly gg(int M, int N) const {
        const auto ci = [](long long v) { return CoeffPoly::constant(make_rational(v)); };
        return ci(M - N) * value(M) * value(N) -
               value(M + N) * (ci(M - N + k_ - 1) * value(M) + ci(M - N - k_ + 1) * value(N));
    }

  private:
    int k_;
    Window w_;
    std::vector<CoeffPoly> vals_;
    std::vector<bool> known_;

    std::size_t slot(int M) const { return static_cast<std::size_t>(M - w_.lo); }
};

/// Labels a failed (GG) pair with the lemma pattern it instantiates, for the
/// prune log.
void log_prune(std::vector<LemmaInstance>* log, const PartialTable& t, int A, int B) {
    if (!log) return;
    LemmaInstance inst;
    inst.pass = false;
    inst.m = A;
    inst.n = B;
    if (B == -A) {
        inst.lemma = "symmetry";
        inst.note = "pruned: (GG)(m,-m) nonzero";
    } else if (t.value(A).is_zero() != t.value(A + B).is_zero()) {
        inst.lemma = "propagation";
        inst.note = "pruned: support flips across m -> m+n";
    } else {
        inst.lemma = "propagation";
        inst.note = "pruned: (GG) residual nonzero";
    }
    log->push_back(std::move(inst));
}

bool full_gg_check(const PartialTable& t) {
    const Window& w = t.window();
    for (int M = w.lo; M <= w.hi; ++M)
        for (int N = w.lo; N <= w.hi; ++N)
            if (w.contains(M + N) && !t.gg(M, N).is_zero()) return false;
    return true;
}

GSolution make_solution(int k, const Window& w, const PartialTable& t, std::string branch) {
    GSolution sol;
    sol.k = k;
    sol.window = w;
    sol.branch = std::move(branch);
    for (int M = w.lo; M <= w.hi; ++M)
        if (t.known(M) && !t.value(M).is_zero()) sol.g_table[M] = t.value(M);
    return sol;
}

void sort_solutions(std::vector<GSolution>& sols) {
    std::sort(sols.begin(), sols.end(), [](const GSolution& a, const GSolution& b) {
        const std::vector<int> sa = a.support(), sb = b.support();
        if (sa.size() != sb.size()) return sa.size() < sb.size();
        if (sa != sb) return sa < sb;
        return a.branch < b.branch;
    });
}

} // namespace

std::vector<GSolution> solve_g(int k, Window window, std::vector<LemmaInstance>* prune_log) {
    if (!window.contains(0)) throw InvalidParameters("solve_g window must contain 0");
    if (!window.symmetric_about_zero())
        throw InvalidParameters("solve_g window must be symmetric about 0");

    std::vector<GSolution> sols;

    // Branch g(0) = 0: (GG) at (M,0) forces (M+k-1) g(M)^2 = 0, so the
    // support is empty or the single point 1-k.
    {
        PartialTable t(k, window);
        for (int M = window.lo; M <= window.hi; ++M) t.assign(M, CoeffPoly{});
        if (full_gg_check(t)) sols.push_back(make_solution(k, window, t, "g0_zero"));
        if (k != 1 && window.contains(1 - k)) {
            t.assign(1 - k, CoeffPoly::c());
            if (full_gg_check(t)) sols.push_back(make_solution(k, window, t, "g0_zero"));
        }
    }

    // Branch g(0) = c: every other value is forced to 0 or the fundamental
    // value; backtrack over support subsets.
    {
        PartialTable t(k, window);
        t.assign(0, CoeffPoly::c());

        std::vector<int> free_idx;
        for (int M = window.lo; M <= window.hi; ++M) {
            if (M == 0) continue;
            if (k != 1 && is_pole(k, M)) {
                t.assign(M, CoeffPoly{}); // g(1-k) = 0 forced
                continue;
            }
            if (k == 1) {
                t.assign(M, CoeffPoly{}); // fundamental forces M g(M) = 0
                continue;
            }
            free_idx.push_back(M);
        }
        std::sort(free_idx.begin(), free_idx.end(), [](int a, int b) {
            if (std::abs(a) != std::abs(b)) return std::abs(a) < std::abs(b);
            return a < b;
        });

        // check every (GG) pair that involves M and just became decidable
        const auto consistent_after = [&](int M) {
            for (int A = window.lo; A <= window.hi; ++A) {
                if (t.decidable(A, M) && !t.gg(A, M).is_zero()) {
                    log_prune(prune_log, t, A, M);
                    return false;
                }
                if (t.decidable(M, A) && !t.gg(M, A).is_zero()) {
                    log_prune(prune_log, t, M, A);
                    return false;
                }
                const int B = M - A;
                if (window.contains(B) && t.decidable(A, B) && !t.gg(A, B).is_zero()) {
                    log_prune(prune_log, t, A, B);
                    return false;
                }
            }
            return true;
        };

        const auto recurse = [&](const auto& self, std::size_t i) -> void {
            if (i == free_idx.size()) {
                // never trust the search: full residual check before accepting
                if (full_gg_check(t)) sols.push_back(make_solution(k, window, t, "g0_nonzero"));
                return;
            }
            const int M = free_idx[i];
            for (int choice = 0; choice < 2; ++choice) {
                t.assign(M, choice == 0 ? CoeffPoly{} : fundamental_value(k, M));
                if (consistent_after(M)) self(self, i + 1);
                t.unassign(M);
            }
        };
        if (k == 1) {
            if (full_gg_check(t)) sols.push_back(make_solution(k, window, t, "g0_nonzero"));
        } else {
            recurse(recurse, 0);
        }
    }

    sort_solutions(sols);
    return sols;
}

std::vector<GSolution> brute_force_solve_g(int k, Window window) {
    if (!window.contains(0)) throw InvalidParameters("oracle window must contain 0");
    const int n = window.size();
    if (n > 16) throw InvalidParameters("oracle window too large for subset enumeration");

    std::vector<GSolution> sols;
    for (unsigned long mask = 0; mask < (1ul << n); ++mask) {
        PartialTable t(k, window);
        bool degenerate = false;
        for (int i = 0; i < n; ++i) {
            const int M = window.lo + i;
            if (!(mask & (1ul << i))) {
                t.assign(M, CoeffPoly{});
                continue;
            }
            CoeffPoly v;
            if (mask & (1u << (0 - window.lo))) // 0 in support: fundamental values
                v = (M == 0) ? CoeffPoly::c()
                             : (is_pole(k, M) ? CoeffPoly::c() : fundamental_value(k, M));
            else
                v = CoeffPoly::c();
            // a zero forced value means this subset duplicates a smaller one
            if (v.is_zero()) {
                degenerate = true;
                break;
            }
            t.assign(M, v);
        }
        if (degenerate) continue;
        if (full_gg_check(t)) {
            const bool zero_branch = !(mask & (1u << (0 - window.lo)));
            sols.push_back(make_solution(k, window, t, zero_branch ? "g0_zero" : "g0_nonzero"));
        }
    }
    sort_solutions(sols);
    return sols;
}

FStatus solve_f(const GSolution& gsol) {
    const Window& w = gsol.window;
    const int k = gsol.k;
    const OddOperator op = gsol.to_operator();
    const int n = w.size();
    const auto col = [&](int M) { return static_cast<std::size_t>(M - w.lo); };

    // Every row is c times a rational combination of the unknowns f(M); the
    // g-values are pure c-multiples, so extract the degree-1 coefficient.
    const auto lin = [](const CoeffPoly& p) -> Rational {
        if (p.is_zero()) return Rational(0);
        return p.coeff(1);
    };

    std::vector<std::vector<Rational>> rows;
    const auto add_row = [&](std::initializer_list<std::pair<int, Rational>> entries) {
        std::vector<Rational> row(static_cast<std::size_t>(n));
        bool nonzero = false;
        for (const auto& [M, v] : entries) {
            if (v == 0) continue;
            row[col(M)] += v;
            nonzero = true;
        }
        if (nonzero) rows.push_back(std::move(row));
    };

    for (int M = w.lo; M <= w.hi; ++M)
        for (int N = w.lo; N <= w.hi; ++N) {
            if (!w.contains(M + N)) continue;
            const Rational gMN = lin(op.g_at(M + N));
            const Rational gN = lin(op.g_at(N));
            const Rational gM = lin(op.g_at(M));
            // (LL): g(M+N) [ (M-N+k+1) f(M) + (M-N-k-1) f(N) ] = 0
            if (gMN != 0)
                add_row({{M, gMN * make_rational(M - N + k + 1)},
                         {N, gMN * make_rational(M - N - k - 1)}});
            // (LG): g(N) [ (M-N+1) f(M) - (M-N-k) f(M+N) ] = 0
            if (gN != 0)
                add_row({{M, gN * make_rational(M - N + 1)},
                         {M + N, -gN * make_rational(M - N - k)}});
            // (GL): g(M) [ (M-N-1) f(N) - (M-N+k) f(M+N) ] = 0
            if (gM != 0)
                add_row({{N, gM * make_rational(M - N - 1)},
                         {M + N, -gM * make_rational(M - N + k)}});
        }

    FStatus status;
    if (rows.empty()) {
        status.kind = FStatusKind::Free;
        return status;
    }
    const auto basis = nullspace(std::move(rows), static_cast<std::size_t>(n));
    if (basis.empty()) {
        status.kind = FStatusKind::Zero;
        return status;
    }
    if (basis.size() == static_cast<std::size_t>(n)) {
        status.kind = FStatusKind::Free;
        return status;
    }
    status.kind = FStatusKind::Parametric;
    for (const auto& vec : basis) {
        // normalize so the smallest-|index| nonzero entry is 1
        std::optional<int> anchor;
        for (int M = 0; M <= std::max(std::abs(w.lo), std::abs(w.hi)); ++M)
            for (int sgn : {1, -1}) {
                const int idx = sgn * M;
                if (w.contains(idx) && vec[col(idx)] != 0) {
                    anchor = idx;
                    goto found;
                }
            }
    found:
        std::map<int, Rational> table;
        const Rational scale = anchor ? Rational(1) / vec[col(*anchor)] : Rational(1);
        for (int M = w.lo; M <= w.hi; ++M)
            if (vec[col(M)] != 0) table[M] = scale * vec[col(M)];
        status.basis.push_back(std::move(table));
    }
    return status;
}

std::optional<FamilyTag> match_family(const SolutionDescriptor& desc) {
    const std::vector<int> J = desc.support();
    const int k = desc.k;
    if (J.empty())
        return desc.f_status.kind == FStatusKind::Free ? std::optional(FamilyTag::TrivialG)
                                                       : std::nullopt;
    if (desc.f_status.kind != FStatusKind::Zero) return std::nullopt;
    const auto val = [&](int M) { return desc.g_table.at(M); };
    // at k=1 the delta_{1-k} and delta_0 shapes coincide; prefer the k=1 tag
    if (J.size() == 1 && J[0] == 0 && k == 1) return FamilyTag::DeltaZeroK1;
    if (J.size() == 1 && J[0] == 1 - k) return FamilyTag::DeltaOneMinusK;
    if (J.size() == 2 && k % 2 != 0 && k != 1) {
        const int p = (1 - k) / 2;
        if (J == std::vector<int>{std::min(0, p), std::max(0, p)} &&
            val(p) == CoeffPoly::constant(make_rational(2)) * val(0))
            return FamilyTag::TwoPointFinite;
    }
    if (k % 2 != 0 && k != 1) {
        std::vector<int> cofinite;
        for (int M = desc.window.lo; M <= desc.window.hi; ++M)
            if (!is_pole(k, M)) cofinite.push_back(M);
        if (J == cofinite) {
            const CoeffPoly g0 = val(0);
            bool rational_shape = true;
            for (int M : J)
                rational_shape =
                    rational_shape && (val(M) == make_rational(k - 1, M + k - 1) * g0);
            if (rational_shape) return FamilyTag::RationalInfinite;
        }
    }
    return std::nullopt;
}

bool window_robust(const GSolution& sol, int margin) {
    const Window shrunk = sol.window.shrunk(margin);
    if (!shrunk.valid()) return false;
    for (const auto& [M, poly] : sol.g_table)
        if (!poly.is_zero() && !shrunk.contains(M)) return false;
    PartialTable t(sol.k, shrunk);
    for (int M = shrunk.lo; M <= shrunk.hi; ++M) {
        auto it = sol.g_table.find(M);
        t.assign(M, it == sol.g_table.end() ? CoeffPoly{} : it->second);
    }
    return full_gg_check(t);
}

OddOperator descriptor_operator(const SolutionDescriptor& desc) {
    OddOperator op(desc.k, desc.window);
    for (const auto& [M, poly] : desc.g_table) op.set_g(M, poly);
    switch (desc.f_status.kind) {
        case FStatusKind::Zero:
            break;
        case FStatusKind::Free:
            for (int M = desc.window.lo; M <= desc.window.hi; ++M)
                op.set_f(M, CoeffPoly::c());
            break;
        case FStatusKind::Parametric:
            for (const auto& [M, v] : desc.f_status.basis.front())
                op.set_f(M, CoeffPoly::c(v));
            break;
    }
    return op;
}

ClassifyReport classify(int k, Window window) {
    ClassifyReport rep;
    rep.k = k;
    rep.window = window;

    const std::vector<GSolution> gsols = solve_g(k, window, &rep.prune_log);

    rep.oracle_window = {std::max(window.lo, -4), std::min(window.hi, 4)};
    const std::vector<GSolution> oracle = brute_force_solve_g(k, rep.oracle_window);
    const std::vector<GSolution> solver_small = solve_g(k, rep.oracle_window);
    rep.solver_oracle_agree = (oracle == solver_small);

    rep.all_reverified = true;
    for (const GSolution& gsol : gsols) {
        SolutionDescriptor desc;
        desc.k = k;
        desc.window = window;
        desc.g_table = gsol.g_table;
        desc.branch = gsol.branch;
        desc.f_status = solve_f(gsol);
        desc.matched = match_family(desc);
        desc.window_robust = wittrb::window_robust(gsol);
        desc.lemma_report = lemma_checks(gsol.to_operator());
        desc.reverified = sweep(descriptor_operator(desc)).pass();
        rep.all_reverified = rep.all_reverified && desc.reverified;
        rep.solutions.push_back(std::move(desc));
    }
    return rep;
}

} // namespace wittrb
