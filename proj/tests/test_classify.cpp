#include <doctest.h>

#include <set>

#include "wittrb/classify.hpp"
#include "wittrb/residual_report.hpp"

using namespace wittrb;

namespace {
CoeffPoly kc(long long num, long long den = 1) { return CoeffPoly::c(make_rational(num, den)); }

std::set<std::vector<int>> supports(const std::vector<GSolution>& sols) {
    std::set<std::vector<int>> out;
    for (const auto& s : sols) out.insert(s.support());
    return out;
}
} // namespace

TEST_CASE("build_family tables") {
    const OddOperator rat = build_family({FamilyTag::RationalInfinite, 3, {}}, {-6, 6});
    CHECK(rat.g_at(-2).is_zero());
    CHECK(rat.g_at(1) == kc(2, 3));
    CHECK(rat.g_at(-6) == kc(-1, 2));

    const OddOperator tp = build_family({FamilyTag::TwoPointFinite, 5, {}}, {-8, 8});
    CHECK(tp.g_at(0) == kc(1));
    CHECK(tp.g_at(-2) == kc(2));
    CHECK(tp.g_at(1).is_zero());

    const OddOperator d1 = build_family({FamilyTag::DeltaOneMinusK, 0, {}}, {-8, 8});
    CHECK(d1.g_at(1) == kc(1));
    CHECK(support_set(d1).J == std::vector<int>{1});
}

TEST_CASE("build_family rejects invalid parameters") {
    CHECK_THROWS_AS(build_family({FamilyTag::TwoPointFinite, 2, {}}, {-8, 8}),
                    InvalidParameters);
    CHECK_THROWS_AS(build_family({FamilyTag::TwoPointFinite, 1, {}}, {-8, 8}),
                    InvalidParameters);
    CHECK_THROWS_AS(build_family({FamilyTag::DeltaZeroK1, 3, {}}, {-8, 8}), InvalidParameters);
    CHECK_THROWS_AS(build_family({FamilyTag::RationalInfinite, 4, {}}, {-8, 8}),
                    InvalidParameters);
    // two-point support (1-k)/2 = -4 outside a narrow window
    CHECK_THROWS_AS(build_family({FamilyTag::TwoPointFinite, 9, {}}, {-2, 2}),
                    InvalidParameters);
    CHECK_THROWS_AS(build_family({FamilyTag::DeltaOneMinusK, 12, {}}, {-8, 8}),
                    InvalidParameters);
}

TEST_CASE("solve_g at k=1: only the trivial and delta_0 solutions") {
    const auto sols = solve_g(1, {-6, 6});
    REQUIRE(sols.size() == 2);
    CHECK(sols[0].support().empty());
    CHECK(sols[1].support() == std::vector<int>{0});
    CHECK(sols[1].g_table.at(0) == CoeffPoly::c());
    CHECK(sols[1].branch == "g0_nonzero");
}

TEST_CASE("solve_g at k=2 on [-6,6]: delta_{1-k} plus the g(0)!=0 solutions the "
          "rigidity lemma claims cannot exist") {
    const auto sols = solve_g(2, {-6, 6});
    const auto sup = supports(sols);
    CHECK(sup.count({}) == 1);
    CHECK(sup.count({-1}) == 1);       // delta_{1-k}
    CHECK(sup.count({0}) == 1);        // singleton delta_0, valid for every k
    CHECK(sup.count({-4, 0, 4}) == 1); // 4Z sublattice restriction
    CHECK(sup.count({-6, -3, 0, 3, 6}) == 1);
    CHECK(sup.count({-6, -4, -2, 0, 2, 4, 6}) == 1); // 2Z: pole -1 is odd
    // every solution re-verifies against the independent sweep
    for (const auto& s : sols) {
        OddOperator op = s.to_operator();
        CHECK(sweep(op).pass());
    }
}

TEST_CASE("solve_g at k=3 on [-8,8]: spec'd supports present, rational family absent") {
    const auto sols = solve_g(3, {-8, 8});
    const auto sup = supports(sols);
    CHECK(sup.count({}) == 1);
    CHECK(sup.count({-2}) == 1);
    CHECK(sup.count({-1, 0}) == 1);
    // the cofinite rational support fails (GG) at the pole-adjacent pair
    std::vector<int> cofinite;
    for (int M = -8; M <= 8; ++M)
        if (M != -2) cofinite.push_back(M);
    CHECK(sup.count(cofinite) == 0);
    // two-point value is forced to exactly 2c
    for (const auto& s : sols)
        if (s.support() == std::vector<int>{-1, 0}) {
            CHECK(s.g_table.at(0) == kc(1));
            CHECK(s.g_table.at(-1) == kc(2));
        }
    // sublattice restrictions: 3Z, 4Z, 5Z, ...; 2Z is excluded (pole -2 in 2Z)
    CHECK(sup.count({-5, 0, 5}) == 1);
    CHECK(sup.count({-6, -3, 0, 3, 6}) == 1);
    CHECK(sup.count({-8, -4, 0, 4, 8}) == 1);
    CHECK(sup.count({-8, -6, -4, -2, 0, 2, 4, 6, 8}) == 0);
    CHECK(sols.size() == 10);
}

TEST_CASE("solver matches the brute-force subset oracle") {
    for (int k : {0, 1, 2, 3, 5, -1}) {
        CAPTURE(k);
        CHECK(solve_g(k, {-4, 4}) == brute_force_solve_g(k, {-4, 4}));
        CHECK(solve_g(k, {-3, 3}) == brute_force_solve_g(k, {-3, 3}));
    }
}

TEST_CASE("solve_g preconditions") {
    CHECK_THROWS_AS(solve_g(1, {-3, 5}), InvalidParameters); // not symmetric
    CHECK_THROWS_AS(solve_g(1, {1, 3}), InvalidParameters);  // 0 not contained
}

TEST_CASE("solve_f: free for trivial g, zero for delta_0 at k=3") {
    GSolution trivial{3, {-8, 8}, {}, "g0_zero"};
    CHECK(solve_f(trivial).kind == FStatusKind::Free);

    GSolution d0{3, {-8, 8}, {{0, CoeffPoly::c()}}, "g0_nonzero"};
    CHECK(solve_f(d0).kind == FStatusKind::Zero);
}

TEST_CASE("solve_f: k=0 delta_1 yields the parametric family f(M) = (1-M)t") {
    GSolution d1{0, {-8, 8}, {{1, CoeffPoly::c()}}, "g0_zero"};
    const FStatus f = solve_f(d1);
    REQUIRE(f.kind == FStatusKind::Parametric);
    REQUIRE(f.basis.size() == 1);
    for (int M = -8; M <= 8; ++M) {
        const auto it = f.basis[0].find(M);
        const Rational v = it == f.basis[0].end() ? Rational(0) : it->second;
        CHECK(v == make_rational(1 - M));
    }
}

TEST_CASE("solve_f: k=3 delta_{-2} has the broken-chain parametric family") {
    // refutes the f-vanishing lemma at k=3: f = t(delta_{-1} - delta_{-3})
    GSolution d{3, {-8, 8}, {{-2, CoeffPoly::c()}}, "g0_zero"};
    const FStatus f = solve_f(d);
    REQUIRE(f.kind == FStatusKind::Parametric);
    REQUIRE(f.basis.size() == 1);
    CHECK(f.basis[0] == std::map<int, Rational>{{-3, make_rational(-1)}, {-1, make_rational(1)}});
    // and the full operator passes the complete sweep
    OddOperator op(3, {-8, 8});
    op.set_g(-2, CoeffPoly::c());
    op.set_f(-1, kc(1));
    op.set_f(-3, kc(-1));
    CHECK(sweep(op).pass());
}

TEST_CASE("solve_f: k=2 delta_{-1} forces f = 0") {
    GSolution d{2, {-8, 8}, {{-1, CoeffPoly::c()}}, "g0_zero"};
    CHECK(solve_f(d).kind == FStatusKind::Zero);
}

TEST_CASE("match_family") {
    const Window w{-8, 8};
    SolutionDescriptor d;
    d.window = w;

    d.k = 1;
    d.g_table = {{0, CoeffPoly::c()}};
    d.f_status.kind = FStatusKind::Zero;
    CHECK(match_family(d) == FamilyTag::DeltaZeroK1);

    d.k = 3;
    d.g_table = {{0, CoeffPoly::c()}, {-1, kc(2)}};
    CHECK(match_family(d) == FamilyTag::TwoPointFinite);

    d.g_table = {{0, CoeffPoly::c()}, {-1, kc(3)}}; // wrong ratio
    CHECK(!match_family(d).has_value());

    d.k = 0;
    d.g_table = {{1, CoeffPoly::c()}};
    d.f_status.kind = FStatusKind::Parametric;
    CHECK(!match_family(d).has_value()); // parametric f never matches a theorem family

    d.f_status.kind = FStatusKind::Zero;
    CHECK(match_family(d) == FamilyTag::DeltaOneMinusK);

    d.k = 3;
    d.g_table.clear();
    d.f_status.kind = FStatusKind::Free;
    CHECK(match_family(d) == FamilyTag::TrivialG);

    // scale invariance: c -> 7c/3 still matches
    d.k = 3;
    d.g_table = {{0, kc(7, 3)}, {-1, kc(14, 3)}};
    d.f_status.kind = FStatusKind::Zero;
    CHECK(match_family(d) == FamilyTag::TwoPointFinite);

    // rational shape matches only as the full cofinite table
    d.k = 3;
    d.g_table.clear();
    for (int M = -8; M <= 8; ++M)
        if (M != -2) d.g_table[M] = kc(2, M + 2);
    CHECK(match_family(d) == FamilyTag::RationalInfinite);
}

TEST_CASE("lemma_checks on the two-point family") {
    const OddOperator op = build_family({FamilyTag::TwoPointFinite, 3, {}}, {-8, 8});
    const LemmaCheckReport rep = lemma_checks(op);
    CHECK(rep.applicable);
    CHECK(rep.failures == 0);
    // m = -1 = (1-k)/2 is the excluded symmetry point
    bool saw_excluded = false;
    for (const auto& inst : rep.instances)
        if (inst.lemma == "symmetry" && inst.m == -1) {
            CHECK(inst.note == "skipped (m = (1-k)/2)");
            saw_excluded = true;
        }
    CHECK(saw_excluded);
    // propagation instance n=-1 in J, m=4 in I: m+n = 3 stays in I
    bool saw_prop = false;
    for (const auto& inst : rep.instances)
        if (inst.lemma == "propagation" && inst.n == -1 && inst.m == 4) {
            CHECK(inst.pass);
            saw_prop = true;
        }
    CHECK(saw_prop);
}

TEST_CASE("lemma_checks records the rational family's propagation failure") {
    const OddOperator op = build_family({FamilyTag::RationalInfinite, 3, {}}, {-8, 8});
    const LemmaCheckReport rep = lemma_checks(op);
    CHECK(rep.applicable);
    CHECK(rep.failures > 0);
    bool found = false;
    for (const auto& inst : rep.instances)
        if (inst.lemma == "propagation" && inst.n == 1 && inst.m == -2 && !inst.pass)
            found = true;
    CHECK(found); // m = -2 in I but m+n = -1 in J
}

TEST_CASE("lemma_checks not applicable when g(0) = 0 or k = 1") {
    CHECK(!lemma_checks(build_family({FamilyTag::DeltaOneMinusK, 3, {}}, {-8, 8})).applicable);
    CHECK(!lemma_checks(build_family({FamilyTag::DeltaZeroK1, 1, {}}, {-8, 8})).applicable);
}

TEST_CASE("window_robust separates interior supports from margin supports") {
    GSolution interior{3, {-8, 8}, {{0, CoeffPoly::c()}, {-1, kc(2)}}, "g0_nonzero"};
    CHECK(window_robust(interior));
    GSolution margin{3, {-8, 8},
                     {{0, CoeffPoly::c()}, {7, kc(2, 9)}, {-7, kc(-1, 2)}},
                     "g0_nonzero"};
    CHECK(!window_robust(margin)); // support touches the margin
}

TEST_CASE("classify k=3 on [-8,8]: full pipeline") {
    const ClassifyReport rep = classify(3, {-8, 8});
    CHECK(rep.solver_oracle_agree);
    CHECK(rep.all_reverified);
    CHECK(rep.solutions.size() == 10);

    int matched_trivial = 0, matched_twopoint = 0, robust_count = 0;
    for (const auto& d : rep.solutions) {
        if (d.matched == FamilyTag::TrivialG) ++matched_trivial;
        if (d.matched == FamilyTag::TwoPointFinite) ++matched_twopoint;
        if (d.window_robust) ++robust_count;
        CHECK(d.reverified);
    }
    CHECK(matched_trivial == 1);
    CHECK(matched_twopoint == 1);
    CHECK(robust_count == 7);
}

TEST_CASE("classify k=0: the mixed delta_1 discovery is robust and unmatched") {
    const ClassifyReport rep = classify(0, {-8, 8});
    bool found = false;
    for (const auto& d : rep.solutions) {
        if (d.support() != std::vector<int>{1}) continue;
        found = true;
        CHECK(d.f_status.kind == FStatusKind::Parametric);
        CHECK(!d.matched.has_value());
        CHECK(d.window_robust);
        CHECK(d.reverified);
    }
    CHECK(found);
}

TEST_CASE("family soundness: every named family passes its sweep") {
    for (int k : {-5, -3, -1, 1, 3, 5}) {
        CAPTURE(k);
        CHECK(sweep(build_family({FamilyTag::DeltaOneMinusK, k, {}}, {-12, 12})).pass());
        if (k != 1)
            CHECK(sweep(build_family({FamilyTag::TwoPointFinite, k, {}}, {-12, 12})).pass());
        FamilySpec trivial{FamilyTag::TrivialG, k, {}};
        for (int M = -12; M <= 12; ++M) trivial.f_table[M] = kc(M * M + 1, 3);
        CHECK(sweep(build_family(trivial, {-12, 12})).pass());
    }
    CHECK(sweep(build_family({FamilyTag::DeltaZeroK1, 1, {}}, {-12, 12})).pass());
}
