#include <doctest.h>

#include "wittrb/residual_report.hpp"

using namespace wittrb;

namespace {

CoeffPoly k(long long v) { return CoeffPoly::constant(make_rational(v)); }
CoeffPoly kc(long long num, long long den = 1) { return CoeffPoly::c(make_rational(num, den)); }
CoeffPoly kc2(long long num, long long den = 1) {
    return CoeffPoly::monomial(2, make_rational(num, den));
}
Element e(const BasisVector& bv, CoeffPoly coeff) { return Element(bv, std::move(coeff)); }

// g = c*delta_{M,0}, shift 1 (the k=1 finite-support family)
OddOperator delta_zero_k1(Window w = {-8, 8}) {
    OddOperator op(1, w);
    op.set_g(0, CoeffPoly::c());
    return op;
}

// literal Example 1 operator: R(G_0) = c L_1, all else 0 => stored g = c*delta_{M,1}
OddOperator example1_literal(Window w = {-8, 8}) {
    OddOperator op(1, w);
    op.set_g(1, CoeffPoly::c());
    return op;
}

// k=3 rational family: g(M) = 2c/(M+2), pole g(-2) = 0
OddOperator rational_k3(Window w = {-8, 8}) {
    OddOperator op(3, w);
    for (int M = w.lo; M <= w.hi; ++M)
        if (M != -2) op.set_g(M, CoeffPoly::c(make_rational(2, M + 2)));
    return op;
}

// k=3 two-point family: g = c(delta_0 + 2 delta_{-1})
OddOperator two_point_k3(Window w = {-8, 8}) {
    OddOperator op(3, w);
    op.set_g(0, CoeffPoly::c());
    op.set_g(-1, kc(2));
    return op;
}

// k=0 mixed family: g = c*delta_1, f(M) = (1-M)t (t realized in the same
// formal slot as c; every LL/LG/GL term is bilinear in (f,g))
OddOperator mixed_k0(Window w = {-8, 8}) {
    OddOperator op(0, w);
    op.set_g(1, CoeffPoly::c());
    for (int M = w.lo; M <= w.hi; ++M) op.set_f(M, kc(1 - M));
    return op;
}

} // namespace

TEST_CASE("apply in the canonical shifted convention") {
    const OddOperator op = delta_zero_k1();
    CHECK(op.apply(e(G(-1), k(1))) == e(L(0), CoeffPoly::c())); // g((-1)+1) = g(0) = c
    CHECK(op.apply(e(G(0), k(1))).is_zero());                   // g(1) = 0
    CHECK(op.apply(e(L(7), k(1))).is_zero());                   // f == 0
    CHECK(op.apply(e(G(-1), k(2)) + e(G(0), k(5))) == e(L(0), kc(2)));
}

TEST_CASE("apply distinguishes unknown from zero") {
    const OddOperator op = delta_zero_k1({-2, 2});
    CHECK_THROWS_AS(op.apply(e(L(2), k(1))), OutsideWindow); // needs f(3)
    CHECK_THROWS_AS(op.apply(e(G(-4), k(1))), OutsideWindow);
    CHECK_NOTHROW(op.apply(e(G(1), k(1))));
}

TEST_CASE("rb_residual: Example 1 checked pairs") {
    const OddOperator lit = example1_literal();
    CHECK(lit.rb_residual(G(0), G(0)).is_zero());
    CHECK(lit.rb_residual(G(0), L(0)).is_zero());
    // full identity fails one step away
    CHECK(lit.rb_residual(G(0), G(-1)) == e(L(1), -kc2(1)));
}

TEST_CASE("rb_residual: shifted k=1 family passes where the literal fails") {
    const OddOperator op = delta_zero_k1();
    CHECK(op.rb_residual(G(0), G(0)).is_zero());
    CHECK(op.rb_residual(G(0), G(-1)).is_zero());
    CHECK(op.rb_residual(G(-1), G(0)).is_zero());
}

TEST_CASE("rb_residual: k=3 rational family at the Example 2 pair") {
    const OddOperator op = rational_k3({-8, 12});
    CHECK(op.rb_residual(G(1), G(2)).is_zero());
    // left side alone is -(2/21) c^2 L_9
    const Element lhs = bracket(op.apply(e(G(1), k(1))), op.apply(e(G(2), k(1))));
    CHECK(lhs == e(L(9), kc2(-2, 21)));
}

TEST_CASE("rb_residual: k=3 rational family fails at the pole-adjacent pair") {
    const OddOperator op = rational_k3();
    CHECK(op.rb_residual(G(-5), G(-2)) == e(L(-1), kc2(20, 3)));
}

TEST_CASE("residual_LL examples") {
    const OddOperator zero_g(2, {-8, 8}); // g == 0, f == 0
    CHECK(zero_g.residual_LL(3, -1).is_zero());
    OddOperator fz(3, {-8, 8}); // case (ii): f == 0, g arbitrary
    fz.set_g(0, CoeffPoly::c());
    fz.set_g(-1, kc(2));
    CHECK(fz.residual_LL(2, 1).is_zero());
    CHECK(fz.residual_LL(-1, 1).is_zero());
    // k=0, g = c delta_1, f(M) = (1-M)t: (LL) at (2,-1) cancels
    CHECK(mixed_k0().residual_LL(2, -1).is_zero());
}

TEST_CASE("residual_GG examples") {
    const OddOperator tp = two_point_k3();
    for (int M = -4; M <= 4; ++M) CHECK(tp.residual_GG(M, M).is_zero());
    CHECK(tp.residual_GG(-1, 0).is_zero()); // LHS -2c^2 = RHS
    const OddOperator rat = rational_k3();
    CHECK(rat.residual_GG(-2, 1) == kc2(20, 3));
}

TEST_CASE("residual_LG examples") {
    OddOperator fz(1, {-8, 8});
    fz.set_g(0, CoeffPoly::c());
    CHECK(fz.residual_LG(3, 0).is_zero()); // f == 0
    OddOperator gz(1, {-8, 8});
    gz.set_f(2, k(5));
    CHECK(gz.residual_LG(2, 1).is_zero()); // g == 0
    CHECK(mixed_k0().residual_LG(3, 1).is_zero());
}

TEST_CASE("fundamental relation examples") {
    const OddOperator rat = rational_k3();
    CHECK(rat.fundamental_residual(1).is_zero()); // 3*(2c/3) - 2c
    OddOperator d1mk(3, {-8, 8});
    d1mk.set_g(-2, CoeffPoly::c()); // g = c delta_{1-k}
    CHECK(d1mk.fundamental_residual(-2).is_zero());
    OddOperator tp5(5, {-8, 8});
    tp5.set_g(0, CoeffPoly::c());
    tp5.set_g(-2, kc(2)); // (1-k)/2 = -2
    CHECK(tp5.fundamental_residual(-2).is_zero()); // (−2+4)(2c) − 4c
}

TEST_CASE("residuals are inadmissible outside the window") {
    const OddOperator op = delta_zero_k1({-4, 4});
    CHECK_THROWS_AS(op.residual_GG(3, 4), Inadmissible); // M+N = 7 outside
    CHECK_THROWS_AS(op.residual_LL(-4, -4), Inadmissible);
    // rb_residual throws only when an entry is genuinely needed
    CHECK_THROWS_AS(rational_k3({-4, 4}).rb_residual(G(0), G(1)), Inadmissible);
    CHECK_NOTHROW(delta_zero_k1({-4, 4}).rb_residual(G(2), G(2))); // zero tables short-circuit
}

TEST_CASE("sweep: k=1 delta_0 family passes on [-8,8]") {
    const SweepReport rep = sweep(delta_zero_k1());
    CHECK(rep.pass());
    CHECK(rep.internal_errors == 0);
    CHECK(rep.skipped > 0);
}

TEST_CASE("sweep: k=3 two-point family passes on [-8,8]") {
    const SweepReport rep = sweep(two_point_k3());
    CHECK(rep.pass());
    CHECK(rep.internal_errors == 0);
}

TEST_CASE("sweep: k=3 rational family fails first at GG(-2,1)") {
    const SweepReport rep = sweep(rational_k3());
    CHECK(!rep.pass());
    CHECK(rep.internal_errors == 0); // failure, not cross-inconsistency
    const FunctionalCheck* first = rep.first_counterexample();
    REQUIRE(first != nullptr);
    CHECK(first->eq == Eq::GG);
    CHECK(first->M == -2);
    CHECK(first->N == 1);
    CHECK(first->residual == kc2(20, 3));
    // the generator-pair route ties to the same identity
    CHECK(first->gen_x == G(-5));
    CHECK(first->gen_y == G(-2));
    CHECK(first->rb_residual == e(L(-1), kc2(20, 3)));
    CHECK(first->cross_ok);
}

TEST_CASE("sweep: singleton g = c delta_0 passes for every k, even k included") {
    for (int k2 : {-4, -2, 0, 1, 2, 3, 4}) {
        OddOperator op(k2, {-8, 8});
        op.set_g(0, CoeffPoly::c());
        const SweepReport rep = sweep(op);
        CAPTURE(k2);
        CHECK(rep.pass());
    }
}

TEST_CASE("cross-consistency holds across families (exact, with fixed signs)") {
    OddOperator trivial(2, {-6, 6});
    for (int M = -6; M <= 6; ++M) trivial.set_f(M, k(M * M - 3));
    for (const OddOperator& op :
         {delta_zero_k1({-6, 6}), two_point_k3({-6, 6}), rational_k3({-6, 6}),
          mixed_k0({-6, 6}), example1_literal({-6, 6}), trivial}) {
        const SweepReport rep = sweep(op);
        CHECK(rep.internal_errors == 0);
        for (const auto& chk : rep.checks) CHECK(chk.cross_ok);
    }
}

TEST_CASE("GG at N=0 reproduces -g(M) * fundamental_residual(M) symbolically") {
    // GG(M,0) = g(M)[(k-1)g(0) - (M+k-1)g(M)], so with both residuals oriented
    // LHS - RHS of their displayed equations the product carries a minus sign.
    for (const OddOperator& op : {delta_zero_k1(), two_point_k3(), rational_k3(),
                                  example1_literal(), mixed_k0()}) {
        for (int M = -8; M <= 8; ++M)
            CHECK(op.residual_GG(M, 0) == -(op.g_at(M) * op.fundamental_residual(M)));
    }
}

TEST_CASE("all residuals have degree <= 2 in c") {
    for (const OddOperator& op :
         {rational_k3(), mixed_k0(), example1_literal(), two_point_k3()}) {
        const SweepReport rep = sweep(op);
        for (const auto& chk : rep.checks) {
            CHECK(chk.residual.degree() <= 2);
            for (const auto& [bv, coeff] : chk.rb_residual.terms())
                CHECK(coeff.degree() <= 2);
        }
    }
}

TEST_CASE("verdict invariant under rescaling c -> lambda c") {
    // residuals scale by lambda or lambda^2, so the zero set is unchanged
    const OddOperator base = rational_k3();
    OddOperator scaled(3, base.window());
    for (int M = -8; M <= 8; ++M) scaled.set_g(M, make_rational(5, 7) * base.g_at(M));
    const SweepReport a = sweep(base), b = sweep(scaled);
    REQUIRE(a.checks.size() == b.checks.size());
    for (std::size_t i = 0; i < a.checks.size(); ++i)
        CHECK(a.checks[i].pass == b.checks[i].pass);
}

TEST_CASE("sweep enumeration: radius then lex, deterministic") {
    const SweepReport rep = sweep(delta_zero_k1({-2, 2}));
    REQUIRE(!rep.checks.empty());
    CHECK(rep.checks[0].M == 0);
    CHECK(rep.checks[0].N == 0);
    CHECK(rep.checks[0].eq == Eq::LL);
    int last_radius = 0;
    for (const auto& chk : rep.checks) {
        const int r = std::max({std::abs(chk.M), std::abs(chk.N), std::abs(chk.M + chk.N)});
        CHECK(r >= last_radius);
        last_radius = r;
    }
}

TEST_CASE("invertibility reports") {
    const OddOperator dz = delta_zero_k1();
    const InvertibilityReport a = invertibility_report(dz);
    CHECK(a.image == "even");
    CHECK(a.parity_confined);
    CHECK(*a.witness == G(0));
    CHECK(!a.witness_attained);

    OddOperator fonly(0, {-8, 8});
    for (int M = -8; M <= 8; ++M) fonly.set_f(M, k(1));
    const InvertibilityReport b = invertibility_report(fonly);
    CHECK(b.image == "odd");
    CHECK(*b.witness == L(0));
    CHECK(!b.witness_attained);

    const OddOperator zero(4, {-8, 8});
    const InvertibilityReport z = invertibility_report(zero);
    CHECK(z.image == "zero");
    CHECK(z.witness.has_value());
    CHECK(!z.witness_attained);
}

TEST_CASE("operator table JSON: round trip, defaults, out-of-window rejection") {
    const OddOperator op = two_point_k3();
    const Json j = op.to_json();
    const OddOperator back = OddOperator::from_json(j);
    CHECK(back.shift() == 3);
    CHECK(back.window() == op.window());
    for (int M = -8; M <= 8; ++M) {
        CHECK(back.g_at(M) == op.g_at(M));
        CHECK(back.f_at(M) == op.f_at(M));
    }
    // missing keys inside the window default to the zero polynomial
    const Json sparse = Json::parse(R"({"k":1,"window":[-2,2],"g":{"0":["0","1"]}})");
    const OddOperator sp = OddOperator::from_json(sparse);
    CHECK(sp.g_at(0) == CoeffPoly::c());
    CHECK(sp.g_at(1).is_zero());
    CHECK(sp.f_at(-2).is_zero());
    // indices outside the window are rejected at load
    const Json bad = Json::parse(R"({"k":1,"window":[-2,2],"g":{"5":["1"]}})");
    CHECK_THROWS_AS(OddOperator::from_json(bad), ParseError);
}

TEST_CASE("replay blob reproduces the recorded residual") {
    const SweepReport rep = sweep(rational_k3());
    const FunctionalCheck* first = rep.first_counterexample();
    REQUIRE(first != nullptr);
    const Json blob = replay_blob_functional(rational_k3(), *first);
    const ReplayResult res = replay_check(blob);
    CHECK(res.matched);
    Json tampered = blob;
    tampered["expected"] = poly_to_json(CoeffPoly::c());
    CHECK(!replay_check(tampered).matched);
}
