#include "wittrb/residual_report.hpp"

namespace wittrb {

namespace {

Json check_to_json(const FunctionalCheck& chk) {
    return Json{{"eq", eq_name(chk.eq)},
                {"M", chk.M},
                {"N", chk.N},
                {"residual", poly_to_json(chk.residual)},
                {"generator_pair", Json::array({basis_to_json(chk.gen_x), basis_to_json(chk.gen_y)})},
                {"rb_residual", element_to_json(chk.rb_residual)},
                {"cross_sign", chk.cross_sign},
                {"cross_consistent", chk.cross_ok},
                {"pass", chk.pass}};
}

} // namespace

Json replay_blob_functional(const OddOperator& op, const FunctionalCheck& chk) {
    return Json{{"operator", op.to_json()},
                {"check", Json{{"kind", eq_name(chk.eq)}, {"M", chk.M}, {"N", chk.N}}},
                {"expected", poly_to_json(chk.residual)},
                {"expected_rb", element_to_json(chk.rb_residual)}};
}

ReplayResult replay_check(const Json& blob) {
    const OddOperator op = OddOperator::from_json(blob.at("operator"));
    const Json& chk = blob.at("check");
    const std::string kind = chk.at("kind").get<std::string>();
    const int M = chk.at("M").get<int>(), N = chk.at("N").get<int>();
    CoeffPoly residual;
    if (kind == "LL")
        residual = op.residual_LL(M, N);
    else if (kind == "GG")
        residual = op.residual_GG(M, N);
    else if (kind == "LG")
        residual = op.residual_LG(M, N);
    else if (kind == "GL")
        residual = op.residual_GL(M, N);
    else if (kind == "fundamental")
        residual = op.fundamental_residual(M);
    else
        throw ParseError("unknown replay kind '" + kind + "'");

    ReplayResult res;
    res.recomputed = Json{{"residual", poly_to_json(residual)}};
    res.matched = (res.recomputed.at("residual") == blob.at("expected"));
    if (blob.contains("expected_rb") && kind != "fundamental") {
        const int k = op.shift();
        const int m = M - k, n = N - k;
        BasisVector x = L(m), y = L(n);
        if (kind == "GG") { x = G(m); y = G(n); }
        if (kind == "LG") { x = L(m); y = G(n); }
        if (kind == "GL") { x = G(m); y = L(n); }
        const Element rb = op.rb_residual(x, y);
        res.recomputed["rb_residual"] = element_to_json(rb);
        res.matched = res.matched && (res.recomputed.at("rb_residual") == blob.at("expected_rb"));
    }
    return res;
}

Json sweep_to_json(const SweepReport& rep, bool include_all_tuples) {
    Json j{{"k", rep.k},
           {"window", Json::array({rep.window.lo, rep.window.hi})},
           {"operator", rep.operator_table}};
    j["checked_count"] = rep.checks.size();
    j["skipped_inadmissible"] = rep.skipped;
    j["skip_reason"] = "inadmissible (index outside window)";
    j["internal_errors"] = rep.internal_errors;
    j["verdict"] = rep.pass() ? "pass" : "fail";

    Json failures = Json::array();
    for (const auto& chk : rep.checks)
        if (!chk.pass) failures.push_back(check_to_json(chk));
    j["failures"] = std::move(failures);

    if (const FunctionalCheck* first = rep.first_counterexample()) {
        j["first_counterexample"] = check_to_json(*first);
        const OddOperator op = OddOperator::from_json(rep.operator_table);
        j["first_counterexample"]["replay"] = replay_blob_functional(op, *first);
    }

    if (include_all_tuples) {
        Json tuples = Json::array();
        for (const auto& chk : rep.checks) tuples.push_back(check_to_json(chk));
        j["checked_tuples"] = std::move(tuples);
    }
    return j;
}

Json invertibility_to_json(const OddOperator& op, const InvertibilityReport& rep) {
    Json j{{"k", op.shift()},
           {"window", Json::array({op.window().lo, op.window().hi})},
           {"image", rep.image},
           {"parity_confined", rep.parity_confined}};
    if (rep.witness) {
        j["cokernel_witness"] = basis_to_json(*rep.witness);
        j["witness_attained"] = rep.witness_attained;
    }
    return j;
}

std::string sweep_to_text(const SweepReport& rep) {
    std::string out = "sweep k=" + std::to_string(rep.k) + " window=[" + rep.window.str() +
                      "]: " + (rep.pass() ? "pass" : "FAIL");
    out += " (checked=" + std::to_string(rep.checks.size()) +
           ", skipped=" + std::to_string(rep.skipped) +
           ", internal_errors=" + std::to_string(rep.internal_errors) + ")\n";
    if (const FunctionalCheck* first = rep.first_counterexample()) {
        out += "  first counterexample: " + std::string(eq_name(first->eq)) + "(" +
               std::to_string(first->M) + "," + std::to_string(first->N) +
               ") residual = " + first->residual.str() + "; generator pair (" +
               first->gen_x.str() + ", " + first->gen_y.str() +
               ") rb residual = " + first->rb_residual.str() + "\n";
    }
    return out;
}

} // namespace wittrb
