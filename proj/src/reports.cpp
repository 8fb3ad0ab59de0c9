#include "wittrb/reports.hpp"

namespace wittrb {

namespace {

Element unit(const BasisVector& bv) { return Element(bv, CoeffPoly::constant(Rational(1))); }

Json envelope(const std::string& subcommand, Json config, Json report) {
    return Json{{"tool", "wittrb"},
                {"subcommand", subcommand},
                {"config", std::move(config)},
                {"report", std::move(report)}};
}

Json window_json(const Window& w) { return Json::array({w.lo, w.hi}); }

void add_c_eval(Json& sweep_json, const SweepReport& rep, const Rational& c) {
    sweep_json["c_eval"] = rational_str(c);
    Json evaluated = Json::array();
    for (const auto& chk : rep.checks)
        if (!chk.pass)
            evaluated.push_back(Json{{"eq", eq_name(chk.eq)},
                                     {"M", chk.M},
                                     {"N", chk.N},
                                     {"residual_at_c", rational_str(chk.residual.evaluate_at(c))}});
    sweep_json["failures_at_c"] = std::move(evaluated);
}

} // namespace

Json fstatus_to_json(const FStatus& f) {
    switch (f.kind) {
        case FStatusKind::Free: return Json{{"kind", "free"}};
        case FStatusKind::Zero: return Json{{"kind", "zero"}};
        case FStatusKind::Parametric: {
            Json basis = Json::array();
            for (const auto& vec : f.basis) {
                Json table = Json::object();
                for (const auto& [M, v] : vec) table[std::to_string(M)] = rational_str(v);
                basis.push_back(std::move(table));
            }
            return Json{{"kind", "parametric"}, {"parameter", "t"}, {"basis", std::move(basis)}};
        }
    }
    return {};
}

namespace {

Json lemma_report_json(const LemmaCheckReport& rep, bool include_instances) {
    Json j{{"applicable", rep.applicable}};
    if (!rep.applicable) return j;
    j["instances"] = rep.instances.size();
    j["failures"] = rep.failures;
    if (include_instances) {
        Json failing = Json::array();
        for (const auto& inst : rep.instances)
            if (!inst.pass)
                failing.push_back(Json{{"lemma", inst.lemma},
                                       {"n", inst.n},
                                       {"m", inst.m},
                                       {"note", inst.note}});
        j["failing_instances"] = std::move(failing);
    }
    return j;
}

Json descriptor_to_json(const SolutionDescriptor& desc) {
    Json g = Json::object();
    for (const auto& [M, poly] : desc.g_table) g[std::to_string(M)] = poly_to_json(poly);
    Json j{{"k", desc.k},
           {"window", window_json(desc.window)},
           {"branch", desc.branch},
           {"support", desc.support()},
           {"g", std::move(g)},
           {"f_status", fstatus_to_json(desc.f_status)},
           {"matched", desc.matched ? Json(family_name(*desc.matched)) : Json("unmatched")},
           {"window_robust", desc.window_robust},
           {"reverified", desc.reverified},
           {"lemma_checks", lemma_report_json(desc.lemma_report, true)}};
    return j;
}

} // namespace

Json classify_to_json(const ClassifyReport& rep) {
    Json sols = Json::array();
    for (const auto& desc : rep.solutions) sols.push_back(descriptor_to_json(desc));
    long prune_symmetry = 0, prune_propagation = 0;
    for (const auto& inst : rep.prune_log)
        (inst.lemma == "symmetry" ? prune_symmetry : prune_propagation) += 1;
    return Json{{"k", rep.k},
                {"window", window_json(rep.window)},
                {"solutions", std::move(sols)},
                {"oracle_window", window_json(rep.oracle_window)},
                {"solver_oracle_agree", rep.solver_oracle_agree},
                {"all_reverified", rep.all_reverified},
                {"prune_events",
                 Json{{"symmetry", prune_symmetry}, {"propagation", prune_propagation}}}};
}

ReportResult report_sweep(const OddOperator& op, std::optional<Rational> c_eval,
                          bool include_all_tuples) {
    const SweepReport rep = sweep(op);
    ReportResult res;
    res.json = sweep_to_json(rep, include_all_tuples);
    if (c_eval) add_c_eval(res.json, rep, *c_eval);
    res.text = sweep_to_text(rep);
    res.exit_code = rep.pass() ? 0 : 1;
    return res;
}

ReportResult report_verify_family(const FamilySpec& spec, Window window,
                                  std::optional<Rational> c_eval) {
    const OddOperator op = build_family(spec, window);
    ReportResult res = report_sweep(op, c_eval, false);
    res.json = envelope("verify-family",
                        Json{{"family", family_name(spec.tag)},
                             {"k", spec.k},
                             {"window", window_json(window)}},
                        std::move(res.json));
    res.text = std::string("family ") + family_name(spec.tag) + ": " + res.text;
    return res;
}

ReportResult report_verify_file(const Json& operator_json, std::optional<Rational> c_eval) {
    const OddOperator op = OddOperator::from_json(operator_json);
    ReportResult res = report_sweep(op, c_eval, false);
    res.json = envelope("verify-file", Json{{"k", op.shift()}}, std::move(res.json));
    return res;
}

ReportResult report_classify(int k, Window window) {
    const ClassifyReport rep = classify(k, window);
    ReportResult res;
    res.json = envelope("classify", Json{{"k", k}, {"window", window_json(window)}},
                        classify_to_json(rep));
    res.exit_code = rep.pass() ? 0 : 1;

    std::string text = "classify k=" + std::to_string(k) + " window=[" + window.str() + "]: " +
                       std::to_string(rep.solutions.size()) + " solution(s)\n";
    for (const auto& desc : rep.solutions) {
        text += "  support {";
        bool first = true;
        for (int M : desc.support()) {
            if (!first) text += ",";
            text += std::to_string(M);
            first = false;
        }
        text += "} f=" +
                std::string(desc.f_status.kind == FStatusKind::Free
                                ? "free"
                                : desc.f_status.kind == FStatusKind::Zero ? "zero" : "parametric") +
                " match=" + (desc.matched ? family_name(*desc.matched) : "unmatched") +
                (desc.window_robust ? " robust" : " boundary") +
                (desc.reverified ? " reverified" : " REVERIFY-FAILED") + "\n";
    }
    text += std::string("  solver==oracle on [") + rep.oracle_window.str() + "]: " +
            (rep.solver_oracle_agree ? "yes" : "NO") + "\n";
    res.text = std::move(text);
    return res;
}

OddOperator example_operator(int which, bool literal, Window window) {
    if (which == 1) {
        // R_1(G_n) = c delta_{n,0} L_{n+1}: stored g = c delta_{M,1} literally,
        // g = c delta_{M,0} in the shifted reading
        OddOperator op(1, window);
        op.set_g(literal ? 1 : 0, CoeffPoly::c());
        return op;
    }
    if (which == 2) {
        // R_3(G_n) = (2c/(n+2)) L_{n+3}, R_3(G_{-2}) = 0: stored pole at
        // M = 1 literally, at M = -2 in the shifted reading
        OddOperator op(3, window);
        const int pole = literal ? 1 : -2;
        for (int M = window.lo; M <= window.hi; ++M)
            if (M != pole) op.set_g(M, CoeffPoly::c(make_rational(2, M - pole)));
        return op;
    }
    throw InvalidParameters("example must be 1 or 2");
}

namespace {

Json audit_pair(const OddOperator& op, const BasisVector& x, const BasisVector& y) {
    const Element rx = op.apply(unit(x)), ry = op.apply(unit(y));
    const Element lhs = bracket(rx, ry);
    const Element rhs = op.apply(bracket(rx, unit(y)) + bracket(unit(x), ry));
    const Element residual = lhs - rhs;
    return Json{{"x", basis_to_json(x)},
                {"y", basis_to_json(y)},
                {"lhs", element_to_json(lhs)},
                {"rhs", element_to_json(rhs)},
                {"residual", element_to_json(residual)},
                {"pass", residual.is_zero()}};
}

Json audit_reading(int which, bool literal, Window window) {
    const OddOperator op = example_operator(which, literal, window);
    Json j{{"reading", literal ? "literal" : "shifted"}, {"operator", op.to_json()}};
    Json pairs = Json::array();
    if (which == 1) {
        pairs.push_back(audit_pair(op, G(0), G(0)));
        pairs.push_back(audit_pair(op, G(0), L(0)));
        pairs.push_back(audit_pair(op, G(0), G(-1)));
    } else {
        pairs.push_back(audit_pair(op, G(1), G(2)));
    }
    j["worked_pairs"] = std::move(pairs);
    const SweepReport rep = sweep(op);
    j["sweep"] = sweep_to_json(rep, false);
    return j;
}

} // namespace

ReportResult report_examples(int which, const std::string& reading, Window window,
                             std::optional<Rational> c_eval) {
    if (which != 1 && which != 2) throw InvalidParameters("example must be 1 or 2");
    if (reading != "literal" && reading != "shifted" && reading != "both")
        throw InvalidParameters("reading must be literal, shifted or both");

    Json readings = Json::array();
    bool any_fail = false;
    std::string text = "example " + std::to_string(which) + ":\n";
    for (const bool literal : {true, false}) {
        if ((literal && reading == "shifted") || (!literal && reading == "literal")) continue;
        Json audit = audit_reading(which, literal, window);
        const bool sweep_pass = audit["sweep"]["verdict"] == "pass";
        bool pairs_pass = true;
        for (const auto& p : audit["worked_pairs"]) pairs_pass = pairs_pass && p["pass"].get<bool>();
        any_fail = any_fail || !sweep_pass;
        text += std::string("  ") + (literal ? "literal" : "shifted") + ": worked pairs " +
                (pairs_pass ? "pass" : "FAIL") + ", full sweep " +
                (sweep_pass ? "pass" : "FAIL") + "\n";
        if (c_eval) {
            const OddOperator op = example_operator(which, literal, window);
            const SweepReport rep = sweep(op);
            add_c_eval(audit["sweep"], rep, *c_eval);
        }
        readings.push_back(std::move(audit));
    }
    ReportResult res;
    res.json = envelope("examples",
                        Json{{"which", which},
                             {"reading", reading},
                             {"window", window_json(window)}},
                        Json{{"readings", std::move(readings)}});
    res.text = std::move(text);
    res.exit_code = any_fail ? 1 : 0;
    return res;
}

ReportResult report_decompose_file(const Json& general_operator_json) {
    const GeneralOperator T = GeneralOperator::from_json(general_operator_json);
    const auto [even, odd] = split_parity(T);

    // reconstruction and projection identities, checked exactly
    bool reconstruction = true;
    for (int d = T.window().lo; d <= T.window().hi; ++d)
        for (const BasisVector bv : {L(d), G(d)})
            reconstruction =
                reconstruction && (even.image(bv) + odd.image(bv) == T.image(bv));

    bool projection_identity = true;
    long projection_checked = 0;
    for (int m = T.window().lo; m <= T.window().hi; ++m)
        for (const BasisVector x : {L(m), G(m)})
            for (int n = T.window().lo; n <= T.window().hi; ++n)
                for (const BasisVector y : {L(n), G(n)}) {
                    try {
                        const auto [p0, p1] = projected_rb_residuals(T, x, y);
                        const Element full = T.rb_residual(x, y);
                        ++projection_checked;
                        projection_identity = projection_identity && (p0 + p1 == full);
                    } catch (const Inadmissible&) {
                    } catch (const OutsideWindow&) {
                    }
                }

    const GeneralSweepReport full_rep = sweep_general(T);
    const GeneralSweepReport even_rep = sweep_general(even);
    const GeneralSweepReport odd_rep = sweep_general(odd);

    ReportResult res;
    Json j{{"window", window_json(T.window())},
           {"even_part", even.to_json()},
           {"odd_part", odd.to_json()},
           {"reconstruction_exact", reconstruction},
           {"projection_identity", Json{{"checked", projection_checked},
                                        {"pass", projection_identity}}},
           {"full_rb", full_rep.pass()},
           {"even_rb", even_rep.pass()},
           {"odd_rb", odd_rep.pass()}};
    res.json = envelope("decompose", Json{{"mode", "file"}}, std::move(j));
    const bool ok = reconstruction && projection_identity &&
                    (!full_rep.pass() || (even_rep.pass() && odd_rep.pass()));
    res.exit_code = ok ? 0 : 1;
    res.text = std::string("decompose: reconstruction ") + (reconstruction ? "pass" : "FAIL") +
               ", projection identity " + (projection_identity ? "pass" : "FAIL") + ", full RB " +
               (full_rep.pass() ? "pass" : "fail") + ", components RB " +
               (even_rep.pass() ? "even:pass" : "even:fail") + "/" +
               (odd_rep.pass() ? "odd:pass" : "odd:fail") + "\n";
    return res;
}

ReportResult report_decompose_search(Window window) {
    const ClaimSearchReport rep = componentwise_claim_search(builtin_claim_candidates(window));
    Json passers = Json::array();
    for (const auto& entry : rep.passers) {
        Json j{{"label", entry.label},
               {"even_rb", entry.even_rb},
               {"odd_rb", entry.odd_rb}};
        if (entry.counterexample) {
            j["failing_component"] = entry.failing_component;
            j["counterexample_pair"] = Json::array({basis_to_json(entry.counterexample->first),
                                                    basis_to_json(entry.counterexample->second)});
            j["operator"] = entry.operator_json;
        }
        passers.push_back(std::move(j));
    }
    ReportResult res;
    res.json = envelope("decompose",
                        Json{{"mode", "search"}, {"window", window_json(window)}},
                        Json{{"candidates", rep.candidates},
                             {"full_rb_passers", rep.full_rb_passers},
                             {"claim_holds_for_all", rep.claim_holds_for_all},
                             {"passers", std::move(passers)}});
    res.exit_code = rep.claim_holds_for_all ? 0 : 1;
    res.text = "claim search: " + std::to_string(rep.candidates) + " candidates, " +
               std::to_string(rep.full_rb_passers) + " full-RB passers, componentwise claim " +
               (rep.claim_holds_for_all ? "holds for all" : "FAILS") + "\n";
    return res;
}

namespace {

Json triple_json(const TripleCounterexample& t) {
    return Json{{"x", basis_to_json(t.x)},
                {"y", basis_to_json(t.y)},
                {"z", basis_to_json(t.z)},
                {"axiom", t.axiom},
                {"residual", element_to_json(t.residual)}};
}

} // namespace

Json structures_to_json(const StructuresReport& rep) {
    Json j{{"k", rep.k},
           {"window", window_json(rep.window)},
           {"sum_rule", Json{{"checked", rep.sum_rule_checked}, {"pass", rep.sum_rule_pass}}},
           {"chain_identity", Json{{"checked", rep.chain_checked}, {"pass", rep.chain_pass}}}};
    if (rep.chain_counterexample) j["chain_identity"]["counterexample"] = triple_json(*rep.chain_counterexample);
    Json dend = Json::array();
    for (int a = 0; a < 3; ++a) {
        Json axiom{{"axiom", a + 1}, {"pass", rep.dendriform_pass[a]}};
        if (rep.dendriform_counterexample[a])
            axiom["first_counterexample"] = triple_json(*rep.dendriform_counterexample[a]);
        dend.push_back(std::move(axiom));
    }
    j["dendriform_axioms"] = std::move(dend);
    j["dendriform_checked"] = rep.dendriform_checked;
    Json closed = Json::array();
    for (const auto& cmp : rep.closed_form) {
        Json c{{"formula", cmp.formula},
               {"source", cmp.source},
               {"applicable", cmp.applicable}};
        if (cmp.applicable) {
            c["checked"] = cmp.checked;
            c["verdict"] = cmp.agrees ? "agree" : "discrepancy";
            if (!cmp.agrees && cmp.gap_uniform) {
                c["gap_scalar"] = rational_str(*cmp.gap_scalar);
                c["gap_against"] = cmp.gap_against;
            }
        }
        closed.push_back(std::move(c));
    }
    j["closed_form"] = std::move(closed);
    if (rep.naive_sign_checked) {
        j["naive_sign_chain"] = Json{{"pass", rep.naive_sign_pass}};
        if (rep.naive_counterexample)
            j["naive_sign_chain"]["first_counterexample"] = triple_json(*rep.naive_counterexample);
    }
    return j;
}

ReportResult report_structures(const OddOperator& op, bool check_naive_sign) {
    const StructuresReport rep = structures_report(op, check_naive_sign);
    ReportResult res;
    res.json = envelope("structures", Json{{"k", op.shift()}}, structures_to_json(rep));
    res.exit_code = (rep.sum_rule_pass && rep.chain_pass) ? 0 : 1;
    res.text = "structures k=" + std::to_string(rep.k) + ": sum rule " +
               (rep.sum_rule_pass ? "pass" : "FAIL") + ", chain identity " +
               (rep.chain_pass ? "pass" : "FAIL") + ", dendriform axioms " +
               (rep.dendriform_pass[0] ? "1:pass" : "1:fail") + " " +
               (rep.dendriform_pass[1] ? "2:pass" : "2:fail") + " " +
               (rep.dendriform_pass[2] ? "3:pass" : "3:fail") + "\n";
    return res;
}

Json derivation_solve_to_json(const DerivationSolveReport& rep) {
    Json basis = Json::array();
    for (const auto& D : rep.basis) {
        const auto table_json = [](const std::map<int, CoeffPoly>& t) {
            Json j = Json::object();
            for (const auto& [m, v] : t) j[std::to_string(m)] = poly_to_json(v);
            return j;
        };
        Json d{{"lambda", table_json(D.lambda)},
               {"phi", table_json(D.phi)},
               {"beta", table_json(D.beta)},
               {"gamma", table_json(D.gamma)}};
        if (!rep.odd_parity) {
            const InnerMatch match = inner_match(D);
            d["inner_match"] =
                match.matched
                    ? Json{{"matched", true}, {"alpha", rational_str(match.alpha)}}
                    : Json{{"matched", false}, {"mismatch_at", basis_to_json(*match.mismatch)}};
        }
        basis.push_back(std::move(d));
    }
    return Json{{"degree", rep.degree},
                {"parity", rep.odd_parity ? "odd" : "even"},
                {"dimension", rep.dimension()},
                {"interior_pairs", rep.interior_pairs},
                {"unconstrained", rep.unconstrained},
                {"basis", std::move(basis)}};
}

ReportResult report_derivations(int d_lo, int d_hi, Window window, bool odd_parity) {
    Json degrees = Json::array();
    std::string text;
    for (int d = d_lo; d <= d_hi; ++d) {
        const DerivationSolveReport rep = solve_derivations(d, window, odd_parity);
        text += "degree " + std::to_string(d) + ": dimension " +
                std::to_string(rep.dimension());
        if (!odd_parity) {
            bool all_inner = !rep.basis.empty();
            for (const auto& D : rep.basis) all_inner = all_inner && inner_match(D).matched;
            text += all_inner ? " (all inner)" : " (contains non-inner)";
        }
        text += "\n";
        degrees.push_back(derivation_solve_to_json(rep));
    }
    ReportResult res;
    res.json = envelope("derivations",
                        Json{{"d_range", Json::array({d_lo, d_hi})},
                             {"window", window_json(window)},
                             {"parity", odd_parity ? "odd" : "even"}},
                        Json{{"degrees", std::move(degrees)}});
    res.text = std::move(text);
    return res;
}

ReportResult report_figure_data(int k_lo, int k_hi, Window window) {
    Json support_panel = Json::array();
    Json solution_panel = Json::array();
    for (int k = k_lo; k <= k_hi; ++k) {
        Json families = Json::array();
        const auto add_family = [&](FamilyTag tag) {
            try {
                const OddOperator op = build_family(FamilySpec{tag, k, {}}, window);
                families.push_back(
                    Json{{"family", family_name(tag)}, {"support", support_set(op).J}});
            } catch (const InvalidParameters&) {
            }
        };
        if (k == 1) {
            add_family(FamilyTag::DeltaZeroK1); // delta-one-minus-k coincides at k=1
        } else {
            add_family(FamilyTag::DeltaOneMinusK);
        }
        add_family(FamilyTag::TwoPointFinite);
        add_family(FamilyTag::RationalInfinite);
        support_panel.push_back(Json{{"k", k}, {"families", std::move(families)}});

        const ClassifyReport rep = classify(k, window);
        Json sols = Json::array();
        for (const auto& desc : rep.solutions)
            sols.push_back(Json{{"support", desc.support()},
                                {"branch", desc.branch},
                                {"matched",
                                 desc.matched ? Json(family_name(*desc.matched)) : Json("unmatched")},
                                {"window_robust", desc.window_robust}});
        solution_panel.push_back(Json{{"k", k}, {"solutions", std::move(sols)}});
    }

    Json derivation_panel = Json::array();
    for (int d = -3; d <= 3; ++d) {
        const DerivationSolveReport rep = solve_derivations(d, window);
        bool all_inner = !rep.basis.empty();
        for (const auto& D : rep.basis) all_inner = all_inner && inner_match(D).matched;
        derivation_panel.push_back(
            Json{{"degree", d}, {"dimension", rep.dimension()}, {"all_inner", all_inner}});
    }

    ReportResult res;
    res.json = envelope("figure-data",
                        Json{{"k_range", Json::array({k_lo, k_hi})},
                             {"window", window_json(window)}},
                        Json{{"family_supports", std::move(support_panel)},
                             {"solution_inventory", std::move(solution_panel)},
                             {"derivation_dimensions", std::move(derivation_panel)}});
    res.text = "figure-data emitted for k in [" + std::to_string(k_lo) + "," +
               std::to_string(k_hi) + "]\n";
    return res;
}

ReportResult report_replay(const Json& blob) {
    const ReplayResult rep = replay_check(blob);
    ReportResult res;
    res.json = envelope("replay", Json::object(),
                        Json{{"matched", rep.matched}, {"recomputed", rep.recomputed}});
    res.exit_code = rep.matched ? 0 : 1;
    res.text = std::string("replay: ") + (rep.matched ? "matched" : "MISMATCH") + "\n";
    return res;
}

} // namespace wittrb
