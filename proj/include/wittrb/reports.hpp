#pragma once

#include <optional>

#include "wittrb/classify.hpp"
#include "wittrb/derivations.hpp"
#include "wittrb/general_operator.hpp"
#include "wittrb/residual_report.hpp"
#include "wittrb/structures.hpp"

namespace wittrb {

/// Subcommand output: machine report, human summary, process exit code
/// (0 = all verdicts pass, 1 = residual/claim failure, 2 = usage/load error
/// handled by the caller).
struct ReportResult {
    Json json;
    std::string text;
    int exit_code = 0;
};

Json classify_to_json(const ClassifyReport& rep);
Json fstatus_to_json(const FStatus& f);
Json structures_to_json(const StructuresReport& rep);
Json derivation_solve_to_json(const DerivationSolveReport& rep);

ReportResult report_sweep(const OddOperator& op, std::optional<Rational> c_eval,
                          bool include_all_tuples);
ReportResult report_verify_family(const FamilySpec& spec, Window window,
                                  std::optional<Rational> c_eval);
ReportResult report_verify_file(const Json& operator_json, std::optional<Rational> c_eval);
ReportResult report_classify(int k, Window window);
ReportResult report_examples(int which, const std::string& reading, Window window,
                             std::optional<Rational> c_eval);
ReportResult report_decompose_file(const Json& general_operator_json);
ReportResult report_decompose_search(Window window);
ReportResult report_structures(const OddOperator& op, bool check_naive_sign);
ReportResult report_derivations(int d_lo, int d_hi, Window window, bool odd_parity);
ReportResult report_figure_data(int k_lo, int k_hi, Window window);
ReportResult report_replay(const Json& blob);

/// Paper example audits: the operator tables of Examples 1 and 2 in the
/// literal and shifted-argument readings.
OddOperator example_operator(int which, bool literal, Window window);

} // namespace wittrb
