#pragma once

#include "wittrb/odd_operator.hpp"

namespace wittrb {

/// Self-contained replay blob: operator table + check descriptor + expected
/// result. `replay_check` recomputes and compares, so every failure report
/// carries its own reproduction recipe.
Json replay_blob_functional(const OddOperator& op, const FunctionalCheck& chk);

struct ReplayResult {
    bool matched = false;
    Json recomputed;
};
ReplayResult replay_check(const Json& blob);

Json sweep_to_json(const SweepReport& rep, bool include_all_tuples = true);
Json invertibility_to_json(const OddOperator& op, const InvertibilityReport& rep);

std::string sweep_to_text(const SweepReport& rep);

} // namespace wittrb
