#pragma once

#include <optional>
#include <string>

#include "json.hpp"

#include "kalliance/bounds.hpp"
#include "kalliance/solver.hpp"
#include "kalliance/verifier.hpp"

namespace kalliance {

using ordered_json = nlohmann::ordered_json;

// Report rows are schema-stable: fixed keys in fixed order, witness lists
// sorted ascending, null for absent values. Identical inputs serialize to
// identical bytes.

ordered_json invariant_json(const InvariantResult& r, std::optional<double> elapsed_ms);
std::string invariant_human_line(const InvariantResult& r, const std::string& graph_label);

ordered_json bound_json(const BoundEvaluation& ev);
std::string bound_csv_header();
std::string bound_csv_row(const BoundEvaluation& ev);
std::string bound_human_line(const BoundEvaluation& ev, const std::string& graph_label);

ordered_json theorem_json(const TheoremReport& rep);
ordered_json corpus_run_json(const CorpusRunReport& rep);

}  // namespace kalliance
