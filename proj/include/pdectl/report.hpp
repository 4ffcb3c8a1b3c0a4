#pragma once

// Text and JSON renderings. Polynomials are written as canonical strings over
// the report's variable names, so JSON reports parse back losslessly.

#include <string>
#include <vector>

#include <json.hpp>

#include "pdectl/behavior.hpp"
#include "pdectl/derham.hpp"
#include "pdectl/genericity.hpp"

namespace pdectl {

using Json = nlohmann::ordered_json;

/// "CONTROLLABLE", "NOT CONTROLLABLE" or "UNDECIDABLE".
std::string verdict(const AnalysisReport& r);

std::string render_text(const AnalysisReport& r);
Json to_json(const AnalysisReport& r);
AnalysisReport analysis_from_json(const Json& j);

std::string render_text(const FrequencyReport& r);
Json to_json(const FrequencyReport& r);
FrequencyReport frequency_from_json(const Json& j);

std::string render_decomposition_text(const AnalysisReport& r);
Json decomposition_json(const AnalysisReport& r);

std::string render_potential_text(const AnalysisReport& r);
Json potential_json(const AnalysisReport& r);

std::string render_closure_text(const AnalysisReport& r);
Json closure_json(const AnalysisReport& r);

struct EliminationResult {
  PolyMatrix matrix;
  std::vector<std::string> variables;
  SignalSpace space = SignalSpace::Dprime;
  std::size_t keep = 0;
  Submodule projected = Submodule::zero(0, 0);
};
std::string render_text(const EliminationResult& r);
Json to_json(const EliminationResult& r);

struct PbhResult {
  RationalMatrix x;
  RationalMatrix u;
  PolyMatrix matrix;
  bool controllable = false;
  bool torsion_free = false;  // the D' test on the same matrix
  Ideal minors = Ideal::zero(1);
};
PbhResult run_pbh(const RationalMatrix& x, const RationalMatrix& u);
std::string render_text(const PbhResult& r);
Json to_json(const PbhResult& r);

std::string render_text(const std::vector<NamedCheck>& checks);
Json to_json(const std::vector<NamedCheck>& checks);

/// Reads a rational matrix written as JSON, e.g. [[0,1],[0,"1/2"]].
RationalMatrix parse_rational_matrix(std::string_view text);

}  // namespace pdectl
