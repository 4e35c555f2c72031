#pragma once

#include <cstdint>
#include <string>

#include "symcensus/canonical.hpp"
#include "symcensus/constructions.hpp"
#include "symcensus/graph.hpp"
#include "symcensus/symmetry.hpp"

namespace symcensus {

enum class TriState { Yes, No, Inconclusive };

std::string to_string(TriState t);
TriState tristate_from_string(const std::string& s);

struct AnalysisOptions {
  RegularSearchOptions regular_search;  // bounds the Cayley decision
  SearchOptions search;                 // node budget for the automorphism engine
};

// One row of the census: everything the pipeline can certify about a graph.
// Orders are decimal strings; they overflow fixed-width integers well within
// the supported graph sizes.
struct AnalysisReport {
  std::string graph_id;
  std::string family;  // construction name when known, "" otherwise
  std::string params;  // "p=5 eps=2" style, "" when not applicable
  int n = 0;
  int m = 0;
  int valency = -1;  // -1 when irregular
  bool connected = false;
  bool bipartite = false;
  std::string aut_order;
  // Largest s with s-arc-transitivity; 0 when not arc-transitive or when the
  // level is undefined (irregular, valency < 3, or disconnected).
  int s = 0;
  bool vertex_transitive = false;
  bool edge_transitive = false;
  bool arc_transitive = false;
  bool one_regular = false;
  TriState cayley = TriState::Inconclusive;
  TriState normal_cayley = TriState::Inconclusive;
  std::string stabilizer_order;  // empty when not vertex-transitive
  // Stabilizer-table verdict for tetravalent arc-transitive graphs:
  // "consistent", "violated: ...", or "inapplicable".
  std::string validator;
};

// Full pipeline: automorphism group, transitivity flags, transitivity level,
// Cayley and normal-Cayley status. When `cay` is given (the graph came from
// cayley()/family() with its labeling) the Cayley questions are answered
// exactly against that group; otherwise a bounded regular-subgroup search
// decides them, reporting Inconclusive when a cap is hit. Internal identities
// (orbit-stabilizer, one-regular vs |Aut| = n*d, flag agreement between
// independent computations) are re-validated and violations throw.
AnalysisReport analyze(const Graph& g, const std::string& graph_id,
                       const CayleyGraph* cay = nullptr, const AnalysisOptions& options = {});

// One JSON object per line, fixed key order; round-trips through
// report_from_json_line exactly.
std::string to_json_line(const AnalysisReport& rep);
AnalysisReport report_from_json_line(const std::string& line);

// FNV-1a (64-bit); keys the census cache by graph file content.
std::uint64_t content_hash(const std::string& bytes);

}  // namespace symcensus
