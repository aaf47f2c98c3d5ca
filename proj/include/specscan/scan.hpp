#pragma once

#include <map>
#include <string>
#include <vector>

#include "specscan/checks.hpp"
#include "specscan/graph.hpp"

namespace specscan {

// What to scan: either exhaustive labeled enumeration over an order range
// (hard-capped at n = 8) or a pre-read list of graph6 lines from an external
// generator. Filters and checks are comma-list tokens, documented in the
// README; `jobs` only affects scheduling, never the report content.
struct ScanSpec {
  enum class Source { Enumerate, Graph6Lines };
  Source source = Source::Enumerate;
  int order_lo = 1, order_hi = 1;
  std::vector<std::string> graph6_lines;
  std::vector<std::string> filters;
  std::vector<std::string> checks;
  int jobs = 1;
  bool skip_bad_lines = false;
};

struct StatusTotals {
  long long holds = 0;
  long long equality = 0;
  long long violated = 0;
  long long not_applicable = 0;
  long long candidates = 0;
};

struct EqualityCase {
  std::string graph6;
  std::string check;
  std::string family;  // empty when no family is claimed for the boundary
  bool strict = true;  // false when the permissive blow-up reading was used
};

struct ConjectureCandidate {
  std::string graph6;
  std::string check;
  double lhs = 0.0, rhs = 0.0;
  std::string spectrum;  // eigenvalue digest for audit
  std::string note;
};

struct ScanReport {
  ScanSpec spec;
  std::map<std::string, StatusTotals> totals;  // keyed by canonical check id
  std::vector<EqualityCase> equality_cases;
  std::vector<ConjectureCandidate> candidates;
  long long graphs_input = 0;    // records offered by the source
  long long graphs_scanned = 0;  // records that passed the filters
  long long borderline_eigenvalues = 0;  // near the zero threshold, stderr diagnostic
  long long wall_ms = 0;

  bool any_violation() const;
};

// All 2^(n(n-1)/2) labeled graphs on n vertices, in lexicographic
// edge-bitmask order (bit k is the k-th upper-triangle pair in graph6
// column-major order). 1 <= n <= 8.
long long labeled_graph_count(int n);
Graph labeled_graph_from_index(int n, unsigned long long index);

// Reads graph6 records, one per line; '#' lines and blank lines are skipped.
// A malformed line aborts with its line number unless skip_bad_lines is set,
// in which case it is recorded in `bad_lines`.
struct Graph6Stream {
  std::vector<Graph> graphs;
  std::vector<std::string> bad_lines;  // "line N: message"
};
Graph6Stream ingest_graph6_stream(const std::vector<std::string>& lines,
                                  bool skip_bad_lines = false);

// Canonical form of a check token ("bn" -> "bn=2", "edge-bound" ->
// "edge-bound=1", "aes" -> "aes=2", "zls" -> "zls=1"); throws on unknown ids.
std::string canonical_check_token(const std::string& token);

// Runs one parsed check against one graph.
CheckVerdict run_check(const std::string& canonical_token, GraphContext& ctx);

// Filter tokens: triangle-free, non-bipartite, connected, odd-girth-ge=N,
// clique-le=R. Throws on unknown tokens.
bool filter_matches(const std::string& token, GraphContext& ctx);
void validate_filter_token(const std::string& token);

// Evaluates every requested check on every graph passing the filters.
// Deterministic for any worker count: partial results are merged in chunk
// order and the case lists are sorted.
ScanReport run_scan(const ScanSpec& spec);

// JSON document with stable keys {spec, totals, equality_cases, candidates,
// wall_ms}. wall_ms is the only non-reproducible field; omit it (and obtain
// byte-identical output for identical specs) with include_timing = false.
std::string report_to_json(const ScanReport& report, bool include_timing = true);

}  // namespace specscan
