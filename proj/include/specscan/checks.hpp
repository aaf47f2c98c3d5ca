#pragma once

#include <optional>
#include <string>
#include <vector>

#include "specscan/graph.hpp"
#include "specscan/spectra.hpp"

namespace specscan {

// Strict inequalities are decided with this slack; equality cases are
// detected inside this window.
inline constexpr double kStrictSlack = 1e-9;
inline constexpr double kEqualityWindow = 1e-7;

enum class CheckStatus {
  Holds,
  EqualityExtremal,
  Violated,
  NotApplicable,
  ConjectureViolationCandidate,
};

const char* status_name(CheckStatus s);

// Verdict envelope shared by every checker. `lhs` and `rhs` are the two
// compared quantities with margin = rhs - lhs; for equality verdicts of
// theorems with a characterized extremal set, `family` names the recognized
// witness (and `exact_family` records whether the permissive blow-up reading
// was needed). `note` carries short human-readable detail.
struct CheckVerdict {
  std::string check_id;
  CheckStatus status = CheckStatus::NotApplicable;
  double lhs = 0.0, rhs = 0.0;
  std::optional<ExtremalFamily> family;
  bool exact_family = true;
  std::string note;

  double margin() const { return rhs - lhs; }
};

// Per-graph cache shared across checkers so that a scan computes each
// invariant (spectrum in particular) at most once per graph.
class GraphContext {
 public:
  explicit GraphContext(const Graph& g) : g_(g), m_(g.size()) {}
  explicit GraphContext(Graph&&) = delete;  // the graph must outlive the context

  const Graph& graph() const { return g_; }
  int n() const { return g_.order(); }
  long long m() const { return m_; }

  const Spectrum& spectrum();
  bool spectrum_computed() const { return spec_.has_value(); }
  long long triangles();
  bool bipartite();
  std::optional<int> oddgirth();
  int cliquenum();
  bool connected();

 private:
  const Graph& g_;
  long long m_;
  std::optional<Spectrum> spec_;
  std::optional<long long> tri_;
  std::optional<bool> bip_;
  std::optional<bool> conn_;
  bool og_done_ = false;
  std::optional<int> og_;
  std::optional<int> omega_;
};

// --- one checker per statement ------------------------------------------------

// lambda1^2 + lambda2^2 <= (r-1)/r * 2m for K_{r+1}-free graphs of order at
// least r+1. Proven for r=2 (with characterized extremal blow-ups); an open
// conjecture for r >= 3, where excess is reported as a candidate, never as a
// violation.
CheckVerdict check_bn_conjecture(GraphContext& ctx, int r);

// lambda1^2 + lambda2^2 <= m for triangle-free graphs of order >= 3;
// equality exactly on blow-ups of {P2+K1, 2P2+K1, P4+K1, P5+K1}.
CheckVerdict check_triangle_free_sum(GraphContext& ctx);

// lambda1 <= sqrt(m) for triangle-free graphs.
CheckVerdict check_nosal(GraphContext& ctx);

// lambda1^2 >= m forces a triangle unless the graph is a blow-up of P2+K1.
CheckVerdict check_nikiforov_sq(GraphContext& ctx);

// Non-bipartite with lambda1 >= sqrt(m-1) forces a triangle unless the graph
// is C5 plus isolated vertices.
CheckVerdict check_spectral_erdos_size(GraphContext& ctx);

// Non-bipartite with lambda1 >= lambda1(S(K_{floor((n-1)/2),ceil((n-1)/2)}))
// forces a triangle unless the graph is that subdivision itself.
CheckVerdict check_spectral_erdos_order(GraphContext& ctx);

// Non-bipartite with odd girth >= 2k+3: m <= ((n-(2k-1))/2)^2 + 2k-1,
// compared in exact integer arithmetic.
CheckVerdict check_erdos_edge_bound(GraphContext& ctx, int k);

// Contrapositive of the Andrasfai-Erdos-Sos bound: non-bipartite with odd
// girth >= 2k+1 forces (2k+1) * min_degree <= 2n. Meaningful for k >= 2;
// k=1 is accepted but the bound is genuinely false there (any large clique),
// so scans default to k=2.
CheckVerdict check_aes_lemma(GraphContext& ctx, int k);

// Subdividing an edge on an internal path strictly decreases lambda1 unless
// the graph is a Y-graph, where lambda1 stays exactly 2.
CheckVerdict check_hoffman_smith(const Graph& g, int u, int v);

// lambda1(S(K_{s+2,t+2})) > lambda1(S(K_{s+1,t+3})) for t >= s >= 1.
CheckVerdict check_prop_monotone(long long s, long long t);

// Among all splits s+t = n-5 with t >= s >= 1, the balanced part sizes
// uniquely maximize lambda1(S(K_{s+2,t+2})).
CheckVerdict check_prop_balanced(int n);

// Open conjecture: lambda1 >= lambda1(K_k joined to m/k-(k-1)/2 independent
// vertices) forces cycles of every length t <= 2k+2, unless the graph is
// that join. Shortfalls are candidates, never violations; small m is
// annotated as the below-threshold regime.
CheckVerdict check_zls(GraphContext& ctx, int k);

// Open conjecture: min(s+, s-) >= n-1 for connected graphs.
CheckVerdict check_efgw(GraphContext& ctx);

// Classical spectral-radius bounds: Stanley, Hong (no isolated vertices),
// Wilf, and the clique-number refinement of Stanley's bound.
std::vector<CheckVerdict> classical_bounds(GraphContext& ctx);
CheckVerdict classical_bounds_combined(GraphContext& ctx);

// Worst verdict over every internal-path edge of a connected graph; used by
// the scan harness.
CheckVerdict check_hoffman_smith_all_edges(GraphContext& ctx);

// True iff uv lies on an internal path (interior degrees 2, both endpoint
// degrees >= 3, possibly the same endpoint).
bool on_internal_path(const Graph& g, int u, int v);

}  // namespace specscan
