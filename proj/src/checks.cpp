#include "specscan/checks.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <string>

namespace specscan {

const char* status_name(CheckStatus s) {
  switch (s) {
    case CheckStatus::Holds: return "holds";
    case CheckStatus::EqualityExtremal: return "equality";
    case CheckStatus::Violated: return "violated";
    case CheckStatus::NotApplicable: return "not-applicable";
    case CheckStatus::ConjectureViolationCandidate: return "candidate";
  }
  return "?";
}

const Spectrum& GraphContext::spectrum() {
  if (!spec_) spec_ = spectrum_of(g_);
  return *spec_;
}

long long GraphContext::triangles() {
  if (!tri_) tri_ = triangle_count_direct(g_);
  return *tri_;
}

bool GraphContext::bipartite() {
  if (!bip_) bip_ = is_bipartite(g_);
  return *bip_;
}

std::optional<int> GraphContext::oddgirth() {
  if (!og_done_) {
    og_ = odd_girth(g_);
    og_done_ = true;
  }
  return og_;
}

int GraphContext::cliquenum() {
  if (!omega_) omega_ = clique_number(g_);
  return *omega_;
}

bool GraphContext::connected() {
  if (!conn_) conn_ = is_connected(g_);
  return *conn_;
}

namespace {

CheckVerdict not_applicable(std::string id, std::string why) {
  CheckVerdict v;
  v.check_id = std::move(id);
  v.status = CheckStatus::NotApplicable;
  v.note = std::move(why);
  return v;
}

bool is_g_blowup_family(ExtremalFamily f) {
  return f == ExtremalFamily::BlowupP2K1 || f == ExtremalFamily::Blowup2P2K1 ||
         f == ExtremalFamily::BlowupP4K1 || f == ExtremalFamily::BlowupP5K1;
}

}  // namespace

CheckVerdict check_bn_conjecture(GraphContext& ctx, int r) {
  if (r < 2) throw std::invalid_argument("check_bn_conjecture: need r >= 2");
  CheckVerdict v;
  v.check_id = "bn=" + std::to_string(r);
  if (ctx.n() < r + 1) return not_applicable(v.check_id, "order below r+1");
  if (ctx.cliquenum() > r)
    return not_applicable(v.check_id, "contains K_{r+1}");

  const Spectrum& s = ctx.spectrum();
  v.lhs = s.values[0] * s.values[0] + s.values[1] * s.values[1];
  v.rhs = static_cast<double>(r - 1) / r * 2.0 * static_cast<double>(ctx.m());

  if (v.margin() > kEqualityWindow) {
    v.status = CheckStatus::Holds;
    return v;
  }
  if (r == 2) {
    // Proven case: equality must land exactly on the characterized blow-ups.
    const Recognition rec = recognize_extremal(ctx.graph());
    if (std::fabs(v.margin()) < kEqualityWindow && rec.family &&
        is_g_blowup_family(*rec.family)) {
      v.status = CheckStatus::EqualityExtremal;
      v.family = rec.family;
      v.exact_family = rec.exact;
    } else {
      v.status = CheckStatus::Violated;
      v.note = v.margin() < -kStrictSlack
                   ? "inequality exceeded"
                   : "equality case not a recognized blow-up";
    }
    return v;
  }
  // Open conjecture for r >= 3: no extremal characterization is claimed.
  if (v.margin() > -kStrictSlack) {
    v.status = CheckStatus::EqualityExtremal;
    v.note = "boundary";
  } else {
    v.status = CheckStatus::ConjectureViolationCandidate;
  }
  return v;
}

CheckVerdict check_triangle_free_sum(GraphContext& ctx) {
  CheckVerdict v;
  v.check_id = "tf-sum";
  if (ctx.n() < 3) return not_applicable(v.check_id, "order below 3");
  if (ctx.triangles() > 0) return not_applicable(v.check_id, "has a triangle");

  const Spectrum& s = ctx.spectrum();
  v.lhs = s.values[0] * s.values[0] + s.values[1] * s.values[1];
  v.rhs = static_cast<double>(ctx.m());
  if (v.margin() > kEqualityWindow) {
    // The inequality holds strictly; a recognized blow-up here would break
    // the equality characterization in the other direction.
    const Recognition rec = recognize_extremal(ctx.graph());
    if (rec.family && is_g_blowup_family(*rec.family)) {
      v.status = CheckStatus::Violated;
      v.note = "recognized blow-up misses equality";
    } else {
      v.status = CheckStatus::Holds;
    }
    return v;
  }
  if (v.margin() < -kStrictSlack) {
    v.status = CheckStatus::Violated;
    v.note = "inequality exceeded";
    return v;
  }
  const Recognition rec = recognize_extremal(ctx.graph());
  if (rec.family && is_g_blowup_family(*rec.family)) {
    v.status = CheckStatus::EqualityExtremal;
    v.family = rec.family;
    v.exact_family = rec.exact;
  } else {
    v.status = CheckStatus::Violated;
    v.note = "equality case not a recognized blow-up";
  }
  return v;
}

CheckVerdict check_nosal(GraphContext& ctx) {
  CheckVerdict v;
  v.check_id = "nosal";
  if (ctx.triangles() > 0) return not_applicable(v.check_id, "has a triangle");
  v.lhs = ctx.spectrum().spectral_radius();
  v.rhs = std::sqrt(static_cast<double>(ctx.m()));
  if (v.margin() > kEqualityWindow) {
    v.status = CheckStatus::Holds;
    return v;
  }
  if (v.margin() < -kStrictSlack) {
    v.status = CheckStatus::Violated;
    return v;
  }
  const Recognition rec = recognize_extremal(ctx.graph());
  if (rec.family == ExtremalFamily::BlowupP2K1) {
    v.status = CheckStatus::EqualityExtremal;
    v.family = rec.family;
    v.exact_family = rec.exact;
  } else {
    v.status = CheckStatus::Violated;
    v.note = "equality case is not a blow-up of P2+K1";
  }
  return v;
}

CheckVerdict check_nikiforov_sq(GraphContext& ctx) {
  CheckVerdict v;
  v.check_id = "nik-sq";
  const Spectrum& s = ctx.spectrum();
  v.lhs = static_cast<double>(ctx.m());  // hypothesis: lambda1^2 >= m
  v.rhs = s.values.empty() ? 0.0 : s.values[0] * s.values[0];
  if (v.rhs < v.lhs - kEqualityWindow) {
    v.status = CheckStatus::Holds;
    v.note = "hypothesis not met";
    return v;
  }
  if (ctx.triangles() > 0) {
    v.status = CheckStatus::Holds;
    v.note = "triangle present";
    return v;
  }
  const Recognition rec = recognize_extremal(ctx.graph());
  if (rec.family == ExtremalFamily::BlowupP2K1) {
    v.status = CheckStatus::EqualityExtremal;
    v.family = rec.family;
    v.exact_family = rec.exact;
  } else {
    v.status = CheckStatus::Violated;
    v.note = "lambda1^2 >= m without triangle or P2+K1 blow-up";
  }
  return v;
}

CheckVerdict check_spectral_erdos_size(GraphContext& ctx) {
  CheckVerdict v;
  v.check_id = "erdos-size";
  if (ctx.bipartite()) return not_applicable(v.check_id, "bipartite");
  if (ctx.triangles() > 0) return not_applicable(v.check_id, "has a triangle");

  v.lhs = ctx.spectrum().spectral_radius();
  v.rhs = std::sqrt(static_cast<double>(ctx.m()) - 1.0);
  if (is_c5_plus_isolated(ctx.graph())) {
    v.family = ExtremalFamily::C5PlusIsolated;
    if (std::fabs(v.margin()) < kEqualityWindow) {
      v.status = CheckStatus::EqualityExtremal;
    } else {
      v.status = CheckStatus::Violated;
      v.note = "C5 does not sit on the boundary";
    }
    return v;
  }
  v.status = v.margin() > kEqualityWindow ? CheckStatus::Holds
                                          : CheckStatus::Violated;
  return v;
}

CheckVerdict check_spectral_erdos_order(GraphContext& ctx) {
  CheckVerdict v;
  v.check_id = "erdos-order";
  if (ctx.n() < 5) return not_applicable(v.check_id, "order below 5");
  if (ctx.bipartite()) return not_applicable(v.check_id, "bipartite");
  if (ctx.triangles() > 0) return not_applicable(v.check_id, "has a triangle");

  const int n = ctx.n();
  const int a = (n - 1) / 2, b = n - 1 - a;
  v.lhs = ctx.spectrum().spectral_radius();
  v.rhs = lambda1_subdivided_bipartite(a - 2, b - 2);
  if (is_subdivided_complete_bipartite(ctx.graph(), a, b)) {
    v.family = ExtremalFamily::SubdividedBalancedBipartite;
    if (std::fabs(v.margin()) < kEqualityWindow) {
      v.status = CheckStatus::EqualityExtremal;
    } else {
      v.status = CheckStatus::Violated;
      v.note = "extremal graph does not sit on the boundary";
    }
    return v;
  }
  v.status = v.margin() > kEqualityWindow ? CheckStatus::Holds
                                          : CheckStatus::Violated;
  return v;
}

CheckVerdict check_erdos_edge_bound(GraphContext& ctx, int k) {
  if (k < 1) throw std::invalid_argument("check_erdos_edge_bound: need k >= 1");
  CheckVerdict v;
  v.check_id = "edge-bound=" + std::to_string(k);
  if (ctx.bipartite()) return not_applicable(v.check_id, "bipartite");
  const std::optional<int> og = ctx.oddgirth();
  if (!og || *og < 2 * k + 3)
    return not_applicable(v.check_id, "odd girth below 2k+3");

  // 4m <= (n-(2k-1))^2 + 4(2k-1), exactly in integers.
  const long long n = ctx.n();
  const long long base = n - (2 * k - 1);
  const long long rhs4 = base * base + 4 * (2 * k - 1);
  const long long lhs4 = 4 * ctx.m();
  v.lhs = static_cast<double>(ctx.m());
  v.rhs = static_cast<double>(rhs4) / 4.0;
  if (lhs4 > rhs4) {
    v.status = CheckStatus::Violated;
    return v;
  }
  if (lhs4 == rhs4) {
    v.status = CheckStatus::EqualityExtremal;
    const Recognition rec = recognize_extremal(ctx.graph());
    if (rec.family) {
      v.family = rec.family;
      v.exact_family = rec.exact;
    } else {
      v.note = "boundary graph outside the characterized families";
    }
    return v;
  }
  v.status = CheckStatus::Holds;
  return v;
}

CheckVerdict check_aes_lemma(GraphContext& ctx, int k) {
  if (k < 1) throw std::invalid_argument("check_aes_lemma: need k >= 1");
  CheckVerdict v;
  v.check_id = "aes=" + std::to_string(k);
  if (ctx.bipartite()) return not_applicable(v.check_id, "bipartite");
  const std::optional<int> og = ctx.oddgirth();
  if (!og || *og < 2 * k + 1)
    return not_applicable(v.check_id, "odd girth below 2k+1");

  const long long delta = ctx.graph().min_degree();
  v.lhs = static_cast<double>(delta);
  v.rhs = 2.0 * ctx.n() / (2 * k + 1);
  v.status = ((2 * k + 1) * delta <= 2 * static_cast<long long>(ctx.n()))
                 ? CheckStatus::Holds
                 : CheckStatus::Violated;
  return v;
}

bool on_internal_path(const Graph& g, int u, int v) {
  if (!g.has_edge(u, v)) return false;
  // Walk away from the edge through degree-2 vertices; both directions must
  // reach a vertex of degree >= 3 (possibly the same one).
  auto reaches_hub = [&](int start, int from) {
    int cur = start, prev = from;
    for (int steps = 0; steps <= g.order(); ++steps) {
      const int d = g.degree(cur);
      if (d >= 3) return true;
      if (d <= 1) return false;
      const std::uint64_t next =
          g.neighbor_mask(cur) & ~(std::uint64_t{1} << prev);
      prev = cur;
      cur = std::countr_zero(next);
    }
    return false;  // walked around a cycle of degree-2 vertices
  };
  return reaches_hub(u, v) && reaches_hub(v, u);
}

CheckVerdict check_hoffman_smith(const Graph& g, int u, int v) {
  if (!g.has_edge(u, v))
    throw std::invalid_argument("check_hoffman_smith: uv is not an edge");
  if (!is_connected(g))
    throw std::invalid_argument("check_hoffman_smith: graph must be connected");
  CheckVerdict verdict;
  verdict.check_id = "hoffman-smith";
  if (!on_internal_path(g, u, v))
    return not_applicable(verdict.check_id, "edge not on an internal path");

  const double before = spectrum_of(g).spectral_radius();
  const double after = spectrum_of(subdivide_edge(g, u, v)).spectral_radius();
  verdict.lhs = after;
  verdict.rhs = before;
  if (is_y_graph(g)) {
    verdict.note = "y-graph";
    const bool pinned_at_two = std::fabs(before - 2.0) < kStrictSlack &&
                               std::fabs(after - 2.0) < kStrictSlack;
    verdict.status =
        pinned_at_two ? CheckStatus::Holds : CheckStatus::Violated;
    return verdict;
  }
  verdict.status = (before - after > kStrictSlack) ? CheckStatus::Holds
                                                   : CheckStatus::Violated;
  return verdict;
}

CheckVerdict check_hoffman_smith_all_edges(GraphContext& ctx) {
  CheckVerdict agg;
  agg.check_id = "hoffman-smith";
  if (!ctx.connected())
    return not_applicable(agg.check_id, "disconnected");
  bool any = false;
  agg.status = CheckStatus::Holds;
  const Graph& g = ctx.graph();
  bool done = false;
  g.for_each_edge([&](int u, int v) {
    if (done || !on_internal_path(g, u, v)) return;
    any = true;
    const CheckVerdict one = check_hoffman_smith(g, u, v);
    agg.lhs = one.lhs;
    agg.rhs = one.rhs;
    if (one.status == CheckStatus::Violated) {
      agg.status = CheckStatus::Violated;
      agg.note = "edge " + std::to_string(u) + "-" + std::to_string(v);
      done = true;
    }
  });
  if (!any) return not_applicable(agg.check_id, "no internal-path edge");
  return agg;
}

CheckVerdict check_prop_monotone(long long s, long long t) {
  if (s < 1 || t < s)
    throw std::invalid_argument("check_prop_monotone: need t >= s >= 1");
  CheckVerdict v;
  v.check_id = "prop-monotone";
  v.rhs = lambda1_subdivided_bipartite(s, t);
  v.lhs = lambda1_subdivided_bipartite(s - 1, t + 1);
  v.status =
      v.margin() > 1e-10 ? CheckStatus::Holds : CheckStatus::Violated;
  return v;
}

CheckVerdict check_prop_balanced(int n) {
  if (n < 7) throw std::invalid_argument("check_prop_balanced: need n >= 7");
  CheckVerdict v;
  v.check_id = "prop-balanced";
  const int sum = n - 5;
  const int s_balanced = sum / 2;
  double best = -1.0, second = -1.0;
  int best_s = -1;
  for (int s = 1; 2 * s <= sum; ++s) {
    const double root = lambda1_subdivided_bipartite(s, sum - s);
    if (root > best) {
      second = best;
      best = root;
      best_s = s;
    } else if (root > second) {
      second = root;
    }
  }
  v.lhs = second < 0.0 ? best : second;
  v.rhs = best;
  const bool unique = second < 0.0 || best - second > 1e-10;
  v.status = (best_s == s_balanced && unique) ? CheckStatus::Holds
                                              : CheckStatus::Violated;
  v.note = "maximizing parts (" + std::to_string(best_s + 2) + "," +
           std::to_string(sum - best_s + 2) + ")";
  return v;
}

CheckVerdict check_zls(GraphContext& ctx, int k) {
  if (k < 1 || k % 2 == 0)
    throw std::invalid_argument("check_zls: k must be odd and >= 1");
  CheckVerdict v;
  v.check_id = "zls=" + std::to_string(k);
  const long long m = ctx.m();
  if (m == 0) return not_applicable(v.check_id, "no edges");
  if (ctx.graph().min_degree() == 0)
    return not_applicable(v.check_id, "isolated vertex");
  if (m % k != 0) return not_applicable(v.check_id, "k does not divide m");
  const long long q = m / k - (k - 1) / 2;
  if (q < 1) return not_applicable(v.check_id, "size below k(k+1)/2");
  if (k + q > Graph::kMaxOrder)
    return not_applicable(v.check_id, "extremal graph too large");

  const Graph extremal = star_clique_join(k, static_cast<int>(q));
  v.lhs = ctx.spectrum().spectral_radius();
  v.rhs = spectrum_of(extremal).spectral_radius();
  const bool small_m = m < 10;
  if (v.lhs < v.rhs - kEqualityWindow) {
    v.status = CheckStatus::Holds;
    return v;
  }
  if (is_star_clique_join(ctx.graph(), k, static_cast<int>(q))) {
    v.status = CheckStatus::EqualityExtremal;
    v.family = ExtremalFamily::StarCliqueJoin;
    return v;
  }
  for (int t = 3; t <= 2 * k + 2; ++t) {
    if (t > ctx.n() || !has_cycle_of_length(ctx.graph(), t)) {
      v.status = CheckStatus::ConjectureViolationCandidate;
      v.note = "missing C_" + std::to_string(t) +
               (small_m ? " (below-threshold regime, m < 10)" : "");
      return v;
    }
  }
  v.status = CheckStatus::Holds;
  v.note = "all required cycles present";
  return v;
}

CheckVerdict check_efgw(GraphContext& ctx) {
  CheckVerdict v;
  v.check_id = "efgw";
  if (!ctx.connected()) return not_applicable(v.check_id, "disconnected");
  const Spectrum& s = ctx.spectrum();
  v.lhs = std::min(s.s_plus, s.s_minus);
  v.rhs = static_cast<double>(ctx.n() - 1);
  v.status = v.lhs >= v.rhs - kEqualityWindow
                 ? CheckStatus::Holds
                 : CheckStatus::ConjectureViolationCandidate;
  return v;
}

std::vector<CheckVerdict> classical_bounds(GraphContext& ctx) {
  std::vector<CheckVerdict> out;
  const double l1 = ctx.spectrum().spectral_radius();
  const double m = static_cast<double>(ctx.m());
  const double n = static_cast<double>(ctx.n());
  const int omega = ctx.cliquenum();

  auto bound = [&](const char* id, double rhs,
                   bool applicable = true,
                   const char* why = "") {
    CheckVerdict v;
    v.check_id = std::string("classical.") + id;
    if (!applicable) {
      v.status = CheckStatus::NotApplicable;
      v.note = why;
      return v;
    }
    v.lhs = l1;
    v.rhs = rhs;
    v.status = l1 <= rhs + kStrictSlack ? CheckStatus::Holds
                                        : CheckStatus::Violated;
    return v;
  };

  out.push_back(bound("stanley", 0.5 * (std::sqrt(8.0 * m + 1.0) - 1.0)));
  out.push_back(bound("hong", std::sqrt(std::max(0.0, 2.0 * m - n + 1.0)),
                      ctx.graph().min_degree() >= 1, "isolated vertex"));
  out.push_back(bound("wilf", (omega - 1.0) / omega * n));
  out.push_back(bound("nikiforov", std::sqrt(2.0 * (omega - 1.0) * m / omega)));
  return out;
}

CheckVerdict classical_bounds_combined(GraphContext& ctx) {
  CheckVerdict agg;
  agg.check_id = "classical";
  agg.status = CheckStatus::Holds;
  for (const CheckVerdict& v : classical_bounds(ctx)) {
    if (v.status == CheckStatus::Violated) {
      agg.status = CheckStatus::Violated;
      agg.lhs = v.lhs;
      agg.rhs = v.rhs;
      agg.note = v.check_id;
      return agg;
    }
  }
  agg.lhs = ctx.spectrum().spectral_radius();
  agg.rhs = agg.lhs;
  return agg;
}

}  // namespace specscan
