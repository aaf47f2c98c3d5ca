#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "specscan/scan.hpp"
#include "specscan/spectra.hpp"

using namespace specscan;

namespace {

Graph random_graph(std::mt19937& rng, int n, double p) {
  Graph g(n);
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (coin(rng) < p) g.add_edge(u, v);
  return g;
}

}  // namespace

TEST_CASE("labeled enumeration counts and coverage") {
  CHECK(labeled_graph_count(1) == 1);
  CHECK(labeled_graph_count(3) == 8);
  CHECK(labeled_graph_count(5) == 1024);
  CHECK_THROWS_AS(labeled_graph_count(0), std::invalid_argument);
  CHECK_THROWS_AS(labeled_graph_count(9), std::invalid_argument);

  // Every n=4 graph appears exactly once.
  std::set<std::string> seen;
  for (long long idx = 0; idx < labeled_graph_count(4); ++idx)
    seen.insert(to_graph6(labeled_graph_from_index(4, idx)));
  CHECK(seen.size() == 64);
}

TEST_CASE("graph6 stream ingestion") {
  const Graph6Stream ok = ingest_graph6_stream(
      {"Dhc", "# comment", "", "A_", "D??"});
  CHECK(ok.graphs.size() == 3);
  CHECK(ok.bad_lines.empty());

  CHECK_THROWS_WITH_AS(
      (void)ingest_graph6_stream({"Dhc", "D?", "A_"}),
      doctest::Contains("line 2"), std::runtime_error);

  const Graph6Stream skipped =
      ingest_graph6_stream({"Dhc", "D?", "A_"}, true);
  CHECK(skipped.graphs.size() == 2);
  REQUIRE(skipped.bad_lines.size() == 1);
  CHECK(skipped.bad_lines[0].find("line 2") != std::string::npos);

  CHECK(ingest_graph6_stream({}).graphs.empty());
}

TEST_CASE("check token canonicalization") {
  CHECK(canonical_check_token("bn") == "bn=2");
  CHECK(canonical_check_token("bn=3") == "bn=3");
  CHECK(canonical_check_token("edge-bound") == "edge-bound=1");
  CHECK(canonical_check_token("aes") == "aes=2");
  CHECK(canonical_check_token("zls") == "zls=1");
  CHECK(canonical_check_token("tf-sum") == "tf-sum");
  CHECK_THROWS_AS(canonical_check_token("nope"), std::invalid_argument);
  CHECK_THROWS_AS(canonical_check_token("tf-sum=3"), std::invalid_argument);
  CHECK_THROWS_AS(canonical_check_token("bn=x"), std::invalid_argument);
}

TEST_CASE("filters agree with the structural predicates") {
  std::mt19937 rng(47);
  for (int rep = 0; rep < 10000; ++rep) {
    const int n = 1 + static_cast<int>(rng() % 8);
    const Graph g = random_graph(rng, n, 0.4);
    GraphContext ctx(g);
    CHECK(filter_matches("triangle-free", ctx) ==
          (triangle_count_direct(g) == 0));
    CHECK(filter_matches("non-bipartite", ctx) == !is_bipartite(g));
    CHECK(filter_matches("connected", ctx) == is_connected(g));
    const std::optional<int> og = odd_girth(g);
    CHECK(filter_matches("odd-girth-ge=5", ctx) == (og && *og >= 5));
    CHECK(filter_matches("clique-le=3", ctx) == (clique_number(g) <= 3));
  }
  const Graph k1(1);
  GraphContext ctx(k1);
  CHECK_THROWS_AS(filter_matches("bogus", ctx), std::invalid_argument);
  CHECK_THROWS_AS(validate_filter_token("odd-girth-ge"), std::invalid_argument);
  CHECK_THROWS_AS(validate_filter_token("bogus"), std::invalid_argument);
}

TEST_CASE("scan: triangle-free tf-sum at n=5 is violation-free") {
  ScanSpec spec;
  spec.order_lo = spec.order_hi = 5;
  spec.filters = {"triangle-free"};
  spec.checks = {"tf-sum"};
  const ScanReport r = run_scan(spec);
  CHECK(r.graphs_scanned == 388);
  const StatusTotals& t = r.totals.at("tf-sum");
  CHECK(t.violated == 0);
  CHECK(t.holds == 12);       // the labeled 5-cycles
  CHECK(t.equality == 376);   // all bipartite graphs on 5 vertices
  CHECK(t.holds + t.equality == r.graphs_scanned);
  CHECK(r.equality_cases.size() == 376);
  CHECK_FALSE(r.any_violation());
}

TEST_CASE("scan: classical bounds at n=5, no filter") {
  ScanSpec spec;
  spec.order_lo = spec.order_hi = 5;
  spec.checks = {"classical"};
  const ScanReport r = run_scan(spec);
  CHECK(r.graphs_scanned == 1024);
  CHECK(r.totals.at("classical").violated == 0);
}

TEST_CASE("scan: no non-bipartite triangle-free graphs below order 5") {
  ScanSpec spec;
  spec.order_lo = 1;
  spec.order_hi = 4;
  spec.filters = {"non-bipartite", "triangle-free"};
  spec.checks = {"erdos-size"};
  const ScanReport r = run_scan(spec);
  CHECK(r.graphs_scanned == 0);
  const StatusTotals& t = r.totals.at("erdos-size");
  CHECK(t.holds + t.equality + t.violated + t.not_applicable + t.candidates == 0);
}

TEST_CASE("scan determinism across worker counts") {
  ScanSpec spec;
  spec.order_lo = 3;
  spec.order_hi = 6;
  spec.filters = {"triangle-free"};
  spec.checks = {"tf-sum", "nosal", "erdos-size", "zls=1"};
  spec.jobs = 1;
  const ScanReport a = run_scan(spec);
  spec.jobs = 5;
  const ScanReport b = run_scan(spec);
  CHECK(report_to_json(a, false) == report_to_json(b, false));
  CHECK(a.graphs_scanned == b.graphs_scanned);
}

TEST_CASE("scan over a graph6 stream source") {
  ScanSpec spec;
  spec.source = ScanSpec::Source::Graph6Lines;
  spec.graph6_lines = {"Dhc", "A_", "# note", "D??"};
  spec.checks = {"classical", "efgw"};
  const ScanReport r = run_scan(spec);
  CHECK(r.graphs_scanned == 3);
  CHECK(r.totals.at("classical").violated == 0);
  // Dhc and A_ are connected; the empty graph is not.
  CHECK(r.totals.at("efgw").not_applicable == 1);
  CHECK(r.totals.at("efgw").holds == 2);

  const std::string json = report_to_json(r, false);
  CHECK(json.find("\"source\":\"graph6\"") != std::string::npos);
  CHECK(json.find("wall_ms") == std::string::npos);
  CHECK(report_to_json(r, true).find("wall_ms") != std::string::npos);
}

TEST_CASE("scan spec validation") {
  ScanSpec spec;
  spec.order_lo = 0;
  spec.order_hi = 3;
  spec.checks = {"tf-sum"};
  CHECK_THROWS_AS(run_scan(spec), std::invalid_argument);
  spec.order_lo = 1;
  spec.order_hi = 9;
  CHECK_THROWS_AS(run_scan(spec), std::invalid_argument);
  spec.order_hi = 3;
  spec.checks = {};
  CHECK_THROWS_AS(run_scan(spec), std::invalid_argument);
  spec.checks = {"tf-sum"};
  spec.filters = {"bogus"};
  CHECK_THROWS_AS(run_scan(spec), std::invalid_argument);
  spec.filters = {};
  spec.jobs = 0;
  CHECK_THROWS_AS(run_scan(spec), std::invalid_argument);
}

TEST_CASE("equality cases carry the permissive-reading flag") {
  ScanSpec spec;
  spec.source = ScanSpec::Source::Graph6Lines;
  // K_{2,2} (strict reading needs the isolated class: absent here) and
  // K_{1,2} plus an isolated vertex (exact).
  spec.graph6_lines = {to_graph6(complete_bipartite(2, 2)),
                       to_graph6(add_isolated(complete_bipartite(1, 2), 1))};
  spec.checks = {"tf-sum"};
  const ScanReport r = run_scan(spec);
  REQUIRE(r.equality_cases.size() == 2);
  int strict = 0, permissive = 0;
  for (const EqualityCase& e : r.equality_cases)
    (e.strict ? strict : permissive)++;
  CHECK(strict == 1);
  CHECK(permissive == 1);
}
