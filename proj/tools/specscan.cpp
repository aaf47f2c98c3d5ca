// Command-line front door: spectra, constructors, theorem checks, scans,
// majorization utilities. Exit codes: 0 clean, 1 proven-theorem violation
// found, 2 usage or input error.

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <span>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "specscan/checks.hpp"
#include "specscan/graph.hpp"
#include "specscan/majorization.hpp"
#include "specscan/scan.hpp"
#include "specscan/spectra.hpp"

namespace {

using namespace specscan;

std::string fmt12(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

std::vector<std::string> split_csv(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == ',') {
      if (!cur.empty()) out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

std::vector<int> parse_int_list(const std::string& s, const char* what) {
  std::vector<int> out;
  for (const std::string& tok : split_csv(s)) {
    try {
      out.push_back(std::stoi(tok));
    } catch (const std::exception&) {
      throw std::invalid_argument(std::string(what) + ": bad integer '" + tok + "'");
    }
  }
  if (out.empty()) throw std::invalid_argument(std::string(what) + ": empty list");
  return out;
}

std::vector<double> parse_double_list(const std::string& s, const char* what) {
  std::vector<double> out;
  for (const std::string& tok : split_csv(s)) {
    try {
      out.push_back(std::stod(tok));
    } catch (const std::exception&) {
      throw std::invalid_argument(std::string(what) + ": bad number '" + tok + "'");
    }
  }
  if (out.empty()) throw std::invalid_argument(std::string(what) + ": empty list");
  return out;
}

std::vector<std::string> read_lines(const std::string& path) {
  std::vector<std::string> lines;
  std::string line;
  if (path == "-") {
    while (std::getline(std::cin, line)) lines.push_back(line);
    return lines;
  }
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open file: " + path);
  while (std::getline(in, line)) lines.push_back(line);
  return lines;
}

void print_spectrum_text(const std::string& g6, const Graph& g,
                         const Spectrum& s) {
  std::printf("graph6: %s\n", g6.c_str());
  std::printf("n: %d\nm: %d\n", g.order(), g.size());
  std::printf("eigenvalues:");
  for (double v : s.values) std::printf(" %s", fmt12(v).c_str());
  std::printf("\ninertia: (%d, %d, %d)\n", s.n_pos, s.n_neg, s.n_zero);
  std::printf("s_plus: %s\ns_minus: %s\n", fmt12(s.s_plus).c_str(),
              fmt12(s.s_minus).c_str());
  std::printf("rank: %d\n", s.rank);
  std::printf("triangles_trace: %lld\n", triangle_count_trace(s));
  std::printf("triangles_direct: %lld\n", triangle_count_direct(g));
}

void print_spectrum_json(std::string& out, const std::string& g6,
                         const Graph& g, const Spectrum& s) {
  out += "{\"graph6\":\"" + g6 + "\",\"n\":" + std::to_string(g.order()) +
         ",\"m\":" + std::to_string(g.size()) + ",\"eigenvalues\":[";
  for (size_t i = 0; i < s.values.size(); ++i) {
    if (i) out += ',';
    out += fmt12(s.values[i]);
  }
  out += "],\"inertia\":[" + std::to_string(s.n_pos) + "," +
         std::to_string(s.n_neg) + "," + std::to_string(s.n_zero) + "]" +
         ",\"s_plus\":" + fmt12(s.s_plus) + ",\"s_minus\":" + fmt12(s.s_minus) +
         ",\"rank\":" + std::to_string(s.rank) +
         ",\"triangles_trace\":" + std::to_string(triangle_count_trace(s)) +
         ",\"triangles_direct\":" + std::to_string(triangle_count_direct(g)) +
         "}";
}

int cmd_spectrum(const std::string& graph_arg, const std::string& file_arg,
                 const std::string& format, double tau0) {
  std::vector<std::string> records;
  if (!graph_arg.empty()) records.push_back(graph_arg);
  if (!file_arg.empty())
    for (const std::string& l : read_lines(file_arg)) records.push_back(l);
  if (records.empty())
    throw std::invalid_argument("spectrum: need --graph or --file");

  Graph6Stream in = ingest_graph6_stream(records, false);
  std::string json = "[";
  bool first = true;
  for (const Graph& g : in.graphs) {
    const Spectrum s = spectrum_of(g, tau0);
    const std::string g6 = to_graph6(g);
    if (s.borderline > 0)
      std::fprintf(stderr,
                   "specscan: %s has %d eigenvalue(s) near the zero threshold\n",
                   g6.c_str(), s.borderline);
    if (format == "json") {
      if (!first) json += ',';
      print_spectrum_json(json, g6, g, s);
      first = false;
    } else {
      if (!first) std::printf("\n");
      print_spectrum_text(g6, g, s);
      first = false;
    }
  }
  if (format == "json") {
    json += "]";
    if (in.graphs.size() == 1 && !graph_arg.empty())
      json = json.substr(1, json.size() - 2);  // single object for --graph
    std::printf("%s\n", json.c_str());
  }
  return 0;
}

int cmd_check(const std::string& check_id, const std::string& graphs_path,
              const std::string& format, bool skip_bad) {
  const std::string token = canonical_check_token(check_id);
  if (format == "json") {
    ScanSpec spec;
    spec.source = ScanSpec::Source::Graph6Lines;
    spec.graph6_lines = read_lines(graphs_path);
    spec.checks = {token};
    spec.skip_bad_lines = skip_bad;
    const ScanReport report = run_scan(spec);
    std::printf("%s\n", report_to_json(report).c_str());
    return report.any_violation() ? 1 : 0;
  }
  Graph6Stream in = ingest_graph6_stream(read_lines(graphs_path), skip_bad);
  for (const std::string& bad : in.bad_lines)
    std::fprintf(stderr, "specscan: skipped %s\n", bad.c_str());
  StatusTotals totals;
  for (const Graph& g : in.graphs) {
    GraphContext ctx(g);
    const CheckVerdict v = run_check(token, ctx);
    std::string line = to_graph6(g) + "\t" + v.check_id + "\t" +
                       status_name(v.status) + "\tlhs=" + fmt12(v.lhs) +
                       "\trhs=" + fmt12(v.rhs);
    if (v.family) line += std::string("\tfamily=") + family_name(*v.family);
    if (!v.note.empty()) line += "\tnote=" + v.note;
    std::printf("%s\n", line.c_str());
    switch (v.status) {
      case CheckStatus::Holds: ++totals.holds; break;
      case CheckStatus::EqualityExtremal: ++totals.equality; break;
      case CheckStatus::Violated: ++totals.violated; break;
      case CheckStatus::NotApplicable: ++totals.not_applicable; break;
      case CheckStatus::ConjectureViolationCandidate: ++totals.candidates; break;
    }
  }
  std::printf("# holds=%lld equality=%lld violated=%lld not-applicable=%lld candidates=%lld\n",
              totals.holds, totals.equality, totals.violated,
              totals.not_applicable, totals.candidates);
  return totals.violated > 0 ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"spectral small-graph inequality scanner"};
  app.require_subcommand(1);

  // spectrum
  auto* sp = app.add_subcommand("spectrum", "adjacency spectrum and derived data");
  std::string sp_graph, sp_file, sp_format = "text";
  double sp_tau0 = 0.0;
  sp->add_option("--graph", sp_graph, "inline graph6 record");
  sp->add_option("--file", sp_file, "file of graph6 records, - for stdin");
  sp->add_option("--format", sp_format, "text|json")
      ->check(CLI::IsMember({"text", "json"}));
  sp->add_option("--tau0", sp_tau0, "zero-classification tolerance override");

  // construct
  auto* co = app.add_subcommand("construct", "emit a named graph as graph6");
  std::string co_blowup, co_sizes, co_skst, co_star, co_kbip;
  int co_cycle = 0, co_path = 0, co_yn = 0;
  co->add_option("--blowup", co_blowup, "base graph6 record");
  co->add_option("--sizes", co_sizes, "per-vertex blow-up sizes a,b,...");
  co->add_option("--skst", co_skst, "s,t for subdivided K_{s+2,t+2}");
  co->add_option("--star-clique", co_star, "k,q for K_k joined to q vertices");
  co->add_option("--kbip", co_kbip, "a,b for complete bipartite");
  co->add_option("--cycle", co_cycle, "cycle length");
  co->add_option("--path", co_path, "path order");
  co->add_option("--yn", co_yn, "Y-graph order (>= 6)");

  // check
  auto* ch = app.add_subcommand("check", "run one check over a graph6 stream");
  std::string ch_id, ch_graphs = "-", ch_format = "text";
  bool ch_skip = false;
  ch->add_option("--check", ch_id, "check id")->required();
  ch->add_option("--graphs", ch_graphs, "file of graph6 records, - for stdin");
  ch->add_option("--format", ch_format, "text|json")
      ->check(CLI::IsMember({"text", "json"}));
  ch->add_flag("--skip-bad-lines", ch_skip, "log malformed lines and continue");

  // scan
  auto* sc = app.add_subcommand("scan", "filtered scan with aggregated report");
  int sc_order = 0, sc_jobs = 1;
  std::string sc_orders, sc_graphs, sc_filters, sc_checks, sc_format = "json";
  bool sc_skip = false, sc_no_timing = false;
  sc->add_option("--order", sc_order, "exhaustive enumeration order (1..8)");
  sc->add_option("--orders", sc_orders, "order range A..B");
  sc->add_option("--graphs", sc_graphs, "graph6 file source, - for stdin");
  sc->add_option("--filters", sc_filters, "comma list of filters");
  sc->add_option("--checks", sc_checks, "comma list of check ids")->required();
  sc->add_option("--jobs", sc_jobs, "worker threads");
  sc->add_option("--format", sc_format, "json|text")
      ->check(CLI::IsMember({"text", "json"}));
  sc->add_flag("--skip-bad-lines", sc_skip, "log malformed lines and continue");
  sc->add_flag("--no-timing", sc_no_timing,
               "omit wall_ms for byte-reproducible output");

  // majorize
  auto* ma = app.add_subcommand("majorize", "weak-majorization certificate");
  std::string ma_x, ma_y;
  double ma_p = 1.5;
  ma->add_option("--x", ma_x, "dominating vector a,b,...")->required();
  ma->add_option("--y", ma_y, "dominated vector c,d,...")->required();
  ma->add_option("--p", ma_p, "norm exponent p > 1");

  // decompose
  auto* de = app.add_subcommand("decompose",
                                "doubly substochastic -> weak permutations");
  std::string de_matrix;
  de->add_option("--matrix", de_matrix, "matrix file (n, then n*n entries)")
      ->required();

  // lambda1-skst
  auto* la = app.add_subcommand("lambda1-skst",
                                "largest root for subdivided K_{s+2,t+2}");
  long long la_s = 0, la_t = 0;
  double la_tol = 1e-12;
  la->add_option("--s", la_s, "s >= 0")->required();
  la->add_option("--t", la_t, "t >= 0")->required();
  la->add_option("--tol", la_tol, "bisection width");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::fprintf(stderr, "specscan: %s\n", e.what());
    return 2;
  }

  try {
    if (sp->parsed()) return cmd_spectrum(sp_graph, sp_file, sp_format, sp_tau0);

    if (co->parsed()) {
      int chosen = (!co_blowup.empty()) + (!co_skst.empty()) +
                   (!co_star.empty()) + (!co_kbip.empty()) + (co_cycle > 0) +
                   (co_path > 0) + (co_yn > 0);
      if (chosen != 1)
        throw std::invalid_argument("construct: give exactly one family flag");
      std::optional<Graph> g;
      if (!co_blowup.empty()) {
        if (co_sizes.empty())
          throw std::invalid_argument("construct: --blowup needs --sizes");
        const std::vector<int> sizes = parse_int_list(co_sizes, "--sizes");
        g = blow_up(parse_graph6(co_blowup),
                    std::span<const int>(sizes.data(), sizes.size()));
      } else if (!co_skst.empty()) {
        const std::vector<int> st = parse_int_list(co_skst, "--skst");
        if (st.size() != 2 || st[0] < 0 || st[1] < 0)
          throw std::invalid_argument("construct: --skst needs s,t >= 0");
        g = subdivided_complete_bipartite(st[0] + 2, st[1] + 2);
      } else if (!co_star.empty()) {
        const std::vector<int> kq = parse_int_list(co_star, "--star-clique");
        if (kq.size() != 2)
          throw std::invalid_argument("construct: --star-clique needs k,q");
        g = star_clique_join(kq[0], kq[1]);
      } else if (!co_kbip.empty()) {
        const std::vector<int> ab = parse_int_list(co_kbip, "--kbip");
        if (ab.size() != 2)
          throw std::invalid_argument("construct: --kbip needs a,b");
        g = complete_bipartite(ab[0], ab[1]);
      } else if (co_cycle > 0) {
        g = cycle_graph(co_cycle);
      } else if (co_path > 0) {
        g = path_graph(co_path);
      } else {
        g = y_graph(co_yn);
      }
      std::printf("%s\n", to_graph6(*g).c_str());
      return 0;
    }

    if (ch->parsed()) return cmd_check(ch_id, ch_graphs, ch_format, ch_skip);

    if (sc->parsed()) {
      ScanSpec spec;
      spec.jobs = sc_jobs;
      spec.skip_bad_lines = sc_skip;
      spec.filters = split_csv(sc_filters);
      spec.checks = split_csv(sc_checks);
      const int sources = (sc_order > 0) + (!sc_orders.empty()) + (!sc_graphs.empty());
      if (sources != 1)
        throw std::invalid_argument("scan: give exactly one of --order, --orders, --graphs");
      if (sc_order > 0) {
        spec.order_lo = spec.order_hi = sc_order;
      } else if (!sc_orders.empty()) {
        const auto dots = sc_orders.find("..");
        if (dots == std::string::npos)
          throw std::invalid_argument("scan: --orders wants A..B");
        spec.order_lo = std::stoi(sc_orders.substr(0, dots));
        spec.order_hi = std::stoi(sc_orders.substr(dots + 2));
      } else {
        spec.source = ScanSpec::Source::Graph6Lines;
        spec.graph6_lines = read_lines(sc_graphs);
      }
      const ScanReport report = run_scan(spec);
      if (report.borderline_eigenvalues > 0)
        std::fprintf(stderr,
                     "specscan: %lld eigenvalue(s) near the zero threshold; "
                     "review recommended\n",
                     report.borderline_eigenvalues);
      if (sc_format == "json") {
        std::printf("%s\n", report_to_json(report, !sc_no_timing).c_str());
      } else {
        std::printf("graphs scanned: %lld\n", report.graphs_scanned);
        for (const auto& [id, t] : report.totals)
          std::printf("%-16s holds=%lld equality=%lld violated=%lld "
                      "not-applicable=%lld candidates=%lld\n",
                      id.c_str(), t.holds, t.equality, t.violated,
                      t.not_applicable, t.candidates);
        if (!sc_no_timing) std::printf("wall_ms: %lld\n", report.wall_ms);
      }
      return report.any_violation() ? 1 : 0;
    }

    if (ma->parsed()) {
      const std::vector<double> x = parse_double_list(ma_x, "--x");
      const std::vector<double> y = parse_double_list(ma_y, "--y");
      const MajorizationCertificate cert = weak_majorization(y, x);
      std::printf("weak: %s\nstrong: %s\n", cert.weak ? "true" : "false",
                  cert.strong ? "true" : "false");
      std::printf("prefix_y:");
      for (double v : cert.prefix_y) std::printf(" %s", fmt12(v).c_str());
      std::printf("\nprefix_x:");
      for (double v : cert.prefix_x) std::printf(" %s", fmt12(v).c_str());
      std::printf("\n");
      if (cert.weak) {
        std::vector<double> sy(y), sx(x);
        std::sort(sy.rbegin(), sy.rend());
        std::sort(sx.rbegin(), sx.rend());
        const double ny = p_norm(sy, ma_p), nx = p_norm(sx, ma_p);
        const NormComparison cmp = verify_norm_monotonicity(sy, sx, ma_p);
        const char* verdict = cmp == NormComparison::Strict
                                  ? "strict"
                                  : cmp == NormComparison::EqualAndIdentical
                                        ? "equal-and-identical"
                                        : "violation";
        std::printf("p: %s\nnorm_y: %s\nnorm_x: %s\nnorm_comparison: %s\n",
                    fmt12(ma_p).c_str(), fmt12(ny).c_str(), fmt12(nx).c_str(),
                    verdict);
      }
      return 0;
    }

    if (de->parsed()) {
      std::ifstream in(de_matrix);
      if (!in) throw std::invalid_argument("cannot open file: " + de_matrix);
      const Matrix a = read_square_matrix(in);
      const SubstochasticDecomposition dec = decompose_substochastic(a);
      for (const auto& [w, p] : dec.terms) {
        std::string map;
        for (int j = 0; j < p.n; ++j) {
          if (j) map += ' ';
          map += std::to_string(j) + "->" +
                 (p.row_of_col[static_cast<size_t>(j)] < 0
                      ? std::string("_")
                      : std::to_string(p.row_of_col[static_cast<size_t>(j)]));
        }
        std::printf("weight %s  cols->rows: %s\n", fmt12(w).c_str(), map.c_str());
      }
      std::printf("terms: %zu\nreconstruction_error: %s\n", dec.terms.size(),
                  fmt12(dec.reconstruction_error).c_str());
      return 0;
    }

    if (la->parsed()) {
      std::printf("%.12f\n", lambda1_subdivided_bipartite(la_s, la_t, la_tol));
      return 0;
    }
  } catch (const std::invalid_argument& e) {
    std::fprintf(stderr, "specscan: %s\n", e.what());
    return 2;
  } catch (const Graph6Error& e) {
    std::fprintf(stderr, "specscan: %s\n", e.what());
    return 2;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "specscan: %s\n", e.what());
    return 2;
  }
  return 2;
}
