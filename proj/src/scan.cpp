#include "specscan/scan.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <stdexcept>
#include <thread>
#include <tuple>

namespace specscan {

namespace {

std::string fmt12(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

std::pair<std::string, long long> split_token(const std::string& token) {
  const auto eq = token.find('=');
  if (eq == std::string::npos) return {token, -1};
  const std::string base = token.substr(0, eq);
  try {
    return {base, std::stoll(token.substr(eq + 1))};
  } catch (const std::exception&) {
    throw std::invalid_argument("bad parameter in token: " + token);
  }
}

}  // namespace

bool ScanReport::any_violation() const {
  for (const auto& [id, t] : totals)
    if (t.violated > 0) return true;
  return false;
}

long long labeled_graph_count(int n) {
  if (n < 1 || n > 8)
    throw std::invalid_argument("labeled enumeration capped at 1 <= n <= 8");
  return 1LL << (n * (n - 1) / 2);
}

Graph labeled_graph_from_index(int n, unsigned long long index) {
  if (n < 1 || n > 8)
    throw std::invalid_argument("labeled enumeration capped at 1 <= n <= 8");
  Graph g(n);
  int bit = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i, ++bit)
      if ((index >> bit) & 1u) g.add_edge(i, j);
  return g;
}

Graph6Stream ingest_graph6_stream(const std::vector<std::string>& lines,
                                  bool skip_bad_lines) {
  Graph6Stream out;
  for (size_t ln = 0; ln < lines.size(); ++ln) {
    std::string s = lines[ln];
    while (!s.empty() && (s.back() == '\r' || s.back() == '\n' ||
                          s.back() == ' ' || s.back() == '\t'))
      s.pop_back();
    if (s.empty() || s[0] == '#') continue;
    try {
      out.graphs.push_back(parse_graph6(s));
    } catch (const Graph6Error& e) {
      const std::string msg =
          "line " + std::to_string(ln + 1) + ": " + e.what();
      if (!skip_bad_lines) throw std::runtime_error(msg);
      out.bad_lines.push_back(msg);
    }
  }
  return out;
}

std::string canonical_check_token(const std::string& token) {
  auto [base, param] = split_token(token);
  auto with_default = [&](long long def) {
    return base + "=" + std::to_string(param >= 0 ? param : def);
  };
  if (base == "bn") return with_default(2);
  if (base == "edge-bound") return with_default(1);
  if (base == "aes") return with_default(2);
  if (base == "zls") return with_default(1);
  if (base == "tf-sum" || base == "nosal" || base == "nik-sq" ||
      base == "erdos-size" || base == "erdos-order" || base == "efgw" ||
      base == "classical" || base == "hoffman-smith") {
    if (param >= 0)
      throw std::invalid_argument("check does not take a parameter: " + token);
    return base;
  }
  throw std::invalid_argument("unknown check id: " + token);
}

CheckVerdict run_check(const std::string& canonical_token, GraphContext& ctx) {
  auto [base, param] = split_token(canonical_token);
  if (base == "bn") return check_bn_conjecture(ctx, static_cast<int>(param));
  if (base == "tf-sum") return check_triangle_free_sum(ctx);
  if (base == "nosal") return check_nosal(ctx);
  if (base == "nik-sq") return check_nikiforov_sq(ctx);
  if (base == "erdos-size") return check_spectral_erdos_size(ctx);
  if (base == "erdos-order") return check_spectral_erdos_order(ctx);
  if (base == "edge-bound")
    return check_erdos_edge_bound(ctx, static_cast<int>(param));
  if (base == "aes") return check_aes_lemma(ctx, static_cast<int>(param));
  if (base == "zls") return check_zls(ctx, static_cast<int>(param));
  if (base == "efgw") return check_efgw(ctx);
  if (base == "classical") return classical_bounds_combined(ctx);
  if (base == "hoffman-smith") return check_hoffman_smith_all_edges(ctx);
  throw std::invalid_argument("unknown check id: " + canonical_token);
}

void validate_filter_token(const std::string& token) {
  auto [base, param] = split_token(token);
  if (base == "triangle-free" || base == "non-bipartite" ||
      base == "connected") {
    if (param >= 0)
      throw std::invalid_argument("filter does not take a parameter: " + token);
    return;
  }
  if (base == "odd-girth-ge" || base == "clique-le") {
    if (param < 1)
      throw std::invalid_argument("filter needs a positive parameter: " + token);
    return;
  }
  throw std::invalid_argument("unknown filter: " + token);
}

bool filter_matches(const std::string& token, GraphContext& ctx) {
  auto [base, param] = split_token(token);
  if (base == "triangle-free") return ctx.triangles() == 0;
  if (base == "non-bipartite") return !ctx.bipartite();
  if (base == "connected") return ctx.connected();
  if (base == "odd-girth-ge") {
    const std::optional<int> og = ctx.oddgirth();
    return og && *og >= param;
  }
  if (base == "clique-le") return ctx.cliquenum() <= param;
  throw std::invalid_argument("unknown filter: " + token);
}

namespace {

struct Partial {
  std::map<std::string, StatusTotals> totals;
  std::vector<EqualityCase> equality_cases;
  std::vector<ConjectureCandidate> candidates;
  long long graphs = 0;
  long long borderline = 0;
};

std::string spectrum_digest(const Spectrum& s) {
  std::string out;
  for (size_t i = 0; i < s.values.size(); ++i) {
    if (i) out += ",";
    out += fmt12(s.values[i]);
  }
  return out;
}

void scan_one(const Graph& g, const std::vector<std::string>& filters,
              const std::vector<std::string>& checks, Partial& p) {
  GraphContext ctx(g);
  for (const std::string& f : filters)
    if (!filter_matches(f, ctx)) return;
  ++p.graphs;
  std::string g6;  // rendered only when a case list needs it
  for (const std::string& c : checks) {
    const CheckVerdict v = run_check(c, ctx);
    StatusTotals& t = p.totals[c];
    switch (v.status) {
      case CheckStatus::Holds: ++t.holds; break;
      case CheckStatus::EqualityExtremal: {
        ++t.equality;
        if (g6.empty()) g6 = to_graph6(g);
        p.equality_cases.push_back(
            {g6, c, v.family ? family_name(*v.family) : "", v.exact_family});
        break;
      }
      case CheckStatus::Violated: ++t.violated; break;
      case CheckStatus::NotApplicable: ++t.not_applicable; break;
      case CheckStatus::ConjectureViolationCandidate: {
        ++t.candidates;
        if (g6.empty()) g6 = to_graph6(g);
        p.candidates.push_back(
            {g6, c, v.lhs, v.rhs, spectrum_digest(ctx.spectrum()), v.note});
        break;
      }
    }
  }
  p.borderline += ctx.spectrum_computed() ? ctx.spectrum().borderline : 0;
}

}  // namespace

ScanReport run_scan(const ScanSpec& spec) {
  const auto t0 = std::chrono::steady_clock::now();

  std::vector<std::string> checks;
  for (const std::string& c : spec.checks)
    checks.push_back(canonical_check_token(c));
  if (checks.empty()) throw std::invalid_argument("run_scan: no checks given");
  for (const std::string& f : spec.filters) validate_filter_token(f);
  if (spec.jobs < 1) throw std::invalid_argument("run_scan: jobs must be >= 1");

  // Materialize the work list. Enumerated graphs are identified by (n, index)
  // and built inside the workers; stream graphs are parsed up front so that
  // parse errors surface deterministically with line numbers.
  std::vector<Graph> stream_graphs;
  std::vector<std::pair<int, unsigned long long>> ranges;  // (n, count)
  long long total = 0;
  if (spec.source == ScanSpec::Source::Enumerate) {
    if (spec.order_lo < 1 || spec.order_hi > 8 || spec.order_lo > spec.order_hi)
      throw std::invalid_argument(
          "run_scan: enumeration orders must satisfy 1 <= lo <= hi <= 8");
    for (int n = spec.order_lo; n <= spec.order_hi; ++n) {
      ranges.emplace_back(n, labeled_graph_count(n));
      total += labeled_graph_count(n);
    }
  } else {
    Graph6Stream in = ingest_graph6_stream(spec.graph6_lines, spec.skip_bad_lines);
    for (const std::string& bad : in.bad_lines)
      std::fprintf(stderr, "specscan: skipped %s\n", bad.c_str());
    stream_graphs = std::move(in.graphs);
    total = static_cast<long long>(stream_graphs.size());
  }

  const int jobs = static_cast<int>(
      std::max<long long>(1, std::min<long long>(spec.jobs, std::max<long long>(total, 1))));
  std::vector<Partial> partials(static_cast<size_t>(jobs));

  auto worker = [&](int w) {
    Partial& p = partials[static_cast<size_t>(w)];
    const long long lo = total * w / jobs;
    const long long hi = total * (w + 1) / jobs;
    if (spec.source == ScanSpec::Source::Graph6Lines) {
      for (long long i = lo; i < hi; ++i)
        scan_one(stream_graphs[static_cast<size_t>(i)], spec.filters, checks, p);
      return;
    }
    long long base = 0;
    for (const auto& [n, count] : ranges) {
      const long long next = base + static_cast<long long>(count);
      const long long from = std::max(lo, base), to = std::min(hi, next);
      for (long long i = from; i < to; ++i)
        scan_one(labeled_graph_from_index(
                     n, static_cast<unsigned long long>(i - base)),
                 spec.filters, checks, p);
      base = next;
    }
  };

  if (jobs == 1) {
    worker(0);
  } else {
    std::vector<std::thread> threads;
    threads.reserve(static_cast<size_t>(jobs));
    for (int w = 0; w < jobs; ++w) threads.emplace_back(worker, w);
    for (std::thread& t : threads) t.join();
  }

  ScanReport report;
  report.spec = spec;
  report.graphs_input = total;
  for (const std::string& c : checks) report.totals[c];  // zero row per check
  for (const Partial& p : partials) {
    for (const auto& [id, t] : p.totals) {
      StatusTotals& agg = report.totals[id];
      agg.holds += t.holds;
      agg.equality += t.equality;
      agg.violated += t.violated;
      agg.not_applicable += t.not_applicable;
      agg.candidates += t.candidates;
    }
    report.equality_cases.insert(report.equality_cases.end(),
                                 p.equality_cases.begin(),
                                 p.equality_cases.end());
    report.candidates.insert(report.candidates.end(), p.candidates.begin(),
                             p.candidates.end());
    report.graphs_scanned += p.graphs;
    report.borderline_eigenvalues += p.borderline;
  }
  std::sort(report.equality_cases.begin(), report.equality_cases.end(),
            [](const EqualityCase& a, const EqualityCase& b) {
              return std::tie(a.graph6, a.check, a.family) <
                     std::tie(b.graph6, b.check, b.family);
            });
  std::sort(report.candidates.begin(), report.candidates.end(),
            [](const ConjectureCandidate& a, const ConjectureCandidate& b) {
              return std::tie(a.graph6, a.check, a.note) <
                     std::tie(b.graph6, b.check, b.note);
            });

  report.wall_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                       std::chrono::steady_clock::now() - t0)
                       .count();
  return report;
}

namespace {

void json_escape_into(std::string& out, const std::string& s) {
  for (char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      default:
        if (static_cast<unsigned char>(c) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof buf, "\\u%04x", c);
          out += buf;
        } else {
          out += c;
        }
    }
  }
}

void append_kv(std::string& out, const char* key, const std::string& value) {
  out += '"';
  out += key;
  out += "\":\"";
  json_escape_into(out, value);
  out += '"';
}

}  // namespace

std::string report_to_json(const ScanReport& r, bool include_timing) {
  std::string out = "{\"spec\":{";
  if (r.spec.source == ScanSpec::Source::Enumerate) {
    out += "\"source\":\"enumerate\",\"orders\":[" +
           std::to_string(r.spec.order_lo) + "," +
           std::to_string(r.spec.order_hi) + "]";
  } else {
    out += "\"source\":\"graph6\",\"graphs\":" +
           std::to_string(r.graphs_input);
  }
  out += ",\"filters\":[";
  for (size_t i = 0; i < r.spec.filters.size(); ++i) {
    if (i) out += ',';
    out += '"';
    json_escape_into(out, r.spec.filters[i]);
    out += '"';
  }
  out += "],\"checks\":[";
  {
    size_t i = 0;
    for (const auto& [id, t] : r.totals) {
      if (i++) out += ',';
      out += '"';
      json_escape_into(out, id);
      out += '"';
    }
  }
  out += "]},\"totals\":{";
  {
    size_t i = 0;
    for (const auto& [id, t] : r.totals) {
      if (i++) out += ',';
      out += '"';
      json_escape_into(out, id);
      out += "\":{\"holds\":" + std::to_string(t.holds) +
             ",\"equality\":" + std::to_string(t.equality) +
             ",\"violated\":" + std::to_string(t.violated) +
             ",\"not_applicable\":" + std::to_string(t.not_applicable) +
             ",\"candidates\":" + std::to_string(t.candidates) + "}";
    }
  }
  out += "},\"equality_cases\":[";
  for (size_t i = 0; i < r.equality_cases.size(); ++i) {
    const EqualityCase& e = r.equality_cases[i];
    if (i) out += ',';
    out += '{';
    append_kv(out, "graph6", e.graph6);
    out += ',';
    append_kv(out, "check", e.check);
    out += ',';
    append_kv(out, "family", e.family);
    out += ",\"strict\":";
    out += e.strict ? "true" : "false";
    out += '}';
  }
  out += "],\"candidates\":[";
  for (size_t i = 0; i < r.candidates.size(); ++i) {
    const ConjectureCandidate& c = r.candidates[i];
    if (i) out += ',';
    out += '{';
    append_kv(out, "graph6", c.graph6);
    out += ',';
    append_kv(out, "check", c.check);
    out += ",\"lhs\":" + fmt12(c.lhs) + ",\"rhs\":" + fmt12(c.rhs) + ",";
    append_kv(out, "spectrum", c.spectrum);
    out += ',';
    append_kv(out, "note", c.note);
    out += '}';
  }
  out += ']';
  if (include_timing) out += ",\"wall_ms\":" + std::to_string(r.wall_ms);
  out += '}';
  return out;
}

}  // namespace specscan
