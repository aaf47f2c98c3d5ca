#include "specscan/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <sstream>
#include <string>

namespace specscan {

Matrix read_square_matrix(std::istream& in) {
  int n = 0;
  if (!(in >> n) || n < 1)
    throw std::invalid_argument("matrix: first token must be the order n >= 1");
  Matrix m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (!(in >> m(i, j)))
        throw std::invalid_argument("matrix: expected " +
                                    std::to_string(n * n) + " entries");
  return m;
}

Matrix adjacency_matrix(const Graph& g) {
  Matrix m(g.order(), g.order());
  g.for_each_edge([&](int u, int v) {
    m(u, v) = 1.0;
    m(v, u) = 1.0;
  });
  return m;
}

std::vector<double> eigenvalues_sym(const Matrix& mat) {
  if (!mat.square())
    throw std::invalid_argument("eigenvalues_sym: matrix must be square");
  const int n = mat.rows;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (!std::isfinite(mat(i, j)))
        throw std::invalid_argument("eigenvalues_sym: non-finite entry");
      if (std::fabs(mat(i, j) - mat(j, i)) > 1e-12)
        throw std::invalid_argument("eigenvalues_sym: matrix not symmetric");
    }

  // Work on an exactly symmetric copy.
  std::vector<double> a(mat.a);
  auto at = [&](int i, int j) -> double& {
    return a[static_cast<size_t>(i) * n + j];
  };
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      const double v = 0.5 * (at(i, j) + at(j, i));
      at(i, j) = v;
      at(j, i) = v;
    }

  double fro = 0.0;
  for (double v : a) fro += v * v;
  fro = std::sqrt(fro);
  const double stop = 1e-12 * fro;

  for (int sweep = 0; sweep < 100; ++sweep) {
    double off = 0.0;
    for (int p = 0; p < n; ++p)
      for (int q = p + 1; q < n; ++q) off = std::max(off, std::fabs(at(p, q)));
    if (off <= stop) break;
    if (sweep == 99)
      throw std::runtime_error("eigenvalues_sym: Jacobi did not converge");

    for (int p = 0; p < n; ++p)
      for (int q = p + 1; q < n; ++q) {
        const double apq = at(p, q);
        if (apq == 0.0) continue;
        const double theta = (at(q, q) - at(p, p)) / (2.0 * apq);
        const double t =
            (theta >= 0.0 ? 1.0 : -1.0) / (std::fabs(theta) + std::hypot(theta, 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        const double app = at(p, p), aqq = at(q, q);
        at(p, p) = app - t * apq;
        at(q, q) = aqq + t * apq;
        at(p, q) = 0.0;
        at(q, p) = 0.0;
        for (int k = 0; k < n; ++k) {
          if (k == p || k == q) continue;
          const double akp = at(k, p), akq = at(k, q);
          at(k, p) = c * akp - s * akq;
          at(p, k) = at(k, p);
          at(k, q) = s * akp + c * akq;
          at(q, k) = at(k, q);
        }
      }
  }

  std::vector<double> eig(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) eig[static_cast<size_t>(i)] = at(i, i);
  std::sort(eig.begin(), eig.end(), std::greater<double>());
  return eig;
}

Spectrum spectrum_from_values(std::vector<double> values, double zero_tol) {
  std::sort(values.begin(), values.end(), std::greater<double>());
  Spectrum s;
  s.values = std::move(values);
  const double l1 = s.spectral_radius();
  s.zero_tol = zero_tol > 0.0 ? zero_tol : 1e-8 * std::max(1.0, l1);
  for (double v : s.values) {
    const double av = std::fabs(v);
    if (av > s.zero_tol * 0.1 && av < s.zero_tol * 10.0) ++s.borderline;
    if (v > s.zero_tol) {
      ++s.n_pos;
      s.s_plus += v * v;
    } else if (v < -s.zero_tol) {
      ++s.n_neg;
      s.s_minus += v * v;
    } else {
      ++s.n_zero;
    }
  }
  s.rank = s.order() - s.n_zero;
  return s;
}

Spectrum spectrum_of(const Graph& g, double zero_tol) {
  Spectrum s =
      spectrum_from_values(eigenvalues_sym(adjacency_matrix(g)), zero_tol);
  // Integer adjacency matrices allow a hard consistency gate on the solver.
  const double m2 = 2.0 * g.size();
  double trace = 0.0, sq = 0.0;
  for (double v : s.values) {
    trace += v;
    sq += v * v;
  }
  if (std::fabs(trace) > kTraceTol || std::fabs(sq - m2) > kTraceTol ||
      std::fabs(s.s_plus + s.s_minus - m2) > kTraceTol)
    throw std::runtime_error("spectrum_of: trace identities violated");
  return s;
}

long long triangle_count_trace(const Spectrum& s) {
  double cubes = 0.0;
  for (double v : s.values) cubes += v * v * v;
  const double t = cubes / 6.0;
  const double r = std::round(t);
  if (std::fabs(t - r) >= 1e-6)
    throw std::runtime_error(
        "triangle_count_trace: residual >= 1e-6, eigensolver inaccuracy");
  if (r < 0.0)
    throw std::runtime_error("triangle_count_trace: negative count");
  return static_cast<long long>(r);
}

double char_poly_f(double x, long long s, long long t) {
  if (s < 0 || t < 0)
    throw std::invalid_argument("char_poly_f: need s, t >= 0");
  const double a = static_cast<double>(2 * s + 2 * t + s * t + 5);
  const double b = static_cast<double>(4 * s + 4 * t + 3 * s * t + 5);
  const double c = static_cast<double>(2 * s + 2 * t + 2 * s * t + 2);
  const double x2 = x * x;
  return x * (x2 * (x2 - a) + b) - c;
}

double lambda1_subdivided_bipartite(long long s, long long t, double tol) {
  if (s < 0 || t < 0)
    throw std::invalid_argument("lambda1_subdivided_bipartite: need s, t >= 0");
  if (tol <= 0.0)
    throw std::invalid_argument("lambda1_subdivided_bipartite: tol must be > 0");
  if (s == 0 && t == 0) return 2.0;  // the 5-cycle

  double lo = 2.0;
  double hi = std::sqrt(static_cast<double>((s + 2) * (t + 2)));
  const double flo = char_poly_f(lo, s, t);
  const double fhi = char_poly_f(hi, s, t);
  if (!(flo < 0.0) || !(fhi > 0.0)) {
    std::ostringstream msg;
    msg << "lambda1_subdivided_bipartite: bracket failure at (s,t)=(" << s
        << "," << t << "): f(" << lo << ")=" << flo << ", f(" << hi
        << ")=" << fhi;
    throw std::runtime_error(msg.str());
  }
  for (int iter = 0; iter < 200 && hi - lo > tol; ++iter) {
    const double mid = 0.5 * (lo + hi);
    if (char_poly_f(mid, s, t) > 0.0)
      hi = mid;
    else
      lo = mid;
  }
  return 0.5 * (lo + hi);
}

int rank_of(const Graph& g, double zero_tol) {
  return spectrum_of(g, zero_tol).rank;
}

}  // namespace specscan
