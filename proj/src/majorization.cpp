#include "specscan/majorization.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace specscan {

namespace {

void require_nonneg(std::span<const double> x, const char* what) {
  for (double v : x)
    if (!(v >= 0.0))
      throw std::invalid_argument(std::string(what) +
                                  ": entries must be nonnegative");
}

std::vector<double> sorted_desc(std::span<const double> x) {
  std::vector<double> s(x.begin(), x.end());
  std::sort(s.begin(), s.end(), std::greater<double>());
  return s;
}

void require_sorted_desc(std::span<const double> x, const char* what) {
  for (size_t i = 1; i < x.size(); ++i)
    if (x[i] > x[i - 1] + 1e-12)
      throw std::invalid_argument(std::string(what) +
                                  ": vector must be sorted non-increasing");
}

}  // namespace

MajorizationCertificate weak_majorization(std::span<const double> y,
                                          std::span<const double> x) {
  if (y.size() != x.size())
    throw std::invalid_argument("weak_majorization: length mismatch");
  require_nonneg(y, "weak_majorization");
  require_nonneg(x, "weak_majorization");

  MajorizationCertificate cert;
  std::vector<double> sy = sorted_desc(y), sx = sorted_desc(x);
  double py = 0.0, px = 0.0;
  cert.weak = true;
  for (size_t i = 0; i < sy.size(); ++i) {
    py += sy[i];
    px += sx[i];
    cert.prefix_y.push_back(py);
    cert.prefix_x.push_back(px);
    if (py > px + 1e-12) cert.weak = false;
  }
  cert.strong = cert.weak && std::fabs(py - px) <= 1e-12;
  return cert;
}

bool is_doubly_substochastic(const Matrix& a, double tol) {
  if (!a.square())
    throw std::invalid_argument("is_doubly_substochastic: matrix not square");
  for (double v : a.a)
    if (v < -tol) return false;
  for (double s : a.row_sums())
    if (s > 1.0 + tol) return false;
  for (double s : a.col_sums())
    if (s > 1.0 + tol) return false;
  return true;
}

Matrix WeakPermutationMatrix::to_matrix() const {
  Matrix m(n, n);
  for (int j = 0; j < n; ++j)
    if (row_of_col[static_cast<size_t>(j)] >= 0)
      m(row_of_col[static_cast<size_t>(j)], j) = 1.0;
  return m;
}

bool WeakPermutationMatrix::valid() const {
  if (static_cast<int>(row_of_col.size()) != n) return false;
  std::vector<char> used(static_cast<size_t>(n), 0);
  for (int r : row_of_col) {
    if (r < -1 || r >= n) return false;
    if (r >= 0) {
      if (used[static_cast<size_t>(r)]) return false;
      used[static_cast<size_t>(r)] = 1;
    }
  }
  return true;
}

namespace {

// Kuhn's augmenting-path matching over entries above eps. Deterministic:
// columns are matched in ascending order, free rows are preferred, and both
// scans go through rows in ascending order.
class Matcher {
 public:
  Matcher(const Matrix& b, double eps) : b_(b), eps_(eps), n_(b.rows) {
    col_of_row_.assign(static_cast<size_t>(n_), -1);
  }

  bool run(std::vector<int>& row_of_col) {
    for (int j = 0; j < n_; ++j) {
      bool placed = false;
      for (int r = 0; r < n_ && !placed; ++r)
        if (b_(r, j) > eps_ && col_of_row_[static_cast<size_t>(r)] < 0) {
          col_of_row_[static_cast<size_t>(r)] = j;
          placed = true;
        }
      if (placed) continue;
      visited_.assign(static_cast<size_t>(n_), 0);
      if (!augment(j)) return false;
    }
    row_of_col.assign(static_cast<size_t>(n_), -1);
    for (int r = 0; r < n_; ++r)
      if (col_of_row_[static_cast<size_t>(r)] >= 0)
        row_of_col[static_cast<size_t>(col_of_row_[static_cast<size_t>(r)])] = r;
    return true;
  }

 private:
  bool augment(int j) {
    for (int r = 0; r < n_; ++r) {
      if (!(b_(r, j) > eps_) || visited_[static_cast<size_t>(r)]) continue;
      visited_[static_cast<size_t>(r)] = 1;
      if (col_of_row_[static_cast<size_t>(r)] < 0 ||
          augment(col_of_row_[static_cast<size_t>(r)])) {
        col_of_row_[static_cast<size_t>(r)] = j;
        return true;
      }
    }
    return false;
  }

  const Matrix& b_;
  double eps_;
  int n_;
  std::vector<int> col_of_row_;
  std::vector<char> visited_;
};

}  // namespace

SubstochasticDecomposition decompose_substochastic(const Matrix& a) {
  if (!is_doubly_substochastic(a, 1e-9))
    throw std::invalid_argument(
        "decompose_substochastic: matrix is not doubly substochastic");
  const int n = a.rows;
  const int nn = 2 * n;

  // Doubly stochastic completion [[A, D_r], [D_c, A^T]].
  Matrix b(nn, nn);
  const std::vector<double> rs = a.row_sums(), cs = a.col_sums();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      b(i, j) = std::max(0.0, a(i, j));
      b(n + j, n + i) = b(i, j);
    }
  for (int i = 0; i < n; ++i) {
    b(i, n + i) = std::max(0.0, 1.0 - rs[static_cast<size_t>(i)]);
    b(n + i, i) = std::max(0.0, 1.0 - cs[static_cast<size_t>(i)]);
  }

  constexpr double kSupportEps = 1e-12;
  SubstochasticDecomposition out;
  double extracted = 0.0;

  auto merge_term = [&](double w, WeakPermutationMatrix&& p) {
    for (auto& [tw, tp] : out.terms)
      if (tp == p) {
        tw += w;
        return;
      }
    out.terms.emplace_back(w, std::move(p));
  };

  for (int iter = 0; iter <= nn * nn; ++iter) {
    double remaining = 0.0;
    for (double s : b.row_sums()) remaining = std::max(remaining, s);
    if (remaining <= 1e-12) break;

    std::vector<int> perm;
    if (!Matcher(b, kSupportEps).run(perm)) {
      if (remaining < 1e-10) break;  // sub-threshold dust only
      throw std::runtime_error(
          "decompose_substochastic: matching failure on stochastic completion");
    }
    double theta = 2.0;
    for (int j = 0; j < nn; ++j)
      theta = std::min(theta, b(perm[static_cast<size_t>(j)], j));
    for (int j = 0; j < nn; ++j) {
      double& e = b(perm[static_cast<size_t>(j)], j);
      e = std::max(0.0, e - theta);
    }
    WeakPermutationMatrix block{n, std::vector<int>(static_cast<size_t>(n), -1)};
    for (int j = 0; j < n; ++j)
      if (perm[static_cast<size_t>(j)] < n)
        block.row_of_col[static_cast<size_t>(j)] = perm[static_cast<size_t>(j)];
    merge_term(theta, std::move(block));
    extracted += theta;
  }

  // Rounding leftovers (and the break above) are absorbed by the zero
  // matrix, keeping the weights an exact convex combination.
  const double leftover = 1.0 - extracted;
  if (leftover > 1e-12)
    merge_term(leftover,
               WeakPermutationMatrix{n, std::vector<int>(static_cast<size_t>(n), -1)});

  Matrix rec(n, n);
  for (const auto& [w, p] : out.terms)
    for (int j = 0; j < n; ++j)
      if (p.row_of_col[static_cast<size_t>(j)] >= 0)
        rec(p.row_of_col[static_cast<size_t>(j)], j) += w;
  double err = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      err = std::max(err, std::fabs(rec(i, j) - a(i, j)));
  out.reconstruction_error = err;
  return out;
}

Matrix transfer_matrix(std::span<const double> y, std::span<const double> x) {
  if (y.size() != x.size())
    throw std::invalid_argument("transfer_matrix: length mismatch");
  require_nonneg(y, "transfer_matrix");
  require_nonneg(x, "transfer_matrix");
  require_sorted_desc(y, "transfer_matrix");
  require_sorted_desc(x, "transfer_matrix");
  if (!weak_majorization(y, x).weak)
    throw std::invalid_argument(
        "transfer_matrix: y must be weakly majorized by x");
  const int n = static_cast<int>(y.size());

  const double total_x = std::accumulate(x.begin(), x.end(), 0.0);
  const double total_y = std::accumulate(y.begin(), y.end(), 0.0);

  // Lift y to z >= y with equal totals by raising the tail to a common
  // level; the level never breaks a prefix bound because x is sorted.
  std::vector<double> z(y.begin(), y.end());
  if (total_x - total_y > 1e-14) {
    double prefix = total_y;
    for (int j = n - 1; j >= 0; --j) {
      prefix -= z[static_cast<size_t>(j)];
      const double level = (total_x - prefix) / (n - j);
      if (level >= z[static_cast<size_t>(j)] - 1e-15 &&
          (j == 0 || level <= z[static_cast<size_t>(j - 1)] + 1e-15)) {
        for (int i = j; i < n; ++i) z[static_cast<size_t>(i)] = level;
        break;
      }
    }
  }

  // Chain of pairwise-averaging transforms driving x to z; each step fixes
  // at least one coordinate, so n-1 steps suffice.
  Matrix t = Matrix::identity(n);
  std::vector<double> w(x.begin(), x.end());
  const double eps = 1e-12 * std::max(1.0, total_x);
  for (int step = 0; step <= n; ++step) {
    int ai = -1;
    for (int i = 0; i < n; ++i)
      if (std::fabs(w[static_cast<size_t>(i)] - z[static_cast<size_t>(i)]) > eps) {
        ai = i;
        break;
      }
    if (ai < 0) break;
    if (w[static_cast<size_t>(ai)] < z[static_cast<size_t>(ai)])
      throw std::runtime_error("transfer_matrix: majorization invariant lost");
    // Receiver: largest deficit below ai (first such index on ties), so that
    // every step permanently settles one coordinate.
    int bi = -1;
    double deficit = 0.0;
    for (int i = ai + 1; i < n; ++i) {
      const double d = z[static_cast<size_t>(i)] - w[static_cast<size_t>(i)];
      if (d > deficit) {
        deficit = d;
        bi = i;
      }
    }
    if (bi < 0)
      throw std::runtime_error("transfer_matrix: no transfer target found");
    const double delta = std::min(w[static_cast<size_t>(ai)] - z[static_cast<size_t>(ai)],
                                  z[static_cast<size_t>(bi)] - w[static_cast<size_t>(bi)]);
    const double lambda = 1.0 - delta / (w[static_cast<size_t>(ai)] - w[static_cast<size_t>(bi)]);
    for (int j = 0; j < n; ++j) {
      const double ra = t(ai, j), rb = t(bi, j);
      t(ai, j) = lambda * ra + (1.0 - lambda) * rb;
      t(bi, j) = (1.0 - lambda) * ra + lambda * rb;
    }
    w[static_cast<size_t>(ai)] -= delta;
    w[static_cast<size_t>(bi)] += delta;
  }

  // Scale rows back down from z to y; 0/0 rows become zero rows.
  for (int i = 0; i < n; ++i) {
    const double zi = z[static_cast<size_t>(i)];
    const double ratio = zi > 0.0 ? y[static_cast<size_t>(i)] / zi : 0.0;
    for (int j = 0; j < n; ++j) t(i, j) *= ratio;
  }
  return t;
}

double p_norm(std::span<const double> x, double p) {
  if (!(p > 1.0)) throw std::invalid_argument("p_norm: need p > 1");
  require_nonneg(x, "p_norm");
  double acc = 0.0;
  for (double v : x) acc += std::pow(v, p);
  return std::pow(acc, 1.0 / p);
}

NormComparison verify_norm_monotonicity(std::span<const double> y,
                                        std::span<const double> x, double p) {
  require_sorted_desc(y, "verify_norm_monotonicity");
  require_sorted_desc(x, "verify_norm_monotonicity");
  if (!weak_majorization(y, x).weak)
    throw std::invalid_argument(
        "verify_norm_monotonicity: y must be weakly majorized by x");
  const double ny = p_norm(y, p), nx = p_norm(x, p);
  if (ny > nx + 1e-12) return NormComparison::Violation;
  if (std::fabs(nx - ny) <= 1e-9) {
    for (size_t i = 0; i < x.size(); ++i)
      if (std::fabs(x[i] - y[i]) > 1e-9) return NormComparison::Violation;
    return NormComparison::EqualAndIdentical;
  }
  return NormComparison::Strict;
}

}  // namespace specscan
