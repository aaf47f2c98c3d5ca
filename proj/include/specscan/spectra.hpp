#pragma once

#include <vector>

#include "specscan/graph.hpp"
#include "specscan/matrix.hpp"

namespace specscan {

// Eigenvalue identities (trace, sum of squares, s+ + s- = 2m) are enforced on
// every computed spectrum within this tolerance.
inline constexpr double kTraceTol = 1e-7;

Matrix adjacency_matrix(const Graph& g);

// All eigenvalues of a real symmetric matrix, sorted non-increasing.
// Cyclic Jacobi rotations, sweeping until the largest off-diagonal entry
// drops below 1e-12 * ||A||_F. Deterministic for identical input.
std::vector<double> eigenvalues_sym(const Matrix& a);

// Adjacency spectrum together with everything derived from it. The zero
// classification uses |lambda| < zero_tol with zero_tol = 1e-8 * max(1, l1)
// unless overridden; `borderline` counts eigenvalues suspiciously close to
// the threshold (within a factor of 10), flagged for manual review.
struct Spectrum {
  std::vector<double> values;  // non-increasing
  int n_pos = 0, n_neg = 0, n_zero = 0;
  double s_plus = 0.0, s_minus = 0.0;
  int rank = 0;
  double zero_tol = 0.0;
  int borderline = 0;

  int order() const { return static_cast<int>(values.size()); }
  double spectral_radius() const { return values.empty() ? 0.0 : values[0]; }
};

Spectrum spectrum_from_values(std::vector<double> values, double zero_tol = 0.0);
Spectrum spectrum_of(const Graph& g, double zero_tol = 0.0);

// Triangle count from the cubic trace: round(sum lambda_i^3 / 6). A residual
// of 1e-6 or more signals eigensolver inaccuracy and throws.
long long triangle_count_trace(const Spectrum& s);

// f(x,s,t) = x^5 - (2s+2t+st+5) x^3 + (4s+4t+3st+5) x - (2s+2t+2st+2),
// the nontrivial factor of the characteristic polynomial of K_{s+2,t+2}
// with one edge subdivided.
double char_poly_f(double x, long long s, long long t);

// Largest root of f(., s, t), i.e. the spectral radius of the subdivided
// complete bipartite graph above. Bisection on [2, sqrt((s+2)(t+2))]; the
// bracket must change sign or an internal error is raised.
double lambda1_subdivided_bipartite(long long s, long long t,
                                    double tol = 1e-12);

int rank_of(const Graph& g, double zero_tol = 0.0);

}  // namespace specscan
