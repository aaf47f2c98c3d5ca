#pragma once

#include <span>
#include <utility>
#include <vector>

#include "specscan/matrix.hpp"

namespace specscan {

// Weak majorization certificate for a pair of nonnegative vectors: prefix
// sums of both sorted views, plus the verdicts. `weak` means every prefix of
// sorted y is at most the matching prefix of sorted x (within 1e-12);
// `strong` additionally requires equal totals.
struct MajorizationCertificate {
  std::vector<double> prefix_y, prefix_x;
  bool weak = false;
  bool strong = false;
};

// Tests y weakly-majorized-by x. Vectors must have equal length and
// nonnegative entries.
MajorizationCertificate weak_majorization(std::span<const double> y,
                                          std::span<const double> x);

// Nonnegative square matrix with all row and column sums <= 1 (within tol).
bool is_doubly_substochastic(const Matrix& a, double tol = 1e-12);

// 0/1 matrix with at most one nonzero per row and per column, encoded as a
// partial injective map column -> row; the empty map is the zero matrix.
struct WeakPermutationMatrix {
  int n = 0;
  std::vector<int> row_of_col;  // -1 marks an empty column

  Matrix to_matrix() const;
  bool valid() const;
  friend bool operator==(const WeakPermutationMatrix&,
                         const WeakPermutationMatrix&) = default;
};

struct SubstochasticDecomposition {
  std::vector<std::pair<double, WeakPermutationMatrix>> terms;
  double reconstruction_error = 0.0;
};

// Writes a doubly substochastic matrix as a convex combination of
// weak-permutation matrices. The input is completed to a 2n x 2n doubly
// stochastic matrix [[A, D_r], [D_c, A^T]], permutations are peeled off by
// deterministic augmenting-path matchings (columns ascending, free rows
// first), and each one is projected back to its top-left n x n block.
// Duplicate blocks are merged.
SubstochasticDecomposition decompose_substochastic(const Matrix& a);

// Builds a doubly substochastic A with A x = y, for sorted nonnegative
// vectors with y weakly majorized by x. The weak pair is lifted to a strong
// one by raising the tail of y to a common level, the lifted target is
// reached from x by at most n-1 pairwise-averaging transforms
// (Hardy-Littlewood-Polya), and the result is scaled back row by row.
Matrix transfer_matrix(std::span<const double> y, std::span<const double> x);

double p_norm(std::span<const double> x, double p);

enum class NormComparison { Strict, EqualAndIdentical, Violation };

// Theorem oracle: for sorted nonnegative y weakly majorized by x and p > 1,
// asserts ||y||_p <= ||x||_p and that near-equality forces y = x entrywise.
// Violation must never occur on valid inputs.
NormComparison verify_norm_monotonicity(std::span<const double> y,
                                        std::span<const double> x, double p);

}  // namespace specscan
