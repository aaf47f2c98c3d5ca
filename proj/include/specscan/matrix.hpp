#pragma once

#include <cstddef>
#include <istream>
#include <stdexcept>
#include <vector>

namespace specscan {

// Dense row-major real matrix; just enough linear algebra for this project.
struct Matrix {
  int rows = 0, cols = 0;
  std::vector<double> a;

  Matrix() = default;
  Matrix(int r, int c)
      : rows(r), cols(c), a(static_cast<size_t>(r) * static_cast<size_t>(c)) {
    if (r < 0 || c < 0) throw std::invalid_argument("Matrix: negative shape");
  }

  static Matrix identity(int n) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
  }

  double& operator()(int i, int j) {
    return a[static_cast<size_t>(i) * cols + j];
  }
  double operator()(int i, int j) const {
    return a[static_cast<size_t>(i) * cols + j];
  }

  bool square() const { return rows == cols; }

  std::vector<double> row_sums() const {
    std::vector<double> s(static_cast<size_t>(rows), 0.0);
    for (int i = 0; i < rows; ++i)
      for (int j = 0; j < cols; ++j) s[static_cast<size_t>(i)] += (*this)(i, j);
    return s;
  }
  std::vector<double> col_sums() const {
    std::vector<double> s(static_cast<size_t>(cols), 0.0);
    for (int i = 0; i < rows; ++i)
      for (int j = 0; j < cols; ++j) s[static_cast<size_t>(j)] += (*this)(i, j);
    return s;
  }

  std::vector<double> apply(const std::vector<double>& x) const {
    if (static_cast<int>(x.size()) != cols)
      throw std::invalid_argument("Matrix::apply: size mismatch");
    std::vector<double> y(static_cast<size_t>(rows), 0.0);
    for (int i = 0; i < rows; ++i) {
      double acc = 0.0;
      for (int j = 0; j < cols; ++j) acc += (*this)(i, j) * x[static_cast<size_t>(j)];
      y[static_cast<size_t>(i)] = acc;
    }
    return y;
  }
};

// Text format used by the CLI: first line n, then n*n whitespace-separated
// entries in row-major order.
Matrix read_square_matrix(std::istream& in);

}  // namespace specscan
