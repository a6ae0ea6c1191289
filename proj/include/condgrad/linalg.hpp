#pragma once

#include <cmath>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <vector>

namespace condgrad {

using Vec = std::vector<double>;

// Dense row-major matrix. Everything in this library is small (a handful of
// rows and columns), so no attempt is made at sparsity or blocking.
struct Matrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<double> data;

  Matrix() = default;
  Matrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c, 0.0) {}
  Matrix(std::initializer_list<std::initializer_list<double>> rs) {
    rows = rs.size();
    cols = rows == 0 ? 0 : rs.begin()->size();
    data.reserve(rows * cols);
    for (const auto& r : rs) {
      if (r.size() != cols) throw std::invalid_argument("matrix: ragged initializer rows");
      data.insert(data.end(), r.begin(), r.end());
    }
  }

  double& operator()(std::size_t i, std::size_t j) { return data[i * cols + j]; }
  double operator()(std::size_t i, std::size_t j) const { return data[i * cols + j]; }
  std::span<double> row(std::size_t i) { return {data.data() + i * cols, cols}; }
  std::span<const double> row(std::size_t i) const { return {data.data() + i * cols, cols}; }
};

inline double dot(std::span<const double> a, std::span<const double> b) {
  if (a.size() != b.size()) throw std::invalid_argument("dot: length mismatch");
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

inline double squared_norm(std::span<const double> a) {
  double s = 0.0;
  for (double v : a) s += v * v;
  return s;
}

inline double norm(std::span<const double> a) { return std::sqrt(squared_norm(a)); }

inline Vec matvec(const Matrix& a, std::span<const double> x) {
  if (a.cols != x.size()) throw std::invalid_argument("matvec: dimension mismatch");
  Vec y(a.rows, 0.0);
  for (std::size_t i = 0; i < a.rows; ++i) y[i] = dot(a.row(i), x);
  return y;
}

inline Vec subtract(std::span<const double> a, std::span<const double> b) {
  if (a.size() != b.size()) throw std::invalid_argument("subtract: length mismatch");
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

}  // namespace condgrad
