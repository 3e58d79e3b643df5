#pragma once

#include <cstddef>
#include <initializer_list>
#include <vector>

namespace higine {

// Dense row-major matrix of doubles. The only tensor shape the engine needs;
// scalars are 1x1, column vectors nx1.
struct Matrix {
  int rows = 0;
  int cols = 0;
  std::vector<double> data;

  Matrix() = default;
  Matrix(int r, int c) : rows(r), cols(c), data(static_cast<size_t>(r) * c, 0.0) {}
  Matrix(int r, int c, std::initializer_list<double> v);

  static Matrix full(int r, int c, double v);
  static Matrix identity(int n);

  double& at(int r, int c) { return data[static_cast<size_t>(r) * cols + c]; }
  double at(int r, int c) const { return data[static_cast<size_t>(r) * cols + c]; }

  size_t size() const { return data.size(); }
  bool empty() const { return data.empty(); }
  bool same_shape(const Matrix& o) const { return rows == o.rows && cols == o.cols; }
  void fill(double v);
};

// OpenMP matmul kernels. Work is partitioned statically over output rows and
// each element keeps a fixed inner accumulation order, so results are
// bit-identical to the serial reference for any thread count.
void matmul(const Matrix& a, const Matrix& b, Matrix& out);     // a(r,k) * b(k,c)
void matmul_nt(const Matrix& a, const Matrix& b, Matrix& out);  // a(r,k) * b(c,k)^T
void matmul_tn(const Matrix& a, const Matrix& b, Matrix& out);  // a(k,r)^T * b(k,c)

bool all_finite(const Matrix& m);

}  // namespace higine
