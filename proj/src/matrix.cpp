#include "higine/matrix.hpp"

#include <cmath>
#include <cstdint>

#include "higine/errors.hpp"

namespace higine {

namespace {
// Below this many multiply-adds the parallel region costs more than it saves.
constexpr int64_t kParallelThreshold = 1 << 15;

void check_dims(bool ok, const char* op) {
  if (!ok) throw_numeric(std::string("ShapeMismatch: ") + op);
}
}  // namespace

Matrix::Matrix(int r, int c, std::initializer_list<double> v) : Matrix(r, c) {
  check_dims(static_cast<size_t>(r) * c == v.size(), "matrix init list");
  size_t i = 0;
  for (double x : v) data[i++] = x;
}

Matrix Matrix::full(int r, int c, double v) {
  Matrix m(r, c);
  m.fill(v);
  return m;
}

Matrix Matrix::identity(int n) {
  Matrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1.0;
  return m;
}

void Matrix::fill(double v) {
  for (double& x : data) x = v;
}

void matmul(const Matrix& a, const Matrix& b, Matrix& out) {
  check_dims(a.cols == b.rows, "matmul inner dims");
  out = Matrix(a.rows, b.cols);
  const int64_t work = static_cast<int64_t>(a.rows) * a.cols * b.cols;
  const double* pa = a.data.data();
  const double* pb = b.data.data();
  double* po = out.data.data();
  const int k = a.cols, c = b.cols;
#pragma omp parallel for schedule(static) if (work > kParallelThreshold)
  for (int i = 0; i < a.rows; ++i) {
    double* row_out = po + static_cast<size_t>(i) * c;
    const double* row_a = pa + static_cast<size_t>(i) * k;
    for (int t = 0; t < k; ++t) {
      const double av = row_a[t];
      if (av == 0.0) continue;
      const double* row_b = pb + static_cast<size_t>(t) * c;
      for (int j = 0; j < c; ++j) row_out[j] += av * row_b[j];
    }
  }
}

void matmul_nt(const Matrix& a, const Matrix& b, Matrix& out) {
  check_dims(a.cols == b.cols, "matmul_nt inner dims");
  out = Matrix(a.rows, b.rows);
  const int64_t work = static_cast<int64_t>(a.rows) * a.cols * b.rows;
  const int k = a.cols, c = b.rows;
#pragma omp parallel for schedule(static) if (work > kParallelThreshold)
  for (int i = 0; i < a.rows; ++i) {
    const double* row_a = a.data.data() + static_cast<size_t>(i) * k;
    double* row_out = out.data.data() + static_cast<size_t>(i) * c;
    for (int j = 0; j < c; ++j) {
      const double* row_b = b.data.data() + static_cast<size_t>(j) * k;
      double acc = 0.0;
      for (int t = 0; t < k; ++t) acc += row_a[t] * row_b[t];
      row_out[j] = acc;
    }
  }
}

void matmul_tn(const Matrix& a, const Matrix& b, Matrix& out) {
  check_dims(a.rows == b.rows, "matmul_tn inner dims");
  out = Matrix(a.cols, b.cols);
  const int64_t work = static_cast<int64_t>(a.cols) * a.rows * b.cols;
  const int k = a.rows, c = b.cols;
#pragma omp parallel for schedule(static) if (work > kParallelThreshold)
  for (int i = 0; i < a.cols; ++i) {
    double* row_out = out.data.data() + static_cast<size_t>(i) * c;
    for (int t = 0; t < k; ++t) {
      const double av = a.data[static_cast<size_t>(t) * a.cols + i];
      if (av == 0.0) continue;
      const double* row_b = b.data.data() + static_cast<size_t>(t) * c;
      for (int j = 0; j < c; ++j) row_out[j] += av * row_b[j];
    }
  }
}

bool all_finite(const Matrix& m) {
  for (double x : m.data) {
    if (!std::isfinite(x)) return false;
  }
  return true;
}

}  // namespace higine
