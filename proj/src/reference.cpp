#include "higine/reference.hpp"

#include <algorithm>
#include <cmath>

namespace higine::reference {

void matmul_serial(const Matrix& a, const Matrix& b, Matrix& out) {
  out = Matrix(a.rows, b.cols);
  for (int i = 0; i < a.rows; ++i) {
    for (int t = 0; t < a.cols; ++t) {
      const double av = a.at(i, t);
      if (av == 0.0) continue;
      for (int j = 0; j < b.cols; ++j) out.at(i, j) += av * b.at(t, j);
    }
  }
}

std::vector<EdgeRecord> radius_edges_bruteforce(const Matrix& coords, double radius,
                                                double min_distance) {
  std::vector<EdgeRecord> edges;
  const int n = coords.rows;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      const double dx = coords.at(u, 0) - coords.at(v, 0);
      const double dy = coords.at(u, 1) - coords.at(v, 1);
      const double d = std::sqrt(dx * dx + dy * dy);
      if (d > radius) continue;
      edges.push_back({u, v, 1.0 / std::max(d, min_distance)});
    }
  }
  return edges;
}

std::vector<std::pair<int, int>> knn_bruteforce(const Matrix& coords, int k) {
  std::vector<std::pair<int, int>> out;
  const int n = coords.rows;
  for (int u = 0; u < n; ++u) {
    std::vector<std::pair<double, int>> cand;
    cand.reserve(static_cast<size_t>(n) - 1);
    for (int v = 0; v < n; ++v) {
      if (v == u) continue;
      const double dx = coords.at(u, 0) - coords.at(v, 0);
      const double dy = coords.at(u, 1) - coords.at(v, 1);
      cand.emplace_back(dx * dx + dy * dy, v);
    }
    std::sort(cand.begin(), cand.end());
    const int kk = std::min<int>(k, static_cast<int>(cand.size()));
    for (int i = 0; i < kk; ++i) out.emplace_back(u, cand[static_cast<size_t>(i)].second);
  }
  return out;
}

void scatter_sum_serial(const Matrix& messages, const std::vector<int>& target, int n_out,
                        Matrix& out) {
  out = Matrix(n_out, messages.cols);
  for (int i = 0; i < messages.rows; ++i) {
    const int j = target[static_cast<size_t>(i)];
    for (int c = 0; c < messages.cols; ++c) out.at(j, c) += messages.at(i, c);
  }
}

}  // namespace higine::reference
