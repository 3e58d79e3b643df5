#pragma once

// Serial reference implementations kept for testing and benchmarking. These
// are deliberately naive O(n^2) / triple-loop routines: the production
// kernels must reproduce them bit for bit on the same inputs. Not used by
// the pipeline itself.

#include <utility>
#include <vector>

#include "higine/matrix.hpp"

namespace higine::reference {

void matmul_serial(const Matrix& a, const Matrix& b, Matrix& out);

// All unordered pairs (u < v) with 0 < dist <= radius, weight
// 1 / max(dist, min_distance), by exhaustive pairwise scan.
struct EdgeRecord {
  int u, v;
  double weight;
};
std::vector<EdgeRecord> radius_edges_bruteforce(const Matrix& coords, double radius,
                                                double min_distance);

// Directed k-nearest-neighbour lists, ties broken by lower index.
std::vector<std::pair<int, int>> knn_bruteforce(const Matrix& coords, int k);

// out[j] = sum of message rows i with target[i] == j, in message order.
void scatter_sum_serial(const Matrix& messages, const std::vector<int>& target, int n_out,
                        Matrix& out);

}  // namespace higine::reference
