#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace ncsimo {

struct KnnOptions {
  int k = 4;
  // 0 means every point is a query point.
  std::size_t max_queries = 0;
  std::uint64_t seed = 0;
};

// Kozachenko-Leonenko differential entropy estimate, in bits. `points` holds
// n rows of `dim` reals each. Neighbour search is exact (kd-tree).
double knn_entropy_bits(const std::vector<double>& points, int dim, const KnnOptions& opts = {});

}  // namespace ncsimo
