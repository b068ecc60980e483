#include "ncsimo/knn_entropy.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <queue>

#include <boost/math/special_functions/digamma.hpp>
#include <boost/math/special_functions/gamma.hpp>

#include "ncsimo/error.hpp"
#include "ncsimo/random.hpp"

namespace ncsimo {
namespace {

constexpr std::size_t kLeafSize = 16;

struct Node {
  std::size_t begin = 0;
  std::size_t end = 0;
  int split_dim = -1;
  double split = 0.0;
  int left = -1;
  int right = -1;
};

class KdTree {
 public:
  KdTree(const std::vector<double>& pts, int dim) : pts_(pts), dim_(dim) {
    const std::size_t n = pts.size() / static_cast<std::size_t>(dim);
    index_.resize(n);
    std::iota(index_.begin(), index_.end(), std::size_t{0});
    nodes_.reserve(2 * n / kLeafSize + 2);
    build(0, n);
  }

  // Distance to the k-th nearest neighbour of point q, excluding q itself.
  double kth_distance(std::size_t q, int k) const {
    std::priority_queue<double> best;  // max-heap of squared distances
    search(0, q, static_cast<std::size_t>(k), best);
    return std::sqrt(best.top());
  }

 private:
  const double* at(std::size_t i) const { return pts_.data() + i * static_cast<std::size_t>(dim_); }

  int build(std::size_t begin, std::size_t end) {
    const int id = static_cast<int>(nodes_.size());
    nodes_.push_back({begin, end, -1, 0.0, -1, -1});
    if (end - begin <= kLeafSize) return id;
    int best_dim = 0;
    double best_spread = -1.0;
    for (int d = 0; d < dim_; ++d) {
      double lo = at(index_[begin])[d];
      double hi = lo;
      for (std::size_t i = begin + 1; i < end; ++i) {
        const double v = at(index_[i])[d];
        lo = std::min(lo, v);
        hi = std::max(hi, v);
      }
      if (hi - lo > best_spread) {
        best_spread = hi - lo;
        best_dim = d;
      }
    }
    const std::size_t mid = begin + (end - begin) / 2;
    std::nth_element(index_.begin() + static_cast<std::ptrdiff_t>(begin),
                     index_.begin() + static_cast<std::ptrdiff_t>(mid),
                     index_.begin() + static_cast<std::ptrdiff_t>(end),
                     [&](std::size_t a, std::size_t b) { return at(a)[best_dim] < at(b)[best_dim]; });
    const double split = at(index_[mid])[best_dim];
    const int left = build(begin, mid);
    const int right = build(mid, end);
    nodes_[id].split_dim = best_dim;
    nodes_[id].split = split;
    nodes_[id].left = left;
    nodes_[id].right = right;
    return id;
  }

  void search(int node_id, std::size_t q, std::size_t k, std::priority_queue<double>& best) const {
    const Node& node = nodes_[static_cast<std::size_t>(node_id)];
    const double* qp = at(q);
    if (node.split_dim < 0) {
      for (std::size_t i = node.begin; i < node.end; ++i) {
        const std::size_t j = index_[i];
        if (j == q) continue;
        const double* p = at(j);
        double d2 = 0.0;
        for (int d = 0; d < dim_; ++d) {
          const double t = p[d] - qp[d];
          d2 += t * t;
        }
        if (best.size() < k) {
          best.push(d2);
        } else if (d2 < best.top()) {
          best.pop();
          best.push(d2);
        }
      }
      return;
    }
    const double diff = qp[node.split_dim] - node.split;
    const int near = diff < 0.0 ? node.left : node.right;
    const int far = diff < 0.0 ? node.right : node.left;
    search(near, q, k, best);
    if (best.size() < k || diff * diff < best.top()) search(far, q, k, best);
  }

  const std::vector<double>& pts_;
  int dim_;
  std::vector<std::size_t> index_;
  std::vector<Node> nodes_;
};

}  // namespace

double knn_entropy_bits(const std::vector<double>& points, int dim, const KnnOptions& opts) {
  if (dim < 1 || points.size() % static_cast<std::size_t>(dim) != 0) {
    throw Error(ErrorKind::InvalidParam, "point array does not match the dimension");
  }
  const std::size_t n = points.size() / static_cast<std::size_t>(dim);
  if (opts.k < 1 || n <= static_cast<std::size_t>(opts.k)) {
    throw Error(ErrorKind::InvalidParam, "need more points than neighbours");
  }
  KdTree tree(points, dim);

  std::vector<std::size_t> queries(n);
  std::iota(queries.begin(), queries.end(), std::size_t{0});
  if (opts.max_queries > 0 && opts.max_queries < n) {
    Rng rng = make_stream(opts.seed, 0x6b6e6eULL, 0);
    for (std::size_t i = 0; i < opts.max_queries; ++i) {
      const std::size_t j = i + static_cast<std::size_t>(rng() % (n - i));
      std::swap(queries[i], queries[j]);
    }
    queries.resize(opts.max_queries);
  }

  double log_sum = 0.0;
  for (std::size_t q : queries) log_sum += std::log(tree.kth_distance(q, opts.k));
  const double d = static_cast<double>(dim);
  const double log_unit_ball = 0.5 * d * std::log(M_PI) - boost::math::lgamma(0.5 * d + 1.0);
  const double nats = boost::math::digamma(static_cast<double>(n)) -
                      boost::math::digamma(static_cast<double>(opts.k)) + log_unit_ball +
                      d * log_sum / static_cast<double>(queries.size());
  return nats / std::log(2.0);
}

}  // namespace ncsimo
