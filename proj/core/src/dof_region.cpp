#include "ncsimo/dof_region.hpp"

#include <algorithm>
#include <sstream>

#include "ncsimo/error.hpp"

namespace ncsimo {

std::string to_string(const Rational& q) {
  return std::to_string(q.numerator()) + "/" + std::to_string(q.denominator());
}

double to_double(const Rational& q) {
  return static_cast<double>(q.numerator()) / static_cast<double>(q.denominator());
}

namespace {

const Rational kZero(0);

bool point_less(const RationalPoint& a, const RationalPoint& b) {
  return a.d1 < b.d1 || (a.d1 == b.d1 && a.d2 < b.d2);
}

Rational cross(const RationalPoint& o, const RationalPoint& a, const RationalPoint& b) {
  return (a.d1 - o.d1) * (b.d2 - o.d2) - (a.d2 - o.d2) * (b.d1 - o.d1);
}

// Counterclockwise hull without collinear points, starting at the origin when
// the origin is a vertex (lowest-leftmost point otherwise).
std::vector<RationalPoint> hull(std::vector<RationalPoint> pts) {
  std::sort(pts.begin(), pts.end(), point_less);
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.size() <= 2) return pts;
  std::vector<RationalPoint> h(2 * pts.size());
  std::size_t k = 0;
  for (const auto& p : pts) {
    while (k >= 2 && cross(h[k - 2], h[k - 1], p) <= kZero) --k;
    h[k++] = p;
  }
  for (std::size_t i = pts.size() - 1, lower = k + 1; i-- > 0;) {
    while (k >= lower && cross(h[k - 2], h[k - 1], pts[i]) <= kZero) --k;
    h[k++] = pts[i];
  }
  h.resize(k - 1);
  const RationalPoint origin{kZero, kZero};
  auto it = std::find(h.begin(), h.end(), origin);
  if (it != h.end()) std::rotate(h.begin(), it, h.end());
  return h;
}

bool satisfies(const std::vector<Halfspace>& hs, const RationalPoint& p) {
  if (p.d1 < kZero || p.d2 < kZero) return false;
  for (const auto& h : hs) {
    if (h.a1 * p.d1 + h.a2 * p.d2 > h.b) return false;
  }
  return true;
}

Halfspace normalized(Rational a1, Rational a2, Rational b) {
  const Rational s = std::max(abs(a1), abs(a2));
  return {a1 / s, a2 / s, b / s};
}

}  // namespace

DofRegion region_from_halfspaces(std::vector<Halfspace> halfspaces) {
  std::vector<Halfspace> lines = halfspaces;
  lines.push_back({Rational(1), kZero, kZero});  // d1 = 0
  lines.push_back({kZero, Rational(1), kZero});  // d2 = 0
  std::vector<RationalPoint> candidates;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    for (std::size_t j = i + 1; j < lines.size(); ++j) {
      const Halfspace& p = lines[i];
      const Halfspace& q = lines[j];
      const Rational det = p.a1 * q.a2 - p.a2 * q.a1;
      if (det == kZero) continue;
      const RationalPoint x{(p.b * q.a2 - p.a2 * q.b) / det, (p.a1 * q.b - p.b * q.a1) / det};
      if (satisfies(halfspaces, x)) candidates.push_back(x);
    }
  }
  DofRegion r;
  r.halfspaces = std::move(halfspaces);
  r.vertices = hull(std::move(candidates));
  return r;
}

DofRegion region_from_points(const std::vector<RationalPoint>& points) {
  std::vector<RationalPoint> pts = points;
  pts.push_back({kZero, kZero});
  DofRegion r;
  r.vertices = hull(pts);
  const auto& v = r.vertices;
  if (v.size() == 1) {
    r.halfspaces.push_back({Rational(1), Rational(1), kZero});
    return r;
  }
  for (std::size_t i = 0; i < v.size(); ++i) {
    const RationalPoint& p = v[i];
    const RationalPoint& q = v[(i + 1) % v.size()];
    if ((p.d1 == kZero && q.d1 == kZero) || (p.d2 == kZero && q.d2 == kZero)) continue;
    const Rational a1 = q.d2 - p.d2;
    const Rational a2 = p.d1 - q.d1;
    r.halfspaces.push_back(normalized(a1, a2, a1 * p.d1 + a2 * p.d2));
  }
  return r;
}

DofRegion outer_region(int T, int N) {
  if (T < 1 || N < 1) throw Error(ErrorKind::InvalidParam, "T and N must be positive");
  const Rational rhs = Rational(1) - Rational(1, T);
  if (T <= 2 || N == 1) return region_from_halfspaces({{Rational(1), Rational(1), rhs}});
  const Rational w(1, T - 2);
  return region_from_halfspaces({{w, Rational(1), rhs}, {Rational(1), w, rhs}});
}


bool regions_equal(const DofRegion& a, const DofRegion& b) {
  auto va = a.vertices;
  auto vb = b.vertices;
  std::sort(va.begin(), va.end(), point_less);
  std::sort(vb.begin(), vb.end(), point_less);
  return va == vb;
}

bool membership(const DofRegion& region, const Rational& d1, const Rational& d2) {
  return satisfies(region.halfspaces, {d1, d2});
}

std::vector<RationalPoint> polygon_export(const DofRegion& region) { return region.vertices; }

std::string polygon_csv(const DofRegion& region) {
  std::ostringstream out;
  for (const auto& p : polygon_export(region)) out << to_string(p.d1) << ',' << to_string(p.d2) << '\n';
  return out.str();
}

void validate(const WeightPair& w) {
  if (w.lambda1 < kZero || w.lambda2 < kZero) throw Error(ErrorKind::InvalidParam, "weights must be nonnegative");
  if (w.lambda1 == kZero && w.lambda2 == kZero) throw Error(ErrorKind::InvalidParam, "weights are both zero");
}

Rational max_weighted_sum(const DofRegion& region, const WeightPair& w) {
  validate(w);
  if (region.vertices.empty()) throw Error(ErrorKind::InvalidParam, "region has no vertices");
  Rational best = w.lambda1 * region.vertices.front().d1 + w.lambda2 * region.vertices.front().d2;
  for (const auto& v : region.vertices) best = std::max(best, w.lambda1 * v.d1 + w.lambda2 * v.d2);
  return best;
}

}  // namespace ncsimo
