#include "cfc/interval.hpp"

#include <algorithm>
#include <stdexcept>

namespace cfc {

std::vector<Interval> intervals(int n) {
  if (n < 1) throw std::invalid_argument("intervals: n must be >= 1");
  std::vector<Interval> out;
  out.reserve(static_cast<size_t>(n) * (n + 1) / 2);
  for (int lo = 1; lo <= n; ++lo)
    for (int hi = lo; hi <= n; ++hi) out.push_back({lo, hi});
  return out;
}

PointSet::PointSet(std::vector<int> points) : points_(std::move(points)) {
  for (size_t i = 0; i < points_.size(); ++i) {
    if (points_[i] < 1)
      throw std::invalid_argument("PointSet: points must be >= 1");
    if (i > 0 && points_[i] <= points_[i - 1])
      throw std::invalid_argument("PointSet: points must be strictly increasing");
  }
}

PointSet PointSet::from_unsorted(std::vector<int> points) {
  std::sort(points.begin(), points.end());
  return PointSet(std::move(points));
}

int PointSet::rank_of(int v) const {
  auto it = std::lower_bound(points_.begin(), points_.end(), v);
  if (it == points_.end() || *it != v) return -1;
  return static_cast<int>(it - points_.begin());
}

std::vector<PointSet> induced_edges(const PointSet& s, int m) {
  if (m < 1) throw std::invalid_argument("induced_edges: m must be >= 1");
  std::vector<PointSet> out;
  if (m > s.size()) return out;
  out.reserve(static_cast<size_t>(s.size() - m + 1));
  for (int i = 0; i + m <= s.size(); ++i) {
    std::vector<int> run(s.points().begin() + i, s.points().begin() + i + m);
    out.push_back(PointSet(std::move(run)));
  }
  return out;
}

}  // namespace cfc
