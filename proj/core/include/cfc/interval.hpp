#ifndef CFC_INTERVAL_HPP
#define CFC_INTERVAL_HPP

#include <compare>
#include <vector>

namespace cfc {

// Closed run of consecutive points, 1-based.
struct Interval {
  int lo = 1;
  int hi = 1;

  int size() const { return hi - lo + 1; }
  bool contains(int v) const { return lo <= v && v <= hi; }

  friend bool operator==(const Interval&, const Interval&) = default;
  friend auto operator<=>(const Interval&, const Interval&) = default;
};

// All nonempty intervals of {1..n} in (lo, hi) lexicographic order.
// There are n*(n+1)/2 of them.
std::vector<Interval> intervals(int n);

// Strictly increasing set of point positions.
class PointSet {
 public:
  PointSet() = default;
  explicit PointSet(std::vector<int> points);

  static PointSet from_unsorted(std::vector<int> points);

  int size() const { return static_cast<int>(points_.size()); }
  bool empty() const { return points_.empty(); }
  int operator[](int i) const { return points_[static_cast<size_t>(i)]; }
  const std::vector<int>& points() const { return points_; }

  // 0-based rank of v; -1 if absent.
  int rank_of(int v) const;

  friend bool operator==(const PointSet&, const PointSet&) = default;

 private:
  std::vector<int> points_;
};

// Size-m hyperedges induced on s: every run of m elements consecutive in s.
// Empty when m > |s|.
std::vector<PointSet> induced_edges(const PointSet& s, int m);

}  // namespace cfc

#endif
