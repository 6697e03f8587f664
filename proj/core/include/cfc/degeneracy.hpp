#ifndef CFC_DEGENERACY_HPP
#define CFC_DEGENERACY_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "cfc/interval.hpp"

namespace cfc {

// Arrival order: a permutation of 1..n.
class Arrival {
 public:
  explicit Arrival(std::vector<int> order);

  int n() const { return static_cast<int>(order_.size()); }
  int operator[](int i) const { return order_[static_cast<size_t>(i)]; }
  const std::vector<int>& order() const { return order_; }

  friend bool operator==(const Arrival&, const Arrival&) = default;

 private:
  std::vector<int> order_;
};

// Number of (k+1)-point runs of s (consecutive in s) containing v; v in s.
int insertion_degree(const PointSet& s, int v, int k);

// Sum of insertion degrees over the first t arrivals.
long long degeneracy_sum(const Arrival& a, int k, int t);

enum class DegeneracyMode { exhaustive, sampled };

struct DegeneracyOptions {
  DegeneracyMode mode = DegeneracyMode::exhaustive;
  int samples = 1000;
  std::uint64_t seed = 0;
  int exhaustive_cap = 8;
};

struct DegeneracyWitness {
  std::vector<int> order;
  int t = 0;
  long long sum = 0;     // observed degeneracy sum at t
  long long budget = 0;  // q * t
};

struct DegeneracyResult {
  bool holds = true;
  std::optional<DegeneracyWitness> witness;
  std::uint64_t orders_checked = 0;
  bool certified = false;  // true only for a completed exhaustive run
};

// Checks degeneracy_sum(pi, k, t) <= q*t over arrival orders of 1..n.
// Exhaustive mode refuses n above the configured cap.
DegeneracyResult degeneracy_check(int n, int k, int q,
                                  const DegeneracyOptions& opt = {});

}  // namespace cfc

#endif
