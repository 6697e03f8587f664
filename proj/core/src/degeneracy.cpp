#include "cfc/degeneracy.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "cfc/rng.hpp"

namespace cfc {

Arrival::Arrival(std::vector<int> order) : order_(std::move(order)) {
  if (order_.empty()) throw std::invalid_argument("Arrival: empty order");
  std::vector<char> seen(order_.size() + 1, 0);
  for (int v : order_) {
    if (v < 1 || static_cast<size_t>(v) > order_.size() || seen[v])
      throw std::invalid_argument("Arrival: not a permutation of 1..n");
    seen[v] = 1;
  }
}

namespace {

// Windows of k+1 consecutive ranks containing rank r in a set of size s.
int degree_at_rank(int r, int s, int k) {
  int lo = std::max(0, r - k);
  int hi = std::min(r, s - (k + 1));
  return hi >= lo ? hi - lo + 1 : 0;
}

}  // namespace

int insertion_degree(const PointSet& s, int v, int k) {
  if (k < 1) throw std::invalid_argument("insertion_degree: k must be >= 1");
  int r = s.rank_of(v);
  if (r < 0) throw std::invalid_argument("insertion_degree: v not in set");
  return degree_at_rank(r, s.size(), k);
}

long long degeneracy_sum(const Arrival& a, int k, int t) {
  if (k < 1) throw std::invalid_argument("degeneracy_sum: k must be >= 1");
  if (t < 1 || t > a.n())
    throw std::invalid_argument("degeneracy_sum: t out of range");
  std::vector<int> prefix;
  long long sum = 0;
  for (int j = 0; j < t; ++j) {
    auto it = std::lower_bound(prefix.begin(), prefix.end(), a[j]);
    int r = static_cast<int>(it - prefix.begin());
    prefix.insert(it, a[j]);
    sum += degree_at_rank(r, static_cast<int>(prefix.size()), k);
  }
  return sum;
}

DegeneracyResult degeneracy_check(int n, int k, int q,
                                  const DegeneracyOptions& opt) {
  if (n < 1) throw std::invalid_argument("degeneracy_check: n must be >= 1");
  if (k < 1) throw std::invalid_argument("degeneracy_check: k must be >= 1");
  if (q < 0) throw std::invalid_argument("degeneracy_check: q must be >= 0");

  DegeneracyResult res;

  // Walks one order; fills the witness and returns false on violation.
  auto check_order = [&](const std::vector<int>& order) {
    std::vector<int> prefix;
    prefix.reserve(static_cast<size_t>(n));
    long long sum = 0;
    for (int j = 0; j < n; ++j) {
      auto it = std::lower_bound(prefix.begin(), prefix.end(), order[j]);
      int r = static_cast<int>(it - prefix.begin());
      prefix.insert(it, order[j]);
      sum += degree_at_rank(r, static_cast<int>(prefix.size()), k);
      long long budget = static_cast<long long>(q) * (j + 1);
      if (sum > budget) {
        res.witness = DegeneracyWitness{order, j + 1, sum, budget};
        return false;
      }
    }
    return true;
  };

  if (opt.mode == DegeneracyMode::exhaustive) {
    if (n > opt.exhaustive_cap)
      throw std::invalid_argument(
          "degeneracy_check: n exceeds exhaustive cap; use sampled mode");
    std::vector<int> order(static_cast<size_t>(n));
    std::iota(order.begin(), order.end(), 1);
    do {
      ++res.orders_checked;
      if (!check_order(order)) {
        res.holds = false;
        return res;
      }
    } while (std::next_permutation(order.begin(), order.end()));
    res.certified = true;
    return res;
  }

  if (opt.samples < 1)
    throw std::invalid_argument("degeneracy_check: samples must be >= 1");
  for (int s = 0; s < opt.samples; ++s) {
    std::vector<int> order(static_cast<size_t>(n));
    std::iota(order.begin(), order.end(), 1);
    Stream stream(derive_seed(opt.seed, 0x64656700ULL, static_cast<std::uint64_t>(s)));
    stream.shuffle(order);
    ++res.orders_checked;
    if (!check_order(order)) {
      res.holds = false;
      return res;
    }
  }
  return res;
}

}  // namespace cfc
