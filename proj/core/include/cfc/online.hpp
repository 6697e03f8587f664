#ifndef CFC_ONLINE_HPP
#define CFC_ONLINE_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "cfc/coloring.hpp"
#include "cfc/degeneracy.hpp"

namespace cfc {

enum class OrderKind { sorted, reverse, random, midpoint_first, custom };
enum class Strategy { first_fit, random_fit };

std::string to_string(OrderKind kind);
std::string to_string(Strategy s);
OrderKind order_from_string(std::string_view text);
Strategy strategy_from_string(std::string_view text);

// Arrival order of 1..n. `custom` has no generator and is rejected here;
// build an Arrival directly instead.
Arrival generate_arrival(int n, OrderKind kind, std::uint64_t seed);

// Reference curve log_{1+1/(4q+1)}(n) with q = k+1.
double online_bound(int n, int k);

struct TrialReport {
  std::vector<int> arrival;         // order as presented
  Strategy strategy = Strategy::first_fit;
  int k = 1;
  Coloring final;                   // by position, 1..n
  int colors_used = 0;
  std::vector<int> safe_set_sizes;  // per arrival, within {1..max_used+1}
  int q = 0;                        // degeneracy degree behind the bound
  double bound = 0.0;
};

// Colors points in arrival order, keeping the present-point subsequence
// k-CF after every step. A fresh color is always safe; its absence from
// the safe set is an internal error.
TrialReport online_color(const Arrival& arrival, int k, Strategy strategy,
                         std::uint64_t seed);

struct CellSpec {
  int n = 0;
  int k = 1;
  OrderKind order = OrderKind::sorted;
  Strategy strategy = Strategy::first_fit;
};

struct CellStats {
  CellSpec spec;
  int trials = 0;
  std::uint64_t seed = 0;
  int colors_min = 0;
  int colors_max = 0;
  double colors_mean = 0.0;
  double colors_p95 = 0.0;  // nearest-rank 95th percentile
  double bound = 0.0;
  double ratio_mean = 0.0;  // colors_mean / bound; 0 when bound is 0
  std::vector<int> per_trial;
};

struct ExperimentReport {
  std::uint64_t seed = 0;
  int trials = 0;
  std::vector<CellStats> cells;
};

// Full factorial over the given axes; trial RNG streams are derived from
// (seed, cell index, trial index), so results do not depend on the number
// of workers. CFC_THREADS caps worker parallelism.
ExperimentReport run_experiment(const std::vector<int>& ns,
                                const std::vector<int>& ks,
                                const std::vector<OrderKind>& orders,
                                const std::vector<Strategy>& strategies,
                                int trials, std::uint64_t seed);

std::string experiment_csv(const ExperimentReport& report);
std::string experiment_json(const ExperimentReport& report);

int worker_cap();

}  // namespace cfc

#endif
