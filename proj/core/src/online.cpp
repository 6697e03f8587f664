#include "cfc/online.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "json.hpp"

#include "cfc/errors.hpp"
#include "cfc/rng.hpp"

namespace cfc {

std::string to_string(OrderKind kind) {
  switch (kind) {
    case OrderKind::sorted: return "sorted";
    case OrderKind::reverse: return "reverse";
    case OrderKind::random: return "random";
    case OrderKind::midpoint_first: return "midpoint-first";
    case OrderKind::custom: return "custom";
  }
  throw std::invalid_argument("to_string: bad order kind");
}

std::string to_string(Strategy s) {
  switch (s) {
    case Strategy::first_fit: return "first-fit";
    case Strategy::random_fit: return "random-fit";
  }
  throw std::invalid_argument("to_string: bad strategy");
}

OrderKind order_from_string(std::string_view text) {
  if (text == "sorted") return OrderKind::sorted;
  if (text == "reverse") return OrderKind::reverse;
  if (text == "random") return OrderKind::random;
  if (text == "midpoint-first") return OrderKind::midpoint_first;
  if (text == "custom") return OrderKind::custom;
  throw std::invalid_argument(
      "order_from_string: expected sorted|reverse|random|midpoint-first|custom");
}

Strategy strategy_from_string(std::string_view text) {
  if (text == "first-fit") return Strategy::first_fit;
  if (text == "random-fit") return Strategy::random_fit;
  throw std::invalid_argument(
      "strategy_from_string: expected first-fit|random-fit");
}

Arrival generate_arrival(int n, OrderKind kind, std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("generate_arrival: n must be >= 1");
  std::vector<int> order(static_cast<size_t>(n));
  switch (kind) {
    case OrderKind::sorted:
      std::iota(order.begin(), order.end(), 1);
      break;
    case OrderKind::reverse:
      for (int i = 0; i < n; ++i) order[static_cast<size_t>(i)] = n - i;
      break;
    case OrderKind::random: {
      std::iota(order.begin(), order.end(), 1);
      Stream stream(derive_seed(seed, 0x6172726976ULL, 0));
      stream.shuffle(order);
      break;
    }
    case OrderKind::midpoint_first: {
      // Repeatedly split the largest gap of unplaced points at its
      // midpoint; ties go to the leftmost gap.
      struct Gap {
        int lo, hi;
      };
      std::vector<Gap> gaps = {{1, n}};
      order.clear();
      while (!gaps.empty()) {
        size_t pick = 0;
        for (size_t i = 1; i < gaps.size(); ++i) {
          int best = gaps[pick].hi - gaps[pick].lo;
          int cand = gaps[i].hi - gaps[i].lo;
          if (cand > best || (cand == best && gaps[i].lo < gaps[pick].lo))
            pick = i;
        }
        Gap g = gaps[pick];
        gaps.erase(gaps.begin() + static_cast<long>(pick));
        int mid = (g.lo + g.hi) / 2;
        order.push_back(mid);
        if (mid - 1 >= g.lo) gaps.push_back({g.lo, mid - 1});
        if (mid + 1 <= g.hi) gaps.push_back({mid + 1, g.hi});
      }
      break;
    }
    case OrderKind::custom:
      throw std::invalid_argument(
          "generate_arrival: custom order has no generator");
  }
  return Arrival(std::move(order));
}

double online_bound(int n, int k) {
  if (n < 1) throw std::invalid_argument("online_bound: n must be >= 1");
  if (k < 1) throw std::invalid_argument("online_bound: k must be >= 1");
  const int q = k + 1;
  return std::log(static_cast<double>(n)) / std::log(1.0 + 1.0 / (4.0 * q + 1.0));
}

namespace {

// Safe-color set for the point at sorted index idx among t present points
// (the new point itself carries no color yet). Only windows containing idx
// can change; each previously complete window keeps a low-count color, so a
// candidate c is unsafe exactly when some window's only low color is c with
// count already k.
class SafeScan {
 public:
  explicit SafeScan(int k) : k_(k) {}

  void resize(int colors) {
    if (static_cast<int>(cnt_.size()) < colors + 2) {
      cnt_.resize(static_cast<size_t>(colors) + 2, 0);
      stamp_.resize(static_cast<size_t>(colors) + 2, 0);
    }
  }

  // col[] aligned with sorted positions; col[idx] ignored.
  void run(const std::vector<int>& col, int idx, int max_used,
           std::vector<char>& unsafe) {
    const int t = static_cast<int>(col.size());
    unsafe.assign(static_cast<size_t>(max_used) + 2, 0);
    ++epoch_;
    low_ = 0;
    lowsum_ = 0;
    for (int i = idx; i >= 0; --i) {
      if (i < idx) add(col[static_cast<size_t>(i)]);
      for (int j = idx; j < t; ++j) {
        if (j > idx) add(col[static_cast<size_t>(j)]);
        if (i == idx && j == idx) continue;  // the lone new point
        if (low_ == 0)
          throw integrity_error("online: present configuration lost k-CF");
        if (low_ == 1) {
          int a = static_cast<int>(lowsum_);
          if (cnt_[static_cast<size_t>(a)] == k_)
            unsafe[static_cast<size_t>(a)] = 1;
        }
      }
      for (int j = t - 1; j > idx; --j) remove(col[static_cast<size_t>(j)]);
    }
    if (unsafe[static_cast<size_t>(max_used) + 1])
      throw integrity_error("online: fresh color marked unsafe");
  }

 private:
  void add(int color) {
    if (stamp_[static_cast<size_t>(color)] != epoch_) {
      stamp_[static_cast<size_t>(color)] = epoch_;
      cnt_[static_cast<size_t>(color)] = 0;
    }
    int& cn = cnt_[static_cast<size_t>(color)];
    if (cn == 0) {
      ++low_;
      lowsum_ += color;
    } else if (cn == k_) {
      --low_;
      lowsum_ -= color;
    }
    ++cn;
  }

  void remove(int color) {
    int& cn = cnt_[static_cast<size_t>(color)];
    --cn;
    if (cn == 0) {
      --low_;
      lowsum_ -= color;
    } else if (cn == k_) {
      ++low_;
      lowsum_ += color;
    }
  }

  int k_;
  std::vector<int> cnt_;
  std::vector<std::uint64_t> stamp_;
  std::uint64_t epoch_ = 0;
  int low_ = 0;
  long long lowsum_ = 0;
};

}  // namespace

TrialReport online_color(const Arrival& arrival, int k, Strategy strategy,
                         std::uint64_t seed) {
  if (k < 1) throw std::invalid_argument("online_color: k must be >= 1");
  const int n = arrival.n();

  std::vector<int> pos;
  std::vector<int> col;
  pos.reserve(static_cast<size_t>(n));
  col.reserve(static_cast<size_t>(n));

  SafeScan scan(k);
  Stream stream(derive_seed(seed, 0x6f6e6c696eULL, 1));
  std::vector<char> unsafe;
  std::vector<int> safe;

  TrialReport report;
  report.arrival = arrival.order();
  report.strategy = strategy;
  report.k = k;
  report.q = k + 1;
  report.safe_set_sizes.reserve(static_cast<size_t>(n));

  int max_used = 0;
  for (int step = 0; step < n; ++step) {
    const int v = arrival[step];
    auto it = std::lower_bound(pos.begin(), pos.end(), v);
    const int idx = static_cast<int>(it - pos.begin());
    pos.insert(it, v);
    col.insert(col.begin() + idx, 0);

    scan.resize(max_used + 2);
    scan.run(col, idx, max_used, unsafe);

    safe.clear();
    for (int c = 1; c <= max_used + 1; ++c)
      if (!unsafe[static_cast<size_t>(c)]) safe.push_back(c);
    report.safe_set_sizes.push_back(static_cast<int>(safe.size()));

    int chosen = strategy == Strategy::first_fit
                     ? safe.front()
                     : safe[static_cast<size_t>(
                           stream.below(static_cast<int>(safe.size())))];
    col[static_cast<size_t>(idx)] = chosen;
    max_used = std::max(max_used, chosen);
  }

  // pos is now 1..n, so col is already in position order.
  report.final = Coloring(col);
  report.colors_used = report.final.colors_used();
  report.bound = online_bound(n, k);
  return report;
}

int worker_cap() {
  unsigned hw = std::thread::hardware_concurrency();
  if (hw == 0) hw = 1;
  if (const char* env = std::getenv("CFC_THREADS")) {
    long v = std::strtol(env, nullptr, 10);
    if (v >= 1 && v < 1024) return static_cast<int>(v);
  }
  return static_cast<int>(hw);
}

ExperimentReport run_experiment(const std::vector<int>& ns,
                                const std::vector<int>& ks,
                                const std::vector<OrderKind>& orders,
                                const std::vector<Strategy>& strategies,
                                int trials, std::uint64_t seed) {
  if (trials < 1)
    throw std::invalid_argument("run_experiment: trials must be >= 1");
  if (ns.empty() || ks.empty() || orders.empty() || strategies.empty())
    throw std::invalid_argument("run_experiment: empty axis");
  for (OrderKind o : orders)
    if (o == OrderKind::custom)
      throw std::invalid_argument("run_experiment: custom order unsupported");

  ExperimentReport report;
  report.seed = seed;
  report.trials = trials;

  std::vector<CellSpec> specs;
  for (int n : ns)
    for (int k : ks)
      for (OrderKind o : orders)
        for (Strategy s : strategies) specs.push_back({n, k, o, s});

  struct Task {
    size_t cell;
    int trial;
  };
  std::vector<Task> tasks;
  tasks.reserve(specs.size() * static_cast<size_t>(trials));
  for (size_t ci = 0; ci < specs.size(); ++ci)
    for (int tr = 0; tr < trials; ++tr) tasks.push_back({ci, tr});

  std::vector<std::vector<int>> results(specs.size(),
                                        std::vector<int>(static_cast<size_t>(trials), 0));

  const int workers =
      std::max(1, std::min<int>(worker_cap(), static_cast<int>(tasks.size())));
  std::atomic<size_t> next{0};
  auto work = [&]() {
    for (;;) {
      size_t i = next.fetch_add(1);
      if (i >= tasks.size()) return;
      const Task& task = tasks[i];
      const CellSpec& spec = specs[task.cell];
      std::uint64_t cell_seed =
          derive_seed(seed, static_cast<std::uint64_t>(task.cell),
                      static_cast<std::uint64_t>(task.trial));
      Arrival arrival = generate_arrival(spec.n, spec.order, cell_seed);
      TrialReport tr = online_color(arrival, spec.k, spec.strategy, cell_seed);
      results[task.cell][static_cast<size_t>(task.trial)] = tr.colors_used;
    }
  };
  if (workers == 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(static_cast<size_t>(workers));
    for (int w = 0; w < workers; ++w) pool.emplace_back(work);
    for (auto& th : pool) th.join();
  }

  for (size_t ci = 0; ci < specs.size(); ++ci) {
    CellStats stats;
    stats.spec = specs[ci];
    stats.trials = trials;
    stats.seed = seed;
    stats.per_trial = results[ci];
    std::vector<int> sorted = results[ci];
    std::sort(sorted.begin(), sorted.end());
    stats.colors_min = sorted.front();
    stats.colors_max = sorted.back();
    double sum = std::accumulate(sorted.begin(), sorted.end(), 0.0);
    stats.colors_mean = sum / trials;
    size_t rank = static_cast<size_t>(
        std::ceil(0.95 * static_cast<double>(trials)));  // nearest-rank
    stats.colors_p95 = sorted[rank - 1];
    stats.bound = online_bound(specs[ci].n, specs[ci].k);
    stats.ratio_mean = stats.bound > 0.0 ? stats.colors_mean / stats.bound : 0.0;
    report.cells.push_back(std::move(stats));
  }
  return report;
}

namespace {

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6g", v);
  return buf;
}

}  // namespace

std::string experiment_csv(const ExperimentReport& report) {
  std::ostringstream out;
  out << "n,k,order,strategy,trials,seed,colors_min,colors_mean,colors_max,"
         "colors_p95,bound,ratio_mean\n";
  for (const CellStats& c : report.cells) {
    out << c.spec.n << ',' << c.spec.k << ',' << to_string(c.spec.order) << ','
        << to_string(c.spec.strategy) << ',' << c.trials << ',' << c.seed
        << ',' << c.colors_min << ',' << fmt(c.colors_mean) << ','
        << c.colors_max << ',' << fmt(c.colors_p95) << ',' << fmt(c.bound)
        << ',' << fmt(c.ratio_mean) << '\n';
  }
  return out.str();
}

std::string experiment_json(const ExperimentReport& report) {
  nlohmann::ordered_json j;
  j["schema_version"] = 1;
  j["seed"] = report.seed;
  j["trials"] = report.trials;
  j["cells"] = nlohmann::ordered_json::array();
  for (const CellStats& c : report.cells) {
    nlohmann::ordered_json cell;
    cell["n"] = c.spec.n;
    cell["k"] = c.spec.k;
    cell["order"] = to_string(c.spec.order);
    cell["strategy"] = to_string(c.spec.strategy);
    cell["trials"] = c.trials;
    cell["seed"] = c.seed;
    cell["colors_min"] = c.colors_min;
    cell["colors_mean"] = c.colors_mean;
    cell["colors_max"] = c.colors_max;
    cell["colors_p95"] = c.colors_p95;
    cell["bound"] = c.bound;
    cell["ratio_mean"] = c.ratio_mean;
    cell["per_trial"] = c.per_trial;
    j["cells"].push_back(std::move(cell));
  }
  return j.dump();
}

}  // namespace cfc
