#include "cfc/oracle.hpp"

#include <algorithm>
#include <chrono>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

#include "cfc/errors.hpp"
#include "cfc/formulas.hpp"

namespace cfc {

namespace {

using Clock = std::chrono::steady_clock;

struct Search {
  int k = 1;
  int m = 1;
  Mode mode = Mode::kscf;
  int stop_depth = -1;  // early exit for feasibility runs; -1 = exhaust
  SearchLimits limits;

  std::vector<int> c;
  std::vector<int> cnt;
  std::vector<std::uint64_t> stamp;
  std::uint64_t epoch = 0;

  std::uint64_t nodes = 0;
  bool capped = false;
  bool found = false;
  int best_depth = 0;
  std::vector<int> best;
  Clock::time_point t0;

  Search(int k_, int m_, Mode mode_, int stop, const SearchLimits& lim)
      : k(k_), m(m_), mode(mode_), stop_depth(stop), limits(lim) {
    c.resize(64);
    cnt.assign(static_cast<size_t>(m) + 1, 0);
    stamp.assign(static_cast<size_t>(m) + 1, 0);
    t0 = Clock::now();
  }

  std::int64_t elapsed_ms() const {
    return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() -
                                                                 t0)
        .count();
  }

  // All intervals ending at position j are final once j is colored;
  // sweep left ends from j downward and fail fast.
  bool windows_ok(int j) {
    ++epoch;
    if (mode == Mode::kscf) {
      int unique = 0;
      for (int i = j; i >= 0; --i) {
        int col = c[static_cast<size_t>(i)];
        if (stamp[static_cast<size_t>(col)] != epoch) {
          stamp[static_cast<size_t>(col)] = epoch;
          cnt[static_cast<size_t>(col)] = 0;
        }
        int& cn = cnt[static_cast<size_t>(col)];
        if (cn == 0) ++unique;
        else if (cn == 1) --unique;
        ++cn;
        int size = j - i + 1;
        if (size < k ? unique != size : unique < k) return false;
      }
      return true;
    }
    int low = 0;  // colors with count in [1, k]
    for (int i = j; i >= 0; --i) {
      int col = c[static_cast<size_t>(i)];
      if (stamp[static_cast<size_t>(col)] != epoch) {
        stamp[static_cast<size_t>(col)] = epoch;
        cnt[static_cast<size_t>(col)] = 0;
      }
      int& cn = cnt[static_cast<size_t>(col)];
      if (cn == 0) ++low;
      else if (cn == k) --low;
      ++cn;
      if (low < 1) return false;
    }
    return true;
  }

  void dfs(int depth, int used) {
    const int limit = std::min(m, used + 1);
    for (int col = 1; col <= limit; ++col) {
      if (capped || found) return;
      ++nodes;
      if (nodes >= limits.max_nodes ||
          ((nodes & 8191) == 0 && elapsed_ms() >= limits.max_millis)) {
        capped = true;
        return;
      }
      if (static_cast<size_t>(depth) >= c.size()) c.resize(c.size() * 2);
      c[static_cast<size_t>(depth)] = col;
      if (!windows_ok(depth)) continue;
      const int nd = depth + 1;
      if (nd > best_depth) {
        best_depth = nd;
        best.assign(c.begin(), c.begin() + nd);
        if (stop_depth > 0 && nd >= stop_depth) {
          found = true;
          return;
        }
      }
      dfs(nd, std::max(used, col));
    }
  }
};

void check_mode(Mode mode) {
  if (mode != Mode::kscf && mode != Mode::kcf)
    throw std::invalid_argument("oracle: mode must be kscf or kcf");
}

}  // namespace

SearchResult oracle_max_points(int k, int m, Mode mode,
                               const SearchLimits& limits) {
  if (k < 1) throw std::invalid_argument("oracle_max_points: k must be >= 1");
  if (m < 1) throw std::invalid_argument("oracle_max_points: m must be >= 1");
  check_mode(mode);

  Search s(k, m, mode, -1, limits);
  s.dfs(0, 0);

  SearchResult res;
  res.value = s.best_depth;
  res.nodes = s.nodes;
  res.millis = s.elapsed_ms();
  res.exhausted = !s.capped;
  res.lower = s.best_depth;
  res.upper = res.exhausted ? s.best_depth : -1;
  if (s.best_depth > 0) res.witness = Coloring(s.best);
  return res;
}

SearchResult oracle_min_colors(int n, int k, Mode mode,
                               const SearchLimits& limits) {
  if (n < 1) throw std::invalid_argument("oracle_min_colors: n must be >= 1");
  if (k < 1) throw std::invalid_argument("oracle_min_colors: k must be >= 1");
  check_mode(mode);

  SearchResult res;
  const auto t0 = Clock::now();
  std::uint64_t nodes = 0;
  for (int m = 1; m <= n; ++m) {
    SearchLimits rem = limits;
    if (limits.max_nodes <= nodes) {
      res.exhausted = false;
    } else {
      rem.max_nodes = limits.max_nodes - nodes;
      auto spent = std::chrono::duration_cast<std::chrono::milliseconds>(
                       Clock::now() - t0)
                       .count();
      rem.max_millis = limits.max_millis - spent;
      if (rem.max_millis < 1) rem.max_millis = 1;

      Search s(k, m, mode, n, rem);
      s.dfs(0, 0);
      nodes += s.nodes;
      if (s.found) {
        res.value = m;
        res.lower = m;
        res.upper = m;
        res.witness = Coloring(s.best);
        res.nodes = nodes;
        res.millis = std::chrono::duration_cast<std::chrono::milliseconds>(
                         Clock::now() - t0)
                         .count();
        res.exhausted = true;
        return res;
      }
      if (!s.capped) continue;  // m certified infeasible
    }
    // Capped inside phase m: colors < m are ruled out, nothing above is.
    res.value = m;
    res.lower = m;
    res.upper = n;
    res.nodes = nodes;
    res.millis = std::chrono::duration_cast<std::chrono::milliseconds>(
                     Clock::now() - t0)
                     .count();
    res.exhausted = false;
    return res;
  }
  throw integrity_error("oracle_min_colors: rainbow coloring not found");
}

namespace {

std::optional<long long> closed_form_for(int k, int m) {
  if (k == 2 || k == 3) return g_scf_closed(m, k);
  if (m <= k) return m;
  if (k % 2 == 1) {
    const int step = (k + 1) / 2;
    if ((m - k) % step == 0) return gk_odd_closed(k, (m - k) / step);
  }
  return std::nullopt;
}

}  // namespace

AuditReport recurrence_audit(int k, int m_max, const SearchLimits& limits) {
  if (k < 1) throw std::invalid_argument("recurrence_audit: k must be >= 1");
  if (m_max < 1)
    throw std::invalid_argument("recurrence_audit: m_max must be >= 1");

  AuditReport report;
  report.k = k;
  report.mode = Mode::kscf;
  report.m_max = m_max;

  // g(0) = 0: zero colors color zero points; keeps the (1, k) split total.
  std::vector<long long> g(static_cast<size_t>(m_max) + 1, 0);
  std::vector<char> certified(static_cast<size_t>(m_max) + 1, 0);
  certified[0] = 1;

  for (int m = 1; m <= m_max; ++m) {
    SearchResult r = oracle_max_points(k, m, Mode::kscf, limits);
    AuditRow row;
    row.k = k;
    row.m = m;
    row.mode = Mode::kscf;
    row.value = r.value;
    row.exhausted = r.exhausted;
    row.nodes = r.nodes;
    row.millis = r.millis;
    row.closed_form = closed_form_for(k, m);
    if (row.closed_form) row.match = r.exhausted && *row.closed_form == r.value;
    g[static_cast<size_t>(m)] = r.value;
    certified[static_cast<size_t>(m)] = r.exhausted ? 1 : 0;

    if (m >= k && certified[static_cast<size_t>(m)]) {
      for (int p = 1; 2 * p <= k + 1; ++p) {
        int q = k + 1 - p;
        if (m - q < 0) continue;
        if (!certified[static_cast<size_t>(m - p)] ||
            !certified[static_cast<size_t>(m - q)])
          continue;
        SplitCheck sc;
        sc.p = p;
        sc.q = q;
        sc.bound = g[static_cast<size_t>(m - p)] + g[static_cast<size_t>(m - q)] + 1;
        sc.holds = g[static_cast<size_t>(m)] <= sc.bound;
        row.splits.push_back(sc);
        if (!sc.holds) report.all_splits_hold = false;
      }
      // Balanced split: (p+1, p+1) for odd k = 2p+1, (p, p+1) for even k = 2p.
      int bp = k % 2 == 1 ? (k + 1) / 2 : k / 2;
      int bq = k + 1 - bp;
      if (m - bq >= 0 && certified[static_cast<size_t>(m - bp)] &&
          certified[static_cast<size_t>(m - bq)]) {
        long long bound =
            g[static_cast<size_t>(m - bp)] + g[static_cast<size_t>(m - bq)] + 1;
        row.balanced_bound = bound;
        row.balanced = g[static_cast<size_t>(m)] == bound
                           ? BalancedStatus::equal
                           : BalancedStatus::strict;
      }
    }
    report.rows.push_back(std::move(row));
  }
  return report;
}

namespace {

const char* balanced_str(BalancedStatus s) {
  switch (s) {
    case BalancedStatus::equal: return "equal";
    case BalancedStatus::strict: return "strict";
    case BalancedStatus::unknown: return "unknown";
  }
  return "unknown";
}

}  // namespace

std::string audit_csv(const AuditReport& report, bool timings) {
  std::ostringstream out;
  out << "k,m,mode,value,exhausted,closed_form,match,nodes,millis\n";
  for (const AuditRow& row : report.rows) {
    out << row.k << ',' << row.m << ',' << to_string(row.mode) << ','
        << row.value << ',' << (row.exhausted ? "true" : "false") << ',';
    if (row.closed_form) out << *row.closed_form;
    out << ',';
    if (row.match) out << (*row.match ? "true" : "false");
    out << ',' << row.nodes << ',' << (timings ? row.millis : 0) << '\n';
  }
  return out.str();
}

std::string audit_json(const AuditReport& report, bool timings) {
  nlohmann::ordered_json j;
  j["schema_version"] = 1;
  j["k"] = report.k;
  j["mode"] = to_string(report.mode);
  j["m_max"] = report.m_max;
  j["all_splits_hold"] = report.all_splits_hold;
  j["rows"] = nlohmann::ordered_json::array();
  for (const AuditRow& row : report.rows) {
    nlohmann::ordered_json r;
    r["k"] = row.k;
    r["m"] = row.m;
    r["mode"] = to_string(row.mode);
    r["value"] = row.value;
    r["exhausted"] = row.exhausted;
    if (row.closed_form) r["closed_form"] = *row.closed_form;
    else r["closed_form"] = nullptr;
    if (row.match) r["match"] = *row.match;
    else r["match"] = nullptr;
    r["nodes"] = row.nodes;
    r["millis"] = timings ? row.millis : 0;
    r["splits"] = nlohmann::ordered_json::array();
    for (const SplitCheck& sc : row.splits) {
      r["splits"].push_back({{"p", sc.p},
                             {"q", sc.q},
                             {"bound", sc.bound},
                             {"holds", sc.holds}});
    }
    if (row.balanced_bound) r["balanced_bound"] = *row.balanced_bound;
    else r["balanced_bound"] = nullptr;
    r["balanced"] = balanced_str(row.balanced);
    j["rows"].push_back(std::move(r));
  }
  return j.dump();
}

}  // namespace cfc
