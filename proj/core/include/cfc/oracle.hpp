#ifndef CFC_ORACLE_HPP
#define CFC_ORACLE_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cfc/coloring.hpp"
#include "cfc/verify.hpp"

namespace cfc {

struct SearchLimits {
  std::uint64_t max_nodes = 1'000'000'000;
  std::int64_t max_millis = 600'000;
};

struct SearchResult {
  // Certified extremum when exhausted; otherwise the best proven bound
  // (max-points: deepest feasible prefix; min-colors: see bracket).
  int value = 0;
  int lower = 0;
  int upper = 0;
  std::optional<Coloring> witness;
  std::uint64_t nodes = 0;
  std::int64_t millis = 0;
  bool exhausted = false;
};

// Largest n reachable by a mode-valid coloring with at most m colors.
// Depth-first over positions 1, 2, ...; colors tried ascending with
// first-use order canonicalization; intervals ending at the newest point
// are final, so the first violated one prunes the branch.
SearchResult oracle_max_points(int k, int m, Mode mode,
                               const SearchLimits& limits = {});

// Minimum colors for n points: iterative deepening on m, reusing the
// same search with an early exit at depth n.
SearchResult oracle_min_colors(int n, int k, Mode mode,
                               const SearchLimits& limits = {});

enum class BalancedStatus { equal, strict, unknown };

// One subadditive split bound: g(m) <= g(m-p) + g(m-q) + 1, p + q = k + 1.
struct SplitCheck {
  int p = 0;
  int q = 0;
  long long bound = 0;
  bool holds = false;
};

struct AuditRow {
  int k = 0;
  int m = 0;
  Mode mode = Mode::kscf;
  long long value = 0;
  bool exhausted = false;
  std::optional<long long> closed_form;
  std::optional<bool> match;
  std::uint64_t nodes = 0;
  std::int64_t millis = 0;
  std::vector<SplitCheck> splits;
  std::optional<long long> balanced_bound;
  BalancedStatus balanced = BalancedStatus::unknown;
};

struct AuditReport {
  int k = 0;
  Mode mode = Mode::kscf;
  int m_max = 0;
  std::vector<AuditRow> rows;
  bool all_splits_hold = true;
};

// Certifies g_k(m) for m = 1..m_max and checks every split bound whose
// inputs are certified; rows whose search hit a cap stay unknown.
AuditReport recurrence_audit(int k, int m_max, const SearchLimits& limits = {});

// CSV columns: k,m,mode,value,exhausted,closed_form,match,nodes,millis.
// Timings print as 0 unless requested, keeping reruns byte-identical.
std::string audit_csv(const AuditReport& report, bool timings = false);
std::string audit_json(const AuditReport& report, bool timings = false);

}  // namespace cfc

#endif
