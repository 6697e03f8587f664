#ifndef CFC_VERIFY_HPP
#define CFC_VERIFY_HPP

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cfc/coloring.hpp"
#include "cfc/interval.hpp"

namespace cfc {

enum class Mode { kscf, kcf, kpnm };

std::string to_string(Mode mode);
Mode mode_from_string(std::string_view text);

struct Verdict {
  bool ok = true;
  std::optional<Interval> violation;
  // (color, count) pairs on the violating interval, color-ascending.
  std::vector<std::pair<int, int>> counts;
  int colors_used = 0;
};

// Every interval has a color occurring between 1 and k times.
Verdict verify_kcf(const Coloring& c, int k);

// Every interval of size >= k has >= k uniquely occurring colors;
// smaller intervals are rainbow.
Verdict verify_kscf(const Coloring& c, int k);

// Every interval of size >= k+1 sees at least two colors.
Verdict verify_kpnm(const Coloring& c, int k);

Verdict verify(const Coloring& c, int k, Mode mode);

// {"ok": ..., "violation": [lo, hi]|null, "colors_used": ...}
std::string verdict_json(const Verdict& v);

}  // namespace cfc

#endif
