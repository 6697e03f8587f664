#include "cfc/verify.hpp"

#include <stdexcept>

#include "json.hpp"

namespace cfc {

std::string to_string(Mode mode) {
  switch (mode) {
    case Mode::kscf: return "kscf";
    case Mode::kcf: return "kcf";
    case Mode::kpnm: return "kpnm";
  }
  throw std::invalid_argument("to_string: bad mode");
}

Mode mode_from_string(std::string_view text) {
  if (text == "kscf") return Mode::kscf;
  if (text == "kcf") return Mode::kcf;
  if (text == "kpnm") return Mode::kpnm;
  throw std::invalid_argument("mode_from_string: expected kscf|kcf|kpnm");
}

namespace {

void check_args(const Coloring& c, int k) {
  if (c.empty()) throw std::invalid_argument("verify: empty coloring");
  if (k < 1) throw std::invalid_argument("verify: k must be >= 1");
}

Verdict fail_at(const Coloring& c, int lo, int hi,
                const std::vector<int>& cnt) {
  Verdict v;
  v.ok = false;
  v.violation = Interval{lo, hi};
  for (size_t col = 1; col < cnt.size(); ++col)
    if (cnt[col] > 0)
      v.counts.emplace_back(static_cast<int>(col), cnt[col]);
  v.colors_used = c.colors_used();
  return v;
}

Verdict pass(const Coloring& c) {
  Verdict v;
  v.colors_used = c.colors_used();
  return v;
}

}  // namespace

Verdict verify_kcf(const Coloring& c, int k) {
  check_args(c, k);
  const int n = c.size();
  std::vector<int> cnt(static_cast<size_t>(c.max_color()) + 1, 0);
  for (int lo = 1; lo <= n; ++lo) {
    std::fill(cnt.begin(), cnt.end(), 0);
    int low = 0;  // colors with count in [1, k]
    for (int hi = lo; hi <= n; ++hi) {
      int col = c[hi - 1];
      if (cnt[col] == 0) ++low;
      else if (cnt[col] == k) --low;
      ++cnt[col];
      if (low < 1) return fail_at(c, lo, hi, cnt);
    }
  }
  return pass(c);
}

Verdict verify_kscf(const Coloring& c, int k) {
  check_args(c, k);
  const int n = c.size();
  std::vector<int> cnt(static_cast<size_t>(c.max_color()) + 1, 0);
  for (int lo = 1; lo <= n; ++lo) {
    std::fill(cnt.begin(), cnt.end(), 0);
    int unique = 0;
    for (int hi = lo; hi <= n; ++hi) {
      int col = c[hi - 1];
      if (cnt[col] == 0) ++unique;
      else if (cnt[col] == 1) --unique;
      ++cnt[col];
      int size = hi - lo + 1;
      bool ok = size < k ? unique == size : unique >= k;
      if (!ok) return fail_at(c, lo, hi, cnt);
    }
  }
  return pass(c);
}

Verdict verify_kpnm(const Coloring& c, int k) {
  check_args(c, k);
  const int n = c.size();
  std::vector<int> cnt(static_cast<size_t>(c.max_color()) + 1, 0);
  for (int lo = 1; lo <= n; ++lo) {
    std::fill(cnt.begin(), cnt.end(), 0);
    int distinct = 0;
    for (int hi = lo; hi <= n; ++hi) {
      int col = c[hi - 1];
      if (cnt[col] == 0) ++distinct;
      ++cnt[col];
      if (hi - lo + 1 >= k + 1 && distinct < 2) return fail_at(c, lo, hi, cnt);
    }
  }
  return pass(c);
}

Verdict verify(const Coloring& c, int k, Mode mode) {
  switch (mode) {
    case Mode::kscf: return verify_kscf(c, k);
    case Mode::kcf: return verify_kcf(c, k);
    case Mode::kpnm: return verify_kpnm(c, k);
  }
  throw std::invalid_argument("verify: bad mode");
}

std::string verdict_json(const Verdict& v) {
  nlohmann::ordered_json j;
  j["ok"] = v.ok;
  if (v.violation)
    j["violation"] = {v.violation->lo, v.violation->hi};
  else
    j["violation"] = nullptr;
  j["colors_used"] = v.colors_used;
  return j.dump();
}

}  // namespace cfc
