#include "doctest.h"

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "cfc/coloring.hpp"
#include "cfc/verify.hpp"

using namespace cfc;

namespace {

// Direct per-interval reference, no incremental tricks.
std::optional<Interval> ref_violation(const std::vector<int>& c, int k,
                                      Mode mode) {
  const int n = static_cast<int>(c.size());
  for (int lo = 1; lo <= n; ++lo) {
    for (int hi = lo; hi <= n; ++hi) {
      std::map<int, int> cnt;
      for (int v = lo; v <= hi; ++v) ++cnt[c[static_cast<size_t>(v - 1)]];
      const int size = hi - lo + 1;
      bool ok = true;
      if (mode == Mode::kcf) {
        ok = false;
        for (auto& [col, ct] : cnt)
          if (ct >= 1 && ct <= k) ok = true;
      } else if (mode == Mode::kscf) {
        int unique = 0;
        for (auto& [col, ct] : cnt)
          if (ct == 1) ++unique;
        ok = size >= k ? unique >= k : unique == size;
      } else {
        if (size >= k + 1) ok = cnt.size() >= 2;
      }
      if (!ok) return Interval{lo, hi};
    }
  }
  return std::nullopt;
}

// All colorings of length n over colors 1..a, first-use canonical or not.
template <typename F>
void for_each_coloring(int n, int a, F&& f) {
  std::vector<int> c(static_cast<size_t>(n), 1);
  for (;;) {
    f(c);
    int i = n - 1;
    while (i >= 0 && c[static_cast<size_t>(i)] == a) {
      c[static_cast<size_t>(i)] = 1;
      --i;
    }
    if (i < 0) return;
    ++c[static_cast<size_t>(i)];
  }
}

}  // namespace

TEST_CASE("Coloring parses the shared text format strictly") {
  CHECK(Coloring::parse("1,2,3,1").colors() == std::vector<int>{1, 2, 3, 1});
  CHECK(Coloring::parse("7").colors() == std::vector<int>{7});
  CHECK(Coloring::parse("1,2\n").colors() == std::vector<int>{1, 2});
  CHECK(Coloring::parse("12,3").colors() == std::vector<int>{12, 3});

  CHECK_THROWS_AS(Coloring::parse(""), std::invalid_argument);
  CHECK_THROWS_AS(Coloring::parse("1,,2"), std::invalid_argument);
  CHECK_THROWS_AS(Coloring::parse("1, 2"), std::invalid_argument);
  CHECK_THROWS_AS(Coloring::parse("0,1"), std::invalid_argument);
  CHECK_THROWS_AS(Coloring::parse("1,2,"), std::invalid_argument);
  CHECK_THROWS_AS(Coloring::parse(",1"), std::invalid_argument);
  CHECK_THROWS_AS(Coloring::parse("1,-2"), std::invalid_argument);
  CHECK_THROWS_AS(Coloring::parse("a"), std::invalid_argument);

  Coloring c = Coloring::parse("3,1,4,1");
  CHECK(c.str() == "3,1,4,1");
  CHECK(Coloring::parse(c.str()) == c);
}

TEST_CASE("Coloring accessors") {
  Coloring c({1, 2, 3, 1});
  CHECK(c.size() == 4);
  CHECK(c.colors_used() == 3);
  CHECK(c.max_color() == 3);
  CHECK(c.prefix(2).colors() == std::vector<int>{1, 2});
  CHECK(c.reversed().colors() == std::vector<int>{1, 3, 2, 1});
  CHECK(Coloring({7}).colors_used() == 1);
  CHECK(Coloring({1, 2, 3, 1, 4, 2, 1, 5, 2, 3, 1, 2, 6, 3, 2, 4, 3, 1, 2, 3})
            .colors_used() == 6);
  CHECK_THROWS_AS(Coloring({1, 0}), std::invalid_argument);
}

TEST_CASE("verify_kcf basics") {
  CHECK(verify_kcf(Coloring({1, 2, 3, 1}), 1).ok);
  Verdict bad = verify_kcf(Coloring({1, 1}), 1);
  CHECK(!bad.ok);
  REQUIRE(bad.violation.has_value());
  CHECK(*bad.violation == Interval{1, 2});
  CHECK(bad.counts == std::vector<std::pair<int, int>>{{1, 2}});
  CHECK(verify_kcf(Coloring({1, 1, 2, 1, 1}), 2).ok);
  CHECK_THROWS_AS(verify_kcf(Coloring(), 1), std::invalid_argument);
  CHECK_THROWS_AS(verify_kcf(Coloring({1}), 0), std::invalid_argument);
}

TEST_CASE("verify_kscf basics") {
  CHECK(verify_kscf(Coloring({1, 2, 3, 1, 4, 2, 1, 5, 2, 3, 1, 2}), 2).ok);
  CHECK(verify_kscf(Coloring({1, 2, 3, 4, 1, 5, 3}), 3).ok);
  // (1,2,1,2) has no 2 unique colors already on [1,3], which precedes the
  // fully alternating [1,4] lexicographically.
  Verdict bad = verify_kscf(Coloring({1, 2, 1, 2}), 2);
  CHECK(!bad.ok);
  REQUIRE(bad.violation.has_value());
  CHECK(*bad.violation == Interval{1, 3});
  CHECK(!verify_kscf(Coloring({1, 2, 1, 2}).prefix(4), 2).ok);
  // Sub-k intervals must be rainbow.
  CHECK(!verify_kscf(Coloring({1, 1, 2}), 3).ok);
  CHECK(*verify_kscf(Coloring({1, 1, 2}), 3).violation == Interval{1, 2});
}

TEST_CASE("verify_kpnm basics") {
  CHECK(verify_kpnm(Coloring({1, 1, 2}), 2).ok);
  Verdict bad = verify_kpnm(Coloring({1, 1, 1}), 2);
  CHECK(!bad.ok);
  CHECK(*bad.violation == Interval{1, 3});
  CHECK(*verify_kpnm(Coloring({1, 2, 1, 1}), 1).violation == Interval{3, 4});
}

TEST_CASE("verdict JSON") {
  CHECK(verdict_json(verify_kcf(Coloring({1, 2, 1}), 1)) ==
        R"({"ok":true,"violation":null,"colors_used":2})");
  CHECK(verdict_json(verify_kcf(Coloring({1, 1}), 1)) ==
        R"({"ok":false,"violation":[1,2],"colors_used":1})");
}

TEST_CASE("verifiers agree with the per-interval reference exhaustively") {
  for (int n = 1; n <= 6; ++n) {
    for_each_coloring(n, 3, [&](const std::vector<int>& c) {
      Coloring col(c);
      for (int k = 1; k <= 4; ++k) {
        for (Mode mode : {Mode::kcf, Mode::kscf, Mode::kpnm}) {
          Verdict v = verify(col, k, mode);
          auto ref = ref_violation(c, k, mode);
          REQUIRE(v.ok == !ref.has_value());
          if (ref) REQUIRE(*v.violation == *ref);
        }
      }
    });
  }
}

TEST_CASE("1-SCF coincides with 1-CF exhaustively") {
  for (int n = 1; n <= 8; ++n) {
    for_each_coloring(n, std::min(n, 4), [&](const std::vector<int>& c) {
      Coloring col(c);
      CHECK(verify_kscf(col, 1).ok == verify_kcf(col, 1).ok);
    });
  }
}

TEST_CASE("k-SCF implies k'-CF for every k'") {
  for (int n = 1; n <= 7; ++n) {
    for_each_coloring(n, std::min(n, 4), [&](const std::vector<int>& c) {
      Coloring col(c);
      for (int k = 1; k <= 3; ++k) {
        if (!verify_kscf(col, k).ok) continue;
        for (int kp = 1; kp <= 4; ++kp) CHECK(verify_kcf(col, kp).ok);
      }
    });
  }
}

TEST_CASE("violations re-checked in isolation indeed fail") {
  for (int n = 1; n <= 6; ++n) {
    for_each_coloring(n, 3, [&](const std::vector<int>& c) {
      for (int k = 1; k <= 3; ++k) {
        for (Mode mode : {Mode::kcf, Mode::kscf, Mode::kpnm}) {
          Verdict v = verify(Coloring(c), k, mode);
          if (v.ok) continue;
          std::vector<int> window(c.begin() + v.violation->lo - 1,
                                  c.begin() + v.violation->hi);
          CHECK(!verify(Coloring(window), k, mode).ok);
        }
      }
    });
  }
}

TEST_CASE("k-SCF is prefix closed") {
  Coloring c6({1, 2, 3, 1, 4, 2, 1, 5, 2, 3, 1, 2, 6, 3, 2, 4, 3, 1, 2, 3});
  for (int len = 1; len <= c6.size(); ++len)
    CHECK(verify_kscf(c6.prefix(len), 2).ok);
}
