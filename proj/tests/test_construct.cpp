#include "doctest.h"

#include <stdexcept>
#include <vector>

#include "cfc/construct.hpp"
#include "cfc/errors.hpp"
#include "cfc/formulas.hpp"
#include "cfc/verify.hpp"

using namespace cfc;

TEST_CASE("construct_2scf reproduces the printed chain") {
  CHECK(construct_2scf(1).colors() == std::vector<int>{1});
  CHECK(construct_2scf(2).colors() == std::vector<int>{1, 2});
  CHECK(construct_2scf(3).colors() == std::vector<int>{1, 2, 3, 1});
  CHECK(construct_2scf(4).colors() == std::vector<int>{1, 2, 3, 1, 4, 2, 1});
  CHECK(construct_2scf(5).colors() ==
        std::vector<int>{1, 2, 3, 1, 4, 2, 1, 5, 2, 3, 1, 2});
  CHECK(construct_2scf(6).colors() ==
        std::vector<int>{1, 2, 3, 1, 4, 2, 1, 5, 2, 3, 1, 2,
                         6, 3, 2, 4, 3, 1, 2, 3});
  CHECK_THROWS_AS(construct_2scf(0), std::invalid_argument);
}

TEST_CASE("construct_2scf lengths, colors, verification, reversibility") {
  for (int m = 1; m <= 14; ++m) {
    Coloring c = construct_2scf(m);
    CHECK(c.size() == g_scf_closed(m, 2));
    CHECK(c.colors_used() == m);
    CHECK(verify_kscf(c, 2).ok);
    CHECK(verify_kscf(c.reversed(), 2).ok);
  }
}

TEST_CASE("exchange_map_2scf matches the printed involutions") {
  ExchangeMap s4 = exchange_map_2scf(construct_2scf(4));
  CHECK(s4(1) == 2);
  CHECK(s4(2) == 1);
  CHECK(s4(3) == 3);
  CHECK(s4(4) == 4);

  ExchangeMap s5 = exchange_map_2scf(construct_2scf(5));
  CHECK(s5(1) == 3);
  CHECK(s5(3) == 1);
  CHECK(s5(2) == 2);

  ExchangeMap s3 = exchange_map_2scf(construct_2scf(3));
  for (int c = 1; c <= 4; ++c) CHECK(s3(c) == c);

  // Involution on a wide color range.
  for (int m = 3; m <= 12; ++m) {
    ExchangeMap s = exchange_map_2scf(construct_2scf(m));
    for (int c = 1; c <= m + 2; ++c) CHECK(s(s(c)) == c);
  }
}

TEST_CASE("ExchangeMap rejects non-involutions") {
  CHECK_THROWS_AS(ExchangeMap({2, 3, 1}), integrity_error);
  // Slot 0 of the table is unused; colors index from 1.
  CHECK(ExchangeMap({0, 2, 1})(1) == 2);
  CHECK(ExchangeMap({0, 2, 1})(2) == 1);
  CHECK(ExchangeMap({0, 2, 1})(9) == 9);
}

TEST_CASE("construct_3scf reproduces the printed vectors") {
  CHECK(construct_3scf(1).colors() == std::vector<int>{1});
  CHECK(construct_3scf(2).colors() == std::vector<int>{1, 2});
  CHECK(construct_3scf(3).colors() == std::vector<int>{1, 2, 3});
  CHECK(construct_3scf(4).colors() == std::vector<int>{1, 2, 3, 4, 1});
  CHECK(construct_3scf(5).colors() == std::vector<int>{1, 2, 3, 4, 1, 5, 3});
  CHECK(construct_3scf(7).colors() ==
        std::vector<int>{1, 2, 3, 4, 1, 5, 3, 6, 1, 2, 3, 7, 1, 5, 3});
  CHECK(construct_3scf(6).size() == 11);
  // C_6 = C_5 ++ [6] ++ C_3.
  std::vector<int> c6 = construct_3scf(5).colors();
  c6.push_back(6);
  std::vector<int> c3 = construct_3scf(3).colors();
  c6.insert(c6.end(), c3.begin(), c3.end());
  CHECK(construct_3scf(6).colors() == c6);
}

TEST_CASE("construct_3scf lengths and verification up to m=15") {
  for (int m = 1; m <= 15; ++m) {
    Coloring c = construct_3scf(m);
    CHECK(c.size() == g_scf_closed(m, 3));
    CHECK(c.colors_used() == m);
    CHECK(verify_kscf(c, 3).ok);
  }
}

TEST_CASE("skeleton base cases and recursion") {
  CHECK(skeleton(3, 1).entries == std::vector<int>{2, 4, 5});
  CHECK(skeleton(5, 1).entries == std::vector<int>{2, 4, 6, 7, 8});
  CHECK(skeleton(3, 2).entries == std::vector<int>{2, 4, 5, 6, 2, 7, 5});
  for (int k : {3, 5, 7, 9}) {
    int p = (k - 1) / 2;
    for (int l = 1; l <= 5; ++l)
      CHECK(static_cast<int>(skeleton(k, l).entries.size()) ==
            (1 << l) * (p + 1) - 1);
  }
  CHECK_THROWS_AS(skeleton(4, 1), std::invalid_argument);
  CHECK_THROWS_AS(skeleton(3, 0), std::invalid_argument);
}

TEST_CASE("construct_kscf_odd matches the printed level-1 sequence") {
  CHECK(construct_kscf_odd(3, 0).colors() == std::vector<int>{1, 2, 3});
  CHECK(construct_kscf_odd(5, 1).colors() ==
        std::vector<int>{1, 2, 3, 4, 5, 6, 1, 7, 3, 8, 5});
  CHECK_THROWS_AS(construct_kscf_odd(4, 1), std::invalid_argument);
}

TEST_CASE("construct_kscf_odd coincides with the k=3 chain") {
  for (int l = 0; l <= 5; ++l)
    CHECK(construct_kscf_odd(3, l) == construct_3scf(3 + 2 * l));
}

TEST_CASE("construct_kscf_odd lengths, palette, verification") {
  for (int k : {3, 5, 7, 9}) {
    int p = (k - 1) / 2;
    for (int l = 0; l <= 5; ++l) {
      Coloring c = construct_kscf_odd(k, l);
      CHECK(c.size() == (1 << l) * (k + 1) - 1);
      CHECK(c.colors_used() == k + l * (p + 1));
      if (c.size() <= 700) CHECK(verify_kscf(c, k).ok);
    }
  }
}

TEST_CASE("construct_kscf dispatches and truncates safely") {
  CHECK(construct_kscf(1, 1).colors() == std::vector<int>{1});
  CHECK(construct_kscf(1, 4).colors() == std::vector<int>{1});
  CHECK(construct_kscf(12, 2) == construct_2scf(5));
  CHECK(construct_kscf(12, 2).colors_used() == 5);
  // Monotone fallback for even k: the k=5 level-1 coloring serves k=4.
  CHECK(construct_kscf(11, 4) == construct_kscf_odd(5, 1));
  CHECK(construct_kscf(11, 4).colors_used() == 8);

  for (int k = 1; k <= 6; ++k)
    for (int n : {1, 2, 3, 5, 8, 13, 21, 34, 55, 89, 144}) {
      Coloring c = construct_kscf(n, k);
      CHECK(c.size() == n);
      CHECK(verify_kscf(c, k).ok);
    }

  // k=1 routes to the binary-split construction.
  CHECK(construct_kscf(9, 1) == construct_kcf(9, 1));
}

TEST_CASE("every prefix of construction output passes its predicate") {
  Coloring c = construct_2scf(8);
  for (int len = 1; len <= c.size(); ++len)
    CHECK(verify_kscf(c.prefix(len), 2).ok);
  c = construct_3scf(9);
  for (int len = 1; len <= c.size(); ++len)
    CHECK(verify_kscf(c.prefix(len), 3).ok);
  c = construct_kcf(80, 2);
  for (int len = 1; len <= c.size(); ++len)
    CHECK(verify_kcf(c.prefix(len), 2).ok);
}

TEST_CASE("construct_kcf uses the exact color count") {
  CHECK(construct_kcf(15, 3).colors_used() == 2);
  CHECK(verify_kcf(construct_kcf(15, 3), 3).ok);
  CHECK(construct_kcf(4, 1).colors_used() == 3);
  CHECK(construct_kcf(1, 1).colors() == std::vector<int>{1});
  for (int k = 1; k <= 4; ++k)
    for (int n = 1; n <= 300; ++n) {
      Coloring c = construct_kcf(n, k);
      CHECK(c.size() == n);
      CHECK(c.colors_used() == chi_kcf_closed(n, k));
      CHECK(verify_kcf(c, k).ok);
    }
  CHECK_THROWS_AS(construct_kcf(0, 1), std::invalid_argument);
  CHECK_THROWS_AS(construct_kcf(5, 0), std::invalid_argument);
}

TEST_CASE("construction tags") {
  CHECK(construction_tag(Mode::kscf, 2) == "thm2.2");
  CHECK(construction_tag(Mode::kscf, 3) == "thm2.4");
  CHECK(construction_tag(Mode::kscf, 5) == "thm2.7");
  CHECK(construction_tag(Mode::kscf, 4) == "thm2.7");
  CHECK(construction_tag(Mode::kscf, 1) == "thm3.1");
  CHECK(construction_tag(Mode::kcf, 3) == "thm3.1");
}
