#ifndef CFC_CONSTRUCT_HPP
#define CFC_CONSTRUCT_HPP

#include <string>
#include <vector>

#include "cfc/coloring.hpp"
#include "cfc/verify.hpp"

namespace cfc {

// Color involution; identity outside the recorded pairs.
class ExchangeMap {
 public:
  ExchangeMap() = default;
  explicit ExchangeMap(std::vector<int> table);

  int apply(int color) const;
  int operator()(int color) const { return apply(color); }

 private:
  std::vector<int> table_;  // table_[c] = image of c; identity beyond size
};

// 2-SCF coloring of g_2(m) = F(m+2)-1 points with colors 1..m.
Coloring construct_2scf(int m);

// Involution pairing the tail of c_m (after the unique top color) with its
// own reversal. Throws integrity_error if the positionwise matching is
// inconsistent.
ExchangeMap exchange_map_2scf(const Coloring& cm);

// 3-SCF coloring of g_3(m) points with colors 1..m.
Coloring construct_3scf(int m);

// Unique-color spine of the odd-k coloring at the given level >= 1.
struct Skeleton {
  int k = 3;
  int p = 1;
  int level = 1;
  std::vector<int> entries;
};
Skeleton skeleton(int k, int level);

// k-SCF coloring for odd k >= 3 of 2^level*(k+1)-1 points
// with k + level*(p+1) colors, p = (k-1)/2. Level 0 is (1..k).
Coloring construct_kscf_odd(int k, int level);

// k-SCF coloring of exactly n points, any k >= 1.
Coloring construct_kscf(int n, int k);

// k-CF coloring of exactly n points with floor(log_{k+1} n) + 1 colors.
Coloring construct_kcf(int n, int k);

// Wire tag identifying which construction family serves (mode, k).
std::string construction_tag(Mode mode, int k);

}  // namespace cfc

#endif
