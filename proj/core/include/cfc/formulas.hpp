#ifndef CFC_FORMULAS_HPP
#define CFC_FORMULAS_HPP

namespace cfc {

// Largest n admitting a k-SCF coloring of n points with m colors.
// Supported k: 2 (Fibonacci form F(m+2)-1) and 3 (doubling form).
long long g_scf_closed(int m, int k);

// Largest n for odd k >= 3 with k + level*(k+1)/2 colors: 2^level*(k+1)-1.
long long gk_odd_closed(int k, int level);

// Minimum colors for a k-SCF coloring of n points; k in {2, 3}.
int f_scf_closed(long long n, int k);

// Minimum colors for a k-CF coloring of n points: floor(log_{k+1} n) + 1.
int chi_kcf_closed(long long n, int k);

// Exclusive bracket for the k-SCF minimum at n points, k >= 2.
// Odd k needs n >= k+1, even k needs n >= k+2.
struct Bounds {
  double lower = 0.0;
  double upper = 0.0;
};
Bounds f_scf_bounds(long long n, int k);

}  // namespace cfc

#endif
