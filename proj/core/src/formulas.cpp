#include "cfc/formulas.hpp"

#include <cmath>
#include <stdexcept>

namespace cfc {

namespace {

constexpr double kEps = 1e-9;

// Least integer >= x with the requested parity.
long long ceil_with_parity(double x, int parity) {
  long long v = static_cast<long long>(std::ceil(x - kEps));
  if (((v % 2) + 2) % 2 != parity) ++v;
  return v;
}

}  // namespace

long long g_scf_closed(int m, int k) {
  if (m < 1) throw std::invalid_argument("g_scf_closed: m must be >= 1");
  if (k == 2) {
    if (m > 85) throw std::invalid_argument("g_scf_closed: m too large");
    long long a = 1, b = 1;  // F(1), F(2)
    for (int i = 3; i <= m + 2; ++i) {
      long long c = a + b;
      a = b;
      b = c;
    }
    return b - 1;
  }
  if (k == 3) {
    if (m > 120) throw std::invalid_argument("g_scf_closed: m too large");
    if (m % 2 == 0) {
      int p = m / 2;
      return 3LL * (1LL << (p - 1)) - 1;
    }
    int p = (m - 1) / 2;
    return (1LL << (p + 1)) - 1;
  }
  throw std::invalid_argument("g_scf_closed: k must be 2 or 3");
}

long long gk_odd_closed(int k, int level) {
  if (k < 3 || k % 2 == 0)
    throw std::invalid_argument("gk_odd_closed: k must be odd and >= 3");
  if (level < 0 || level > 55)
    throw std::invalid_argument("gk_odd_closed: level out of range");
  return (1LL << level) * (k + 1) - 1;
}

int f_scf_closed(long long n, int k) {
  if (n < 1) throw std::invalid_argument("f_scf_closed: n must be >= 1");
  if (k == 2) {
    const double phi = (1.0 + std::sqrt(5.0)) / 2.0;
    double x = std::sqrt(5.0) * (static_cast<double>(n) + 0.5);
    long long m =
        static_cast<long long>(std::floor(std::log(x) / std::log(phi) + kEps));
    return static_cast<int>(m - 1);
  }
  if (k == 3) {
    double ln = static_cast<double>(n);
    long long even = ceil_with_parity(2.0 * (1.0 + std::log2((ln + 1.0) / 3.0)), 0);
    long long odd = ceil_with_parity(2.0 * std::log2(ln + 1.0) - 1.0, 1);
    long long m = std::min(even, odd);
    return static_cast<int>(m < 1 ? 1 : m);
  }
  throw std::invalid_argument("f_scf_closed: k must be 2 or 3");
}

int chi_kcf_closed(long long n, int k) {
  if (n < 1) throw std::invalid_argument("chi_kcf_closed: n must be >= 1");
  if (k < 1) throw std::invalid_argument("chi_kcf_closed: k must be >= 1");
  int e = 0;
  long long pw = 1;
  while (pw <= n / (k + 1)) {
    pw *= k + 1;
    ++e;
  }
  return e + 1;
}

Bounds f_scf_bounds(long long n, int k) {
  if (k < 2) throw std::invalid_argument("f_scf_bounds: k must be >= 2");
  if (k % 2 == 1) {
    if (n < k + 1)
      throw std::invalid_argument("f_scf_bounds: odd k needs n >= k+1");
    double half = (k + 1) / 2.0;
    double lg = std::log2((static_cast<double>(n) + 1.0) / (k + 1));
    return {k + half * (lg - 1.0), k + half * (1.0 + lg)};
  }
  if (n < k + 2)
    throw std::invalid_argument("f_scf_bounds: even k needs n >= k+2");
  double lo =
      k - 1 + (k / 2.0) * (std::log2((static_cast<double>(n) + 1.0) / k) - 1.0);
  double hi = 1 + k +
              ((k + 2) / 2.0) *
                  (1.0 + std::log2((static_cast<double>(n) + 1.0) / (k + 2)));
  return {lo, hi};
}

}  // namespace cfc
