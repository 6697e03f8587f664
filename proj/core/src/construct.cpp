#include "cfc/construct.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

#include "cfc/errors.hpp"
#include "cfc/formulas.hpp"

namespace cfc {

namespace {

constexpr long long kMaxLen = 1LL << 24;

void check_len(long long len, const char* who) {
  if (len > kMaxLen)
    throw std::invalid_argument(std::string(who) + ": result too large");
}

}  // namespace

ExchangeMap::ExchangeMap(std::vector<int> table) : table_(std::move(table)) {
  for (size_t c = 1; c < table_.size(); ++c) {
    int img = table_[c];
    if (img < 1 || static_cast<size_t>(img) >= table_.size() ||
        table_[static_cast<size_t>(img)] != static_cast<int>(c))
      throw integrity_error("ExchangeMap: not an involution");
  }
}

int ExchangeMap::apply(int color) const {
  if (color < 1) throw std::invalid_argument("ExchangeMap: bad color");
  if (static_cast<size_t>(color) < table_.size()) return table_[color];
  return color;
}

ExchangeMap exchange_map_2scf(const Coloring& cm) {
  if (cm.empty()) throw std::invalid_argument("exchange_map_2scf: empty coloring");
  const int m = cm.max_color();
  int at = -1;
  for (int i = 0; i < cm.size(); ++i) {
    if (cm[i] == m) {
      if (at >= 0)
        throw integrity_error("exchange_map_2scf: top color occurs twice");
      at = i;
    }
  }
  std::vector<int> table(static_cast<size_t>(m) + 1);
  for (int c = 0; c <= m; ++c) table[c] = c;
  std::vector<char> assigned(static_cast<size_t>(m) + 1, 0);

  const int tail = cm.size() - at - 1;
  for (int i = 0; i < tail; ++i) {
    int a = cm[at + 1 + i];
    int b = cm[cm.size() - 1 - i];
    if ((assigned[a] && table[a] != b) || (assigned[b] && table[b] != a))
      throw integrity_error("exchange_map_2scf: inconsistent matching");
    table[a] = b;
    table[b] = a;
    assigned[a] = assigned[b] = 1;
  }
  return ExchangeMap(std::move(table));
}

Coloring construct_2scf(int m) {
  if (m < 1) throw std::invalid_argument("construct_2scf: m must be >= 1");
  check_len(g_scf_closed(m, 2), "construct_2scf");

  if (m == 1) return Coloring({1});
  if (m == 2) return Coloring({1, 2});
  std::vector<int> c = {1, 2, 3, 1};
  for (int cur = 3; cur < m; ++cur) {
    ExchangeMap s = exchange_map_2scf(Coloring(c));
    const long long plen = g_scf_closed(cur - 1, 2);
    c.push_back(cur + 1);
    for (long long i = plen - 1; i >= 0; --i)
      c.push_back(s.apply(c[static_cast<size_t>(i)]));
  }
  if (static_cast<long long>(c.size()) != g_scf_closed(m, 2))
    throw integrity_error("construct_2scf: wrong length");
  return Coloring(std::move(c));
}

Coloring construct_3scf(int m) {
  if (m < 1) throw std::invalid_argument("construct_3scf: m must be >= 1");
  check_len(g_scf_closed(m, 3), "construct_3scf");

  if (m == 1) return Coloring({1});
  if (m == 2) return Coloring({1, 2});
  if (m == 4) return Coloring({1, 2, 3, 4, 1});

  // Odd chain: c = C_{2q+1}, b = B_{2q+1}; B uses the next chain's top color.
  auto odd_chain = [](int q_target, std::vector<int>& c, std::vector<int>& b) {
    c = {1};
    b = {3};
    for (int q = 1; q <= q_target; ++q) {
      std::vector<int> nc = c;
      nc.push_back(2 * q);
      nc.insert(nc.end(), b.begin(), b.end());
      std::vector<int> nb = c;
      nb.push_back(2 * q + 3);
      nb.insert(nb.end(), b.begin(), b.end());
      c = std::move(nc);
      b = std::move(nb);
    }
  };

  std::vector<int> c, b;
  if (m % 2 == 1) {
    odd_chain((m - 1) / 2, c, b);
  } else {
    const int p = m / 2;  // p >= 3 here
    std::vector<int> prev;
    odd_chain(p - 2, prev, b);  // prev = C_{2p-3}
    odd_chain(p - 1, c, b);     // c = C_{2p-1}
    c.push_back(2 * p);
    c.insert(c.end(), prev.begin(), prev.end());
  }
  if (static_cast<long long>(c.size()) != g_scf_closed(m, 3))
    throw integrity_error("construct_3scf: wrong length");
  return Coloring(std::move(c));
}

Skeleton skeleton(int k, int level) {
  if (k < 3 || k % 2 == 0)
    throw std::invalid_argument("skeleton: k must be odd and >= 3");
  if (level < 1) throw std::invalid_argument("skeleton: level must be >= 1");
  const int p = (k - 1) / 2;
  check_len((1LL << level) * (p + 1), "skeleton");

  std::vector<int> s;
  for (int j = 1; j <= p; ++j) s.push_back(2 * j);
  s.push_back(2 * (p + 1));
  for (int j = 1; j <= p; ++j) s.push_back(2 * (p + 1) + j);

  for (int lev = 1; lev < level; ++lev) {
    const int mid = (lev + 2) * (p + 1);
    // Entries occurring exactly once, in positional order. The next-level
    // tail copies the spine but moves every second such entry to a fresh
    // color; the separator takes the block of fresh colors' base value.
    std::vector<int> count(static_cast<size_t>(mid) + 1, 0);
    for (int e : s) ++count[static_cast<size_t>(e)];
    std::vector<int> uniq;
    for (size_t i = 0; i < s.size(); ++i)
      if (count[static_cast<size_t>(s[i])] == 1)
        uniq.push_back(static_cast<int>(i));
    if (static_cast<int>(uniq.size()) != k)
      throw integrity_error("skeleton: spine count drifted");

    std::vector<int> tail = s;
    for (int j = 1; j <= p; ++j)
      tail[static_cast<size_t>(uniq[static_cast<size_t>(2 * j - 1)])] = mid + j;
    s.push_back(mid);
    s.insert(s.end(), tail.begin(), tail.end());
  }
  return Skeleton{k, p, level, std::move(s)};
}

Coloring construct_kscf_odd(int k, int level) {
  if (k < 3 || k % 2 == 0)
    throw std::invalid_argument("construct_kscf_odd: k must be odd and >= 3");
  if (level < 0)
    throw std::invalid_argument("construct_kscf_odd: level must be >= 0");
  if (level == 0) {
    std::vector<int> c(static_cast<size_t>(k));
    for (int i = 0; i < k; ++i) c[static_cast<size_t>(i)] = i + 1;
    return Coloring(std::move(c));
  }
  const int p = (k - 1) / 2;
  const long long len = gk_odd_closed(k, level);
  check_len(len, "construct_kscf_odd");

  Skeleton sk = skeleton(k, level);
  std::vector<int> c;
  c.reserve(static_cast<size_t>(len));
  int backbone = 0;  // cycles 1, 3, ..., 2p+1
  for (long long i = 0; i < len; ++i) {
    if (i % 2 == 0) {
      c.push_back(2 * backbone + 1);
      backbone = (backbone + 1) % (p + 1);
    } else {
      c.push_back(sk.entries[static_cast<size_t>(i / 2)]);
    }
  }
  if (static_cast<long long>(c.size()) != len ||
      static_cast<long long>(sk.entries.size()) != len / 2)
    throw integrity_error("construct_kscf_odd: wrong length");
  return Coloring(std::move(c));
}

Coloring construct_kscf(int n, int k) {
  if (n < 1) throw std::invalid_argument("construct_kscf: n must be >= 1");
  if (k < 1) throw std::invalid_argument("construct_kscf: k must be >= 1");

  if (k == 1) return construct_kcf(n, 1);
  if (k == 2) return construct_2scf(f_scf_closed(n, 2)).prefix(n);
  if (k == 3) return construct_3scf(f_scf_closed(n, 3)).prefix(n);
  if (k % 2 == 0) return construct_kscf(n, k + 1);

  int level = 0;
  while (gk_odd_closed(k, level) < n) ++level;
  return construct_kscf_odd(k, level).prefix(n);
}

namespace {

// Coloring of (k+1)^m - 1 points with colors 1..m: k+1 blocks of the
// (m-1)-level pattern separated by k points of color m.
void kcf_block(int m, int k, std::vector<int>& out) {
  if (m == 0) return;
  kcf_block(m - 1, k, out);
  for (int rep = 0; rep < k; ++rep) {
    out.push_back(m);
    kcf_block(m - 1, k, out);
  }
}

}  // namespace

Coloring construct_kcf(int n, int k) {
  if (n < 1) throw std::invalid_argument("construct_kcf: n must be >= 1");
  if (k < 1) throw std::invalid_argument("construct_kcf: k must be >= 1");
  const int m = chi_kcf_closed(n, k);

  long long full = 1;
  for (int i = 0; i < m; ++i) full *= k + 1;
  check_len(full - 1, "construct_kcf");

  std::vector<int> c;
  c.reserve(static_cast<size_t>(full - 1));
  kcf_block(m, k, c);
  if (static_cast<long long>(c.size()) != full - 1)
    throw integrity_error("construct_kcf: wrong length");
  c.resize(static_cast<size_t>(n));
  Coloring out(std::move(c));
  if (out.colors_used() != m)
    throw integrity_error("construct_kcf: wrong color count");
  return out;
}

std::string construction_tag(Mode mode, int k) {
  if (k < 1) throw std::invalid_argument("construction_tag: k must be >= 1");
  if (mode == Mode::kcf) return "thm3.1";
  if (mode == Mode::kscf) {
    if (k == 1) return "thm3.1";
    if (k == 2) return "thm2.2";
    if (k == 3) return "thm2.4";
    return "thm2.7";
  }
  throw std::invalid_argument("construction_tag: bad mode");
}

}  // namespace cfc
