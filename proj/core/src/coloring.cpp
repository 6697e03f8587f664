#include "cfc/coloring.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

namespace cfc {

Coloring::Coloring(std::vector<int> colors) : colors_(std::move(colors)) {
  for (int c : colors_)
    if (c < 1) throw std::invalid_argument("Coloring: colors must be >= 1");
}

Coloring Coloring::parse(std::string_view text) {
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r'))
    text.remove_suffix(1);
  if (text.empty()) throw std::invalid_argument("Coloring: empty input");

  std::vector<int> colors;
  long long cur = -1;
  for (char ch : text) {
    if (ch >= '0' && ch <= '9') {
      if (cur < 0) cur = 0;
      cur = cur * 10 + (ch - '0');
      if (cur > 1'000'000'000)
        throw std::invalid_argument("Coloring: color out of range");
    } else if (ch == ',') {
      if (cur < 0) throw std::invalid_argument("Coloring: empty field");
      if (cur < 1) throw std::invalid_argument("Coloring: colors must be >= 1");
      colors.push_back(static_cast<int>(cur));
      cur = -1;
    } else {
      throw std::invalid_argument("Coloring: unexpected character");
    }
  }
  if (cur < 0) throw std::invalid_argument("Coloring: empty field");
  if (cur < 1) throw std::invalid_argument("Coloring: colors must be >= 1");
  colors.push_back(static_cast<int>(cur));
  return Coloring(std::move(colors));
}

std::string Coloring::str() const {
  std::string out;
  for (size_t i = 0; i < colors_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(colors_[i]);
  }
  return out;
}

int Coloring::colors_used() const {
  std::unordered_set<int> seen(colors_.begin(), colors_.end());
  return static_cast<int>(seen.size());
}

int Coloring::max_color() const {
  if (colors_.empty()) return 0;
  return *std::max_element(colors_.begin(), colors_.end());
}

Coloring Coloring::prefix(int len) const {
  if (len < 0 || len > size())
    throw std::invalid_argument("Coloring: bad prefix length");
  return Coloring(std::vector<int>(colors_.begin(), colors_.begin() + len));
}

Coloring Coloring::reversed() const {
  return Coloring(std::vector<int>(colors_.rbegin(), colors_.rend()));
}

}  // namespace cfc
