#ifndef CFC_COLORING_HPP
#define CFC_COLORING_HPP

#include <string>
#include <string_view>
#include <vector>

namespace cfc {

// Sequence of positive colors; entry i colors point i+1.
class Coloring {
 public:
  Coloring() = default;
  explicit Coloring(std::vector<int> colors);

  // Parses "1,2,3,1". Rejects empty fields, non-digits, zeros, and
  // anything but an optional trailing newline.
  static Coloring parse(std::string_view text);

  std::string str() const;

  int size() const { return static_cast<int>(colors_.size()); }
  bool empty() const { return colors_.empty(); }
  int operator[](int i) const { return colors_[static_cast<size_t>(i)]; }
  const std::vector<int>& colors() const { return colors_; }

  int colors_used() const;
  int max_color() const;

  Coloring prefix(int len) const;
  Coloring reversed() const;

  friend bool operator==(const Coloring&, const Coloring&) = default;

 private:
  std::vector<int> colors_;
};

}  // namespace cfc

#endif
