#ifndef CFC_ERRORS_HPP
#define CFC_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace cfc {

// Raised when an internal construction or search invariant breaks.
// Distinct from std::invalid_argument, which covers bad caller input.
class integrity_error : public std::logic_error {
 public:
  explicit integrity_error(const std::string& what) : std::logic_error(what) {}
};

}  // namespace cfc

#endif
