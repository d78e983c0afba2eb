#ifndef BOREL_ERRORS_HPP
#define BOREL_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace borel {

/// Rejected input: bad series/rank/isogeny combination, malformed file,
/// dimension mismatch, exceeded enumeration budget.
class invalid_input : public std::runtime_error {
  public:
    explicit invalid_input(const std::string& what) : std::runtime_error(what) {}
};

/// A mathematical invariant failed to hold. This is never a valid outcome of
/// a computation on validated data; callers should treat it as a bug.
class internal_error : public std::logic_error {
  public:
    explicit internal_error(const std::string& what) : std::logic_error(what) {}
};

} // namespace borel

#endif
