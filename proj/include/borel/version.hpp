#ifndef BOREL_VERSION_HPP
#define BOREL_VERSION_HPP

namespace borel {

inline constexpr const char* kVersion = "1.0.0";

} // namespace borel

#endif
