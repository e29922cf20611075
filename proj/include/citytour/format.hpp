#ifndef CITYTOUR_FORMAT_HPP
#define CITYTOUR_FORMAT_HPP

#include <charconv>
#include <string>

namespace citytour {

// Shortest round-trip decimal form; reload-exact and byte-stable, which the
// CSV writers and determinism tests rely on.
inline std::string format_double(double x) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), x);
  return std::string(buf, ptr);
}

}  // namespace citytour

#endif  // CITYTOUR_FORMAT_HPP
