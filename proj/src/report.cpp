#include "hdx/report.hpp"

#include <sstream>

namespace hdx::report {

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

std::string config_hash(const std::string& canonical_config) {
  std::ostringstream os;
  os << std::hex << fnv1a(canonical_config);
  return os.str();
}

}  // namespace hdx::report
