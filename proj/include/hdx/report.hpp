#pragma once

#include <cstdint>
#include <string>

#include "hdx/rational.hpp"

namespace hdx::report {

inline constexpr const char* kArtifactVersion = "hdx 0.1.0";

/// Walk convention stamped into spectral reports.
inline constexpr const char* kWalkConvention = "non-lazy weighted walk, co-degree edge weights";

std::uint64_t fnv1a(const std::string& s);

/// Hex string of the config hash embedded in every report.
std::string config_hash(const std::string& canonical_config);

}  // namespace hdx::report
