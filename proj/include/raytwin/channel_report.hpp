#pragma once

#include <cstdint>

namespace raytwin {

inline constexpr double kSpeedOfLight = 299792458.0;  // m/s

// Sentinel gain for links with no propagation path: finite, wire-encodable,
// far below any receiver sensitivity.
inline constexpr double kNoPathGainDb = -400.0;

enum class LosFlag : std::uint8_t { kNlos = 0, kLos = 1, kNoPath = 2 };

// The unit of exchange between channel backends and consumers.
struct ChannelReport {
  double gain_db = kNoPathGainDb;  // <= 0 in passive scenes
  double delay_s = 0.0;            // > 0 unless NoPath
  LosFlag los = LosFlag::kNoPath;
};

}  // namespace raytwin
