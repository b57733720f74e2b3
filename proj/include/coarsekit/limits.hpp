#pragma once

#include <charconv>
#include <cstddef>
#include <cstdlib>
#include <string>
#include <string_view>

#include "coarsekit/errors.hpp"

namespace coarsekit {

/// Hard ceiling of every bitmask-based search (vertex sets are packed in 64-bit words).
inline constexpr std::size_t kMaskLimit = 64;

enum class Guard {
  kAlpha,            // exact maximum independent set
  kTreewidth,        // subset DP for exact treewidth
  kSeparation,       // 4^n sweep for the indicator separation number
  kIndicatorSweep,   // 2^n sweep of admits_kr_balanced_separators_indicator
  kCentreCover,      // exact set cover behind centre_number
  kClassicBuilder,   // separator-driven decomposition builder
};

inline std::string_view guard_name(Guard g) {
  switch (g) {
    case Guard::kAlpha: return "alpha";
    case Guard::kTreewidth: return "treewidth";
    case Guard::kSeparation: return "separation_number_indicator";
    case Guard::kIndicatorSweep: return "indicator_sweep";
    case Guard::kCentreCover: return "centre_cover";
    case Guard::kClassicBuilder: return "classic_builder";
  }
  return "unknown";
}

inline std::size_t default_limit(Guard g) {
  switch (g) {
    case Guard::kAlpha: return kMaskLimit;
    case Guard::kTreewidth: return 20;
    case Guard::kSeparation: return 12;
    case Guard::kIndicatorSweep: return 16;
    case Guard::kCentreCover: return kMaskLimit;
    case Guard::kClassicBuilder: return 20;
  }
  return 0;
}

/// Effective limit: COARSEKIT_MAX_N, when set to a number, overrides every guard.
/// Nothing can go above kMaskLimit.
inline std::size_t scale_limit(Guard g) {
  std::size_t limit = default_limit(g);
  if (const char* env = std::getenv("COARSEKIT_MAX_N"); env != nullptr && *env != '\0') {
    std::string_view text(env);
    std::size_t parsed = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), parsed);
    if (ec == std::errc() && ptr == text.data() + text.size()) limit = parsed;
  }
  return limit < kMaskLimit ? limit : kMaskLimit;
}

inline void require_scale(Guard g, std::size_t n) {
  const std::size_t limit = scale_limit(g);
  if (n > limit) {
    throw ScaleError(std::string(guard_name(g)) + ": n=" + std::to_string(n) +
                     " exceeds limit " + std::to_string(limit) +
                     " (raise with COARSEKIT_MAX_N, hard cap " + std::to_string(kMaskLimit) + ")");
  }
}

}  // namespace coarsekit
