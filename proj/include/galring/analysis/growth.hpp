#pragma once

#include <vector>

#include "galring/error.hpp"
#include "galring/skewring/skew_element.hpp"

namespace galring {

inline constexpr std::size_t kDefaultDimensionCap = 5000;

struct SlopeFit {
  // Least-squares slope of log d(k) against log(k+1) over the tail window
  // k in [ceil(k_max/2), k_max], rounded to six decimals.
  BigRational slope;
  BigRational low, high;  // slope -/+ tolerance
  std::size_t window_start = 0;
};

// sizes[k-1] is the value at k = 1..sizes.size().
SlopeFit fit_growth_slope(const std::vector<std::size_t>& sizes, const BigRational& tolerance = BigRational(1, 5));

struct GrowthProfile {
  std::vector<std::size_t> dims;  // d(k) for k = 1..k_max
  SlopeFit fit;
};

// Thrown when a layer exceeds the dimension cap; carries the completed layers.
class GrowthCapExceeded : public Error {
 public:
  GrowthCapExceeded(const std::string& message, std::vector<std::size_t> partial)
      : Error(ErrorKind::Resource, message), partial_(std::move(partial)) {}
  const std::vector<std::size_t>& partial() const { return partial_; }

 private:
  std::vector<std::size_t> partial_;
};

// d(k) = dim over Q of the span of all products of at most k frame elements.
// The frame must contain 1. Throws GrowthCapExceeded above dimension_cap.
GrowthProfile growth_profile(const std::vector<SkewElement>& frame, std::size_t k_max,
                             std::size_t dimension_cap = kDefaultDimensionCap);

}  // namespace galring
