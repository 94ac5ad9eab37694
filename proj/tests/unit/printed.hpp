#pragma once

#include <gtest/gtest.h>

#include <string>

#include "zetainv/mpcore.hpp"

namespace zetainv::testing {

inline int places_in(const std::string& printed) {
  const auto dot = printed.find('.');
  return dot == std::string::npos ? 0 : static_cast<int>(printed.size() - dot - 1);
}

// A printed value, truncated or rounded, is within one unit of its last place.
inline ::testing::AssertionResult reproduces(const BigReal& x, const std::string& printed) {
  const PrecisionContext& ctx = x.ctx();
  const BigReal d = abs(x - parse_decimal(printed, ctx));
  if (d < ten_pow(-places_in(printed), ctx)) return ::testing::AssertionSuccess();
  return ::testing::AssertionFailure() << format_decimal(x, places_in(printed) + 5) << " vs " << printed;
}

inline ::testing::AssertionResult reproduces(const BigComplex& z, const std::string& re, const std::string& im) {
  auto a = reproduces(z.re(), re);
  if (!a) return a;
  return reproduces(z.im(), im);
}

}  // namespace zetainv::testing
