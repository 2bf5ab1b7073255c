#pragma once

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <complex>

namespace testing {

inline double rel(std::complex<double> got, std::complex<double> want) {
    return std::abs(got - want) / std::max(std::abs(want), 1e-300);
}

}  // namespace testing

#define CHECK_REL(got, want, tol) CHECK(testing::rel((got), (want)) <= (tol))
#define REQUIRE_REL(got, want, tol) REQUIRE(testing::rel((got), (want)) <= (tol))
