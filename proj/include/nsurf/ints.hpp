#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace nsurf {

// Exact arithmetic throughout the enumeration path: coordinates and weights
// are arbitrary-precision integers, ratios are exact rationals.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

}  // namespace nsurf
