#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace planepart {

// Exact arbitrary-precision integer used for every coefficient in the
// library. No floating point appears anywhere in the algebra layer.
using BigInt = boost::multiprecision::cpp_int;

}  // namespace planepart
