#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace qct {

// All counts and multiplicities are exact unbounded integers.
using BigInt = boost::multiprecision::cpp_int;

}  // namespace qct
