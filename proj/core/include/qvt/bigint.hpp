#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace qvt {

// Exact arbitrary-precision integer used for all polynomial coefficients
// and cardinalities. Counting values grow past 64 bits well inside the
// supported parameter range, so nothing in the library ever touches
// fixed-width arithmetic for them.
using Int = boost::multiprecision::cpp_int;

}  // namespace qvt
