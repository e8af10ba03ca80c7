#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace qpart {

/* All counting and series arithmetic is exact. Coefficients stay modest at
 * the truncation orders we use, but they do not fit in 64 bits everywhere
 * (p(n) already overflows around n = 400). */
using BigInt = boost::multiprecision::cpp_int;

} // namespace qpart
