#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace klmult {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

// Binomial coefficient with the usual convention C(a,k) = 0 for k < 0 or
// (a >= 0 and k > a). a must be nonnegative here; flags always give a >= 0.
BigInt binomial(long a, long k);

}  // namespace klmult
