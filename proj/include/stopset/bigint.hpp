#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace stopset {

// All combinatorial quantities in this project are exact integers.  Several of
// them (stopping set counts for m=5, binomials like C(2^26, 20)) overflow any
// fixed-width type, so everything that can grow goes through Bigint.
using Bigint = boost::multiprecision::cpp_int;

// C(n, k).  Returns 0 for k < 0, n < 0 or k > n.
Bigint binomial(long long n, long long k);

Bigint factorial(int n);

// q^e, e >= 0
Bigint int_pow(long long q, int e);

// Quotient a / b with a hard check that b divides a exactly.  The counting
// formulas in this project are integer-valued by theorem; a non-exact division
// means a bug, not a rounding concern.
Bigint exact_div(const Bigint& a, const Bigint& b);

}  // namespace stopset
