#include "stopset/bigint.hpp"

#include <stdexcept>

namespace stopset {

Bigint binomial(long long n, long long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  Bigint r = 1;
  for (long long i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;  // exact at every step: r is C(n-k+i, i)
  }
  return r;
}

Bigint factorial(int n) {
  if (n < 0) throw std::invalid_argument("factorial: negative argument");
  Bigint r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

Bigint int_pow(long long q, int e) {
  if (e < 0) throw std::invalid_argument("int_pow: negative exponent");
  Bigint r = 1;
  Bigint base = q;
  while (e > 0) {
    if (e & 1) r *= base;
    base *= base;
    e >>= 1;
  }
  return r;
}

Bigint exact_div(const Bigint& a, const Bigint& b) {
  if (b == 0) throw std::invalid_argument("exact_div: division by zero");
  Bigint q = a / b;
  if (q * b != a) throw std::logic_error("exact_div: division is not exact");
  return q;
}

}  // namespace stopset
