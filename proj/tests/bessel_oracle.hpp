// Test-only reference for J_n: ascending series summed in 140-digit
// floating point, so cancellation among terms of size ~e^x/sqrt(x) is harmless
// up to x = 200. Shares no code with the library's Bessel routines.
#ifndef DIRAC_TESTS_BESSEL_ORACLE_HPP
#define DIRAC_TESTS_BESSEL_ORACLE_HPP

#include <boost/multiprecision/cpp_bin_float.hpp>

namespace oracle {

using HighPrecision = boost::multiprecision::number<boost::multiprecision::cpp_bin_float<140>>;

inline HighPrecision bessel_j_high(int order, const HighPrecision& x) {
  const HighPrecision half = x / 2;
  HighPrecision term = 1;
  for (int i = 1; i <= order; ++i) term *= half / i;
  HighPrecision sum = term;
  const HighPrecision q = -half * half;
  const HighPrecision tiny = HighPrecision("1e-60");
  for (int k = 1; k < 2000; ++k) {
    term *= q / (HighPrecision(k) * HighPrecision(k + order));
    sum += term;
    if (abs(term) < tiny && k > half) break;
  }
  return sum;
}

inline double bessel_j(int order, double x) {
  return static_cast<double>(bessel_j_high(order, HighPrecision(x)));
}

}  // namespace oracle

#endif  // DIRAC_TESTS_BESSEL_ORACLE_HPP
