// Bessel functions of the first kind, orders 0 and 1, for nonnegative real arguments.
//
// Below `series_switch` the ascending power series is summed directly; the
// largest term there is ~1e2, so cancellation costs at most two digits.
// At and above the switch, Miller's downward recurrence is normalized with
// J0 + 2 (J2 + J4 + ...) = 1, which stays at full relative accuracy out to
// the largest arguments the kernel engine needs (and well past 200).
#ifndef DIRAC_BESSEL_HPP
#define DIRAC_BESSEL_HPP

#include <cmath>
#include <concepts>
#include <limits>
#include <stdexcept>
#include <string>

namespace dirac::bessel {

inline constexpr double series_switch = 8.0;

template <std::floating_point Scalar>
struct BesselResult {
  Scalar value;
  Scalar estimated_abs_error;
};

namespace detail {

template <std::floating_point Scalar>
void require_nonnegative(Scalar x, const char* name) {
  if (!(x >= Scalar(0))) {
    throw std::domain_error(std::string(name) + ": argument must be >= 0, got " +
                            std::to_string(static_cast<double>(x)));
  }
}

/// sum_k (-x^2/4)^k / (k! (k + order)!) * 1/order!  for order in {0, 1}.
/// Order 1 returns J1(x)/x, which is finite at 0.
template <std::floating_point Scalar>
BesselResult<Scalar> series(Scalar x, int order) {
  const Scalar eps = std::numeric_limits<Scalar>::epsilon();
  const Scalar q = -x * x / Scalar(4);
  Scalar term = order == 0 ? Scalar(1) : Scalar(0.5);
  Scalar sum = term;
  Scalar largest = std::abs(term);
  for (int k = 1; k < 200; ++k) {
    term *= q / (Scalar(k) * Scalar(k + order));
    sum += term;
    largest = std::max(largest, std::abs(term));
    if (std::abs(term) <= eps * std::abs(sum) * Scalar(0.01)) break;
  }
  return {sum, Scalar(4) * eps * largest};
}

/// Miller downward recurrence; returns J0 and J1 from a single sweep.
template <std::floating_point Scalar>
void miller(Scalar x, Scalar& j0_out, Scalar& j1_out, Scalar& err_out) {
  const Scalar eps = std::numeric_limits<Scalar>::epsilon();
  int start = static_cast<int>(x + Scalar(30) + Scalar(10) * std::cbrt(x));
  start += start % 2;  // even start keeps the normalization sum aligned
  const Scalar rescale = Scalar(1e200);
  Scalar next = Scalar(0);   // J_{n+1}
  Scalar cur = Scalar(1e-30);  // J_n, arbitrary seed
  Scalar even_sum = Scalar(0);  // J2 + J4 + ... (unnormalized)
  Scalar j1 = Scalar(0);
  for (int n = start; n >= 1; --n) {
    const Scalar prev = Scalar(2 * n) / x * cur - next;  // J_{n-1}
    next = cur;
    cur = prev;
    const int order = n - 1;
    if (order == 1) j1 = cur;
    if (order > 0 && order % 2 == 0) even_sum += cur;
    if (std::abs(cur) > rescale) {
      cur /= rescale;
      next /= rescale;
      even_sum /= rescale;
      j1 /= rescale;
    }
  }
  const Scalar scale = cur + Scalar(2) * even_sum;
  j0_out = cur / scale;
  j1_out = j1 / scale;
  err_out = Scalar(8) * eps * static_cast<Scalar>(start) * std::max(std::abs(j0_out), Scalar(1e-2));
}

}  // namespace detail

template <std::floating_point Scalar>
BesselResult<Scalar> j0_eval(Scalar x) {
  detail::require_nonnegative(x, "j0");
  if (x < Scalar(series_switch)) return detail::series(x, 0);
  Scalar j0 = 0, j1 = 0, err = 0;
  detail::miller(x, j0, j1, err);
  return {j0, err};
}

template <std::floating_point Scalar>
BesselResult<Scalar> j1_eval(Scalar x) {
  detail::require_nonnegative(x, "j1");
  if (x < Scalar(series_switch)) {
    const auto r = detail::series(x, 1);
    return {x * r.value, x * r.estimated_abs_error};
  }
  Scalar j0 = 0, j1 = 0, err = 0;
  detail::miller(x, j0, j1, err);
  return {j1, err};
}

template <std::floating_point Scalar>
Scalar j0(Scalar x) {
  return j0_eval(x).value;
}

template <std::floating_point Scalar>
Scalar j1(Scalar x) {
  return j1_eval(x).value;
}

/// J1(x)/x with the limit 1/2 at x = 0. Uses the series directly below the
/// switch point, so there is no 0/0 near the lightcone edge.
template <std::floating_point Scalar>
Scalar j1_over_x(Scalar x) {
  detail::require_nonnegative(x, "j1_over_x");
  if (x < Scalar(series_switch)) return detail::series(x, 1).value;
  return j1(x) / x;
}

}  // namespace dirac::bessel

#endif  // DIRAC_BESSEL_HPP
