#include "plc/special.hpp"

#include <cmath>

#include "plc/errors.hpp"

namespace plc {

namespace {

constexpr double kSqrt2 = 1.4142135623730951;
constexpr double kHalfSqrtPi = 0.8862269254527580;  // sqrt(pi)/2

// Rational approximation of the standard normal quantile (Acklam form),
// relative error below 1.2e-9; used only as the Newton starting point.
double normal_quantile_estimate(double p) {
  static constexpr double a[6] = {-3.969683028665376e+01, 2.209460984245205e+02,
                                  -2.759285104469687e+02, 1.383577518672690e+02,
                                  -3.066479806614716e+01, 2.506628277459239e+00};
  static constexpr double b[5] = {-5.447609879822406e+01, 1.615858368580409e+02,
                                  -1.556989798598866e+02, 6.680131188771972e+01,
                                  -1.328068155288572e+01};
  static constexpr double c[6] = {-7.784894002430293e-03, -3.223964580411365e-01,
                                  -2.400758277161838e+00, -2.549732539343734e+00,
                                  4.374664141464968e+00,  2.938163982698783e+00};
  static constexpr double d[4] = {7.784695709041462e-03, 3.224671290700398e-01,
                                  2.445134137142996e+00, 3.754408661907416e+00};
  constexpr double p_low = 0.02425;

  if (p < p_low) {
    const double q = std::sqrt(-2.0 * std::log(p));
    return (((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
           ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
  }
  if (p <= 1.0 - p_low) {
    const double q = p - 0.5;
    const double r = q * q;
    return (((((a[0] * r + a[1]) * r + a[2]) * r + a[3]) * r + a[4]) * r + a[5]) * q /
           (((((b[0] * r + b[1]) * r + b[2]) * r + b[3]) * r + b[4]) * r + 1.0);
  }
  const double q = std::sqrt(-2.0 * std::log(1.0 - p));
  return -(((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
         ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
}

}  // namespace

double erf_inv(double y) {
  if (!(y > -1.0 && y < 1.0)) {
    throw ValidationError("erf_inv: argument must lie strictly inside (-1, 1)");
  }
  if (y == 0.0) return 0.0;

  const double ay = std::fabs(y);
  // Tail probability of the matching normal quantile, formed from |y| so no
  // precision is lost when |y| approaches 1.
  const double tail = 0.5 * (1.0 - ay);
  double x = -normal_quantile_estimate(tail) / kSqrt2;

  if (ay < 0.9) {
    for (int i = 0; i < 2; ++i) {
      x -= (std::erf(x) - ay) * kHalfSqrtPi * std::exp(x * x);
    }
  } else {
    // Near |y| = 1 erf flattens against 1, so Newton runs on the
    // complementary function instead.
    const double q = 1.0 - ay;
    for (int i = 0; i < 2 && x * x < 700.0; ++i) {
      x += (std::erfc(x) - q) * kHalfSqrtPi * std::exp(x * x);
    }
  }
  return std::copysign(x, y);
}

double normal_cdf(double z) { return 0.5 * std::erfc(-z / kSqrt2); }

double normal_quantile(double p) {
  if (!(p > 0.0 && p < 1.0)) {
    throw ValidationError("normal_quantile: probability must lie strictly inside (0, 1)");
  }
  return kSqrt2 * erf_inv(2.0 * p - 1.0);
}

}  // namespace plc
