#pragma once

namespace plc {

/// Inverse error function for |y| < 1. Rational initial approximation
/// refined with Newton steps against std::erf / std::erfc; round trip
/// erf(erf_inv(y)) agrees with y to better than 1e-10 across
/// [-1 + 1e-9, 1 - 1e-9].
double erf_inv(double y);

/// Standard normal CDF, evaluated through erfc so the lower tail keeps
/// relative accuracy.
double normal_cdf(double z);

/// Inverse of normal_cdf for p strictly inside (0, 1).
double normal_quantile(double p);

}  // namespace plc
