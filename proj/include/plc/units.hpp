#pragma once

namespace plc {

// All computations run in linear units; decibel values appear only at the
// parameter boundary and are converted through these two functions.
inline constexpr double kDbPerNeper = 4.342944819032518;  // 10 / ln(10)

double db_to_linear(double value_db);
double linear_to_db(double value);

}  // namespace plc
