#include "plc/units.hpp"

#include <cmath>

namespace plc {

double db_to_linear(double value_db) { return std::pow(10.0, value_db / 10.0); }

double linear_to_db(double value) { return 10.0 * std::log10(value); }

}  // namespace plc
