#pragma once

#include <string>

namespace plcsnet {

/// Fixed-precision text for a double ("%.<digits>g"), locale independent.
/// Negative zero prints as "0" so outputs stay byte-stable.
std::string format_number(double value, int significant_digits = 12);

/// Value after a round trip through format_number.
double round_significant(double value, int significant_digits = 12);

}  // namespace plcsnet
