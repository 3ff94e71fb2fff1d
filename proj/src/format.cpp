#include "plcsnet/format.hpp"

#include <cstdio>
#include <cstdlib>

namespace plcsnet {

std::string format_number(double value, int significant_digits) {
    if (value == 0.0) return "0";
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*g", significant_digits, value);
    return buf;
}

double round_significant(double value, int significant_digits) {
    return std::strtod(format_number(value, significant_digits).c_str(), nullptr);
}

}  // namespace plcsnet
