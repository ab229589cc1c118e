#include "likert/format.hpp"

#include <cstdio>
#include <cstdlib>

namespace likert {

std::string format_double(double value) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.12g", value);
    return buf;
}

double round_for_output(double value) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.12g", value);
    return std::strtod(buf, nullptr);
}

}  // namespace likert
