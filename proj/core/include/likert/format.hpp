#pragma once

#include <string>

namespace likert {

// Shortest decimal form with 12 significant digits. Every float the CLI
// and the serializers emit goes through here, so artifacts are stable and
// re-parse well inside the library's 1e-8 certificates.
std::string format_double(double value);

// The double nearest to format_double(value), for emitting pre-rounded
// JSON numbers.
double round_for_output(double value);

}  // namespace likert
