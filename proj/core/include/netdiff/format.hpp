#pragma once

#include <string>

namespace netdiff {

/// Shortest decimal text that reads back to exactly `value`.
std::string format_shortest(double value);

/// Fixed-point text with `digits` decimals, correctly rounded from the exact
/// binary value; exact ties go to the even digit.
std::string format_fixed(double value, int digits);

}  // namespace netdiff
