#include "netdiff/format.hpp"

#include <array>
#include <charconv>
#include <stdexcept>

namespace netdiff {

std::string format_shortest(double value) {
  std::array<char, 64> buf{};
  auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), value);
  if (ec != std::errc{}) throw std::runtime_error("cannot format number");
  return std::string(buf.data(), end);
}

std::string format_fixed(double value, int digits) {
  std::array<char, 400> buf{};
  auto [end, ec] =
      std::to_chars(buf.data(), buf.data() + buf.size(), value, std::chars_format::fixed, digits);
  if (ec != std::errc{}) throw std::runtime_error("cannot format number");
  std::string out(buf.data(), end);
  // Drop the sign of a value that rounds to zero.
  if (out.front() == '-' && out.find_first_not_of("-0.") == std::string::npos) out.erase(0, 1);
  return out;
}

}  // namespace netdiff
