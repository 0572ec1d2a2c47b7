#ifndef NVKIT_UTIL_HPP
#define NVKIT_UTIL_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace nvkit {

std::string to_lower(std::string_view s);
std::string_view trim(std::string_view s);
std::vector<std::string> split_whitespace(std::string_view s);
std::vector<std::string> split(std::string_view s, char sep);

// "1.6" for 1600 ms, "0.25" for 250 ms, "2" for 2000 ms.
std::string format_seconds_ms(std::int64_t ms);

// Fixed-width decimal, e.g. format_fixed(2.5, 3) == "2.500".
std::string format_fixed(double value, int decimals);

std::int64_t ms_to_samples(double ms, int sample_rate);
double samples_to_ms(std::int64_t samples, int sample_rate);

}  // namespace nvkit

#endif  // NVKIT_UTIL_HPP
