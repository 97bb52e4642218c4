#pragma once

#include <string>
#include <vector>

namespace resmax {

/// Shortest decimal string that round-trips to the same double, e.g.
/// "0", "1.5", "0.3160602794142788". Used everywhere a value is written
/// to CSV or JSON so that output is canonical.
std::string format_double(double value);

/// Strict double parser; the full string must be consumed.
double parse_double(const std::string& text);

/// Splits on a single character; no trimming, empty fields preserved.
std::vector<std::string> split(const std::string& text, char sep);

}  // namespace resmax
