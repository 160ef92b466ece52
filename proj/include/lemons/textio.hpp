#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace lemons {

/// Formats a double at 12 significant digits (round-half-even), trailing
/// zeros stripped, with a decimal point or exponent always present so float
/// columns stay typed ("1" becomes "1.0"). All numeric CLI output goes
/// through this so re-runs diff empty.
std::string fmt12(double x);

/// Integer formatting companions for the same output paths.
std::string fmt_int(long long x);
std::string fmt_uint(std::uint64_t x);

std::string json_escape(std::string_view s);

/// FNV-1a 64-bit checksum of an output payload, rendered "fnv1a64:<16 hex>".
std::uint64_t fnv1a64(std::string_view bytes);
std::string checksum_hex(std::string_view bytes);

}  // namespace lemons
