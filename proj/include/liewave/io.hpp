#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "liewave/coefficients.hpp"
#include "liewave/symbols.hpp"

namespace liewave {

using Json = nlohmann::ordered_json;

/// Shortest-safe round-trip text for a double: %.17g, '.' decimal point.
std::string format_double(double x);

/// [{group, two_ell | k, matrix: [[[re, im], ...], ...]}, ...] in canonical order.
Json coefficients_to_json(const FourierCoefficients& c);
FourierCoefficients coefficients_from_json(const Json& j, const Band& band);

/// [{two_ell | k, nu_squared: [...], jap}, ...]
Json symbol_to_json(const DiagonalSymbol& s);

/// Serialises with two-space indentation and a trailing newline.
std::string dump_json(const Json& j);

/// SHA-256 hex digest.
std::string sha256_hex(const std::string& data);

void write_text_file(const std::string& path, const std::string& content);
std::string read_text_file(const std::string& path);

/// Joins already formatted cells with ',' and appends '\n'.
std::string csv_row(const std::vector<std::string>& cells);

}  // namespace liewave
