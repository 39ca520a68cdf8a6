#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cyclo/criteria.hpp"

// One report per line, JSON Lines or CSV, both carrying the same fields in
// the same order. Residues inside aux are annotated "4 mod 5"; lhs and rhs
// stay bare integers with the modulus in its own field. ms is attached only
// when the caller measured one (the --timings path).

namespace cyclo {

std::string to_json_line(const CheckReport& r,
                         std::optional<double> ms = std::nullopt);

std::string csv_header();
std::string to_csv_row(const CheckReport& r,
                       std::optional<double> ms = std::nullopt);

// split one CSV line into cells, honoring double-quote escaping
std::vector<std::string> csv_split(const std::string& line);

} // namespace cyclo
