#pragma once

#include <iosfwd>
#include <string>

#include "codedomain/code.hpp"

namespace codedomain {

/// Text format: a header line "q n m", then m lines of n symbols, each symbol
/// one base-36 character (0-9, a-z). Requires q <= 36. Lines whose first
/// non-blank character is '#' are comments and are skipped on reading.
void write_code(std::ostream& out, const Code& c);
Code read_code(std::istream& in);

std::string code_to_text(const Code& c);
Code code_from_text(const std::string& text);

/// Header of the point-cloud CSV schema.
inline constexpr const char* kPointCsvHeader = "n,m,d,R,delta,R_float,delta_float";

/// One CSV row for the given parameters. The point is recomputed from the
/// parameters, so a row always satisfies point = code_point(params).
std::string point_csv_row(const CodeParams& p);

/// Fixed-format decimal rendering used in every CSV float column.
std::string format_double(double v);

}  // namespace codedomain
