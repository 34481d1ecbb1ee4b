#ifndef KURAMOTO_TEXT_HPP
#define KURAMOTO_TEXT_HPP

#include <string>
#include <vector>

namespace kuramoto {

/// %g formatting with a fixed number of significant digits. Reports use 12;
/// machine CSV files use 17 (exact double round trip).
std::string fmt_g(double value, int digits = 12);

/// Fixed 3-decimal formatting (SVG coordinates).
std::string fmt_f3(double value);

std::string join_csv(const std::vector<double>& values, int digits);

/// Parse a comma-separated list of doubles; rejects trailing garbage.
std::vector<double> parse_csv_doubles(const std::string& line);

/// First non-blank line of a file, parsed as CSV doubles.
std::vector<double> read_csv_line_file(const std::string& path);

} // namespace kuramoto

#endif
