#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>

#include "rootform/matrix.hpp"

namespace rootform {

// Matrix text format shared with the CLI: first line "rows cols", then one
// line per row of space-separated entries at 17 significant digits, which
// round-trips IEEE doubles exactly.

std::string to_text(const Matrix& m);
void write_text(std::ostream& os, const Matrix& m);
void write_file(const std::filesystem::path& path, const Matrix& m);

Matrix read_text(std::istream& is);
Matrix parse_text(const std::string& text);
Matrix read_file(const std::filesystem::path& path);

/// Fixed 17-significant-digit rendering used for all numeric CLI output.
std::string format_scalar(double v);

} // namespace rootform
