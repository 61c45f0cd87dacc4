#pragma once

// Matrix files: {"n": n, "re": [[...]], "im": [[...]]}, row-major, "im"
// optional.

#include <filesystem>
#include <string>

#include "accretive/linalg.hpp"

namespace accretive {

/// Throws InvalidArgument on malformed or non-square data.
Matrix parse_matrix(const std::string& text);
std::string format_matrix(const Matrix& m);

Matrix read_matrix(const std::filesystem::path& path);
void write_matrix(const std::filesystem::path& path, const Matrix& m);

}  // namespace accretive
