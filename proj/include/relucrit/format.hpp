#pragma once

#include <string>

namespace relucrit {

// Round-trip decimal text, 17 significant digits.
std::string fmt17(double x);

// Writes via a temporary file in the same directory and renames it into place.
void write_file_atomic(const std::string& path, const std::string& content);

}  // namespace relucrit
