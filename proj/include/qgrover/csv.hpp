#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace qgrover {

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// 12 significant digits, shortest form (printf %.12g).
std::string format_significant(double value);

// Comma-delimited, '\n' line endings, header first. Throws IoError when the
// file cannot be opened or written.
void write_csv(const std::string& path, const std::string& header,
               const std::vector<std::vector<std::string>>& rows);

}  // namespace qgrover
