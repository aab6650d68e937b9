#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace fgbm {

// RFC 4180 style CSV output: comma separated, LF line endings, '.' decimal
// separator, doubles printed with enough digits to round trip exactly.
std::string format_double(double x);

void write_csv(const std::string& path, const std::vector<std::string>& header,
               const std::vector<std::vector<double>>& rows);

}  // namespace fgbm
