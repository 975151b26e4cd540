#pragma once

#include <istream>
#include <string>
#include <vector>

namespace epl::csv {

/// Split one CSV line into fields. Handles double-quoted fields with ""
/// escapes; trailing \r is stripped before splitting.
std::vector<std::string> split(const std::string& line);

/// Read the next line, returns false at EOF. Strips a UTF-8 BOM on the
/// first call so both UTF-8 and Latin-1 sources pass through untouched.
bool getline(std::istream& in, std::string& out, bool first);

/// Strip surrounding ASCII whitespace.
std::string trim(const std::string& s);

}  // namespace epl::csv
