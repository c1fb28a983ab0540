#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "cryptdfa/core.hpp"

namespace cryptdfa::cli {

// Parses "TERM1+TERM2=TERM3" (letters case-insensitive). letter_chars maps
// symbol code - 1 to the original character, for solution reporting.
Cryptarithm parse_puzzle(const std::string& text, std::vector<char>& letter_chars);

// Full command dispatch. Exit code 0 on success (including "no solution"),
// 1 on domain errors, 2 on usage errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cryptdfa::cli
