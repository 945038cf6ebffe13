#pragma once

#include <string>
#include <vector>

#include "logforge/bigreal.hpp"

namespace logforge {

// Exit codes: 0 success, 2 empty pool, 1 usage or runtime error.
int cli_main(int argc, const char* const* argv);
int cli_main(const std::vector<std::string>& args);

// "2,3,5" -> integers; every element distinct and > 1
std::vector<BigInt> parse_basis(const std::string& text);
Rational parse_rational(const std::string& text);

}  // namespace logforge
