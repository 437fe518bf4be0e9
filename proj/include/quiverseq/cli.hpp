#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace quiverseq::cli {

// Exit codes: 0 success or true, 1 checked property false, 2 input error.
inline constexpr int exit_true = 0;
inline constexpr int exit_false = 1;
inline constexpr int exit_input_error = 2;

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);
// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace quiverseq::cli
