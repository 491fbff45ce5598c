#pragma once

#include "lacunary/special.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace lacunary::cli {

// Runs one subcommand. args excludes the program name.
// Exit codes: 0 success, 2 invalid input, 1 computation failure.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// "a+bi", "a-bi", "a", "bi"
cplx parse_complex(const std::string& text);

}  // namespace lacunary::cli
