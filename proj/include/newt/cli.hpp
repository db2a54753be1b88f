#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace newt::cli {

// Batch front end. args excludes the program name. Returns the process exit
// code: 0 success, 1 input error or failed verification, 2 inconclusive
// (search gave up; never conflate with a negative answer). Result JSON goes
// to out, diagnostics to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace newt::cli
