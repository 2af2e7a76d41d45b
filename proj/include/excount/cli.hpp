#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace excount::cli {

// Parses argv-style arguments and executes one subcommand, writing results
// to `out` and diagnostics to `err`. Returns 0 on success, 2 on a
// verification mismatch, 1 on usage or I/O errors.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

int run(int argc, char** argv);

}  // namespace excount::cli
