#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hycone::cli {

// Runs one command line; output goes to `out`, errors to `err`.
// Exit status: 0 success / Member / valid, 1 Violated / invalid, 2 usage error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

int main(int argc, char** argv);

}  // namespace hycone::cli
