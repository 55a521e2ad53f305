#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace jramsey::cli {

// Exit codes: 0 confirmed/success, 1 counterexample or falsification,
// 2 usage error, 3 ceiling exceeded.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out);

}  // namespace jramsey::cli
