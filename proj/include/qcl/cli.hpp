#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qcl {

// Exit status: 0 success, 1 input error, 2 accuracy ceiling.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qcl
