#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace steinhaus::cli {

/// Runs the command line `args` (program name first). Returns 0 on success,
/// 1 when a computation or validation fails and 2 on a usage error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace steinhaus::cli
