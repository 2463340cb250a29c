#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace packinglab::cli {

/// Runs one packinglab subcommand. Returns 0 on success, 1 on a domain error
/// (reported as a JSON object on err) and 2 on a usage error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace packinglab::cli
