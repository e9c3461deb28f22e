#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "algconn/graph.hpp"

namespace algconn::cli {

enum ExitCode : int { kSuccess = 0, kVerificationFailed = 1, kUsageError = 2 };

/// A family spec ("h1:n=9:i=1,3", "theta:2,2,3"), edge-list text
/// ("4; 0-1,1-2") or graph6.
Graph parse_graph_argument(std::string_view text);

/// Runs the command line `args` (args[0] is the program name). Results go to
/// `out`, diagnostics to `err`.
int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int dispatch(int argc, char** argv);

}  // namespace algconn::cli
