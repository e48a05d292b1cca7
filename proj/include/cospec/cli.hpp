#pragma once

#include "cospec/graph.hpp"

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace cospec::cli {

enum ExitCode : int { Ok = 0, Violation = 1, Usage = 2, Parse = 3 };

/// Named graphs accepted wherever a graph is expected: house, p5, c5, k3, co-k3, 2k2, k22,
/// figure4, glg-counterexample-kN, and pathN, cycleN, completeN, starN, emptyN, cocktailN.
std::optional<Graph> named_graph(std::string_view name);

/// "-" reads `in`, an existing file is read, a name from named_graph() is built,
/// anything else is parsed as graph6 or JSON. Throws ParseError.
Graph resolve_input(const std::string& spec, std::istream& in);

/// Entry point; args excludes the program name.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

} // namespace cospec::cli
