#pragma once

#include <string>

#include "kalliance/graph.hpp"

namespace kalliance {

// Edge-list format: "u v" per line, '#' comments, optional leading "n <count>"
// header (otherwise n = max label + 1). DIMACS ("c ...", "p edge n m",
// "e u v" 1-indexed) is detected by its 'p' line.
Graph parse_graph(const std::string& text);

Graph load_graph(const std::string& path);

} // namespace kalliance
