#pragma once

#include <string>
#include <vector>

#include "kalliance/graph.hpp"

namespace kalliance {

struct CorpusEntry {
    std::string name;
    Graph graph;
};

// 36 graphs: K_3..K_6, C_4..C_8, P_4..P_6, stars with 3..5 leaves,
// c8-chords, and 20 seeded G(8,p) with p cycling 0.3/0.5/0.7.
std::vector<CorpusEntry> default_corpus();

// All edge-list/DIMACS files in a directory, sorted by filename.
std::vector<CorpusEntry> corpus_from_dir(const std::string& path);

} // namespace kalliance
