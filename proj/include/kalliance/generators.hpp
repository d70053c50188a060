#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "kalliance/graph.hpp"

namespace kalliance {

Graph make_complete(int n);
Graph make_cycle(int n);   // n >= 3
Graph make_path(int n);    // n >= 1
Graph make_star(int leaves); // center is vertex 0, n = leaves+1
Graph make_grid(int rows, int cols);

// Seeded G(n,p): std::mt19937(seed); pairs scanned i<j with i outer;
// edge present iff gen() < uint64(p * 2^32). Identical (n,p,seed) -> identical edges.
Graph make_random(int n, double p, uint32_t seed);

// Cycle 0..7 plus chords {0,2} and {4,6}: n=8, m=10,
// degrees 3,2,3,2,3,2,3,2.
Graph make_c8_chords();

Graph disjoint_union(const std::vector<Graph>& parts);

// Inline generator grammar: "complete:5", "cycle:4", "path:3", "star:3",
// "grid:2x3", "random:8,0.3,7", "c8-chords"; a trailing "-disjoint" with
// comma-separated specs builds the disjoint union ("path:2,path:2-disjoint").
Graph generate(const std::string& spec);

} // namespace kalliance
