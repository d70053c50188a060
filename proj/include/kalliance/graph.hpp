#pragma once

#include <utility>
#include <vector>

#include "kalliance/vertex_set.hpp"

namespace kalliance {

// Immutable simple undirected graph on vertices 0..n-1.
class Graph {
public:
    Graph(int n, std::vector<std::pair<int, int>> edges);

    int n() const { return n_; }
    int m() const { return int(edges_.size()); }
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }

    int degree(int v) const { return deg_.at(v); }
    int max_degree() const { return Delta_; }
    int min_degree() const { return delta_; }

    bool adjacent(int u, int v) const { return adj_.at(u).contains(v); }
    const VertexSet& neighbors(int v) const { return adj_.at(v); }

    VertexSet empty_set() const { return VertexSet(n_); }
    VertexSet full_set() const { return VertexSet::full(n_); }
    VertexSet make_set(std::initializer_list<int> vs) const {
        VertexSet s(n_);
        for (int v : vs) s.insert(v);
        return s;
    }

    // |N(v) ∩ S|; v's own membership in S never counts.
    int degree_in(int v, const VertexSet& S) const;

    // Vertices outside S adjacent to at least one member of S.
    VertexSet boundary(const VertexSet& S) const;

    // Every vertex outside S has a neighbor in S.
    bool is_dominating(const VertexSet& S) const;

    bool connected() const;

private:
    void check_bound(const VertexSet& S) const;

    int n_;
    std::vector<std::pair<int, int>> edges_;
    std::vector<VertexSet> adj_;
    std::vector<int> deg_;
    int Delta_ = 0;
    int delta_ = 0;
};

} // namespace kalliance
