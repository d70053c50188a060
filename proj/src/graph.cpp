#include "kalliance/graph.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>

namespace kalliance {

Graph::Graph(int n, std::vector<std::pair<int, int>> edges) : n_(n) {
    if (n < 0) throw std::invalid_argument("graph: negative vertex count");
    std::set<std::pair<int, int>> seen;
    for (auto& [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw std::invalid_argument("graph: edge endpoint out of range: (" +
                                        std::to_string(u) + "," + std::to_string(v) + ")");
        if (u == v)
            throw std::invalid_argument("graph: self-loop at vertex " + std::to_string(u));
        if (u > v) std::swap(u, v);
        if (!seen.insert({u, v}).second)
            throw std::invalid_argument("graph: duplicate edge (" + std::to_string(u) + "," +
                                        std::to_string(v) + ")");
    }
    edges_.assign(seen.begin(), seen.end());
    adj_.assign(n, VertexSet(n));
    deg_.assign(n, 0);
    for (auto [u, v] : edges_) {
        adj_[u].insert(v);
        adj_[v].insert(u);
        ++deg_[u];
        ++deg_[v];
    }
    Delta_ = 0;
    delta_ = n > 0 ? n : 0;
    for (int v = 0; v < n; ++v) {
        Delta_ = std::max(Delta_, deg_[v]);
        delta_ = std::min(delta_, deg_[v]);
    }
    if (n == 0) delta_ = 0;
}

void Graph::check_bound(const VertexSet& S) const {
    if (S.universe() != n_)
        throw std::invalid_argument("vertex set bound to universe " +
                                    std::to_string(S.universe()) + ", graph has n=" +
                                    std::to_string(n_));
}

int Graph::degree_in(int v, const VertexSet& S) const {
    if (v < 0 || v >= n_) throw std::invalid_argument("vertex out of range");
    check_bound(S);
    return adj_[v].intersection_size(S);
}

VertexSet Graph::boundary(const VertexSet& S) const {
    check_bound(S);
    VertexSet r(n_);
    for (int v = S.first(); v != -1; v = S.next(v)) r = r | adj_[v];
    return r - S;
}

bool Graph::is_dominating(const VertexSet& S) const {
    check_bound(S);
    VertexSet covered = S;
    for (int v = S.first(); v != -1; v = S.next(v)) covered = covered | adj_[v];
    return covered == full_set();
}

bool Graph::connected() const {
    if (n_ <= 1) return true;
    VertexSet seen(n_);
    seen.insert(0);
    std::vector<int> stack{0};
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int u = adj_[v].first(); u != -1; u = adj_[v].next(u)) {
            if (!seen.contains(u)) {
                seen.insert(u);
                stack.push_back(u);
            }
        }
    }
    return seen.size() == n_;
}

} // namespace kalliance
