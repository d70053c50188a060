#include "kalliance/alliance.hpp"

#include <stdexcept>

namespace kalliance {

namespace {

// membership condition at v: 2*deg_S(v) >= deg(v)+k  (deg_S + deg_Sbar = deg)
bool meets(const Graph& g, int v, const VertexSet& S, int k) {
    return 2 * g.degree_in(v, S) >= g.degree(v) + k;
}

// DFS over the vertices of X deciding membership. avail = included vertices
// plus still-undecided X vertices, so any completion S satisfies
// S_in <= S <= avail and threshold checks against avail are safe upper bounds.
struct ContainsSearch {
    const Graph& g;
    AllianceSpec spec;
    std::vector<int> xs;

    bool feasible(const VertexSet& S_in, const VertexSet& avail) const {
        if (spec.kind == Kind::defensive) {
            for (int v = S_in.first(); v != -1; v = S_in.next(v))
                if (!meets(g, v, avail, spec.k)) return false;
        } else {
            // vertices decided out (or outside X) adjacent to S_in are boundary
            // vertices of every completion
            VertexSet decided_out = avail.complement();
            for (int v = decided_out.first(); v != -1; v = decided_out.next(v))
                if (g.degree_in(v, S_in) > 0 && !meets(g, v, avail, spec.k)) return false;
        }
        if (spec.global) {
            VertexSet out = avail.complement();
            for (int v = out.first(); v != -1; v = out.next(v))
                if (g.degree_in(v, avail) == 0) return false;
        }
        return true;
    }

    bool run(VertexSet S_in, VertexSet avail, size_t pos) {
        if (pos == xs.size())
            return !S_in.empty() && is_alliance(g, S_in, spec);
        int v = xs[pos];
        S_in.insert(v);
        if (feasible(S_in, avail) && run(S_in, avail, pos + 1)) return true;
        S_in.erase(v);
        avail.erase(v);
        if (feasible(S_in, avail) && run(S_in, avail, pos + 1)) return true;
        return false;
    }
};

} // namespace

bool is_alliance(const Graph& g, const VertexSet& S, const AllianceSpec& spec) {
    if (S.universe() != g.n())
        throw std::invalid_argument("vertex set bound to a different graph");
    if (S.empty()) throw std::invalid_argument("alliances are nonempty by definition");
    if (spec.global && !g.is_dominating(S)) return false;
    if (spec.kind == Kind::defensive) {
        for (int v = S.first(); v != -1; v = S.next(v))
            if (!meets(g, v, S, spec.k)) return false;
    } else {
        VertexSet b = g.boundary(S);
        for (int v = b.first(); v != -1; v = b.next(v))
            if (!meets(g, v, S, spec.k)) return false;
    }
    return true;
}

bool is_boundary_offensive(const Graph& g, const VertexSet& S, int k) {
    if (S.universe() != g.n())
        throw std::invalid_argument("vertex set bound to a different graph");
    if (S.empty()) throw std::invalid_argument("alliances are nonempty by definition");
    if (S == g.full_set()) return false; // defined only for proper subsets
    if (!g.is_dominating(S)) return false;
    VertexSet out = S.complement();
    for (int v = out.first(); v != -1; v = out.next(v))
        if (2 * g.degree_in(v, S) != g.degree(v) + k) return false;
    return true;
}

bool contains_alliance(const Graph& g, const VertexSet& X, const AllianceSpec& spec) {
    if (X.universe() != g.n())
        throw std::invalid_argument("vertex set bound to a different graph");
    if (X.empty()) return false;

    if (spec.kind == Kind::defensive && !spec.global) {
        // peel vertices that can never satisfy the defensive condition in any
        // subset of the current core; a nonempty fixpoint is itself an alliance
        VertexSet core = X;
        bool changed = true;
        while (changed && !core.empty()) {
            changed = false;
            for (int v = core.first(); v != -1; v = core.next(v)) {
                if (!meets(g, v, core, spec.k)) {
                    core.erase(v);
                    changed = true;
                }
            }
        }
        return !core.empty();
    }

    if (spec.kind == Kind::offensive && spec.k <= 2 - g.max_degree()) {
        // every nonempty set is an offensive alliance at these k
        if (!spec.global) return true;
        return g.is_dominating(X);
    }

    ContainsSearch search{g, spec, X.to_vector()};
    return search.run(g.empty_set(), X, 0);
}

bool is_free(const Graph& g, const VertexSet& X, const AllianceSpec& spec) {
    return !contains_alliance(g, X, spec);
}

bool is_cover(const Graph& g, const VertexSet& Y, const AllianceSpec& spec) {
    return is_free(g, Y.complement(), spec);
}

bool is_minimal_cover(const Graph& g, const VertexSet& Y, const AllianceSpec& spec) {
    if (!is_cover(g, Y, spec))
        throw std::invalid_argument("is_minimal_cover: input is not a cover");
    for (int v = Y.first(); v != -1; v = Y.next(v)) {
        VertexSet Y2 = Y;
        Y2.erase(v);
        if (is_cover(g, Y2, spec)) return false;
    }
    return true;
}

bool is_maximal_free(const Graph& g, const VertexSet& X, const AllianceSpec& spec) {
    if (!is_free(g, X, spec))
        throw std::invalid_argument("is_maximal_free: input is not free");
    VertexSet out = X.complement();
    for (int v = out.first(); v != -1; v = out.next(v)) {
        VertexSet X2 = X;
        X2.insert(v);
        if (is_free(g, X2, spec)) return false;
    }
    return true;
}

} // namespace kalliance
