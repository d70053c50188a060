#include "kalliance/solver.hpp"

#include <stdexcept>

#include "kalliance/errors.hpp"

namespace kalliance {

namespace {

void check_solver_input(const Graph& g, const AllianceSpec& spec, int cap, const char* who) {
    if (g.n() > cap)
        throw cap_error(std::string(who) + ": n=" + std::to_string(g.n()) +
                        " exceeds cap " + std::to_string(cap));
    int D = g.max_degree();
    if (spec.k < -D || spec.k > D)
        throw std::invalid_argument(std::string(who) + ": k=" + std::to_string(spec.k) +
                                    " outside {-Delta..Delta} = {" + std::to_string(-D) +
                                    ".." + std::to_string(D) + "}");
}

bool meets(const Graph& g, int v, const VertexSet& S, int k) {
    return 2 * g.degree_in(v, S) >= g.degree(v) + k;
}

// Conservative completion check: no set S with S_in <= S <= avail can be an
// alliance if it fails. Mirrors the pruning used by contains_alliance.
bool completion_feasible(const Graph& g, const AllianceSpec& spec, const VertexSet& S_in,
                         const VertexSet& avail) {
    if (spec.kind == Kind::defensive) {
        for (int v = S_in.first(); v != -1; v = S_in.next(v))
            if (!meets(g, v, avail, spec.k)) return false;
    } else {
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

// First size-s alliance in lex order, exploring vertices ascending.
struct MinAllianceSearch {
    const Graph& g;
    AllianceSpec spec;
    int s;
    std::optional<VertexSet> found;

    bool run(VertexSet S_in, int start) {
        int have = S_in.size();
        if (have == s) {
            if (is_alliance(g, S_in, spec)) {
                found = S_in;
                return true;
            }
            return false;
        }
        for (int v = start; v <= g.n() - (s - have); ++v) {
            VertexSet S2 = S_in;
            S2.insert(v);
            // avail: chosen vertices plus everything still selectable
            VertexSet avail = S2;
            for (int u = v + 1; u < g.n(); ++u) avail.insert(u);
            if (!completion_feasible(g, spec, S2, avail)) continue;
            if (run(S2, v + 1)) return true;
        }
        return false;
    }
};

// First size-s free set in lex order; supersets of an alliance are pruned.
struct MaxFreeSearch {
    const Graph& g;
    AllianceSpec spec;
    int s;
    std::optional<VertexSet> found;

    bool run(VertexSet X_in, int start) {
        if (contains_alliance(g, X_in, spec)) return false;
        int have = X_in.size();
        if (have == s) {
            found = X_in;
            return true;
        }
        for (int v = start; v <= g.n() - (s - have); ++v) {
            VertexSet X2 = X_in;
            X2.insert(v);
            if (run(X2, v + 1)) return true;
        }
        return false;
    }
};

VertexSet mask_to_set(int n, unsigned long mask) {
    VertexSet s(n);
    for (int v = 0; v < n; ++v)
        if (mask >> v & 1) s.insert(v);
    return s;
}

} // namespace

std::string invariant_name(const AllianceSpec& spec, Objective obj) {
    bool d = spec.kind == Kind::defensive;
    switch (obj) {
        case Objective::min_alliance:
            if (d) return spec.global ? "gamma_k" : "a_k";
            return spec.global ? "gamma_k^o" : "a_k^o";
        case Objective::max_free:
            if (d) return spec.global ? "phi_k^gd" : "phi_k";
            return spec.global ? "phi_k^go" : "phi_k^o";
        default:
            if (d) return spec.global ? "zeta_k^gd" : "zeta_k";
            return spec.global ? "zeta_k^go" : "zeta_k^o";
    }
}

InvariantResult min_alliance(const Graph& g, const AllianceSpec& spec) {
    check_solver_input(g, spec, 64, "min_alliance");
    InvariantResult r;
    r.invariant = invariant_name(spec, Objective::min_alliance);
    r.spec = spec;
    r.method = Method::search;
    for (int s = 1; s <= g.n(); ++s) {
        MinAllianceSearch search{g, spec, s, {}};
        if (search.run(g.empty_set(), 0)) {
            r.feasible = true;
            r.value = s;
            r.witness = *search.found;
            return r;
        }
    }
    r.feasible = false;
    return r;
}

InvariantResult max_free(const Graph& g, const AllianceSpec& spec) {
    check_solver_input(g, spec, 64, "max_free");
    InvariantResult r;
    r.invariant = invariant_name(spec, Objective::max_free);
    r.spec = spec;
    r.method = Method::search;
    for (int s = g.n(); s >= 0; --s) {
        MaxFreeSearch search{g, spec, s, {}};
        if (search.run(g.empty_set(), 0)) {
            r.feasible = true;
            r.value = s;
            r.witness = *search.found;
            return r;
        }
    }
    // unreachable: the empty set is always free
    throw std::logic_error("max_free: no free set found");
}

InvariantResult min_cover(const Graph& g, const AllianceSpec& spec) {
    InvariantResult mf = max_free(g, spec);
    InvariantResult r;
    r.invariant = invariant_name(spec, Objective::min_cover);
    r.spec = spec;
    r.method = Method::search;
    r.feasible = true;
    r.value = g.n() - *mf.value;
    r.witness = mf.witness->complement();
    return r;
}

InvariantResult oracle_invariant(const Graph& g, const AllianceSpec& spec, Objective obj) {
    check_solver_input(g, spec, 12, "oracle_invariant");
    if (obj == Objective::min_cover)
        throw std::invalid_argument("oracle_invariant: min-alliance or max-free only");
    const int n = g.n();
    InvariantResult r;
    r.invariant = invariant_name(spec, obj);
    r.spec = spec;
    r.method = Method::oracle;

    std::optional<VertexSet> best;
    if (obj == Objective::min_alliance) {
        for (unsigned long mask = 1; mask < (1ul << n); ++mask) {
            VertexSet S = mask_to_set(n, mask);
            if (!is_alliance(g, S, spec)) continue;
            if (!best || S.size() < best->size() ||
                (S.size() == best->size() && S.lex_less(*best)))
                best = S;
        }
        if (!best) {
            r.feasible = false;
            return r;
        }
    } else {
        for (unsigned long mask = 0; mask < (1ul << n); ++mask) {
            VertexSet X = mask_to_set(n, mask);
            bool free = true;
            for (unsigned long sub = mask; sub && free; sub = (sub - 1) & mask)
                if (is_alliance(g, mask_to_set(n, sub), spec)) free = false;
            if (!free) continue;
            if (!best || X.size() > best->size() ||
                (X.size() == best->size() && X.lex_less(*best)))
                best = X;
        }
    }
    r.feasible = true;
    r.value = best->size();
    r.witness = *best;
    return r;
}

} // namespace kalliance
