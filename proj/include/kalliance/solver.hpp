#pragma once

#include <optional>
#include <string>

#include "kalliance/alliance.hpp"
#include "kalliance/graph.hpp"

namespace kalliance {

enum class Method { search, oracle, closed_form };

inline const char* method_name(Method m) {
    switch (m) {
        case Method::search: return "search";
        case Method::oracle: return "oracle";
        default: return "closed-form";
    }
}

enum class Objective { min_alliance, max_free, min_cover };

struct InvariantResult {
    std::string invariant; // a_k, gamma_k, gamma_k^o, phi_k, phi_k^o, phi_k^go, zeta_k, ...
    AllianceSpec spec;
    bool feasible = true;
    std::optional<int> value;        // empty iff infeasible
    std::optional<VertexSet> witness; // empty iff infeasible
    Method method = Method::search;
};

// Standard symbol for (family, objective); combinations without a standing
// name get systematic ones (a_k^o, phi_k^gd, zeta_k^gd).
std::string invariant_name(const AllianceSpec& spec, Objective obj);

// All solvers: n <= 64 (cap_error) and k in {-Delta..Delta} (invalid_argument).
// Witnesses are the lexicographically smallest attaining set (sorted-sequence
// order); identical inputs always produce identical value and witness.

// Smallest nonempty alliance; infeasible when the family is empty.
InvariantResult min_alliance(const Graph& g, const AllianceSpec& spec);

// Largest free set; value n with witness V when the family is empty.
InvariantResult max_free(const Graph& g, const AllianceSpec& spec);

// n - max_free, witness the complement of the max-free witness; 0 with
// witness {} when the family is empty.
InvariantResult min_cover(const Graph& g, const AllianceSpec& spec);

// Unpruned full-enumeration ground truth; n <= 12 (cap_error).
InvariantResult oracle_invariant(const Graph& g, const AllianceSpec& spec, Objective obj);

} // namespace kalliance
