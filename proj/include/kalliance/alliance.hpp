#pragma once

#include <string>

#include "kalliance/graph.hpp"

namespace kalliance {

enum class Kind { defensive, offensive };

inline const char* kind_name(Kind k) { return k == Kind::defensive ? "defensive" : "offensive"; }

// Which alliance family a query concerns. Membership predicates accept any
// integer k (the theorem checker evaluates conclusions at shifted levels such
// as k-2 or 1-k); the standing range k in {-Delta..Delta} is enforced by the
// solvers and the CLI.
struct AllianceSpec {
    Kind kind = Kind::defensive;
    int k = 0;
    bool global = false;
};

// Defensive: every v in S has 2*deg_S(v) >= deg(v)+k.
// Offensive: every v in boundary(S) has 2*deg_S(v) >= deg(v)+k (vacuous if
// the boundary is empty, so V is an offensive k-alliance for every k).
// global additionally requires S dominating. Empty S is an error: alliances
// are nonempty by definition.
bool is_alliance(const Graph& g, const VertexSet& S, const AllianceSpec& spec);

// Dominating proper subset S with 2*deg_S(v) == deg(v)+k for every v outside S.
bool is_boundary_offensive(const Graph& g, const VertexSet& S, int k);

// True iff some nonempty subset of X is an alliance per spec.
bool contains_alliance(const Graph& g, const VertexSet& X, const AllianceSpec& spec);

// X is free iff it contains no alliance of the family. Empty X is free.
bool is_free(const Graph& g, const VertexSet& X, const AllianceSpec& spec);

// Y covers iff every alliance of the family intersects Y; computed by duality
// as is_free(complement(Y)). Y=V always covers; the empty set covers iff the
// family is empty.
bool is_cover(const Graph& g, const VertexSet& Y, const AllianceSpec& spec);

// Y must already be a cover / X already free; otherwise an error.
bool is_minimal_cover(const Graph& g, const VertexSet& Y, const AllianceSpec& spec);
bool is_maximal_free(const Graph& g, const VertexSet& X, const AllianceSpec& spec);

} // namespace kalliance
