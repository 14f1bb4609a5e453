#pragma once

#include <optional>
#include <vector>

#include "thetakit/graph.hpp"

namespace thetakit {

// Exhaustive isomorphism search with colour refinement and backtracking.
// Exponential in the worst case; intended for small graphs.
// Returns perm with g.adjacent(u,v) == h.adjacent(perm[u], perm[v]).
std::optional<std::vector<int>> find_isomorphism(const Graph& g, const Graph& h);

inline bool isomorphic(const Graph& g, const Graph& h) { return find_isomorphism(g, h).has_value(); }

}  // namespace thetakit
