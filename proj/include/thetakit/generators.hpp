#pragma once

#include <cstdint>

#include "thetakit/graph.hpp"

namespace thetakit {

Graph complete(int n);
Graph empty(int n);
Graph cycle(int n);
Graph path(int n);
Graph complete_bipartite(int a, int b);
// Vertices are the r-subsets of {0..m-1} in lexicographic order; adjacent iff disjoint.
Graph kneser(int m, int r);
// q prime with q = 1 mod 4; adjacency by nonzero quadratic residues.
Graph paley(int q);
// Z4 x Z4 with connection set {+-(1,0), +-(0,1), +-(1,1)}.
Graph shrikhande();
Graph petersen();
Graph hypercube(int dim);
// Vertex i adjacent to i +- s for each s in jumps.
Graph circulant(int n, const std::vector<int>& jumps);
// k disjoint copies of g.
Graph copies(const Graph& g, int k);
// Uniform-ish random d-regular graph by pairing with restarts; deterministic per seed.
Graph random_regular(int n, int d, std::uint64_t seed);
// Erdos-Renyi G(n, p); deterministic per seed.
Graph random_gnp(int n, double p, std::uint64_t seed);

// Adds a path v1-v2-v3-v4 (vertices n..n+3) and joins v2, v3 to every vertex of g.
// The caller vouches that g is self-complementary; the result then is too.
Graph self_complementary_extend(const Graph& g);

bool is_prime(long long q);

}  // namespace thetakit
