#pragma once

#include <optional>
#include <string>

#include "thetakit/graph.hpp"

namespace thetakit {

struct SrgParams {
    long long n = 0, d = 0, lambda = 0, mu = 0;
    friend bool operator==(const SrgParams&, const SrgParams&) = default;
    std::string to_string() const;
};

struct SrgFeasibility {
    bool relation_holds = false;       // (n-d-1) mu == d (d-lambda-1)
    bool conference_case = false;      // 2d + (n-1)(lambda-mu) == 0
    bool multiplicities_integral = false;
    bool feasible = false;
    long long discriminant = 0;        // (lambda-mu)^2 + 4(d-mu)
    double p1 = 0, p2 = 0;             // restricted eigenvalues, p1 > p2
    double m1 = 0, m2 = 0;             // multiplicities of p1, p2
};

// Exact certification: every adjacent pair shares lambda neighbours and every
// non-adjacent pair shares mu, counted with integer popcounts. Returns nothing
// for irregular graphs. Complete graphs report mu = 0, edgeless graphs lambda = 0.
std::optional<SrgParams> srg_check(const Graph& g);

SrgFeasibility srg_params_feasible(const SrgParams& p);

// Parameters of the complement: (n, n-d-1, n-2d+mu-2, n-2d+lambda).
SrgParams srg_complement(const SrgParams& p);

// Exact integer square root when x is a perfect square.
std::optional<long long> exact_sqrt(long long x);

}  // namespace thetakit
