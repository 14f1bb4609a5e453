#pragma once

#include <chrono>
#include <optional>
#include <string>
#include <vector>

#include "thetakit/graph.hpp"
#include "thetakit/products.hpp"

namespace thetakit {

enum class SolveStatus { Exact, Timeout };
const char* status_name(SolveStatus s);

struct SolveOptions {
    std::chrono::duration<double> budget{60.0};
    // Externally proven upper bound; the search stops as soon as it is met.
    std::optional<long long> upper_hint;
    // Use the ratio bound -n lmin/(d - lmin) at the root for regular graphs.
    bool spectral_bound = true;
    int spectral_bound_max_n = 512;
};

struct SolveResult {
    long long value = 0;            // best solution found; exact when status == Exact
    long long lower = 0;
    long long upper = 0;
    std::vector<int> witness;       // independent set / clique (for chi: a clique)
    std::vector<int> coloring;      // chi only: colour per vertex
    SolveStatus status = SolveStatus::Exact;
    double elapsed_seconds = 0;
    long long nodes = 0;

    bool exact() const { return status == SolveStatus::Exact; }
};

SolveResult independence_number(const Graph& g, const SolveOptions& opt = {});
SolveResult clique_number(const Graph& g, const SolveOptions& opt = {});
SolveResult chromatic_number(const Graph& g, const SolveOptions& opt = {});

bool is_independent_set(const Graph& g, const std::vector<int>& s);
bool is_clique(const Graph& g, const std::vector<int>& s);
bool is_proper_coloring(const Graph& g, const std::vector<int>& colors);

enum class CapacityStatus { Determined, Gap };

struct CapacityCertificate {
    double theta = 0;
    std::string theta_source;
    SolveResult alpha;
    std::optional<double> capacity;  // set iff determined, then equals alpha
    CapacityStatus status = CapacityStatus::Gap;
};

// alpha <= capacity <= theta; the capacity is determined when an exact alpha meets theta.
CapacityCertificate capacity_certificate(const Graph& g, double theta, std::string theta_source,
                                         const SolveOptions& opt = {});

struct PowerLowerBound {
    int k = 0;
    SolveResult alpha;
    double root = 0;  // alpha^{1/k}, a lower bound on the capacity when alpha is exact
};

// alpha of G^k for k = 1..k_max; stops early (returning the prefix) once a power exceeds the cap.
std::vector<PowerLowerBound> capacity_power_lb(const Graph& g, int k_max, const SolveOptions& opt = {},
                                               const ProductLimits& lim = {});

}  // namespace thetakit
