#pragma once

#include <vector>

#include "thetakit/graph.hpp"
#include "thetakit/spectral.hpp"

namespace thetakit {

struct ProductLimits {
    long long max_order = 20000;              // materialised products
    long long max_combinations = 5'000'000;   // group combinations in product_spectrum
};

// Vertex (i, j) gets index i * h.n() + j.
// Adjacency: (A_g + I) kron (A_h + I) - I over booleans.
Graph strong_product(const Graph& g, const Graph& h, const ProductLimits& lim = {});
Graph strong_power(const Graph& g, int k, const ProductLimits& lim = {});

struct ProductSpec {
    long long order = 1;
    std::optional<long long> degree;  // prod(1 + d) - 1 when every factor is regular
};
ProductSpec product_spec(const std::vector<const Graph*>& factors);

// Eigenvalues prod(1 + lambda) - 1 over all index combinations, worked out on
// eigenvalue groups so repeated values are never enumerated one by one.
std::vector<SpectrumGroup> product_spectrum_groups(const std::vector<std::vector<SpectrumGroup>>& factors,
                                                   double tol = Spectrum::kDefaultTol,
                                                   const ProductLimits& lim = {});
// Full expanded spectrum; throws ResourceLimit when the order exceeds max_combinations.
Spectrum product_spectrum(const std::vector<Spectrum>& factors, const ProductLimits& lim = {});
// k-fold power of one spectrum, group-wise.
std::vector<SpectrumGroup> power_spectrum_groups(const std::vector<SpectrumGroup>& groups, int k,
                                                 double tol = Spectrum::kDefaultTol,
                                                 const ProductLimits& lim = {});

}  // namespace thetakit
