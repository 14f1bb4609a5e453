#pragma once

#include <vector>

#include "thetakit/graph.hpp"

namespace thetakit {

struct SpectrumGroup {
    double value = 0;
    long long multiplicity = 0;
};

struct Spectrum {
    static constexpr double kDefaultTol = 1e-6;

    std::vector<double> values;          // descending
    std::vector<SpectrumGroup> groups;   // descending by value
    double tol = kDefaultTol;            // relative to the spectral diameter

    int size() const { return static_cast<int>(values.size()); }
    double largest() const { return values.front(); }
    double smallest() const { return values.back(); }
};

// Sorts descending and groups values closer than tol * max(1, diameter).
Spectrum make_spectrum(std::vector<double> values, double tol = Spectrum::kDefaultTol);
std::vector<SpectrumGroup> group_values(const std::vector<double>& sorted_desc, double tol);

// Cyclic Jacobi on a dense symmetric matrix (row-major, n x n).
// Stops once the off-diagonal Frobenius norm drops below 1e-12 * n.
std::vector<double> jacobi_eigenvalues(std::vector<double> a, int n);

Spectrum eigenvalues(const Graph& g, double tol = Spectrum::kDefaultTol);
double lambda2(const Graph& g);
double lambda_min(const Graph& g);

// Spectrum of the complement of a d-regular graph of order n from its own spectrum.
Spectrum complement_spectrum(const Spectrum& s, int d, int n);

// Largest |eigenvalue| once d (and -d, when present) are removed.
double lambda_nontrivial(const Graph& g);
double lambda_nontrivial(const std::vector<SpectrumGroup>& groups, double d);

struct RamanujanVerdict {
    bool ramanujan = false;
    double lambda = 0;     // nontrivial spectral radius
    double threshold = 0;  // 2 sqrt(d - 1)
    double margin = 0;     // threshold - lambda
};

RamanujanVerdict is_ramanujan(const Graph& g);
// Spectrum-only variant; connectivity is read off the multiplicity of d.
RamanujanVerdict is_ramanujan(const std::vector<SpectrumGroup>& groups, double d);

}  // namespace thetakit
