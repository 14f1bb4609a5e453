#pragma once

#include <optional>
#include <string>
#include <vector>

#include <boost/rational.hpp>

#include "thetakit/graph.hpp"
#include "thetakit/srg.hpp"

namespace thetakit {

using Rational = boost::rational<long long>;

inline double to_double(const Rational& r) {
    return static_cast<double>(r.numerator()) / static_cast<double>(r.denominator());
}
std::string to_string(const Rational& r);

struct ThetaBounds {
    double lower = 1;
    double upper = 1;
    std::optional<double> exact;
    std::string lower_source;
    std::string upper_source;
    std::string exact_source;
};

// -n lmin / (d - lmin); needs lmin < 0.
double theta_upper_regular(long long n, double d, double lmin);
// (n - d + l2) / (1 + l2); needs l2 > -1.
double theta_lower_regular(long long n, double d, double l2);
ThetaBounds theta_bounds_regular(long long n, double d, double l2, double lmin);
// Bounds on the theta of the complement: 1 - d/lmin and n(1 + l2)/(n - d + l2).
ThetaBounds theta_bounds_complement(long long n, double d, double l2, double lmin);

struct SrgTheta {
    bool is_rational = false;  // discriminant is a perfect square
    Rational theta_q{1};
    Rational theta_complement_q{1};
    double theta = 1;
    double theta_complement = 1;
};

// Closed form for strongly regular graphs. Throws Inapplicable on infeasible parameters.
SrgTheta theta_srg(const SrgParams& p);

// C(m-1, r-1) for the Kneser graph K(m, r), m >= 2r.
long long theta_kneser(int m, int r);

struct ThetaOptions {
    double tol = 1e-6;
    int max_n = 64;
    int max_iterations = 200;
};

struct ThetaResult {
    double value = 0;       // midpoint of the certified bracket
    double lower = 0;       // <J, X> for a feasible primal matrix X
    double upper = 0;       // lambda_max(B), checked with the Jacobi solver
    bool converged = false; // upper - lower <= tol
    int iterations = 0;
    int n = 0;
    std::vector<double> B;  // row-major: ones on the diagonal and non-edges
};

// Interior-point solve of  max <J,X>  s.t.  tr X = 1, X_ij = 0 on edges, X psd.
ThetaResult theta_exact(const Graph& g, const ThetaOptions& opt = {});

}  // namespace thetakit
