#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "thetakit/graph.hpp"
#include "thetakit/spectral.hpp"
#include "thetakit/srg.hpp"
#include "thetakit/theta.hpp"

namespace thetakit {

enum class Relation { LessEq, GreaterEq, Equal };
const char* relation_symbol(Relation r);
std::optional<Relation> parse_relation(std::string_view s);

// One evaluated inequality "lhs relation rhs".
// slack is rhs - lhs for <=, lhs - rhs for >=, and -|lhs - rhs| for =,
// so a satisfied relation always has slack >= 0 (up to tolerance for =).
struct BoundReport {
    std::string name;
    double lhs = 0;
    double rhs = 0;
    Relation relation = Relation::LessEq;
    double slack = 0;
    bool applicable = true;
    std::string reason;
    bool equality = false;  // |lhs - rhs| below the equality tolerance

    bool violated(double tol = 1e-6) const;
};

inline constexpr double kEqualityTol = 1e-6;

BoundReport make_report(std::string name, double lhs, Relation rel, double rhs, double eq_tol = kEqualityTol);
BoundReport inapplicable(std::string name, Relation rel, std::string reason);

// Rounding that forgives floating noise in values that are integers in exact arithmetic.
long long ceil_tol(double x, double tol = 1e-9);
long long floor_tol(double x, double tol = 1e-9);

// ---- eigenvalue inequalities of a regular graph --------------------------------

// lmin <= -d(n-d+l2)/(d+(n-1)l2)  and  l2 >= -d(n-d+lmin)/(d+(n-1)lmin);
// both tight exactly for strongly regular graphs.
std::pair<BoundReport, BoundReport> eig_inequality_cor0(long long n, double d, double l2, double lmin,
                                                        double eq_tol = kEqualityTol);

struct GSequence {
    std::vector<double> values;                 // g_1..g_n
    std::vector<SpectrumGroup> groups;          // distinct values, descending
    int distinct_count = 0;
    std::optional<double> third_value;          // value among g_2..g_n other than -1
    std::optional<long long> third_value_multiplicity;
};

// g_l = Lambda_l(complement) - d(n-d+Lambda_l)/(d+(n-1)Lambda_l), both spectra descending.
GSequence g_sequence(const Spectrum& s, int d);
GSequence g_sequence(const Graph& g);

struct SelfComplementaryEigBounds {
    double l2_lower = 0;    // (sqrt(n) - 1)/2
    double lmin_upper = 0;  // -(sqrt(n) + 1)/2
};
SelfComplementaryEigBounds self_complementary_eig_bounds(long long n);

// n(1+l2)/(n-d+l2) for a d-regular graph.
double haemers_clique_upper(long long n, double d, double l2);
// General form with average degree d, top eigenvalue l1 and maximum degree delta.
double haemers_clique_upper(long long n, double d, double l1, double l2, double delta);

struct RamanujanBounds {
    double clique_upper_raw = 0;
    long long clique_upper = 0;
    double theta_lower = 0;
    long long chromatic_complement_lower = 0;
};
RamanujanBounds ramanujan_bounds(long long n, double d);

struct WeiBounds {
    double alpha_lower = 0;  // sum 1/(1+d_i)
    double omega_lower = 0;  // sum 1/(n-d_i)
};
WeiBounds wei_bounds(const std::vector<int>& degrees);

// ---- strong products of regular graphs ------------------------------------------

struct RegularFactor {
    long long n = 1;
    double d = 0;
    double theta = 1;
    std::optional<double> lmin;
};

// k copies of f.
std::vector<RegularFactor> power_factors(const RegularFactor& f, int k);

struct ProductEigBound {
    double value = 0;                 // theta-based form
    std::optional<double> weakened;   // lmin-based form; needs lmin on every factor
};

// Lower bound on the second-largest eigenvalue of the product.
ProductEigBound eig2_lower_product(const std::vector<RegularFactor>& factors);
// Upper bound on the smallest eigenvalue of the product.
ProductEigBound eigmin_upper_product(const std::vector<RegularFactor>& factors);

double product_degree(const std::vector<RegularFactor>& factors);

// 2 sqrt(d - 1).
double alon_boppana(double d);

struct K0Result {
    bool applicable = false;
    std::string reason;
    double raw = 0;       // the fraction inside the ceiling
    long long k0 = 0;
};
// Smallest power from which the theta-based eig2 bound exceeds the Ramanujan threshold.
K0Result non_ramanujan_k0(long long n, double d, double theta);
// Self-complementary vertex-transitive specialization: d = (n-1)/2, theta = sqrt(n).
K0Result non_ramanujan_k0_self_complementary(long long n);

// ---- chromatic numbers of strong products ---------------------------------------

struct ChromaticStrongProduct {
    double product_raw = 0;      // prod n/theta
    long long product = 0;       // lower bound on chi(G)
    double complement_raw = 0;   // prod theta
    long long complement = 0;    // lower bound on chi(complement G)
};
ChromaticStrongProduct chromatic_lb_strong_product(const std::vector<std::pair<long long, double>>& n_theta);

struct CeilBound {
    double raw = 0;
    long long value = 0;
};

// ceil(prod (1 - d/lmin)); factors need n, d, lmin.
CeilBound chromatic_lb_regular(const std::vector<RegularFactor>& factors);
// prod (1 - d_l/lmin_l) >= 1 - d/lmin of the product.
BoundReport chromatic_regular_vs_hoffman(const std::vector<RegularFactor>& factors, double product_lmin);
// ceil(prod -n lmin/(d - lmin)). Requires the caller to vouch that every factor is
// edge-transitive or strongly regular; throws Inapplicable otherwise.
CeilBound chromatic_lb_complement_product(const std::vector<RegularFactor>& factors, bool factors_certified);
// ceil(sqrt(prod n)) for chi of the product and of its complement. Needs every factor
// self-complementary and vertex-transitive or strongly regular (caller-asserted).
CeilBound chromatic_lb_self_complementary(const std::vector<long long>& orders, bool factors_certified);

struct SrgProductChromatic {
    double raw = 0;
    long long lower = 0;
    std::optional<long long> upper;   // product of supplied factor chromatic numbers
};
SrgProductChromatic srg_product_chromatic_bounds(const std::vector<SrgParams>& params,
                                                 const std::optional<std::vector<long long>>& known_chi = {});

// ---- affine polar graphs --------------------------------------------------------

enum class PolarSign { Plus, Minus };

struct AffinePolar {
    SrgParams params;
    long long l2 = 0;
    long long lmin = 0;
    Rational theta{1};
    Rational theta_complement{1};
};

bool is_prime_power(long long q);
// VO^{+/-}(2e, q). Throws invalid_argument for e < 1 or q not a prime power and
// Inapplicable for VO^-(2, q), whose printed lambda is negative.
AffinePolar affine_polar_params(int e, long long q, PolarSign sign);

}  // namespace thetakit
