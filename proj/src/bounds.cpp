#include "thetakit/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "thetakit/errors.hpp"

namespace thetakit {
namespace {

double dn(long long x) { return static_cast<double>(x); }

long long checked_pow(long long q, int e) {
    long long r = 1;
    for (int i = 0; i < e; ++i) {
        if (r > (1LL << 62) / q) throw std::overflow_error("affine_polar_params: q^e overflows");
        r *= q;
    }
    return r;
}

}  // namespace

const char* relation_symbol(Relation r) {
    switch (r) {
        case Relation::LessEq: return "<=";
        case Relation::GreaterEq: return ">=";
        case Relation::Equal: return "=";
    }
    return "?";
}

std::optional<Relation> parse_relation(std::string_view s) {
    if (s == "<=") return Relation::LessEq;
    if (s == ">=") return Relation::GreaterEq;
    if (s == "=") return Relation::Equal;
    return std::nullopt;
}

bool BoundReport::violated(double tol) const {
    if (!applicable) return false;
    const double scale = std::max({1.0, std::abs(lhs), std::abs(rhs)});
    return slack < -tol * scale;
}

BoundReport make_report(std::string name, double lhs, Relation rel, double rhs, double eq_tol) {
    BoundReport r;
    r.name = std::move(name);
    r.lhs = lhs;
    r.rhs = rhs;
    r.relation = rel;
    switch (rel) {
        case Relation::LessEq: r.slack = rhs - lhs; break;
        case Relation::GreaterEq: r.slack = lhs - rhs; break;
        case Relation::Equal: r.slack = -std::abs(lhs - rhs); break;
    }
    r.equality = std::abs(lhs - rhs) < eq_tol;
    return r;
}

BoundReport inapplicable(std::string name, Relation rel, std::string reason) {
    BoundReport r;
    r.name = std::move(name);
    r.relation = rel;
    r.applicable = false;
    r.reason = std::move(reason);
    return r;
}

long long ceil_tol(double x, double tol) {
    return static_cast<long long>(std::ceil(x - tol * std::max(1.0, std::abs(x))));
}

long long floor_tol(double x, double tol) {
    return static_cast<long long>(std::floor(x + tol * std::max(1.0, std::abs(x))));
}

std::pair<BoundReport, BoundReport> eig_inequality_cor0(long long n, double d, double l2, double lmin,
                                                        double eq_tol) {
    if (d <= 0) throw Inapplicable("eig_inequality_cor0: graph has no edges");
    if (d >= dn(n) - 1) throw Inapplicable("eig_inequality_cor0: graph is complete");
    const double den1 = d + dn(n - 1) * l2;
    const double den2 = d + dn(n - 1) * lmin;
    if (den1 <= 0 || den2 == 0) throw Inapplicable("eig_inequality_cor0: vanishing denominator");
    auto r1 = make_report("lmin_upper_from_l2", lmin, Relation::LessEq, -d * (dn(n) - d + l2) / den1, eq_tol);
    auto r2 = make_report("l2_lower_from_lmin", l2, Relation::GreaterEq, -d * (dn(n) - d + lmin) / den2, eq_tol);
    return {r1, r2};
}

GSequence g_sequence(const Spectrum& s, int d) {
    const int n = s.size();
    if (d <= 0) throw Inapplicable("g_sequence: graph has no edges");
    if (d >= n - 1) throw Inapplicable("g_sequence: graph is complete");
    const Spectrum c = complement_spectrum(s, d, n);
    GSequence out;
    out.values.resize(n);
    for (int l = 0; l < n; ++l) {
        const double den = d + dn(n - 1) * s.values[l];
        if (std::abs(den) < 1e-12) throw Inapplicable("g_sequence: d + (n-1) lambda vanishes");
        out.values[l] = c.values[l] - d * (n - d + s.values[l]) / den;
    }
    constexpr double tol = 1e-6;
    auto sorted = out.values;
    std::sort(sorted.begin(), sorted.end(), std::greater<>());
    out.groups = group_values(sorted, tol);
    out.distinct_count = static_cast<int>(out.groups.size());

    std::vector<double> tail(out.values.begin() + 1, out.values.end());
    std::sort(tail.begin(), tail.end(), std::greater<>());
    std::vector<SpectrumGroup> others;
    for (const auto& grp : group_values(tail, tol))
        if (std::abs(grp.value + 1) > tol * std::max(1.0, std::abs(grp.value))) others.push_back(grp);
    if (others.size() == 1) {
        out.third_value = others.front().value;
        out.third_value_multiplicity = others.front().multiplicity;
    }
    return out;
}

GSequence g_sequence(const Graph& g) {
    const auto d = g.regular_degree();
    if (!d) throw Inapplicable("g_sequence: graph is not regular");
    return g_sequence(eigenvalues(g), *d);
}

SelfComplementaryEigBounds self_complementary_eig_bounds(long long n) {
    if (n <= 1 || n % 4 != 1)
        throw Inapplicable("self_complementary_eig_bounds: regular self-complementary graphs need n = 1 mod 4, n > 1");
    const double r = std::sqrt(dn(n));
    return {0.5 * (r - 1), -0.5 * (r + 1)};
}

double haemers_clique_upper(long long n, double d, double l2) {
    if (d >= dn(n) - 1) throw Inapplicable("haemers_clique_upper: graph is complete");
    const double den = dn(n) - d + l2;
    if (den <= 0) throw Inapplicable("haemers_clique_upper: vanishing denominator");
    return dn(n) * (1 + l2) / den;
}

double haemers_clique_upper(long long n, double d, double l1, double l2, double delta) {
    const double den = d * dn(n) - delta * delta + l1 * l2;
    if (den <= 0) throw Inapplicable("haemers_clique_upper: vanishing denominator");
    return dn(n) * (d + l1 * l2) / den;
}

RamanujanBounds ramanujan_bounds(long long n, double d) {
    if (d < 2) throw Inapplicable("ramanujan_bounds: needs d >= 2");
    if (d > dn(n) - 1) throw std::invalid_argument("ramanujan_bounds: d exceeds n - 1");
    const double r = 2 * std::sqrt(d - 1);
    RamanujanBounds b;
    b.clique_upper_raw = dn(n) * (1 + r) / (dn(n) - d + r);
    b.clique_upper = floor_tol(b.clique_upper_raw);
    b.theta_lower = (dn(n) - d + r) / (1 + r);
    b.chromatic_complement_lower = ceil_tol(b.theta_lower);
    return b;
}

WeiBounds wei_bounds(const std::vector<int>& degrees) {
    const double n = dn(static_cast<long long>(degrees.size()));
    WeiBounds w;
    for (int d : degrees) {
        w.alpha_lower += 1.0 / (1 + d);
        w.omega_lower += 1.0 / (n - d);
    }
    return w;
}

std::vector<RegularFactor> power_factors(const RegularFactor& f, int k) {
    if (k < 1) throw std::invalid_argument("power_factors: k must be positive");
    return std::vector<RegularFactor>(static_cast<std::size_t>(k), f);
}

double product_degree(const std::vector<RegularFactor>& factors) {
    double p = 1;
    for (const auto& f : factors) p *= 1 + f.d;
    return p - 1;
}

ProductEigBound eig2_lower_product(const std::vector<RegularFactor>& factors) {
    if (factors.empty()) throw std::invalid_argument("eig2_lower_product: no factors");
    double pn = 1, pd = 1, pt = 1, ph = 1;
    bool have_lmin = true;
    for (const auto& f : factors) {
        pn *= dn(f.n);
        pd *= 1 + f.d;
        pt *= f.theta;
        if (!f.lmin) {
            have_lmin = false;
        } else {
            ph *= f.d == 0 ? dn(f.n) : theta_upper_regular(f.n, f.d, *f.lmin);
        }
    }
    if (pt - 1 <= 1e-12) throw Inapplicable("eig2_lower_product: every factor is complete");
    ProductEigBound b;
    b.value = (pn - pd) / (pt - 1) - 1;
    if (have_lmin && ph - 1 > 1e-12) b.weakened = (pn - pd) / (ph - 1) - 1;
    return b;
}

ProductEigBound eigmin_upper_product(const std::vector<RegularFactor>& factors) {
    if (factors.empty()) throw std::invalid_argument("eigmin_upper_product: no factors");
    double pd = 1, pr = 1, ph = 1;
    bool have_lmin = true;
    for (const auto& f : factors) {
        pd *= 1 + f.d;
        pr *= dn(f.n) / f.theta;
        if (!f.lmin) {
            have_lmin = false;
        } else if (f.d > 0) {
            if (!(*f.lmin < 0)) throw std::invalid_argument("eigmin_upper_product: lmin must be negative");
            ph *= 1 - f.d / *f.lmin;
        }
    }
    if (pd - 1 <= 0) throw Inapplicable("eigmin_upper_product: every factor is empty");
    if (pr - 1 <= 1e-12) throw Inapplicable("eigmin_upper_product: vanishing denominator");
    ProductEigBound b;
    b.value = -(pd - 1) / (pr - 1);
    if (have_lmin && ph - 1 > 1e-12) b.weakened = -(pd - 1) / (ph - 1);
    return b;
}

double alon_boppana(double d) {
    if (d < 1) throw std::invalid_argument("alon_boppana: needs d >= 1");
    return 2 * std::sqrt(d - 1);
}

K0Result non_ramanujan_k0(long long n, double d, double theta) {
    K0Result r;
    const double n3 = std::pow(dn(n), 3), d3 = std::pow(d + 1, 3);
    const double cap = dn(n) / std::sqrt(d + 1);
    if (d >= dn(n) - 1) {
        r.reason = "graph is complete";
        return r;
    }
    if (!(theta < cap)) {
        r.reason = "theta >= n/sqrt(d+1)";
        return r;
    }
    const double num = std::log(2 + std::pow(d + 1, -1.5)) + std::log(n3 / (n3 - d3));
    r.raw = num / std::log(cap / theta);
    r.k0 = std::max<long long>(3, static_cast<long long>(std::ceil(r.raw)));
    r.applicable = true;
    return r;
}

K0Result non_ramanujan_k0_self_complementary(long long n) {
    if (n <= 1 || n % 4 != 1) throw Inapplicable("non_ramanujan_k0_self_complementary: needs n = 1 mod 4, n > 1");
    return non_ramanujan_k0(n, dn(n - 1) / 2, std::sqrt(dn(n)));
}

ChromaticStrongProduct chromatic_lb_strong_product(const std::vector<std::pair<long long, double>>& n_theta) {
    ChromaticStrongProduct c;
    c.product_raw = c.complement_raw = 1;
    for (const auto& [n, th] : n_theta) {
        if (!(th >= 1)) throw std::invalid_argument("chromatic_lb_strong_product: theta must be >= 1");
        c.product_raw *= dn(n) / th;
        c.complement_raw *= th;
    }
    c.product = ceil_tol(c.product_raw);
    c.complement = ceil_tol(c.complement_raw);
    return c;
}

CeilBound chromatic_lb_regular(const std::vector<RegularFactor>& factors) {
    CeilBound c{1, 1};
    for (const auto& f : factors) {
        if (f.d == 0) continue;
        if (!f.lmin || !(*f.lmin < 0)) throw std::invalid_argument("chromatic_lb_regular: needs lmin < 0 per factor");
        c.raw *= 1 - f.d / *f.lmin;
    }
    c.value = ceil_tol(c.raw);
    return c;
}

BoundReport chromatic_regular_vs_hoffman(const std::vector<RegularFactor>& factors, double product_lmin) {
    const double pd = product_degree(factors);
    if (!(product_lmin < 0)) return inapplicable("regular_product_vs_hoffman", Relation::GreaterEq, "product has no edges");
    return make_report("regular_product_vs_hoffman", chromatic_lb_regular(factors).raw, Relation::GreaterEq,
                       1 - pd / product_lmin);
}

CeilBound chromatic_lb_complement_product(const std::vector<RegularFactor>& factors, bool factors_certified) {
    if (!factors_certified)
        throw Inapplicable("chromatic_lb_complement_product: factors not asserted edge-transitive or strongly regular");
    CeilBound c{1, 1};
    for (const auto& f : factors) {
        if (f.d == 0) {
            c.raw *= dn(f.n);
            continue;
        }
        if (!f.lmin) throw std::invalid_argument("chromatic_lb_complement_product: needs lmin per factor");
        c.raw *= theta_upper_regular(f.n, f.d, *f.lmin);
    }
    c.value = ceil_tol(c.raw);
    return c;
}

CeilBound chromatic_lb_self_complementary(const std::vector<long long>& orders, bool factors_certified) {
    if (!factors_certified)
        throw Inapplicable("chromatic_lb_self_complementary: factors not asserted self-complementary and symmetric");
    double p = 1;
    for (long long n : orders) p *= dn(n);
    CeilBound c;
    c.raw = std::sqrt(p);
    c.value = ceil_tol(c.raw);
    return c;
}

SrgProductChromatic srg_product_chromatic_bounds(const std::vector<SrgParams>& params,
                                                 const std::optional<std::vector<long long>>& known_chi) {
    SrgProductChromatic out;
    out.raw = 1;
    for (const auto& p : params) out.raw *= theta_srg(p).theta_complement;
    out.lower = ceil_tol(out.raw);
    if (known_chi) {
        if (known_chi->size() != params.size())
            throw std::invalid_argument("srg_product_chromatic_bounds: chromatic list length mismatch");
        long long u = 1;
        for (long long c : *known_chi) u *= c;
        out.upper = u;
    }
    return out;
}

bool is_prime_power(long long q) {
    if (q < 2) return false;
    long long p = 2;
    while (p * p <= q && q % p != 0) ++p;
    if (q % p != 0) return true;  // q itself is prime
    while (q % p == 0) q /= p;
    return q == 1;
}

AffinePolar affine_polar_params(int e, long long q, PolarSign sign) {
    if (e < 1) throw std::invalid_argument("affine_polar_params: e must be >= 1");
    if (!is_prime_power(q)) throw std::invalid_argument("affine_polar_params: q must be a prime power");
    const long long qe = checked_pow(q, e), qe1 = checked_pow(q, e - 1);
    const bool plus = sign == PolarSign::Plus;
    if (!plus && e == 1) throw Inapplicable("affine_polar_params: VO^-(2,q) has negative lambda in the printed formula");
    AffinePolar a;
    const long long s = plus ? 1 : -1;
    a.params.n = qe * qe;
    a.params.d = (qe1 + s) * (qe - s);
    // q(q^{e-2} + s) written as q^{e-1} + s q so that e = 1 stays integral.
    a.params.lambda = (qe1 + s * q) * (qe1 - s) + q - 2;
    a.params.mu = qe1 * (qe1 + s);
    if (plus) {
        a.l2 = qe - qe1 - 1;
        a.lmin = -qe1 - 1;
        a.theta = Rational(qe);
        a.theta_complement = Rational(qe);
    } else {
        a.l2 = qe1 - 1;
        a.lmin = -qe + qe1 - 1;
        a.theta = Rational(q * (qe - qe1 + 1));
        a.theta_complement = Rational(qe * qe1, qe - qe1 + 1);
    }
    return a;
}

}  // namespace thetakit
