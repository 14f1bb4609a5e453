#include "thetakit/acceptance.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <random>

#include "thetakit/bounds.hpp"
#include "thetakit/catalog.hpp"
#include "thetakit/errors.hpp"
#include "thetakit/exact.hpp"
#include "thetakit/generators.hpp"
#include "thetakit/products.hpp"
#include "thetakit/spectral.hpp"
#include "thetakit/srg.hpp"
#include "thetakit/theta.hpp"

namespace thetakit {
namespace {

using Clock = std::chrono::steady_clock;

std::string fmt(double x) {
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.10g", x);
    return buf;
}

double seconds_since(Clock::time_point t) { return std::chrono::duration<double>(Clock::now() - t).count(); }

class Checker {
public:
    Checker(int id, std::string title) : start_(Clock::now()) {
        res_.id = id;
        res_.title = std::move(title);
    }

    bool expect(bool ok, const std::string& what) {
        ++checks_;
        if (!ok) {
            if (failures_ < 3) failure_ += (failure_.empty() ? "" : "; ") + what;
            ++failures_;
        }
        return ok;
    }
    bool near(double got, double want, double tol, const std::string& what) {
        return expect(std::abs(got - want) <= tol, what + ": got " + fmt(got) + ", want " + fmt(want) + " +- " + fmt(tol));
    }
    void fail(const std::string& what) { expect(false, what); }
    double elapsed() const { return seconds_since(start_); }

    CriterionResult finish(const std::string& summary = {}) {
        res_.seconds = elapsed();
        res_.passed = failure_.empty();
        res_.detail = res_.passed ? std::to_string(checks_) + " checks" + (summary.empty() ? "" : "; " + summary)
                                  : std::to_string(failures_) + " of " + std::to_string(checks_) +
                                        " checks failed: " + failure_;
        return res_;
    }

private:
    Clock::time_point start_;
    CriterionResult res_;
    std::string failure_;
    int checks_ = 0;
    int failures_ = 0;
};

SolveOptions budgeted(const AcceptanceOptions& opt) {
    SolveOptions s;
    s.budget = opt.solver_budget;
    return s;
}

RegularFactor factor_of(const Graph& g, double theta) {
    const auto d = g.regular_degree();
    if (!d) throw std::invalid_argument("factor_of: graph is not regular");
    RegularFactor f;
    f.n = g.n();
    f.d = *d;
    f.theta = theta;
    if (g.n() > 1) f.lmin = lambda_min(g);
    return f;
}

}  // namespace

CriterionResult check_srg_closed_forms() {
    Checker c(1, "SRG closed form for theta");
    const std::vector<std::pair<SrgParams, long long>> cases = {
        {{10, 3, 0, 1}, 4},   {{16, 6, 2, 2}, 4},  {{100, 36, 14, 12}, 10}, {{50, 7, 0, 1}, 15},  {{27, 16, 10, 8}, 3},
        {{56, 10, 0, 2}, 16}, {{77, 16, 0, 4}, 21}, {{231, 30, 9, 3}, 21},   {{28, 12, 6, 4}, 4},
    };
    double worst = 0;
    for (const auto& [p, want] : cases) {
        constexpr int reps = 200;
        SrgTheta t;
        const auto start = Clock::now();
        for (int i = 0; i < reps; ++i) t = theta_srg(p);
        const double per_call = seconds_since(start) / reps;
        worst = std::max(worst, per_call);
        c.expect(t.is_rational, p.to_string() + ": expected the rational branch");
        c.expect(t.theta_q == Rational(want), p.to_string() + ": theta " + to_string(t.theta_q) + " != " +
                                                  std::to_string(want));
        c.expect(t.theta_q * t.theta_complement_q == Rational(p.n), p.to_string() + ": theta * complement != n");
        c.expect(per_call < 1e-3, p.to_string() + ": slower than 1 ms per evaluation");
    }
    return c.finish("slowest evaluation " + fmt(worst * 1e6) + " us");
}

CriterionResult check_exact_theta() {
    Checker c(2, "exact theta solver");
    ThetaOptions opt;
    opt.tol = 1e-6;
    auto run = [&](const Graph& g, double want, double tol, const std::string& label) {
        const auto r = theta_exact(g, opt);
        c.expect(r.converged, label + ": solver did not converge");
        c.near(r.value, want, tol, label);
        c.expect(r.lower <= r.upper + 1e-12, label + ": certificate bracket inverted");
    };
    run(cycle(5), std::sqrt(5.0), 1e-5, "C5");
    run(petersen(), 4, 1e-5, "Petersen");
    for (int n : {2, 5, 8}) run(complete(n), 1, 1e-5, "K" + std::to_string(n));
    for (int n : {1, 4, 9}) run(empty(n), n, 1e-5, "empty(" + std::to_string(n) + ")");
    run(strong_power(cycle(5), 2), 5, 1e-4, "C5 x C5");
    c.expect(c.elapsed() < 30, "exceeded the 30 s budget");
    return c.finish();
}

CriterionResult check_pentagon_power_table() {
    Checker c(3, "second eigenvalue of pentagon powers");
    const double exact[] = {0.6180, 3.8541, 13.5623, 42.6869, 130.0608};
    const double lower[] = {0.6180, 3.0000, 8.6264, 21.3333, 51.4938};
    const Graph c5 = cycle(5);
    const auto groups = eigenvalues(c5).groups;
    const RegularFactor f{5, 2, std::sqrt(5.0), std::nullopt};
    for (int k = 1; k <= 5; ++k) {
        const auto pg = power_spectrum_groups(groups, k);
        const std::string tag = "k=" + std::to_string(k);
        c.near(pg.at(1).value, exact[k - 1], 5e-5, tag + " lambda2 via product spectrum");
        if (k <= 3) c.near(lambda2(strong_power(c5, k)), exact[k - 1], 5e-5, tag + " lambda2 via eigensolve");
        c.near(eig2_lower_product(power_factors(f, k)).value, lower[k - 1], 5e-5, tag + " lower bound");
    }
    c.expect(c.elapsed() < 10, "exceeded the 10 s budget");
    return c.finish();
}

CriterionResult check_k0_and_ramanujan() {
    Checker c(4, "k0 threshold and Ramanujan verdicts of pentagon powers");
    const std::pair<long long, long long> k0s[] = {{5, 5}, {9, 4}, {13, 3}, {17, 3}, {21, 3}};
    for (auto [n, want] : k0s) {
        const auto r = non_ramanujan_k0_self_complementary(n);
        c.expect(r.applicable, "n=" + std::to_string(n) + ": k0 reported inapplicable");
        c.expect(r.k0 == want, "n=" + std::to_string(n) + ": k0 = " + std::to_string(r.k0) + ", want " +
                                   std::to_string(want));
    }
    const auto groups = eigenvalues(cycle(5)).groups;
    for (int k = 1; k <= 5; ++k) {
        const double d = std::pow(3.0, k) - 1;
        const auto v = is_ramanujan(power_spectrum_groups(groups, k), d);
        const bool want = k <= 2;
        c.expect(v.ramanujan == want, "C5^" + std::to_string(k) + ": Ramanujan verdict " +
                                          (v.ramanujan ? "true" : "false"));
    }
    // The directly built power agrees with the analytic verdict where it is cheap.
    c.expect(is_ramanujan(strong_power(cycle(5), 2)).ramanujan, "materialized C5^2 not Ramanujan");
    c.expect(!is_ramanujan(strong_power(cycle(5), 3)).ramanujan, "materialized C5^3 Ramanujan");
    c.expect(c.elapsed() < 60, "exceeded the 60 s budget");
    return c.finish();
}

CriterionResult check_equality_iff_srg() {
    Checker c(5, "eigenvalue inequality tight exactly on SRGs");
    std::vector<Graph> graphs = {petersen(), shrikhande(), paley(13), cycle(5), complete_bipartite(3, 3), kneser(7, 2),
                                 cycle(6), cycle(7), hypercube(3), random_regular(20, 3, 7), random_regular(24, 5, 11),
                                 circulant(10, {1, 2})};
    for (const char* name : {"schlaefli", "hoffman_singleton", "chang1", "triangular8", "frucht", "gosset", "perkel"})
        graphs.push_back(load_fixture(name));
    int srgs = 0, others = 0;
    for (const auto& g : graphs) {
        const auto d = g.regular_degree();
        if (!c.expect(d.has_value(), g.meta().name + ": not regular")) continue;
        const auto s = eigenvalues(g);
        const auto [r1, r2] = eig_inequality_cor0(g.n(), *d, s.values[1], s.smallest(), 1e-6);
        const bool tight = r1.equality && r2.equality;
        const bool srg = srg_check(g).has_value();
        (srg ? srgs : others)++;
        c.expect(!r1.violated() && !r2.violated(), g.meta().name + ": inequality violated");
        c.expect(tight == srg, g.meta().name + (srg ? ": SRG but not tight, slack " : ": tight but not SRG, slack ") +
                                   fmt(r1.slack));
    }
    c.expect(graphs.size() >= 12 && srgs >= 5 && others >= 5, "catalog too small");
    return c.finish(std::to_string(srgs) + " SRGs, " + std::to_string(others) + " others");
}

CriterionResult check_g_sequence() {
    Checker c(6, "g-sequence dichotomy");
    const auto g3 = g_sequence(copies(complete(2), 3));
    const double want[] = {3, -1, -1, 1, -1, -1};
    if (c.expect(g3.values.size() == 6, "3K2: wrong length"))
        for (int i = 0; i < 6; ++i) c.near(g3.values[i], want[i], 1e-7, "3K2 g_" + std::to_string(i + 1));
    c.expect(g3.distinct_count == 3, "3K2: expected three distinct values");

    const auto hj = g_sequence(load_fixture("hall_janko"));
    c.expect(hj.distinct_count == 3, "Hall-Janko: expected three distinct values");
    c.near(hj.values.at(0), 62, 1e-7, "Hall-Janko g_1");
    c.expect(hj.third_value.has_value(), "Hall-Janko: no third value");
    if (hj.third_value) c.near(*hj.third_value, 9, 1e-7, "Hall-Janko third value");
    c.expect(hj.third_value_multiplicity == 27, "Hall-Janko: third value multiplicity");

    const auto c5 = g_sequence(cycle(5));
    c.expect(c5.distinct_count == 2, "C5: expected two distinct values");
    c.near(c5.values.at(0), 1, 1e-7, "C5 g_1");
    for (int i = 1; i < 5; ++i) c.near(c5.values[i], -1, 1e-7, "C5 g_" + std::to_string(i + 1));
    return c.finish();
}

CriterionResult check_chromatic(const AcceptanceOptions& opt) {
    Checker c(7, "chromatic numbers and product lower bounds");
    const auto so = budgeted(opt);
    auto chi = [&](const Graph& g, long long want, const std::string& label) {
        const auto r = chromatic_number(g, so);
        c.expect(r.exact(), label + ": chromatic solve timed out");
        c.expect(is_proper_coloring(g, r.coloring), label + ": invalid colouring witness");
        c.expect(r.value == want, label + ": chi = " + std::to_string(r.value) + ", want " + std::to_string(want));
        return r.value;
    };
    chi(shrikhande(), 4, "Shrikhande");
    chi(load_fixture("frucht"), 3, "Frucht");
    for (const char* name : {"chang1", "chang2", "chang3"}) chi(load_fixture(name), 7, name);

    const std::pair<SrgParams, long long> cor[] = {{{27, 16, 10, 8}, 9},   {{16, 6, 2, 2}, 4},
                                                   {{100, 36, 14, 12}, 10}, {{1782, 416, 100, 96}, 27},
                                                   {{28, 12, 6, 4}, 7}};
    for (const auto& [p, want] : cor) {
        const auto b = srg_product_chromatic_bounds({p});
        c.expect(b.lower == want, p.to_string() + ": product lower bound " + std::to_string(b.lower));
        c.near(b.raw, static_cast<double>(want), 1e-9, p.to_string() + " raw factor value");
    }
    // Mixed product of Schlaefli, Shrikhande and Hall-Janko powers meets the product of chromatic numbers.
    const std::vector<SrgParams> mix = {{27, 16, 10, 8}, {27, 16, 10, 8}, {16, 6, 2, 2}, {100, 36, 14, 12}};
    const auto mb = srg_product_chromatic_bounds(mix, std::vector<long long>{9, 9, 4, 10});
    c.expect(mb.lower == 9 * 9 * 4 * 10 && mb.upper == mb.lower, "mixed SRG product bounds do not meet");

    const Graph perkel = load_fixture("perkel");
    const long long chi_perkel = chi(perkel, 3, "Perkel");
    const auto pf = factor_of(perkel, 19);
    for (int k = 1; k <= 3; ++k) {
        const auto lb = chromatic_lb_regular(power_factors(pf, k));
        c.expect(lb.value == static_cast<long long>(std::pow(3, k)), "Perkel^" + std::to_string(k) + " bound " +
                                                                        std::to_string(lb.value));
    }
    c.expect(chromatic_lb_regular({pf}).value == chi_perkel, "Perkel bound does not meet chi at k=1");
    return c.finish();
}

CriterionResult check_capacity(const AcceptanceOptions& opt) {
    Checker c(8, "Shannon capacity certificates");
    const auto so = budgeted(opt);
    auto certify = [&](const Graph& g, long long want, const std::string& label) {
        const auto p = srg_check(g);
        if (!c.expect(p.has_value(), label + ": not strongly regular")) return;
        const auto t = theta_srg(*p);
        const auto cert = capacity_certificate(g, t.theta, "srg closed form", so);
        c.expect(is_independent_set(g, cert.alpha.witness), label + ": invalid independent set");
        c.expect(cert.status == CapacityStatus::Determined, label + ": capacity not determined (alpha " +
                                                                std::to_string(cert.alpha.value) + ", theta " +
                                                                fmt(t.theta) + ")");
        if (cert.capacity) c.near(*cert.capacity, static_cast<double>(want), 1e-9, label + " capacity");
    };
    certify(petersen(), 4, "Petersen");
    certify(shrikhande(), 4, "Shrikhande");
    for (auto [name, want] : std::initializer_list<std::pair<const char*, long long>>{
             {"hall_janko", 10}, {"hoffman_singleton", 15}, {"schlaefli", 3}, {"sims_gewirtz", 16}, {"m22", 21},
             {"chang1", 4}, {"chang2", 4}, {"chang3", 4}})
        certify(load_fixture(name), want, name);
    if (opt.include_slow) certify(load_fixture("cameron"), 21, "cameron");

    const Graph sc = complement(load_fixture("schlaefli"));
    const auto t = theta_srg(*srg_check(sc));
    const auto cert = capacity_certificate(sc, t.theta, "srg closed form", so);
    c.expect(cert.status == CapacityStatus::Gap, "Schlaefli complement: expected a gap");
    c.expect(cert.alpha.exact() && cert.alpha.value == 6, "Schlaefli complement: alpha " +
                                                              std::to_string(cert.alpha.value));
    c.near(cert.theta, 9, 1e-9, "Schlaefli complement theta");
    return c.finish(opt.include_slow ? "including Cameron" : "Cameron skipped (slow)");
}

CriterionResult check_affine_polar() {
    Checker c(9, "affine polar parameter grid");
    for (int e : {2, 3})
        for (long long q : {2, 3, 4, 5})
            for (auto sign : {PolarSign::Plus, PolarSign::Minus}) {
                const auto a = affine_polar_params(e, q, sign);
                const std::string tag = std::string(sign == PolarSign::Plus ? "VO+(" : "VO-(") +
                                        std::to_string(2 * e) + "," + std::to_string(q) + ")";
                const auto f = srg_params_feasible(a.params);
                c.expect(f.feasible, tag + " " + a.params.to_string() + " infeasible");
                c.near(f.p1, static_cast<double>(a.l2), 1e-9, tag + " second eigenvalue");
                c.near(f.p2, static_cast<double>(a.lmin), 1e-9, tag + " smallest eigenvalue");
                const auto t = theta_srg(a.params);
                c.expect(t.is_rational, tag + ": closed form not rational");
                c.expect(t.theta_q == a.theta, tag + ": theta " + to_string(t.theta_q) + " vs " + to_string(a.theta));
                c.expect(t.theta_complement_q == a.theta_complement, tag + ": complement theta mismatch");
                c.near(to_double(a.theta), t.theta, 1e-9, tag + " theta as real");
                c.expect(a.theta * a.theta_complement == Rational(a.params.n), tag + ": theta products != n");
            }
    const std::tuple<int, long long, long long> known[] = {{2, 2, 4}, {3, 2, 8}, {2, 3, 9}, {3, 3, 27}};
    for (auto [e, q, want] : known) {
        const auto a = affine_polar_params(e, q, PolarSign::Plus);
        c.expect(a.theta == Rational(want), "VO+(" + std::to_string(2 * e) + "," + std::to_string(q) + ") theta " +
                                                to_string(a.theta));
    }
    return c.finish();
}

CriterionResult check_oracle_sweep(const AcceptanceOptions& opt) {
    Checker c(10, "product spectrum oracle and bound soundness sweep");
    std::mt19937_64 rng(opt.seed);
    auto uniform = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
    auto random_factor = [&](int n) {
        int d = uniform(0, n - 1);
        if ((n * d) % 2) d = d > 0 ? d - 1 : 1;
        return random_regular(n, d, rng());
    };
    ThetaOptions topt;
    std::vector<Graph> small;
    double worst_spectrum = 0;
    int bound_checks = 0;
    for (int i = 0; i < opt.sweep_products; ++i) {
        const int n1 = uniform(3, 20);
        const int n2 = uniform(3, std::min(20, 400 / n1));
        const Graph g = random_factor(n1), h = random_factor(n2);
        const auto sg = eigenvalues(g), sh = eigenvalues(h);
        const auto ps = product_spectrum({sg, sh});
        const auto direct = eigenvalues(strong_product(g, h));
        double diff = 0;
        for (int k = 0; k < direct.size(); ++k) diff = std::max(diff, std::abs(ps.values[k] - direct.values[k]));
        worst_spectrum = std::max(worst_spectrum, diff);
        c.expect(diff <= 1e-7, "product " + std::to_string(i) + ": spectrum mismatch " + fmt(diff));

        const auto tg = theta_exact(g, topt), th = theta_exact(h, topt);
        // Decreasing in theta for the eig2 bound, increasing for the eigmin bound.
        const std::vector<RegularFactor> hi = {factor_of(g, tg.upper), factor_of(h, th.upper)};
        const std::vector<RegularFactor> lo = {factor_of(g, tg.lower), factor_of(h, th.lower)};
        const double l2 = direct.values.at(1), lmin = direct.smallest();
        try {
            const auto b = eig2_lower_product(hi);
            ++bound_checks;
            c.expect(b.value <= l2 + 1e-6, "product " + std::to_string(i) + ": eig2 bound " + fmt(b.value) + " > " +
                                               fmt(l2));
            if (b.weakened) c.expect(*b.weakened <= l2 + 1e-6, "product " + std::to_string(i) + ": weakened eig2 bound");
        } catch (const Inapplicable&) {
        }
        try {
            const auto b = eigmin_upper_product(lo);
            ++bound_checks;
            c.expect(b.value >= lmin - 1e-6, "product " + std::to_string(i) + ": eigmin bound " + fmt(b.value) +
                                                 " < " + fmt(lmin));
            if (b.weakened)
                c.expect(*b.weakened >= lmin - 1e-6, "product " + std::to_string(i) + ": weakened eigmin bound");
        } catch (const Inapplicable&) {
        }
        if (small.size() < 60) {
            small.push_back(g);
            small.push_back(h);
        }
    }
    for (int i = 0; i < 100; ++i) small.push_back(random_gnp(uniform(5, 20), uniform(2, 8) / 10.0, rng()));

    SolveOptions so;
    so.budget = opt.solver_budget;
    for (std::size_t i = 0; i < small.size(); ++i) {
        const Graph& g = small[i];
        const auto t = theta_exact(g, topt);
        const auto a = independence_number(g, so);
        const auto x = chromatic_number(complement(g), so);
        const std::string tag = "sandwich graph " + std::to_string(i);
        c.expect(a.exact() && x.exact(), tag + ": exact solve timed out");
        c.expect(static_cast<double>(a.value) <= t.upper + 1e-6, tag + ": alpha " + std::to_string(a.value) +
                                                                     " > theta " + fmt(t.upper));
        c.expect(t.lower <= static_cast<double>(x.value) + 1e-6, tag + ": theta " + fmt(t.lower) +
                                                                     " > chi(complement) " + std::to_string(x.value));
    }
    c.expect(c.elapsed() < 300, "exceeded the 5 minute budget");
    return c.finish("max spectrum deviation " + fmt(worst_spectrum) + ", " + std::to_string(bound_checks) +
                    " product bounds, " + std::to_string(small.size()) + " sandwich graphs");
}

std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& opt) {
    std::vector<CriterionResult> out;
    auto guarded = [&](int id, const std::string& title, auto&& fn) {
        try {
            out.push_back(fn());
        } catch (const std::exception& e) {
            CriterionResult r;
            r.id = id;
            r.title = title;
            r.detail = std::string("exception: ") + e.what();
            out.push_back(r);
        }
    };
    guarded(1, "SRG closed form for theta", [] { return check_srg_closed_forms(); });
    guarded(2, "exact theta solver", [] { return check_exact_theta(); });
    guarded(3, "second eigenvalue of pentagon powers", [] { return check_pentagon_power_table(); });
    guarded(4, "k0 threshold and Ramanujan verdicts of pentagon powers", [] { return check_k0_and_ramanujan(); });
    guarded(5, "eigenvalue inequality tight exactly on SRGs", [] { return check_equality_iff_srg(); });
    guarded(6, "g-sequence dichotomy", [] { return check_g_sequence(); });
    guarded(7, "chromatic numbers and product lower bounds", [&] { return check_chromatic(opt); });
    guarded(8, "Shannon capacity certificates", [&] { return check_capacity(opt); });
    guarded(9, "affine polar parameter grid", [] { return check_affine_polar(); });
    guarded(10, "product spectrum oracle and bound soundness sweep", [&] { return check_oracle_sweep(opt); });
    return out;
}

}  // namespace thetakit
