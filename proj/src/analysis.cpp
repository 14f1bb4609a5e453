#include "thetakit/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "thetakit/errors.hpp"
#include "thetakit/products.hpp"
#include "thetakit/spectral.hpp"
#include "thetakit/srg.hpp"

namespace thetakit {
namespace {

constexpr int kPowerCapacityMaxN = 12;
constexpr std::chrono::duration<double> kPowerCapacityBudget{10.0};

double dn(long long x) { return static_cast<double>(x); }

Json groups_json(const std::vector<SpectrumGroup>& groups) {
    Json a = Json::array();
    for (const auto& g : groups) a.push_back({{"value", number_json(g.value)}, {"multiplicity", g.multiplicity}});
    return a;
}

Json solve_json(const SolveResult& r) {
    Json j;
    j["value"] = r.value;
    j["status"] = status_name(r.status);
    if (!r.exact()) {
        j["lower"] = r.lower;
        j["upper"] = r.upper;
    }
    return j;
}

struct ThetaInfo {
    double lower = 1, upper = 1;
    std::string source;
    bool exact = false;
    double value() const { return 0.5 * (lower + upper); }
};

// Lazily computed quantities shared between tasks.
class Context {
public:
    Context(const Graph& g, const AnalysisOptions& opt) : g_(g), opt_(opt) {}

    const Graph& g() const { return g_; }
    std::optional<int> degree() const { return g_.regular_degree(); }
    bool nondegenerate_regular() const {
        const auto d = degree();
        return d && *d > 0 && *d < g_.n() - 1;
    }

    const Spectrum& spectrum() {
        if (!spectrum_) spectrum_ = eigenvalues(g_);
        return *spectrum_;
    }
    double l2() { return g_.n() > 1 ? spectrum().values[1] : 0; }
    double lmin() { return spectrum().smallest(); }

    const std::optional<SrgParams>& srg() {
        if (!srg_done_) {
            srg_ = srg_check(g_);
            srg_done_ = true;
        }
        return srg_;
    }

    const ThetaInfo& theta() {
        if (theta_) return *theta_;
        ThetaInfo t;
        const double n = g_.n();
        if (g_.is_empty()) {
            t = {n, n, "edgeless", true};
        } else if (g_.is_complete()) {
            t = {1, 1, "complete", true};
        } else if (srg()) {
            const double v = theta_srg(*srg()).theta;
            t = {v, v, "srg closed form", true};
        } else if (g_.n() <= opt_.theta.max_n) {
            const auto r = theta_exact(g_, opt_.theta);
            t = {r.lower, r.upper, "interior-point solver", r.converged};
        } else if (degree()) {
            t = {theta_lower_regular(g_.n(), *degree(), l2()), theta_upper_regular(g_.n(), *degree(), lmin()),
                 "regular-graph bounds", false};
        } else {
            t = {1, n, "trivial bounds", false};
        }
        theta_ = t;
        return *theta_;
    }

    const SolveResult& alpha() {
        if (!alpha_) alpha_ = independence_number(g_, opt_.solve);
        return *alpha_;
    }
    const SolveResult& omega() {
        if (!omega_) omega_ = clique_number(g_, opt_.solve);
        return *omega_;
    }
    const SolveResult& chi() {
        if (!chi_) chi_ = chromatic_number(g_, opt_.solve);
        return *chi_;
    }
    const SolveResult& chi_complement() {
        if (!chi_c_) chi_c_ = chromatic_number(complement(g_), opt_.solve);
        return *chi_c_;
    }

private:
    const Graph& g_;
    const AnalysisOptions& opt_;
    std::optional<Spectrum> spectrum_;
    std::optional<SrgParams> srg_;
    bool srg_done_ = false;
    std::optional<ThetaInfo> theta_;
    std::optional<SolveResult> alpha_, omega_, chi_, chi_c_;
};

// Report against an exactly solved quantity, or inapplicable when the solver timed out.
BoundReport solved_report(const std::string& name, const SolveResult& r, Relation rel, double rhs) {
    if (!r.exact()) return inapplicable(name, rel, "exact solve timed out");
    return make_report(name, dn(r.value), rel, rhs);
}

template <class F>
void guarded(AnalysisSection& s, const std::string& name, Relation rel, F&& f) {
    try {
        f();
    } catch (const Inapplicable& e) {
        s.reports.push_back(inapplicable(name, rel, e.what()));
    }
}

void task_spectrum(Context& c, AnalysisSection& s) {
    const auto& sp = c.spectrum();
    const Graph& g = c.g();
    s.values["groups"] = groups_json(sp.groups);
    s.values["lambda1"] = number_json(sp.largest());
    if (g.n() > 1) {
        s.values["lambda2"] = number_json(c.l2());
        s.values["lambda_min"] = number_json(c.lmin());
    }
    double trace = 0, squares = 0;
    for (double v : sp.values) {
        trace += v;
        squares += v * v;
    }
    s.reports.push_back(make_report("trace_zero", trace, Relation::Equal, 0, 1e-7 * g.n()));
    s.reports.push_back(make_report("sum_squares_twice_edges", squares, Relation::Equal, 2.0 * g.edge_count(),
                                    1e-6 * g.n()));
    if (const auto d = c.degree()) {
        s.values["degree"] = *d;
        s.values["complement_groups"] = groups_json(complement_spectrum(sp, *d, g.n()).groups);
        s.reports.push_back(make_report("lambda1_equals_degree", sp.largest(), Relation::Equal, *d, 1e-7));
        try {
            s.values["lambda_nontrivial"] = number_json(lambda_nontrivial(sp.groups, *d));
        } catch (const std::exception& e) {
            s.values["lambda_nontrivial"] = nullptr;
        }
    }
}

void task_srg(Context& c, AnalysisSection& s) {
    const Graph& g = c.g();
    const auto& p = c.srg();
    if (p) {
        s.values["params"] = {p->n, p->d, p->lambda, p->mu};
        const auto f = srg_params_feasible(*p);
        s.values["eigenvalues"] = {number_json(f.p1), number_json(f.p2)};
        s.values["multiplicities"] = {number_json(f.m1), number_json(f.m2)};
        s.values["conference"] = f.conference_case;
    } else {
        s.values["params"] = nullptr;
    }
    if (!c.nondegenerate_regular()) {
        s.reports.push_back(inapplicable("lmin_upper_from_l2", Relation::LessEq, "needs a non-complete non-empty regular graph"));
        return;
    }
    const int d = *c.degree();
    const auto [r1, r2] = eig_inequality_cor0(g.n(), d, c.l2(), c.lmin());
    s.reports.push_back(r1);
    s.reports.push_back(r2);
    s.values["tight"] = r1.equality && r2.equality;
    try {
        const auto gs = g_sequence(c.spectrum(), d);
        Json gj;
        gj["distinct"] = gs.distinct_count;
        gj["groups"] = groups_json(gs.groups);
        if (gs.third_value) {
            gj["third_value"] = number_json(*gs.third_value);
            gj["third_multiplicity"] = *gs.third_value_multiplicity;
        }
        s.values["g_sequence"] = gj;
        s.reports.push_back(make_report("g_n_at_most_minus_one", gs.values.back(), Relation::LessEq, -1));
        if (g.n() > 1) s.reports.push_back(make_report("g_2_at_least_minus_one", gs.values[1], Relation::GreaterEq, -1));
    } catch (const Inapplicable& e) {
        s.values["g_sequence"] = nullptr;
    }
    if (g.meta().self_complementary.value_or(false) && g.n() % 4 == 1 && g.n() > 1) {
        const auto b = self_complementary_eig_bounds(g.n());
        s.reports.push_back(make_report("self_complementary_l2_lower", c.l2(), Relation::GreaterEq, b.l2_lower));
        s.reports.push_back(make_report("self_complementary_lmin_upper", c.lmin(), Relation::LessEq, b.lmin_upper));
    }
}

void task_theta(Context& c, AnalysisSection& s) {
    const Graph& g = c.g();
    const auto& t = c.theta();
    s.values["theta"] = number_json(t.value());
    s.values["lower"] = number_json(t.lower);
    s.values["upper"] = number_json(t.upper);
    s.values["source"] = t.source;
    s.values["exact"] = t.exact;
    if (c.srg() && !g.is_complete() && !g.is_empty()) {
        const auto st = theta_srg(*c.srg());
        if (st.is_rational) {
            s.values["theta_rational"] = to_string(st.theta_q);
            s.values["theta_complement_rational"] = to_string(st.theta_complement_q);
        }
        s.values["theta_complement"] = number_json(st.theta_complement);
    }
    if (!c.nondegenerate_regular()) return;
    const int d = *c.degree();
    guarded(s, "theta_lower_regular", Relation::GreaterEq, [&] {
        s.reports.push_back(make_report("theta_lower_regular", t.upper, Relation::GreaterEq,
                                        theta_lower_regular(g.n(), d, c.l2())));
    });
    guarded(s, "theta_upper_regular", Relation::LessEq, [&] {
        s.reports.push_back(make_report("theta_upper_regular", t.lower, Relation::LessEq,
                                        theta_upper_regular(g.n(), d, c.lmin())));
    });
    guarded(s, "theta_complement_bounds", Relation::LessEq, [&] {
        const auto b = theta_bounds_complement(g.n(), d, c.l2(), c.lmin());
        s.values["complement_lower"] = number_json(b.lower);
        s.values["complement_upper"] = number_json(b.upper);
        s.reports.push_back(make_report("theta_complement_bracket", b.lower, Relation::LessEq, b.upper));
    });
}

void task_ramanujan(Context& c, AnalysisSection& s) {
    const Graph& g = c.g();
    const auto d = c.degree();
    if (!d || *d < 2 || !g.is_connected()) {
        s.values["ramanujan"] = nullptr;
        s.reports.push_back(inapplicable("ramanujan", Relation::LessEq, "needs a connected regular graph with d >= 2"));
        return;
    }
    const auto v = is_ramanujan(c.spectrum().groups, *d);
    s.values["ramanujan"] = v.ramanujan;
    s.values["lambda"] = number_json(v.lambda);
    s.values["threshold"] = number_json(v.threshold);
    s.values["margin"] = number_json(v.margin);
    s.values["alon_boppana"] = number_json(alon_boppana(*d));
    if (!v.ramanujan) return;
    const auto b = ramanujan_bounds(g.n(), *d);
    s.values["clique_upper"] = b.clique_upper;
    s.values["theta_lower"] = number_json(b.theta_lower);
    s.values["chromatic_complement_lower"] = b.chromatic_complement_lower;
    s.reports.push_back(solved_report("ramanujan_clique_upper", c.omega(), Relation::LessEq, dn(b.clique_upper)));
    s.reports.push_back(make_report("ramanujan_theta_lower", c.theta().upper, Relation::GreaterEq, b.theta_lower));
}

void task_product_bounds(Context& c, AnalysisSection& s, const AnalysisOptions& opt) {
    const Graph& g = c.g();
    if (!c.degree()) {
        s.reports.push_back(inapplicable("product_bounds", Relation::LessEq, "graph is not regular"));
        return;
    }
    const auto table = power_table(g, opt.power_k, opt.theta);
    s.values = table.to_json();
    for (auto& r : table.reports()) s.reports.push_back(r);
}

void task_chromatic_bounds(Context& c, AnalysisSection& s) {
    const Graph& g = c.g();
    const auto& t = c.theta();
    const auto& chi = c.chi();
    const auto& chic = c.chi_complement();
    const auto& om = c.omega();
    const auto& al = c.alpha();
    s.values["chi"] = solve_json(chi);
    s.values["chi_complement"] = solve_json(chic);
    s.values["omega"] = solve_json(om);
    s.values["alpha"] = solve_json(al);

    const auto sp = chromatic_lb_strong_product({{g.n(), t.upper}});
    const auto spc = chromatic_lb_strong_product({{g.n(), t.lower}});
    s.reports.push_back(solved_report("chi_lower_n_over_theta", chi, Relation::GreaterEq, dn(sp.product)));
    s.reports.push_back(solved_report("chi_complement_lower_theta", chic, Relation::GreaterEq, dn(spc.complement)));
    s.reports.push_back(solved_report("chi_at_least_omega", chi, Relation::GreaterEq, dn(om.value)));
    if (al.exact() && chi.exact())
        s.reports.push_back(make_report("alpha_times_chi_at_least_n", dn(al.value * chi.value), Relation::GreaterEq, g.n()));

    const auto w = wei_bounds(g.degrees());
    s.values["wei_alpha_lower"] = number_json(w.alpha_lower);
    s.values["wei_omega_lower"] = number_json(w.omega_lower);
    s.reports.push_back(solved_report("wei_alpha_lower", al, Relation::GreaterEq, w.alpha_lower));
    s.reports.push_back(solved_report("wei_omega_lower", om, Relation::GreaterEq, w.omega_lower));

    if (!g.is_empty() && g.n() > 1) {
        const double avg = 2.0 * dn(g.edge_count()) / g.n();
        const auto degs = g.degrees();
        const double delta = *std::max_element(degs.begin(), degs.end());
        guarded(s, "haemers_clique_upper_general", Relation::LessEq, [&] {
            const double h = haemers_clique_upper(g.n(), avg, c.spectrum().largest(), c.l2(), delta);
            s.reports.push_back(solved_report("haemers_clique_upper_general", om, Relation::LessEq, h));
        });
    }
    if (!c.nondegenerate_regular()) return;
    const int d = *c.degree();
    const RegularFactor f{g.n(), static_cast<double>(d), t.value(), c.lmin()};
    guarded(s, "haemers_clique_upper", Relation::LessEq, [&] {
        const double h = haemers_clique_upper(g.n(), d, c.l2());
        s.values["haemers_clique_upper"] = number_json(h);
        s.reports.push_back(solved_report("haemers_clique_upper", om, Relation::LessEq, dn(floor_tol(h))));
    });
    const auto reg = chromatic_lb_regular({f});
    s.values["regular_lower"] = number_json(reg.raw);
    s.reports.push_back(solved_report("chi_lower_regular", chi, Relation::GreaterEq, dn(reg.value)));
    s.reports.push_back(make_report("n_over_theta_vs_regular", dn(sp.product), Relation::GreaterEq, dn(reg.value)));

    const bool certified = g.meta().edge_transitive.value_or(false) || c.srg().has_value();
    if (certified) {
        const auto b = chromatic_lb_complement_product({f}, true);
        s.reports.push_back(solved_report("chi_complement_lower_ratio", chic, Relation::GreaterEq, dn(b.value)));
    } else {
        s.reports.push_back(inapplicable("chi_complement_lower_ratio", Relation::GreaterEq,
                                         "not flagged edge-transitive and not strongly regular"));
    }
    const bool sc = g.meta().self_complementary.value_or(false) &&
                    (g.meta().vertex_transitive.value_or(false) || c.srg().has_value());
    if (sc) {
        const auto b = chromatic_lb_self_complementary({g.n()}, true);
        s.reports.push_back(solved_report("chi_lower_sqrt_n", chi, Relation::GreaterEq, dn(b.value)));
    }
    if (c.srg()) {
        const auto b = srg_product_chromatic_bounds({*c.srg()});
        s.values["srg_lower"] = b.lower;
        s.reports.push_back(solved_report("chi_lower_srg", chi, Relation::GreaterEq, dn(b.lower)));
    }
}

void task_capacity(Context& c, AnalysisSection& s, const AnalysisOptions& opt) {
    const Graph& g = c.g();
    const auto& t = c.theta();
    const auto& al = c.alpha();
    s.values["alpha"] = solve_json(al);
    s.values["theta"] = number_json(t.value());
    s.values["theta_source"] = t.source;
    const bool determined = al.exact() && t.exact && std::abs(t.value() - dn(al.value)) < 1e-6;
    s.values["status"] = determined ? "determined" : "gap";
    s.values["capacity"] = determined ? Json(al.value) : Json(nullptr);
    s.reports.push_back(solved_report("alpha_at_most_theta", al, Relation::LessEq, t.upper));
    if (determined || g.n() > kPowerCapacityMaxN) return;
    SolveOptions o = opt.solve;
    o.upper_hint = static_cast<long long>(std::floor(t.upper * t.upper + 1e-6));
    o.budget = std::min(o.budget, kPowerCapacityBudget);
    const SolveResult a2 = independence_number(strong_power(g, 2), o);
    const double root = std::sqrt(dn(a2.value));
    s.values["alpha_square"] = solve_json(a2);
    s.values["power_lower"] = number_json(root);
    s.reports.push_back(solved_report("alpha_square_at_least_alpha_squared", a2, Relation::GreaterEq,
                                      dn(al.value * al.value)));
    s.reports.push_back(make_report("power_root_at_most_theta", root, Relation::LessEq, t.upper));
}

void task_k0(Context& c, AnalysisSection& s) {
    const Graph& g = c.g();
    if (!c.nondegenerate_regular() || !g.is_connected()) {
        s.values["k0"] = nullptr;
        s.reports.push_back(inapplicable("k0", Relation::GreaterEq, "needs a connected non-complete regular graph"));
        return;
    }
    const int d = *c.degree();
    const auto& t = c.theta();
    const auto r = non_ramanujan_k0(g.n(), d, t.upper);
    s.values["applicable"] = r.applicable;
    if (!r.applicable) {
        s.values["k0"] = nullptr;
        s.values["reason"] = r.reason;
        return;
    }
    s.values["k0"] = r.k0;
    s.values["raw"] = number_json(r.raw);
    const RegularFactor f{g.n(), static_cast<double>(d), t.upper, std::nullopt};
    for (long long k = r.k0; k <= r.k0 + 2; ++k) {
        const auto fs = power_factors(f, static_cast<int>(k));
        const std::string suffix = "_k" + std::to_string(k);
        const double threshold = alon_boppana(product_degree(fs));
        s.reports.push_back(make_report("k0_bound_exceeds_threshold" + suffix, eig2_lower_product(fs).value,
                                        Relation::GreaterEq, threshold));
        try {
            const auto groups = power_spectrum_groups(c.spectrum().groups, static_cast<int>(k));
            const double l2 = groups.front().multiplicity > 1 ? groups.front().value : groups.at(1).value;
            s.reports.push_back(make_report("k0_power_lambda2" + suffix, l2, Relation::GreaterEq, threshold));
        } catch (const ResourceLimit&) {
        }
    }
}

std::string fmt_num(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6g", x);
    return buf;
}

std::string flat(const Json& v) {
    if (v.is_number_float()) return fmt_num(v.get<double>());
    if (v.is_string()) return v.get<std::string>();
    std::string s = v.dump();
    if (s.size() > 90) s = s.substr(0, 87) + "...";
    return s;
}

void render_reports(std::ostringstream& out, const std::vector<BoundReport>& reports, double tol, bool color) {
    const char* green = color ? "\033[32m" : "";
    const char* red = color ? "\033[31m" : "";
    const char* dim = color ? "\033[2m" : "";
    const char* reset = color ? "\033[0m" : "";
    for (const auto& r : reports) {
        char line[256];
        if (!r.applicable) {
            std::snprintf(line, sizeof line, "  %s%-38s n/a (%s)%s\n", dim, r.name.c_str(), r.reason.c_str(), reset);
        } else {
            const bool bad = r.violated(tol);
            std::snprintf(line, sizeof line, "  %-38s %12s %-2s %-12s slack %-12s %s%s%s\n", r.name.c_str(),
                          fmt_num(r.lhs).c_str(), relation_symbol(r.relation), fmt_num(r.rhs).c_str(),
                          fmt_num(r.slack).c_str(), bad ? red : green,
                          bad ? "VIOLATED" : (r.equality ? "tight" : "ok"), reset);
        }
        out << line;
    }
}

}  // namespace

const std::vector<std::string>& analysis_tasks() {
    static const std::vector<std::string> tasks = {"spectrum",         "theta",            "srg",      "ramanujan",
                                                   "product-bounds",   "chromatic-bounds", "capacity", "k0"};
    return tasks;
}

std::vector<const BoundReport*> AnalysisReport::violations() const {
    std::vector<const BoundReport*> out;
    for (const auto& s : sections)
        for (const auto& r : s.reports)
            if (r.violated(violation_tol)) out.push_back(&r);
    return out;
}

Json AnalysisReport::to_json() const {
    Json j;
    j["graph"] = graph;
    j["n"] = n;
    j["edges"] = edges;
    Json secs = Json::array();
    for (const auto& s : sections) {
        Json sj;
        sj["task"] = s.task;
        sj["values"] = s.values;
        Json reps = Json::array();
        for (const auto& r : s.reports) reps.push_back(thetakit::to_json(r));
        sj["reports"] = reps;
        secs.push_back(sj);
    }
    j["sections"] = secs;
    j["violations"] = static_cast<long long>(violations().size());
    return j;
}

AnalysisReport analyze(const Graph& g, const AnalysisOptions& opt) {
    if (opt.tasks.empty()) throw std::invalid_argument("no analysis tasks requested");
    for (const auto& t : opt.tasks)
        if (std::find(analysis_tasks().begin(), analysis_tasks().end(), t) == analysis_tasks().end())
            throw std::invalid_argument("unknown task '" + t + "'");
    AnalysisReport rep;
    rep.graph = g.meta().name;
    rep.n = g.n();
    rep.edges = g.edge_count();
    rep.violation_tol = opt.violation_tol;
    Context c(g, opt);
    // Fixed task order keeps the output independent of the request order.
    for (const auto& task : analysis_tasks()) {
        if (std::find(opt.tasks.begin(), opt.tasks.end(), task) == opt.tasks.end()) continue;
        AnalysisSection s;
        s.task = task;
        if (task == "spectrum") task_spectrum(c, s);
        else if (task == "theta") task_theta(c, s);
        else if (task == "srg") task_srg(c, s);
        else if (task == "ramanujan") task_ramanujan(c, s);
        else if (task == "product-bounds") task_product_bounds(c, s, opt);
        else if (task == "chromatic-bounds") task_chromatic_bounds(c, s);
        else if (task == "capacity") task_capacity(c, s, opt);
        else if (task == "k0") task_k0(c, s);
        rep.sections.push_back(std::move(s));
    }
    return rep;
}

std::string render_table(const AnalysisReport& r, bool color) {
    std::ostringstream out;
    out << "graph " << (r.graph.empty() ? "(unnamed)" : r.graph) << ": n=" << r.n << " edges=" << r.edges << "\n";
    for (const auto& s : r.sections) {
        out << "\n[" << s.task << "]\n";
        for (const auto& [key, v] : s.values.items()) {
            if (key == "rows") continue;
            out << "  " << key << " = " << flat(v) << "\n";
        }
        if (s.values.contains("rows")) {
            for (const auto& row : s.values.at("rows")) out << "  " << flat(row) << "\n";
        }
        render_reports(out, s.reports, r.violation_tol, color);
    }
    const auto v = r.violations();
    out << "\n" << v.size() << " violated bound(s)\n";
    return out.str();
}

PowerTable power_table(const Graph& g, int k_max, const ThetaOptions& topt) {
    const auto d = g.regular_degree();
    if (!d) throw Inapplicable("power_table: graph is not regular");
    if (k_max < 1) throw std::invalid_argument("power_table: k must be positive");
    PowerTable t;
    t.graph = g.meta().name;
    if (g.is_empty()) {
        t.theta_lower = t.theta_upper = g.n();
        t.theta_source = "edgeless";
    } else if (g.is_complete()) {
        t.theta_lower = t.theta_upper = 1;
        t.theta_source = "complete";
    } else if (const auto p = srg_check(g)) {
        t.theta_lower = t.theta_upper = theta_srg(*p).theta;
        t.theta_source = "srg closed form";
    } else if (g.n() <= topt.max_n) {
        const auto r = theta_exact(g, topt);
        t.theta_lower = r.lower;
        t.theta_upper = r.upper;
        t.theta_source = "interior-point solver";
    } else {
        t.theta_lower = theta_lower_regular(g.n(), *d, lambda2(g));
        t.theta_upper = theta_upper_regular(g.n(), *d, lambda_min(g));
        t.theta_source = "regular-graph bounds";
    }
    const auto spec = eigenvalues(g);
    for (int k = 1; k <= k_max; ++k) {
        PowerRow row;
        row.k = k;
        row.order = std::pow(dn(g.n()), k);
        row.degree = std::pow(1.0 + *d, k) - 1;
        const auto groups = power_spectrum_groups(spec.groups, k);
        row.lambda2 = groups.front().multiplicity > 1 ? groups.front().value
                                                      : (groups.size() > 1 ? groups[1].value : groups.front().value);
        row.lambda_min = groups.back().value;
        const RegularFactor hi{g.n(), static_cast<double>(*d), t.theta_upper, std::nullopt};
        const RegularFactor lo{g.n(), static_cast<double>(*d), t.theta_lower, std::nullopt};
        try {
            row.lambda2_lower = eig2_lower_product(power_factors(hi, k)).value;
        } catch (const Inapplicable&) {
        }
        try {
            row.lambda_min_upper = eigmin_upper_product(power_factors(lo, k)).value;
        } catch (const Inapplicable&) {
        }
        row.alon_boppana = row.degree >= 1 ? alon_boppana(row.degree) : 0;
        if (row.degree >= 2) {
            try {
                row.ramanujan = is_ramanujan(groups, row.degree).ramanujan;
            } catch (const std::exception&) {
            }
        }
        t.rows.push_back(row);
    }
    return t;
}

std::vector<BoundReport> PowerTable::reports() const {
    std::vector<BoundReport> out;
    for (const auto& r : rows) {
        const std::string k = std::to_string(r.k);
        if (r.lambda2_lower)
            out.push_back(make_report("lambda2_power_lower_k" + k, r.lambda2, Relation::GreaterEq, *r.lambda2_lower));
        if (r.lambda_min_upper)
            out.push_back(make_report("lambda_min_power_upper_k" + k, r.lambda_min, Relation::LessEq, *r.lambda_min_upper));
    }
    return out;
}

Json PowerTable::to_json() const {
    Json j;
    j["graph"] = graph;
    j["theta_lower"] = number_json(theta_lower);
    j["theta_upper"] = number_json(theta_upper);
    j["theta_source"] = theta_source;
    Json rs = Json::array();
    for (const auto& r : rows) {
        Json x;
        x["k"] = r.k;
        x["order"] = number_json(r.order);
        x["degree"] = number_json(r.degree);
        x["lambda2"] = number_json(r.lambda2);
        x["lambda2_lower"] = r.lambda2_lower ? number_json(*r.lambda2_lower) : Json(nullptr);
        x["lambda_min"] = number_json(r.lambda_min);
        x["lambda_min_upper"] = r.lambda_min_upper ? number_json(*r.lambda_min_upper) : Json(nullptr);
        x["alon_boppana"] = number_json(r.alon_boppana);
        x["ramanujan"] = r.ramanujan ? Json(*r.ramanujan) : Json(nullptr);
        rs.push_back(x);
    }
    j["rows"] = rs;
    return j;
}

std::string render_power_table(const PowerTable& t, bool color) {
    std::ostringstream out;
    out << "graph " << (t.graph.empty() ? "(unnamed)" : t.graph) << ": theta in [" << fmt_num(t.theta_lower) << ", "
        << fmt_num(t.theta_upper) << "] (" << t.theta_source << ")\n";
    char line[256];
    std::snprintf(line, sizeof line, "%3s %12s %12s %12s %12s %12s %12s %12s %10s\n", "k", "order", "degree",
                  "lambda2", "lambda2_lb", "lambda_min", "lmin_ub", "2sqrt(d-1)", "ramanujan");
    out << line;
    auto opt = [](const std::optional<double>& v) { return v ? fmt_num(*v) : std::string("-"); };
    for (const auto& r : t.rows) {
        std::snprintf(line, sizeof line, "%3d %12s %12s %12.4f %12s %12.4f %12s %12.4f %10s\n", r.k,
                      fmt_num(r.order).c_str(), fmt_num(r.degree).c_str(), r.lambda2, opt(r.lambda2_lower).c_str(),
                      r.lambda_min, opt(r.lambda_min_upper).c_str(), r.alon_boppana,
                      r.ramanujan ? (*r.ramanujan ? "yes" : "no") : "-");
        out << line;
    }
    const auto reps = t.reports();
    const bool bad = std::any_of(reps.begin(), reps.end(), [](const BoundReport& r) { return r.violated(); });
    const char* col = color ? (bad ? "\033[31m" : "\033[32m") : "";
    out << col << (bad ? "bound violated" : "all bounds hold") << (color ? "\033[0m" : "") << "\n";
    return out.str();
}

}  // namespace thetakit
