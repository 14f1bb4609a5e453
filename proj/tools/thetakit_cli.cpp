// thetakit: analyse graphs with spectral and theta-function bounds.
#include <unistd.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "thetakit/acceptance.hpp"
#include "thetakit/analysis.hpp"
#include "thetakit/catalog.hpp"
#include "thetakit/errors.hpp"
#include "thetakit/io.hpp"

namespace tk = thetakit;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInput = 1;
constexpr int kExitViolation = 2;

struct Source {
    std::string gen, g6, edges;
};

void add_source_options(CLI::App* cmd, Source& src) {
    auto* gen = cmd->add_option("--gen", src.gen, "generator spec, e.g. petersen or kneser:7:2 (see catalog)");
    auto* g6 = cmd->add_option("--g6", src.g6, "graph6 file");
    auto* el = cmd->add_option("--edges", src.edges, "edge-list file: n, then one 'u v' pair per line");
    gen->excludes(g6, el);
    g6->excludes(el);
}

tk::Graph load_source(const Source& src) {
    const int given = !src.gen.empty() + !src.g6.empty() + !src.edges.empty();
    if (given != 1) throw std::invalid_argument("give exactly one of --gen, --g6, --edges");
    if (!src.gen.empty()) return tk::from_generator_spec(src.gen);
    if (!src.edges.empty()) {
        tk::Graph g = tk::read_edge_list_file(src.edges);
        g.meta().name = std::filesystem::path(src.edges).stem().string();
        return g;
    }
    tk::Graph g = tk::read_graph6_file(src.g6);
    const std::string stem = std::filesystem::path(src.g6).stem().string();
    g.meta().name = stem;
    // A bundled fixture read by path keeps its manifest flags when the adjacency matches.
    try {
        if (const auto f = tk::find_fixture(stem)) {
            tk::Graph known = tk::load_fixture(stem);
            if (known == g) g.meta() = known.meta();
        }
    } catch (const std::exception&) {
    }
    return g;
}

bool use_color(const std::string& out_path, bool json) {
    if (json || !out_path.empty()) return false;
    if (const char* nc = std::getenv("NO_COLOR"); nc && *nc) return false;
    return isatty(fileno(stdout));
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(out_path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot write " + out_path);
    f << text;
}

std::vector<std::string> split_tasks(const std::string& s) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ','))
        if (!item.empty()) out.push_back(item);
    return out;
}

std::string join(const std::vector<std::string>& v) {
    std::string s;
    for (const auto& x : v) s += (s.empty() ? "" : ",") + x;
    return s;
}

int run_analyze(const Source& src, const std::string& tasks, bool json, const std::string& out, double budget,
                int power_k) {
    const tk::Graph g = load_source(src);
    tk::AnalysisOptions opt;
    opt.tasks = tasks == "all" ? tk::analysis_tasks() : split_tasks(tasks);
    opt.solve.budget = std::chrono::duration<double>(budget);
    opt.power_k = power_k;
    const tk::AnalysisReport rep = tk::analyze(g, opt);
    emit(json ? rep.to_json().dump(2) + "\n" : tk::render_table(rep, use_color(out, json)), out);
    return rep.violations().empty() ? kExitOk : kExitViolation;
}

int run_power(const Source& src, int k, bool json, const std::string& out) {
    const tk::Graph g = load_source(src);
    const tk::PowerTable t = tk::power_table(g, k);
    emit(json ? t.to_json().dump(2) + "\n" : tk::render_power_table(t, use_color(out, json)), out);
    for (const auto& r : t.reports())
        if (r.violated()) return kExitViolation;
    return kExitOk;
}

std::string opt_num(const std::optional<double>& v) {
    if (!v) return "-";
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6g", *v);
    return buf;
}

std::string opt_int(const std::optional<long long>& v) { return v ? std::to_string(*v) : "-"; }

std::string flag(const std::optional<bool>& b) { return b ? (*b ? "yes" : "no") : "?"; }

int run_catalog(bool json) {
    const auto fixtures = tk::load_manifest();
    if (json) {
        tk::Json j;
        tk::Json gens = tk::Json::array();
        for (const auto& g : tk::generator_catalog())
            gens.push_back({{"name", g.name}, {"usage", g.usage}, {"description", g.description}});
        j["generators"] = gens;
        tk::Json fx = tk::Json::array();
        for (const auto& f : fixtures) {
            tk::Json e;
            e["name"] = f.name;
            e["file"] = f.file.filename().string();
            e["n"] = f.n;
            e["edges"] = f.edges;
            e["srg"] = f.srg ? tk::Json{f.srg->n, f.srg->d, f.srg->lambda, f.srg->mu} : tk::Json(nullptr);
            e["theta"] = f.theta ? tk::number_json(*f.theta) : tk::Json(nullptr);
            e["theta_complement"] = f.theta_complement ? tk::number_json(*f.theta_complement) : tk::Json(nullptr);
            e["alpha"] = f.alpha ? tk::Json(*f.alpha) : tk::Json(nullptr);
            e["omega"] = f.omega ? tk::Json(*f.omega) : tk::Json(nullptr);
            e["chi"] = f.chi ? tk::Json(*f.chi) : tk::Json(nullptr);
            auto b = [](const std::optional<bool>& x) { return x ? tk::Json(*x) : tk::Json(nullptr); };
            e["vertex_transitive"] = b(f.meta.vertex_transitive);
            e["edge_transitive"] = b(f.meta.edge_transitive);
            e["self_complementary"] = b(f.meta.self_complementary);
            fx.push_back(e);
        }
        j["fixtures"] = fx;
        std::cout << j.dump(2) << "\n";
        return kExitOk;
    }
    std::cout << "generators:\n";
    for (const auto& g : tk::generator_catalog())
        std::printf("  %-30s %s\n", g.usage.c_str(), g.description.c_str());
    std::cout << "\nfixtures (" << tk::fixture_dir().string() << "):\n";
    std::printf("  %-16s %5s %7s %-18s %9s %6s %6s %5s  %s\n", "name", "n", "edges", "srg", "theta", "alpha", "omega",
                "chi", "vt/et/sc");
    for (const auto& f : fixtures) {
        const std::string srg = f.srg ? f.srg->to_string() : "-";
        const std::string flags =
            flag(f.meta.vertex_transitive) + "/" + flag(f.meta.edge_transitive) + "/" + flag(f.meta.self_complementary);
        std::printf("  %-16s %5d %7lld %-18s %9s %6s %6s %5s  %s\n", f.name.c_str(), f.n, f.edges, srg.c_str(),
                    opt_num(f.theta).c_str(), opt_int(f.alpha).c_str(), opt_int(f.omega).c_str(),
                    opt_int(f.chi).c_str(), flags.c_str());
    }
    return kExitOk;
}

int run_examples(bool slow) {
    tk::AcceptanceOptions opt;
    opt.include_slow = slow;
    int failed = 0;
    for (const auto& r : tk::run_acceptance(opt)) {
        std::printf("%s [%2d] %s: %s\n", r.passed ? "PASS" : "FAIL", r.id, r.title.c_str(), r.detail.c_str());
        std::fflush(stdout);
        failed += r.passed ? 0 : 1;
    }
    return failed == 0 ? kExitOk : kExitViolation;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Lovasz theta, spectral bounds and strong products of graphs"};
    app.require_subcommand(1);

    Source src;
    std::string tasks = "spectrum,theta";
    std::string out;
    bool json = false;
    double budget = 60;
    int power_k = 3;
    auto* analyze = app.add_subcommand("analyze", "run analysis tasks on one graph");
    add_source_options(analyze, src);
    analyze->add_option("--tasks", tasks, "comma-separated tasks or 'all': " + join(tk::analysis_tasks()))
        ->capture_default_str();
    analyze->add_flag("--json", json, "emit JSON instead of a table");
    analyze->add_option("--out", out, "write output to a file");
    analyze->add_option("--budget", budget, "seconds per exact solve")->check(CLI::PositiveNumber)->capture_default_str();
    analyze->add_option("--power-k", power_k, "largest strong power for product-bounds")
        ->check(CLI::Range(1, 64))
        ->capture_default_str();

    Source psrc;
    int k = 5;
    bool pjson = false;
    std::string pout;
    auto* power = app.add_subcommand("power", "eigenvalues of strong powers against their bounds");
    add_source_options(power, psrc);
    power->add_option("--k", k, "largest power")->check(CLI::Range(1, 64))->capture_default_str();
    power->add_flag("--json", pjson, "emit JSON instead of a table");
    power->add_option("--out", pout, "write output to a file");

    bool cjson = false;
    auto* catalog = app.add_subcommand("catalog", "list generators and bundled fixtures");
    catalog->add_flag("--json", cjson, "emit JSON");

    bool slow = false;
    auto* examples = app.add_subcommand("examples", "run the bundled reproduction suite");
    examples->add_flag("--slow", slow, "include the slow capacity certificate");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitInput;
    }

    try {
        if (*analyze) return run_analyze(src, tasks, json, out, budget, power_k);
        if (*power) return run_power(psrc, k, pjson, pout);
        if (*catalog) return run_catalog(cjson);
        if (*examples) return run_examples(slow);
    } catch (const tk::Inapplicable& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    }
    return kExitOk;
}
