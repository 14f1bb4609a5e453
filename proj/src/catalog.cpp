#include "thetakit/catalog.hpp"

#include <charconv>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <stdexcept>

#include <json.hpp>

#include "thetakit/generators.hpp"
#include "thetakit/io.hpp"

#ifndef THETAKIT_FIXTURE_DIR
#define THETAKIT_FIXTURE_DIR "fixtures"
#endif

namespace thetakit {
namespace {

std::vector<std::string> split(std::string_view s, char sep) {
    std::vector<std::string> out;
    std::size_t start = 0;
    while (true) {
        const auto pos = s.find(sep, start);
        out.emplace_back(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
        if (pos == std::string_view::npos) break;
        start = pos + 1;
    }
    return out;
}

long long parse_int(const std::string& s, const std::string& spec) {
    long long v = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size())
        throw std::invalid_argument("generator spec '" + spec + "': '" + s + "' is not an integer");
    return v;
}

int parse_small(const std::string& s, const std::string& spec) {
    const long long v = parse_int(s, spec);
    if (v < 0 || v > 1'000'000) throw std::invalid_argument("generator spec '" + spec + "': argument out of range");
    return static_cast<int>(v);
}

using Builder = std::function<Graph(const std::vector<std::string>&, const std::string&)>;

struct Entry {
    GeneratorInfo info;
    std::size_t min_args, max_args;
    Builder build;
};

const std::vector<Entry>& entries() {
    static const std::vector<Entry> table = {
        {{"complete", "complete:n", "complete graph K_n"}, 1, 1,
         [](auto& a, auto& s) { return complete(parse_small(a[0], s)); }},
        {{"empty", "empty:n", "edgeless graph on n vertices"}, 1, 1,
         [](auto& a, auto& s) { return empty(parse_small(a[0], s)); }},
        {{"cycle", "cycle:n", "cycle C_n, n >= 3"}, 1, 1,
         [](auto& a, auto& s) { return cycle(parse_small(a[0], s)); }},
        {{"path", "path:n", "path on n vertices"}, 1, 1,
         [](auto& a, auto& s) { return path(parse_small(a[0], s)); }},
        {{"complete_bipartite", "complete_bipartite:a:b", "complete bipartite graph K_{a,b}"}, 2, 2,
         [](auto& a, auto& s) { return complete_bipartite(parse_small(a[0], s), parse_small(a[1], s)); }},
        {{"kneser", "kneser:m:r", "Kneser graph K(m,r)"}, 2, 2,
         [](auto& a, auto& s) { return kneser(parse_small(a[0], s), parse_small(a[1], s)); }},
        {{"paley", "paley:q", "Paley graph, q prime with q = 1 mod 4"}, 1, 1,
         [](auto& a, auto& s) { return paley(parse_small(a[0], s)); }},
        {{"petersen", "petersen", "Petersen graph"}, 0, 0, [](auto&, auto&) { return petersen(); }},
        {{"shrikhande", "shrikhande", "Shrikhande graph SRG(16,6,2,2)"}, 0, 0,
         [](auto&, auto&) { return shrikhande(); }},
        {{"hypercube", "hypercube:k", "k-dimensional cube"}, 1, 1,
         [](auto& a, auto& s) { return hypercube(parse_small(a[0], s)); }},
        {{"random_regular", "random_regular:n:d[:seed]", "random d-regular graph (pairing model)"}, 2, 3,
         [](auto& a, auto& s) {
             const std::uint64_t seed = a.size() > 2 ? static_cast<std::uint64_t>(parse_int(a[2], s)) : 1;
             return random_regular(parse_small(a[0], s), parse_small(a[1], s), seed);
         }},
        {{"random_gnp", "random_gnp:n:p[:seed]", "Erdos-Renyi random graph"}, 2, 3,
         [](auto& a, auto& s) {
             const std::uint64_t seed = a.size() > 2 ? static_cast<std::uint64_t>(parse_int(a[2], s)) : 1;
             double p = 0;
             const auto [ptr, ec] = std::from_chars(a[1].data(), a[1].data() + a[1].size(), p);
             if (ec != std::errc{} || ptr != a[1].data() + a[1].size())
                 throw std::invalid_argument("generator spec '" + s + "': bad probability");
             return random_gnp(parse_small(a[0], s), p, seed);
         }},
        {{"copies", "copies:k:spec", "k disjoint copies of another generator (rest of the spec)"}, 2, 99,
         [](auto& a, auto& s) {
             std::string inner = a[1];
             for (std::size_t i = 2; i < a.size(); ++i) inner += ":" + a[i];
             return copies(from_generator_spec(inner), parse_small(a[0], s));
         }},
        {{"sc_extend", "sc_extend:spec", "self-complementary extension by a 4-vertex path"}, 1, 99,
         [](auto& a, auto&) {
             std::string inner = a[0];
             for (std::size_t i = 1; i < a.size(); ++i) inner += ":" + a[i];
             return self_complementary_extend(from_generator_spec(inner));
         }},
        {{"fixture", "fixture:name", "bundled graph6 fixture with manifest flags"}, 1, 1,
         [](auto& a, auto&) { return load_fixture(a[0]); }},
    };
    return table;
}

template <class T>
std::optional<T> opt_field(const nlohmann::json& j, const char* key) {
    if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
    return j.at(key).get<T>();
}

}  // namespace

const std::vector<GeneratorInfo>& generator_catalog() {
    static const std::vector<GeneratorInfo> infos = [] {
        std::vector<GeneratorInfo> out;
        for (const auto& e : entries()) out.push_back(e.info);
        return out;
    }();
    return infos;
}

Graph from_generator_spec(std::string_view spec_view) {
    const std::string spec(spec_view);
    if (spec.empty()) throw std::invalid_argument("empty generator spec");
    auto parts = split(spec, ':');
    const std::string name = parts.front();
    parts.erase(parts.begin());
    for (const auto& e : entries()) {
        if (e.info.name != name) continue;
        if (parts.size() < e.min_args || parts.size() > e.max_args)
            throw std::invalid_argument("generator spec '" + spec + "': usage " + e.info.usage);
        Graph g = e.build(parts, spec);
        if (g.meta().name.empty()) g.meta().name = spec;
        return g;
    }
    throw std::invalid_argument("unknown generator '" + name + "'");
}

std::filesystem::path fixture_dir() {
    if (const char* env = std::getenv("THETAKIT_FIXTURES"); env && *env) return env;
    return THETAKIT_FIXTURE_DIR;
}

std::vector<FixtureEntry> load_manifest(const std::filesystem::path& dir) {
    std::ifstream in(dir / "manifest.json");
    if (!in) throw std::runtime_error("cannot open " + (dir / "manifest.json").string());
    const auto j = nlohmann::json::parse(in);
    std::vector<FixtureEntry> out;
    for (const auto& [name, v] : j.items()) {
        FixtureEntry e;
        e.name = name;
        e.file = dir / (name + ".g6");
        e.n = v.at("n").get<int>();
        e.edges = v.at("edges").get<long long>();
        if (v.contains("srg")) {
            const auto p = v.at("srg").get<std::vector<long long>>();
            if (p.size() != 4) throw std::runtime_error("manifest: srg entry of " + name + " needs 4 values");
            e.srg = SrgParams{p[0], p[1], p[2], p[3]};
        }
        e.theta = opt_field<double>(v, "theta");
        e.theta_complement = opt_field<double>(v, "theta_complement");
        e.alpha = opt_field<long long>(v, "alpha");
        e.omega = opt_field<long long>(v, "omega");
        e.chi = opt_field<long long>(v, "chi");
        e.meta.name = name;
        e.meta.vertex_transitive = opt_field<bool>(v, "vertex_transitive");
        e.meta.edge_transitive = opt_field<bool>(v, "edge_transitive");
        e.meta.self_complementary = opt_field<bool>(v, "self_complementary");
        out.push_back(std::move(e));
    }
    return out;
}

std::optional<FixtureEntry> find_fixture(std::string_view name, const std::filesystem::path& dir) {
    for (auto& e : load_manifest(dir))
        if (e.name == name) return e;
    return std::nullopt;
}

Graph load_fixture(std::string_view name, const std::filesystem::path& dir) {
    const auto e = find_fixture(name, dir);
    if (!e) throw std::invalid_argument("unknown fixture '" + std::string(name) + "'");
    Graph g = read_graph6_file(e->file);
    g.meta() = e->meta;
    return g;
}

}  // namespace thetakit
