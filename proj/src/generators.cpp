#include "thetakit/generators.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>
#include <string>

namespace thetakit {
namespace {

GraphMeta named(std::string name, std::optional<bool> vt = std::nullopt, std::optional<bool> et = std::nullopt,
                std::optional<bool> sc = std::nullopt) {
    return GraphMeta{std::move(name), vt, et, sc};
}

void subsets(int m, int r, int start, std::vector<int>& cur, std::vector<std::uint32_t>& out) {
    if (static_cast<int>(cur.size()) == r) {
        std::uint32_t mask = 0;
        for (int x : cur) mask |= 1u << x;
        out.push_back(mask);
        return;
    }
    for (int x = start; x < m; ++x) {
        cur.push_back(x);
        subsets(m, r, x + 1, cur, out);
        cur.pop_back();
    }
}

}  // namespace

bool is_prime(long long q) {
    if (q < 2) return false;
    for (long long p = 2; p * p <= q; ++p)
        if (q % p == 0) return false;
    return true;
}

Graph complete(int n) {
    Graph g(n, named("complete:" + std::to_string(n), true, true, n == 1));
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

Graph empty(int n) { return Graph(n, named("empty:" + std::to_string(n), true, true, n == 1)); }

Graph cycle(int n) {
    if (n < 3) throw std::invalid_argument("cycle needs n >= 3");
    Graph g(n, named("cycle:" + std::to_string(n), true, true, n == 5));
    for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
    return g;
}

Graph path(int n) {
    Graph g(n, named("path:" + std::to_string(n), n <= 2, n <= 3, n == 1 || n == 4));
    for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
    return g;
}

Graph complete_bipartite(int a, int b) {
    if (a < 1 || b < 1) throw std::invalid_argument("complete_bipartite needs a, b >= 1");
    Graph g(a + b, named("complete_bipartite:" + std::to_string(a) + ":" + std::to_string(b), a == b, true));
    for (int u = 0; u < a; ++u)
        for (int v = 0; v < b; ++v) g.add_edge(u, a + v);
    return g;
}

Graph kneser(int m, int r) {
    if (r < 1 || r > m || m > 30) throw std::invalid_argument("kneser needs 1 <= r <= m <= 30");
    std::vector<std::uint32_t> sets;
    std::vector<int> cur;
    subsets(m, r, 0, cur, sets);
    if (sets.size() > 20000) throw std::invalid_argument("kneser graph too large");
    const int n = static_cast<int>(sets.size());
    Graph g(n, named("kneser:" + std::to_string(m) + ":" + std::to_string(r), true, true));
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if ((sets[i] & sets[j]) == 0) g.add_edge(i, j);
    return g;
}

Graph paley(int q) {
    if (!is_prime(q) || q % 4 != 1) throw std::invalid_argument("paley needs a prime q = 1 mod 4");
    std::vector<char> residue(q, 0);
    for (long long x = 1; x < q; ++x) residue[(x * x) % q] = 1;
    Graph g(q, named("paley:" + std::to_string(q), true, true, true));
    for (int u = 0; u < q; ++u)
        for (int v = u + 1; v < q; ++v)
            if (residue[(v - u) % q]) g.add_edge(u, v);
    return g;
}

Graph shrikhande() {
    Graph g(16, named("shrikhande", true, true, false));
    const int steps[6][2] = {{1, 0}, {3, 0}, {0, 1}, {0, 3}, {1, 1}, {3, 3}};
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b)
            for (const auto& s : steps) {
                const int u = 4 * a + b;
                const int v = 4 * ((a + s[0]) % 4) + (b + s[1]) % 4;
                if (u < v) g.add_edge(u, v);
            }
    return g;
}

Graph petersen() {
    Graph g = kneser(5, 2);
    g.meta() = named("petersen", true, true, false);
    return g;
}

Graph hypercube(int dim) {
    if (dim < 1 || dim > 14) throw std::invalid_argument("hypercube needs 1 <= dim <= 14");
    const int n = 1 << dim;
    Graph g(n, named("hypercube:" + std::to_string(dim), true, true));
    for (int u = 0; u < n; ++u)
        for (int b = 0; b < dim; ++b)
            if (u < (u ^ (1 << b))) g.add_edge(u, u ^ (1 << b));
    return g;
}

Graph circulant(int n, const std::vector<int>& jumps) {
    Graph g(n, named("circulant:" + std::to_string(n), true));
    for (int i = 0; i < n; ++i)
        for (int s : jumps) {
            const int j = ((i + s) % n + n) % n;
            if (j != i) g.add_edge(i, j);
        }
    return g;
}

Graph copies(const Graph& g, int k) {
    if (k < 1) throw std::invalid_argument("copies needs k >= 1");
    Graph out = g;
    for (int i = 1; i < k; ++i) out = disjoint_union(out, g);
    out.meta().name = std::to_string(k) + "x" + g.meta().name;
    return out;
}

Graph random_regular(int n, int d, std::uint64_t seed) {
    if (d < 0 || d >= n || (static_cast<long long>(n) * d) % 2 != 0)
        throw std::invalid_argument("random_regular needs 0 <= d < n and n*d even");
    std::mt19937_64 rng(seed);
    for (int attempt = 0; attempt < 10000; ++attempt) {
        Graph g(n, named("random_regular:" + std::to_string(n) + ":" + std::to_string(d)));
        std::vector<int> points;
        for (int v = 0; v < n; ++v)
            for (int i = 0; i < d; ++i) points.push_back(v);
        bool stuck = false;
        while (!points.empty() && !stuck) {
            bool paired = false;
            for (int tries = 0; tries < 200 && !paired; ++tries) {
                std::uniform_int_distribution<std::size_t> pick(0, points.size() - 1);
                const std::size_t i = pick(rng), j = pick(rng);
                const int u = points[i], v = points[j];
                if (i == j || u == v || g.adjacent(u, v)) continue;
                g.add_edge(u, v);
                const std::size_t hi = std::max(i, j), lo = std::min(i, j);
                points[hi] = points.back();
                points.pop_back();
                points[lo] = points.back();
                points.pop_back();
                paired = true;
            }
            stuck = !paired;
        }
        if (!stuck) return g;
    }
    throw std::runtime_error("random_regular: pairing kept failing");
}

Graph random_gnp(int n, double p, std::uint64_t seed) {
    if (n < 1 || !(p >= 0 && p <= 1)) throw std::invalid_argument("random_gnp needs n >= 1 and 0 <= p <= 1");
    std::mt19937_64 rng(seed);
    std::bernoulli_distribution coin(p);
    Graph g(n, named("random_gnp:" + std::to_string(n)));
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (coin(rng)) g.add_edge(u, v);
    return g;
}

Graph self_complementary_extend(const Graph& g) {
    const int n = g.n();
    Graph h(n + 4, named(g.meta().name.empty() ? "" : "sc_extend(" + g.meta().name + ")", std::nullopt,
                         std::nullopt, true));
    for (auto [u, v] : g.edges()) h.add_edge(u, v);
    const int v1 = n, v2 = n + 1, v3 = n + 2, v4 = n + 3;
    h.add_edge(v1, v2);
    h.add_edge(v2, v3);
    h.add_edge(v3, v4);
    for (int u = 0; u < n; ++u) {
        h.add_edge(v2, u);
        h.add_edge(v3, u);
    }
    return h;
}

}  // namespace thetakit
