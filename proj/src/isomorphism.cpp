#include "thetakit/isomorphism.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace thetakit {
namespace {

// Joint 1-dimensional Weisfeiler-Leman refinement so colour ids are comparable.
std::pair<std::vector<int>, std::vector<int>> refine(const Graph& g, const Graph& h) {
    const int n = g.n();
    std::vector<int> cg(n, 0), ch(n, 0);
    for (int v = 0; v < n; ++v) {
        cg[v] = g.degree(v);
        ch[v] = h.degree(v);
    }
    for (int round = 0; round < n; ++round) {
        std::map<std::vector<int>, int> ids;
        auto signature = [](const Graph& x, const std::vector<int>& c, int v) {
            std::vector<int> s;
            s.push_back(c[v]);
            for (int u = 0; u < x.n(); ++u)
                if (x.adjacent(v, u)) s.push_back(c[u]);
            std::sort(s.begin() + 1, s.end());
            return s;
        };
        std::vector<std::vector<int>> sg(n), sh(n);
        for (int v = 0; v < n; ++v) {
            sg[v] = signature(g, cg, v);
            sh[v] = signature(h, ch, v);
            ids.emplace(sg[v], 0);
            ids.emplace(sh[v], 0);
        }
        int next = 0;
        for (auto& [k, id] : ids) id = next++;
        std::vector<int> ng(n), nh(n);
        for (int v = 0; v < n; ++v) {
            ng[v] = ids[sg[v]];
            nh[v] = ids[sh[v]];
        }
        const auto classes = [](const std::vector<int>& c) {
            return static_cast<int>(std::set<int>(c.begin(), c.end()).size());
        };
        const bool stable = classes(ng) == classes(cg) && classes(nh) == classes(ch);
        cg = std::move(ng);
        ch = std::move(nh);
        if (stable) break;
    }
    return {cg, ch};
}

struct Search {
    const Graph& g;
    const Graph& h;
    std::vector<int> cg, ch, order, map, used;

    bool extend(std::size_t depth) {
        if (depth == order.size()) return true;
        const int v = order[depth];
        for (int w = 0; w < h.n(); ++w) {
            if (used[w] || cg[v] != ch[w]) continue;
            bool ok = true;
            for (std::size_t k = 0; k < depth && ok; ++k) {
                const int u = order[k];
                ok = g.adjacent(u, v) == h.adjacent(map[u], w);
            }
            if (!ok) continue;
            map[v] = w;
            used[w] = 1;
            if (extend(depth + 1)) return true;
            used[w] = 0;
            map[v] = -1;
        }
        return false;
    }
};

}  // namespace

std::optional<std::vector<int>> find_isomorphism(const Graph& g, const Graph& h) {
    if (g.n() != h.n() || g.edge_count() != h.edge_count()) return std::nullopt;
    auto dg = g.degrees(), dh = h.degrees();
    std::sort(dg.begin(), dg.end());
    std::sort(dh.begin(), dh.end());
    if (dg != dh) return std::nullopt;

    auto [cg, ch] = refine(g, h);
    auto sg = cg, sh = ch;
    std::sort(sg.begin(), sg.end());
    std::sort(sh.begin(), sh.end());
    if (sg != sh) return std::nullopt;

    const int n = g.n();
    // BFS-like order: each next vertex has many already-placed neighbours.
    std::vector<int> order;
    std::vector<char> placed(n, 0);
    while (static_cast<int>(order.size()) < n) {
        int best = -1, best_score = -1;
        for (int v = 0; v < n; ++v) {
            if (placed[v]) continue;
            int score = 0;
            for (int u : order) score += g.adjacent(u, v);
            if (score > best_score) best = v, best_score = score;
        }
        placed[best] = 1;
        order.push_back(best);
    }
    Search s{g, h, cg, ch, order, std::vector<int>(n, -1), std::vector<int>(n, 0)};
    if (!s.extend(0)) return std::nullopt;
    return s.map;
}

}  // namespace thetakit
