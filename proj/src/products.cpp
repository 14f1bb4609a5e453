#include "thetakit/products.hpp"

#include <algorithm>
#include <functional>
#include <string>

#include "thetakit/errors.hpp"

namespace thetakit {
namespace {

std::vector<int> closed_neighborhood(const Graph& g, int v) {
    auto out = g.neighbors(v);
    out.insert(std::lower_bound(out.begin(), out.end(), v), v);
    return out;
}

std::vector<SpectrumGroup> merge_groups(std::vector<SpectrumGroup> raw, double tol) {
    std::sort(raw.begin(), raw.end(), [](const auto& a, const auto& b) { return a.value > b.value; });
    std::vector<SpectrumGroup> out;
    if (raw.empty()) return out;
    const double scale = std::max(1.0, raw.front().value - raw.back().value);
    std::size_t start = 0;
    for (std::size_t i = 1; i <= raw.size(); ++i) {
        if (i == raw.size() || raw[start].value - raw[i].value > tol * scale) {
            double weighted = 0;
            long long mult = 0;
            for (std::size_t k = start; k < i; ++k) {
                weighted += raw[k].value * static_cast<double>(raw[k].multiplicity);
                mult += raw[k].multiplicity;
            }
            out.push_back({weighted / static_cast<double>(mult), mult});
            start = i;
        }
    }
    return out;
}

}  // namespace

Graph strong_product(const Graph& g, const Graph& h, const ProductLimits& lim) {
    const long long order = static_cast<long long>(g.n()) * h.n();
    if (order > lim.max_order)
        throw ResourceLimit("strong_product: order " + std::to_string(order) + " exceeds cap " +
                            std::to_string(lim.max_order));
    const int nh = h.n();
    GraphMeta meta;
    if (!g.meta().name.empty() && !h.meta().name.empty()) meta.name = g.meta().name + "*" + h.meta().name;
    if (g.meta().vertex_transitive.value_or(false) && h.meta().vertex_transitive.value_or(false))
        meta.vertex_transitive = true;
    Graph out(static_cast<int>(order), meta);
    std::vector<std::vector<int>> ng(g.n()), nhood(nh);
    for (int i = 0; i < g.n(); ++i) ng[i] = closed_neighborhood(g, i);
    for (int j = 0; j < nh; ++j) nhood[j] = closed_neighborhood(h, j);
    for (int i = 0; i < g.n(); ++i)
        for (int j = 0; j < nh; ++j) {
            const int u = i * nh + j;
            for (int i2 : ng[i])
                for (int j2 : nhood[j]) {
                    const int v = i2 * nh + j2;
                    if (u < v) out.add_edge(u, v);
                }
        }
    return out;
}

Graph strong_power(const Graph& g, int k, const ProductLimits& lim) {
    if (k < 1) throw std::invalid_argument("strong_power: k must be positive");
    long long order = 1;
    for (int i = 0; i < k; ++i) {
        order *= g.n();
        if (order > lim.max_order)
            throw ResourceLimit("strong_power: order exceeds cap " + std::to_string(lim.max_order));
    }
    Graph out = g;
    for (int i = 1; i < k; ++i) out = strong_product(out, g, lim);
    if (!g.meta().name.empty()) out.meta().name = g.meta().name + "^" + std::to_string(k);
    out.meta().vertex_transitive = g.meta().vertex_transitive;
    return out;
}

ProductSpec product_spec(const std::vector<const Graph*>& factors) {
    ProductSpec s;
    long long deg = 1;
    bool regular = true;
    for (const Graph* g : factors) {
        s.order *= g->n();
        if (auto d = g->regular_degree()) deg *= 1 + *d;
        else regular = false;
    }
    if (regular) s.degree = deg - 1;
    return s;
}

std::vector<SpectrumGroup> product_spectrum_groups(const std::vector<std::vector<SpectrumGroup>>& factors,
                                                   double tol, const ProductLimits& lim) {
    if (factors.empty()) throw std::invalid_argument("product_spectrum: no factors");
    // Work with shifted values 1 + lambda so the product is a plain product.
    std::vector<SpectrumGroup> acc;
    for (const auto& g : factors.front()) acc.push_back({1 + g.value, g.multiplicity});
    for (std::size_t f = 1; f < factors.size(); ++f) {
        const long long combos = static_cast<long long>(acc.size()) * static_cast<long long>(factors[f].size());
        if (combos > lim.max_combinations)
            throw ResourceLimit("product_spectrum: " + std::to_string(combos) + " combinations exceed cap");
        std::vector<SpectrumGroup> next;
        next.reserve(static_cast<std::size_t>(combos));
        for (const auto& a : acc)
            for (const auto& b : factors[f]) next.push_back({a.value * (1 + b.value), a.multiplicity * b.multiplicity});
        acc = merge_groups(std::move(next), tol);
    }
    for (auto& g : acc) g.value -= 1;
    return merge_groups(std::move(acc), tol);
}

std::vector<SpectrumGroup> power_spectrum_groups(const std::vector<SpectrumGroup>& groups, int k, double tol,
                                                 const ProductLimits& lim) {
    if (k < 1) throw std::invalid_argument("power_spectrum_groups: k must be positive");
    return product_spectrum_groups(std::vector<std::vector<SpectrumGroup>>(k, groups), tol, lim);
}

Spectrum product_spectrum(const std::vector<Spectrum>& factors, const ProductLimits& lim) {
    if (factors.empty()) throw std::invalid_argument("product_spectrum: no factors");
    long long order = 1;
    for (const auto& s : factors) {
        if (s.values.empty()) throw std::invalid_argument("product_spectrum: empty factor spectrum");
        order *= s.size();
        if (order > lim.max_combinations)
            throw ResourceLimit("product_spectrum: expanded order exceeds cap " + std::to_string(lim.max_combinations));
    }
    std::vector<double> acc{1.0};
    for (const auto& s : factors) {
        std::vector<double> next;
        next.reserve(acc.size() * s.values.size());
        for (double a : acc)
            for (double v : s.values) next.push_back(a * (1 + v));
        acc = std::move(next);
    }
    for (double& v : acc) v -= 1;
    return make_spectrum(std::move(acc), factors.front().tol);
}

}  // namespace thetakit
