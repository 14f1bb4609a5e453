#include <gtest/gtest.h>

#include <cmath>

#include "thetakit/catalog.hpp"
#include "thetakit/exact.hpp"
#include "thetakit/generators.hpp"
#include "thetakit/products.hpp"

using namespace thetakit;

namespace {

// Subset enumeration, independent of the branch-and-bound code.
int brute_alpha(const Graph& g) {
    const int n = g.n();
    int best = 0;
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        const int size = __builtin_popcount(mask);
        if (size <= best) continue;
        bool ok = true;
        for (int u = 0; u < n && ok; ++u)
            if (mask >> u & 1)
                for (int v = u + 1; v < n && ok; ++v)
                    if ((mask >> v & 1) && g.adjacent(u, v)) ok = false;
        if (ok) best = size;
    }
    return best;
}

bool colourable(const Graph& g, int k, std::vector<int>& col, int v) {
    if (v == g.n()) return true;
    for (int c = 0; c < k; ++c) {
        bool ok = true;
        for (int u = 0; u < v && ok; ++u)
            if (col[u] == c && g.adjacent(u, v)) ok = false;
        if (!ok) continue;
        col[v] = c;
        if (colourable(g, k, col, v + 1)) return true;
    }
    col[v] = -1;
    return false;
}

int brute_chi(const Graph& g) {
    std::vector<int> col(g.n(), -1);
    for (int k = 1;; ++k)
        if (colourable(g, k, col, 0)) return k;
}

}  // namespace

TEST(Exact, MatchesBruteForceOnRandomGraphs) {
    for (std::uint64_t seed = 1; seed <= 40; ++seed) {
        const int n = 4 + static_cast<int>(seed % 9);
        const double p = 0.2 + 0.15 * static_cast<double>(seed % 5);
        const Graph g = random_gnp(n, p, seed);
        const auto a = independence_number(g);
        const auto w = clique_number(g);
        const auto c = chromatic_number(g);
        ASSERT_TRUE(a.exact() && w.exact() && c.exact());
        EXPECT_EQ(a.value, brute_alpha(g)) << seed;
        EXPECT_EQ(w.value, brute_alpha(complement(g))) << seed;
        EXPECT_EQ(c.value, brute_chi(g)) << seed;
        EXPECT_TRUE(is_independent_set(g, a.witness));
        EXPECT_EQ(static_cast<long long>(a.witness.size()), a.value);
        EXPECT_TRUE(is_clique(g, w.witness));
        EXPECT_TRUE(is_proper_coloring(g, c.coloring));
        EXPECT_GE(a.value * c.value, n);
    }
}

TEST(Exact, SpectralPruningDoesNotChangeValues) {
    SolveOptions plain;
    plain.spectral_bound = false;
    for (const Graph& g : {petersen(), kneser(6, 2), random_regular(16, 5, 3), shrikhande()}) {
        EXPECT_EQ(independence_number(g).value, independence_number(g, plain).value);
        EXPECT_EQ(chromatic_number(g).value, chromatic_number(g, plain).value);
    }
}

TEST(Exact, KnownValues) {
    EXPECT_EQ(independence_number(petersen()).value, 4);
    EXPECT_EQ(independence_number(complete(7)).value, 1);
    EXPECT_EQ(independence_number(empty(7)).value, 7);
    EXPECT_EQ(independence_number(load_fixture("hoffman_singleton")).value, 15);
    EXPECT_EQ(clique_number(load_fixture("schlaefli")).value, 6);
    EXPECT_EQ(clique_number(shrikhande()).value, 3);
    EXPECT_EQ(chromatic_number(shrikhande()).value, 4);
    EXPECT_EQ(chromatic_number(load_fixture("frucht")).value, 3);
    EXPECT_EQ(clique_number(load_fixture("frucht")).value, 3);
    const long long chang_omega[] = {5, 6, 6};
    for (int i = 1; i <= 3; ++i) {
        const Graph g = load_fixture("chang" + std::to_string(i));
        EXPECT_EQ(clique_number(g).value, chang_omega[i - 1]);
        const auto chi = chromatic_number(g);
        EXPECT_TRUE(chi.exact());
        EXPECT_EQ(chi.value, 7);
        EXPECT_TRUE(is_proper_coloring(g, chi.coloring));
    }
}

TEST(Exact, BudgetExhaustionReportsBracket) {
    SolveOptions tiny;
    tiny.budget = std::chrono::duration<double>(0.0);
    tiny.spectral_bound = false;
    const Graph g = random_gnp(90, 0.5, 5);
    const auto r = independence_number(g, tiny);
    EXPECT_LE(r.lower, r.value);
    EXPECT_LE(r.value, r.upper);
    if (!r.exact()) EXPECT_LT(r.lower, r.upper);
    EXPECT_TRUE(is_independent_set(g, r.witness));
}

TEST(Capacity, Certificates) {
    const auto p = capacity_certificate(petersen(), 4, "closed form");
    EXPECT_EQ(p.status, CapacityStatus::Determined);
    EXPECT_EQ(p.capacity, 4);
    const auto hj = capacity_certificate(load_fixture("hall_janko"), 10, "closed form");
    EXPECT_EQ(hj.status, CapacityStatus::Determined);
    EXPECT_EQ(hj.capacity, 10);
    const auto sg = capacity_certificate(load_fixture("sims_gewirtz"), 16, "closed form");
    EXPECT_EQ(sg.capacity, 16);
    const auto sc = capacity_certificate(complement(load_fixture("schlaefli")), 9, "closed form");
    EXPECT_EQ(sc.status, CapacityStatus::Gap);
    EXPECT_EQ(sc.alpha.value, 6);
    EXPECT_FALSE(sc.capacity);
    const auto c5 = capacity_certificate(cycle(5), std::sqrt(5.0), "closed form");
    EXPECT_EQ(c5.status, CapacityStatus::Gap);
}

TEST(Capacity, PowerLowerBounds) {
    const auto c5 = capacity_power_lb(cycle(5), 2);
    ASSERT_EQ(c5.size(), 2u);
    EXPECT_EQ(c5[0].alpha.value, 2);
    EXPECT_EQ(c5[1].alpha.value, 5);
    EXPECT_NEAR(c5[1].root, std::sqrt(5.0), 1e-12);
    for (const auto& r : capacity_power_lb(complete(4), 3)) EXPECT_EQ(r.alpha.value, 1);
    ProductLimits lim;
    lim.max_order = 30;
    EXPECT_EQ(capacity_power_lb(cycle(5), 3, {}, lim).size(), 2u);
}
