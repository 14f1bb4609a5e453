#include "thetakit/srg.hpp"

#include <bit>
#include <cmath>

namespace thetakit {

std::string SrgParams::to_string() const {
    return "SRG(" + std::to_string(n) + "," + std::to_string(d) + "," + std::to_string(lambda) + "," +
           std::to_string(mu) + ")";
}

std::optional<long long> exact_sqrt(long long x) {
    if (x < 0) return std::nullopt;
    long long r = static_cast<long long>(std::llround(std::sqrt(static_cast<double>(x))));
    while (r * r > x) --r;
    while ((r + 1) * (r + 1) <= x) ++r;
    if (r * r != x) return std::nullopt;
    return r;
}

std::optional<SrgParams> srg_check(const Graph& g) {
    const auto d = g.regular_degree();
    if (!d) return std::nullopt;
    std::optional<int> lam, mu;
    const int n = g.n();
    for (int u = 0; u < n; ++u) {
        const auto ru = g.row(u);
        for (int v = u + 1; v < n; ++v) {
            const auto rv = g.row(v);
            int common = 0;
            for (int w = 0; w < g.words(); ++w) common += std::popcount(ru[w] & rv[w]);
            auto& slot = g.adjacent(u, v) ? lam : mu;
            if (!slot) slot = common;
            else if (*slot != common) return std::nullopt;
        }
    }
    return SrgParams{n, *d, lam.value_or(0), mu.value_or(0)};
}

SrgFeasibility srg_params_feasible(const SrgParams& p) {
    SrgFeasibility f;
    const long long n = p.n, d = p.d, l = p.lambda, m = p.mu;
    f.relation_holds = n >= 1 && d >= 0 && d < n && l >= 0 && m >= 0 && (n - d - 1) * m == d * (d - l - 1);
    f.discriminant = (l - m) * (l - m) + 4 * (d - m);
    const long long num = 2 * d + (n - 1) * (l - m);
    f.conference_case = num == 0;
    if (f.discriminant > 0) {
        const double t = std::sqrt(static_cast<double>(f.discriminant));
        f.p1 = 0.5 * (static_cast<double>(l - m) + t);
        f.p2 = 0.5 * (static_cast<double>(l - m) - t);
        f.m1 = 0.5 * (static_cast<double>(n - 1) - static_cast<double>(num) / t);
        f.m2 = 0.5 * (static_cast<double>(n - 1) + static_cast<double>(num) / t);
        if (f.conference_case) {
            f.multiplicities_integral = (n - 1) % 2 == 0;
        } else if (auto s = exact_sqrt(f.discriminant)) {
            const long long a = (n - 1) * *s - num, b = (n - 1) * *s + num;
            f.multiplicities_integral = a >= 0 && b >= 0 && a % (2 * *s) == 0 && b % (2 * *s) == 0;
        }
    }
    f.feasible = f.relation_holds && f.discriminant > 0 && f.multiplicities_integral;
    return f;
}

SrgParams srg_complement(const SrgParams& p) {
    return {p.n, p.n - p.d - 1, p.n - 2 * p.d + p.mu - 2, p.n - 2 * p.d + p.lambda};
}

}  // namespace thetakit
