#include "thetakit/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>

namespace thetakit {

std::vector<SpectrumGroup> group_values(const std::vector<double>& v, double tol) {
    std::vector<SpectrumGroup> groups;
    if (v.empty()) return groups;
    const double scale = std::max(1.0, v.front() - v.back());
    std::size_t start = 0;
    for (std::size_t i = 1; i <= v.size(); ++i) {
        if (i == v.size() || v[start] - v[i] > tol * scale) {
            double sum = 0;
            for (std::size_t k = start; k < i; ++k) sum += v[k];
            groups.push_back({sum / static_cast<double>(i - start), static_cast<long long>(i - start)});
            start = i;
        }
    }
    return groups;
}

Spectrum make_spectrum(std::vector<double> values, double tol) {
    std::sort(values.begin(), values.end(), std::greater<>());
    Spectrum s;
    s.groups = group_values(values, tol);
    s.values = std::move(values);
    s.tol = tol;
    return s;
}

std::vector<double> jacobi_eigenvalues(std::vector<double> a, int n) {
    if (static_cast<long long>(a.size()) != static_cast<long long>(n) * n)
        throw std::invalid_argument("jacobi: matrix size mismatch");
    auto at = [&](int i, int j) -> double& { return a[static_cast<std::size_t>(i) * n + j]; };
    const double target = 1e-12 * n;
    for (int sweep = 0; sweep < 100; ++sweep) {
        double off = 0;
        for (int p = 0; p < n; ++p)
            for (int q = p + 1; q < n; ++q) off += at(p, q) * at(p, q);
        if (std::sqrt(2 * off) < target) break;
        for (int p = 0; p < n; ++p) {
            for (int q = p + 1; q < n; ++q) {
                const double apq = at(p, q);
                if (apq == 0) continue;
                const double theta = (at(q, q) - at(p, p)) / (2 * apq);
                const double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1));
                const double c = 1 / std::sqrt(t * t + 1);
                const double s = t * c;
                double* rp = &at(p, 0);
                double* rq = &at(q, 0);
                for (int k = 0; k < n; ++k) {
                    if (k == p || k == q) continue;
                    const double x = rp[k], y = rq[k];
                    rp[k] = c * x - s * y;
                    rq[k] = s * x + c * y;
                    at(k, p) = rp[k];
                    at(k, q) = rq[k];
                }
                rp[p] -= t * apq;
                rq[q] += t * apq;
                rp[q] = rq[p] = 0;
            }
        }
    }
    std::vector<double> out(n);
    for (int i = 0; i < n; ++i) out[i] = at(i, i);
    return out;
}

Spectrum eigenvalues(const Graph& g, double tol) {
    const int n = g.n();
    std::vector<double> a(static_cast<std::size_t>(n) * n, 0.0);
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
            if (g.adjacent(u, v)) a[static_cast<std::size_t>(u) * n + v] = 1.0;
    return make_spectrum(jacobi_eigenvalues(std::move(a), n), tol);
}

double lambda2(const Graph& g) {
    if (g.n() < 2) throw std::invalid_argument("lambda2 needs at least two vertices");
    return eigenvalues(g).values[1];
}

double lambda_min(const Graph& g) {
    if (g.n() < 2) throw std::invalid_argument("lambda_min needs at least two vertices");
    return eigenvalues(g).values.back();
}

Spectrum complement_spectrum(const Spectrum& s, int d, int n) {
    if (s.size() != n) throw std::invalid_argument("complement_spectrum: spectrum length differs from n");
    if (std::abs(s.values.front() - d) > 1e-6 * std::max(1, d))
        throw std::invalid_argument("complement_spectrum: spectrum is not that of a d-regular graph");
    std::vector<double> out;
    out.reserve(n);
    out.push_back(static_cast<double>(n - d - 1));
    for (int l = n - 1; l >= 1; --l) out.push_back(-1.0 - s.values[l]);
    return make_spectrum(std::move(out), s.tol);
}

double lambda_nontrivial(const std::vector<SpectrumGroup>& groups, double d) {
    const double eps = 1e-7 * std::max(1.0, d);
    bool removed_top = false, removed_bottom = false, any = false;
    double best = 0;
    for (const auto& gr : groups) {
        long long m = gr.multiplicity;
        if (!removed_top && std::abs(gr.value - d) < eps) {
            removed_top = true;
            --m;
        } else if (!removed_bottom && std::abs(gr.value + d) < eps) {
            removed_bottom = true;
            --m;
        }
        if (m > 0) {
            any = true;
            best = std::max(best, std::abs(gr.value));
        }
    }
    if (!removed_top) throw std::invalid_argument("lambda_nontrivial: spectrum does not contain d");
    if (!any) throw std::invalid_argument("lambda_nontrivial: every eigenvalue is +-d (degenerate)");
    return best;
}

double lambda_nontrivial(const Graph& g) {
    const auto d = g.regular_degree();
    if (!d) throw std::invalid_argument("lambda_nontrivial: graph is not regular");
    if (!g.is_connected()) throw std::invalid_argument("lambda_nontrivial: graph is disconnected");
    return lambda_nontrivial(eigenvalues(g).groups, *d);
}

RamanujanVerdict is_ramanujan(const std::vector<SpectrumGroup>& groups, double d) {
    if (d < 2) throw std::invalid_argument("is_ramanujan: needs degree >= 2");
    const double eps = 1e-7 * std::max(1.0, d);
    for (const auto& gr : groups)
        if (std::abs(gr.value - d) < eps && gr.multiplicity > 1)
            throw std::invalid_argument("is_ramanujan: graph is disconnected");
    RamanujanVerdict r;
    r.lambda = lambda_nontrivial(groups, d);
    r.threshold = 2 * std::sqrt(d - 1);
    r.margin = r.threshold - r.lambda;
    r.ramanujan = r.margin >= -1e-9 * std::max(1.0, d);
    return r;
}

RamanujanVerdict is_ramanujan(const Graph& g) {
    const auto d = g.regular_degree();
    if (!d) throw std::invalid_argument("is_ramanujan: graph is not regular");
    if (!g.is_connected()) throw std::invalid_argument("is_ramanujan: graph is disconnected");
    return is_ramanujan(eigenvalues(g).groups, *d);
}

}  // namespace thetakit
