#include "thetakit/theta.hpp"

#include <cmath>

#include <Eigen/Dense>

#include "thetakit/errors.hpp"
#include "thetakit/spectral.hpp"

namespace thetakit {

std::string to_string(const Rational& r) {
    if (r.denominator() == 1) return std::to_string(r.numerator());
    return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

double theta_upper_regular(long long n, double d, double lmin) {
    if (!(lmin < 0)) throw Inapplicable("theta_upper_regular: graph has no edges (lmin >= 0)");
    return -static_cast<double>(n) * lmin / (d - lmin);
}

double theta_lower_regular(long long n, double d, double l2) {
    if (!(l2 > -1)) throw Inapplicable("theta_lower_regular: second eigenvalue <= -1 (complete graph)");
    return (static_cast<double>(n) - d + l2) / (1 + l2);
}

ThetaBounds theta_bounds_regular(long long n, double d, double l2, double lmin) {
    ThetaBounds b;
    b.lower = theta_lower_regular(n, d, l2);
    b.lower_source = "(n-d+l2)/(1+l2)";
    b.upper = theta_upper_regular(n, d, lmin);
    b.upper_source = "-n*lmin/(d-lmin)";
    return b;
}

ThetaBounds theta_bounds_complement(long long n, double d, double l2, double lmin) {
    if (!(lmin < 0)) throw Inapplicable("theta_bounds_complement: graph has no edges");
    if (!(l2 > -1) || n - d + l2 <= 0) throw Inapplicable("theta_bounds_complement: graph is complete");
    ThetaBounds b;
    b.lower = 1 - d / lmin;
    b.lower_source = "1-d/lmin";
    b.upper = static_cast<double>(n) * (1 + l2) / (static_cast<double>(n) - d + l2);
    b.upper_source = "n(1+l2)/(n-d+l2)";
    return b;
}

SrgTheta theta_srg(const SrgParams& p) {
    const auto f = srg_params_feasible(p);
    if (!f.feasible) throw Inapplicable("theta_srg: infeasible parameters " + p.to_string());
    SrgTheta out;
    if (auto t = exact_sqrt(f.discriminant)) {
        const long long s = *t + p.mu - p.lambda;
        out.is_rational = true;
        out.theta_q = Rational(p.n * s, 2 * p.d + s);
        out.theta_complement_q = Rational(1) + Rational(2 * p.d, s);
        out.theta = to_double(out.theta_q);
        out.theta_complement = to_double(out.theta_complement_q);
    } else {
        const double s = std::sqrt(static_cast<double>(f.discriminant)) + static_cast<double>(p.mu - p.lambda);
        out.theta = static_cast<double>(p.n) * s / (2.0 * static_cast<double>(p.d) + s);
        out.theta_complement = 1 + 2.0 * static_cast<double>(p.d) / s;
    }
    return out;
}

long long theta_kneser(int m, int r) {
    if (r < 1 || m < 2 * r) throw std::invalid_argument("theta_kneser needs 1 <= r and m >= 2r");
    long long c = 1;
    for (int i = 1; i <= r - 1; ++i) c = c * (m - r + i) / i;  // C(m-1, r-1)
    return c;
}

namespace {

using Mat = Eigen::MatrixXd;
using Vec = Eigen::VectorXd;

double max_step(const Mat& X, const Mat& dX) {
    Eigen::LLT<Mat> llt(X);
    Mat Linv = llt.matrixL().solve(Mat::Identity(X.rows(), X.cols()));
    Mat S = Linv * dX * Linv.transpose();
    S = 0.5 * (S + S.transpose());
    const double lmin = Eigen::SelfAdjointEigenSolver<Mat>(S, Eigen::EigenvaluesOnly).eigenvalues()(0);
    return lmin >= 0 ? 1.0 : std::min(1.0, -1.0 / lmin);
}

double jacobi_extreme(const Mat& M, bool largest) {
    const int n = static_cast<int>(M.rows());
    std::vector<double> a(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) a[static_cast<std::size_t>(i) * n + j] = 0.5 * (M(i, j) + M(j, i));
    const auto ev = jacobi_eigenvalues(std::move(a), n);
    return largest ? *std::max_element(ev.begin(), ev.end()) : *std::min_element(ev.begin(), ev.end());
}

}  // namespace

ThetaResult theta_exact(const Graph& g, const ThetaOptions& opt) {
    const int n = g.n();
    if (n > opt.max_n) throw ResourceLimit("theta_exact: n exceeds the configured cap");
    if (!(opt.tol > 0)) throw std::invalid_argument("theta_exact: tol must be positive");
    const auto edges = g.edges();
    const int m = 1 + static_cast<int>(edges.size());

    // A_0 = I (b = 1); A_e = e_i e_j^T + e_j e_i^T (b = 0); C = J.
    Mat X = Mat::Identity(n, n) / n;
    Vec y = Vec::Zero(m);
    y(0) = n + 1.0;
    auto dual_slack = [&](const Vec& yy) {
        Mat Z = yy(0) * Mat::Identity(n, n) - Mat::Ones(n, n);
        for (int e = 1; e < m; ++e) {
            const auto [i, j] = edges[e - 1];
            Z(i, j) += yy(e);
            Z(j, i) += yy(e);
        }
        return Z;
    };
    auto apply_A = [&](const Mat& R) {
        Vec out(m);
        out(0) = R.trace();
        for (int e = 1; e < m; ++e) {
            const auto [i, j] = edges[e - 1];
            out(e) = R(i, j) + R(j, i);
        }
        return out;
    };
    auto apply_At = [&](const Vec& v) {
        Mat out = v(0) * Mat::Identity(n, n);
        for (int e = 1; e < m; ++e) {
            const auto [i, j] = edges[e - 1];
            out(i, j) += v(e);
            out(j, i) += v(e);
        }
        return out;
    };
    Vec b = Vec::Zero(m);
    b(0) = 1;

    ThetaResult res;
    res.n = n;
    Mat Z = dual_slack(y);
    for (int it = 0; it < opt.max_iterations; ++it) {
        res.iterations = it + 1;
        const double gap = (X.array() * Z.array()).sum();
        const double pobj = X.sum();
        const double dobj = y(0);
        const Vec rp = b - apply_A(X);
        if (gap / (1 + std::abs(pobj) + std::abs(dobj)) < 1e-11) break;

        const Mat G = Z.llt().solve(Mat::Identity(n, n));
        const Mat P = G * X;
        Mat M(m, m);
        M(0, 0) = (X.array() * G.array()).sum();
        for (int e = 1; e < m; ++e) {
            const auto [i, j] = edges[e - 1];
            M(0, e) = M(e, 0) = P(i, j) + P(j, i);
        }
        for (int e = 1; e < m; ++e) {
            const auto [p, q] = edges[e - 1];
            for (int f = e; f < m; ++f) {
                const auto [i, j] = edges[f - 1];
                const double v = X(q, i) * G(j, p) + X(q, j) * G(i, p) + X(p, i) * G(j, q) + X(p, j) * G(i, q);
                M(e, f) = M(f, e) = v;
            }
        }
        const Eigen::LLT<Mat> schur(M);
        const double mu = gap / n;

        auto direction = [&](double sigma, const Mat* corr, Mat& dX, Vec& dy, Mat& dZ) {
            Mat R = sigma * mu * G - X;
            if (corr) R -= *corr;
            dy = schur.solve(apply_A(R) - rp);
            dZ = apply_At(dy);
            dX = R - X * dZ * G;
            dX = 0.5 * (dX + dX.transpose()).eval();
        };

        Mat dXp, dZp;
        Vec dyp;
        direction(0.0, nullptr, dXp, dyp, dZp);
        const double ap = max_step(X, dXp), ad = max_step(Z, dZp);
        const double pred_gap = ((X + ap * dXp).array() * (Z + ad * dZp).array()).sum();
        const double sigma = std::clamp(std::pow(pred_gap / gap, 3.0), 0.0, 1.0);
        const Mat corr = dXp * dZp * G;
        Mat dX, dZ;
        Vec dy;
        direction(sigma, &corr, dX, dy, dZ);
        const double alpha_p = std::min(1.0, 0.95 * max_step(X, dX));
        const double alpha_d = std::min(1.0, 0.95 * max_step(Z, dZ));
        Mat Xn = X + alpha_p * dX;
        Xn = 0.5 * (Xn + Xn.transpose()).eval();
        // Near the optimum the Schur system degrades; keep the last clean iterate.
        if ((b - apply_A(Xn)).norm() > 1e-9) break;
        X = std::move(Xn);
        y += alpha_d * dy;
        Z = dual_slack(y);
    }

    // Upper certificate: B = J - sum y_e A_e satisfies B <= y0 I; its top eigenvalue bounds theta.
    Mat B = Mat::Ones(n, n);
    for (int e = 1; e < m; ++e) {
        const auto [i, j] = edges[e - 1];
        B(i, j) -= y(e);
        B(j, i) -= y(e);
    }
    res.upper = jacobi_extreme(B, true);

    // Lower certificate: zero the edge entries, shift into the psd cone, renormalise the trace.
    Mat Xr = X;
    for (const auto& [i, j] : edges) Xr(i, j) = Xr(j, i) = 0;
    const double eps = std::max(0.0, -jacobi_extreme(Xr, false));
    res.lower = (Xr.sum() + eps * n) / (Xr.trace() + eps * n);

    res.value = 0.5 * (res.lower + res.upper);
    res.converged = res.upper - res.lower <= opt.tol;
    res.B.assign(B.data(), B.data() + static_cast<std::ptrdiff_t>(n) * n);
    return res;
}

}  // namespace thetakit
