#include <gtest/gtest.h>

#include <cmath>

#include "thetakit/catalog.hpp"
#include "thetakit/errors.hpp"
#include "thetakit/exact.hpp"
#include "thetakit/generators.hpp"
#include "thetakit/products.hpp"
#include "thetakit/spectral.hpp"
#include "thetakit/theta.hpp"

using namespace thetakit;

namespace {

const double kSqrt5 = std::sqrt(5.0);

// Reference values from an independent SDP solve (cvxpy/SCS, eps 1e-9).
struct SdpOracle {
    const char* name;
    Graph g;
    double theta;
};

std::vector<SdpOracle> sdp_oracles() {
    Graph cubic12 = from_edge_list(12, {{0, 5}, {0, 6}, {0, 10}, {1, 6}, {1, 7}, {1, 9}, {2, 4}, {2, 8}, {2, 9},
                                        {3, 7}, {3, 10}, {3, 11}, {4, 9}, {4, 10}, {5, 8}, {5, 11}, {6, 11}, {7, 8}});
    return {
        {"C6", cycle(6), 3.0},
        {"C7", cycle(7), 3.317667207394096},
        {"circulant11_1_3", circulant(11, {1, 3}), 4.567681898782017},
        {"cubic12", cubic12, 5.143443846504613},
        {"frucht", load_fixture("frucht"), 5.0},
        {"petersen_complement", complement(petersen()), 2.5},
    };
}

}  // namespace

TEST(ThetaClosedForms, RegularBounds) {
    EXPECT_NEAR(theta_upper_regular(10, 3, -2), 4, 1e-12);
    EXPECT_NEAR(theta_upper_regular(5, 2, -(kSqrt5 + 1) / 2), kSqrt5, 1e-12);
    EXPECT_NEAR(theta_upper_regular(7, 6, -1), 1, 1e-12);
    EXPECT_NEAR(theta_lower_regular(10, 3, 1), 4, 1e-12);
    EXPECT_NEAR(theta_lower_regular(16, 6, 2), 4, 1e-12);
    EXPECT_NEAR(theta_lower_regular(6, 2, 1), 2.5, 1e-12);
    EXPECT_THROW(theta_upper_regular(4, 0, 0), Inapplicable);
}

TEST(ThetaClosedForms, ComplementBounds) {
    const auto p = theta_bounds_complement(10, 3, 1, -2);
    EXPECT_NEAR(p.lower, 2.5, 1e-12);
    EXPECT_NEAR(p.upper, 2.5, 1e-12);
    const auto c = theta_bounds_complement(5, 2, (kSqrt5 - 1) / 2, -(kSqrt5 + 1) / 2);
    EXPECT_NEAR(c.lower, kSqrt5, 1e-12);
    EXPECT_NEAR(c.upper, kSqrt5, 1e-12);
    const Graph s = load_fixture("schlaefli");
    const auto b = theta_bounds_complement(27, 16, lambda2(s), lambda_min(s));
    EXPECT_NEAR(b.lower, 9, 1e-9);
    EXPECT_NEAR(b.upper, 9, 1e-9);
}

TEST(ThetaClosedForms, Srg) {
    const auto hj = theta_srg({100, 36, 14, 12});
    EXPECT_TRUE(hj.is_rational);
    EXPECT_EQ(hj.theta_q, Rational(10));
    EXPECT_EQ(theta_srg({50, 7, 0, 1}).theta_q, Rational(15));
    const auto s = theta_srg({27, 16, 10, 8});
    EXPECT_EQ(s.theta_q, Rational(3));
    EXPECT_EQ(s.theta_complement_q, Rational(9));
    const auto c5 = theta_srg({5, 2, 0, 1});
    EXPECT_FALSE(c5.is_rational);
    EXPECT_NEAR(c5.theta, kSqrt5, 1e-12);
    EXPECT_THROW(theta_srg({10, 3, 1, 1}), Inapplicable);
}

TEST(ThetaClosedForms, Kneser) {
    EXPECT_EQ(theta_kneser(5, 2), 4);
    EXPECT_EQ(theta_kneser(7, 3), 15);
    EXPECT_EQ(theta_kneser(6, 1), 1);
}

TEST(ThetaExact, KnownGraphs) {
    EXPECT_NEAR(theta_exact(cycle(5)).value, kSqrt5, 1e-5);
    EXPECT_NEAR(theta_exact(petersen()).value, 4, 1e-5);
    EXPECT_NEAR(theta_exact(complete(6)).value, 1, 1e-5);
    EXPECT_NEAR(theta_exact(empty(6)).value, 6, 1e-5);
    EXPECT_NEAR(theta_exact(kneser(7, 2)).value, 6, 1e-5);
}

TEST(ThetaExact, MatchesIndependentSdpSolver) {
    for (const auto& o : sdp_oracles()) {
        const auto r = theta_exact(o.g);
        EXPECT_TRUE(r.converged) << o.name;
        EXPECT_LE(r.lower, r.upper + 1e-9) << o.name;
        EXPECT_NEAR(r.value, o.theta, 1e-5) << o.name;
    }
}

TEST(ThetaExact, CertificateMatrixIsConsistent) {
    const Graph g = circulant(11, {1, 3});
    const auto r = theta_exact(g);
    ASSERT_EQ(r.B.size(), 121u);
    for (int i = 0; i < 11; ++i)
        for (int j = 0; j < 11; ++j) {
            EXPECT_DOUBLE_EQ(r.B[i * 11 + j], r.B[j * 11 + i]);
            if (i == j || !g.adjacent(i, j)) EXPECT_DOUBLE_EQ(r.B[i * 11 + j], 1.0);
        }
    const auto eig = jacobi_eigenvalues(r.B, 11);
    EXPECT_NEAR(*std::max_element(eig.begin(), eig.end()), r.upper, 1e-9);
}

TEST(ThetaProperties, SandwichAndComplementProduct) {
    for (const char* spec : {"random_gnp:10:0.5:1", "random_gnp:12:0.3:2", "random_gnp:11:0.6:3", "cycle:9",
                             "fixture:frucht", "sc_extend:cycle:5"}) {
        const Graph g = from_generator_spec(spec);
        const auto t = theta_exact(g);
        const auto tc = theta_exact(complement(g));
        EXPECT_LE(independence_number(g).value, t.upper + 1e-6) << spec;
        EXPECT_GE(chromatic_number(complement(g)).value, t.lower - 1e-6) << spec;
        EXPECT_GE(t.upper * tc.upper, g.n() - 1e-5) << spec;
    }
}

TEST(ThetaProperties, VertexTransitiveProductIsOrder) {
    for (const char* spec : {"cycle:7", "kneser:6:2"}) {
        const Graph g = from_generator_spec(spec);
        EXPECT_NEAR(theta_exact(g).value * theta_exact(complement(g)).value, g.n(), 1e-4) << spec;
    }
    const Graph c = circulant(11, {1, 3});
    EXPECT_NEAR(theta_exact(c).value * theta_exact(complement(c)).value, 11, 1e-4);
}

TEST(ThetaProperties, StrongProductFactorises) {
    const Graph c5 = cycle(5);
    EXPECT_NEAR(theta_exact(strong_product(c5, c5)).value, 5, 1e-5);
    const Graph k2 = complete(2);
    const Graph p3 = path(3);
    const double tp = theta_exact(p3).value;
    EXPECT_NEAR(theta_exact(strong_product(k2, p3)).value, tp, 1e-5);
    EXPECT_NEAR(theta_exact(strong_product(empty(2), p3)).value, 2 * tp, 1e-5);
}

TEST(ThetaProperties, AddingEdgesNeverIncreasesTheta) {
    Graph g = cycle(8);
    double prev = theta_exact(g).value;
    for (auto [u, v] : std::vector<std::pair<int, int>>{{0, 2}, {1, 5}, {3, 6}, {4, 7}}) {
        g.add_edge(u, v);
        const double cur = theta_exact(g).value;
        EXPECT_LE(cur, prev + 1e-6);
        prev = cur;
    }
}
