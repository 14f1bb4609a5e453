#include <gtest/gtest.h>

#include <cmath>

#include "thetakit/bounds.hpp"
#include "thetakit/catalog.hpp"
#include "thetakit/errors.hpp"
#include "thetakit/exact.hpp"
#include "thetakit/generators.hpp"
#include "thetakit/products.hpp"
#include "thetakit/spectral.hpp"

using namespace thetakit;

namespace {

const double kSqrt5 = std::sqrt(5.0);

std::pair<BoundReport, BoundReport> cor0_of(const Graph& g) {
    return eig_inequality_cor0(g.n(), *g.regular_degree(), lambda2(g), lambda_min(g));
}

RegularFactor factor_of(const Graph& g, double theta) {
    return {g.n(), static_cast<double>(*g.regular_degree()), theta, lambda_min(g)};
}

}  // namespace

TEST(BoundReport, SlackAndViolation) {
    const auto le = make_report("le", 1, Relation::LessEq, 2);
    EXPECT_DOUBLE_EQ(le.slack, 1);
    EXPECT_FALSE(le.violated());
    const auto ge = make_report("ge", 1, Relation::GreaterEq, 2);
    EXPECT_DOUBLE_EQ(ge.slack, -1);
    EXPECT_TRUE(ge.violated());
    const auto eq = make_report("eq", 3, Relation::Equal, 3 + 1e-9);
    EXPECT_TRUE(eq.equality);
    EXPECT_FALSE(eq.violated());
    const auto na = inapplicable("na", Relation::LessEq, "why");
    EXPECT_FALSE(na.applicable);
    EXPECT_FALSE(na.violated());
    EXPECT_EQ(parse_relation("<="), Relation::LessEq);
    EXPECT_FALSE(parse_relation("<"));
}

TEST(BoundReport, TolerantRounding) {
    EXPECT_EQ(ceil_tol(5.0000000001), 5);
    EXPECT_EQ(ceil_tol(5.01), 6);
    EXPECT_EQ(floor_tol(3.9999999999), 4);
    EXPECT_EQ(floor_tol(3.99), 3);
}

TEST(EigenvalueInequalities, EqualityExactlyForSrg) {
    for (const Graph& g : {petersen(), shrikhande(), paley(13), cycle(5), load_fixture("schlaefli")}) {
        const auto [a, b] = cor0_of(g);
        EXPECT_TRUE(a.equality && b.equality) << g.meta().name;
    }
    for (const Graph& g : {cycle(6), cycle(7), hypercube(3), random_regular(20, 4, 7)}) {
        const auto [a, b] = cor0_of(g);
        EXPECT_FALSE(a.violated());
        EXPECT_FALSE(b.violated());
        EXPECT_FALSE(a.equality || b.equality) << g.meta().name;
        EXPECT_GT(a.slack, 1e-6);
    }
}

TEST(GSequence, KnownSequences) {
    const auto three_k2 = g_sequence(copies(complete(2), 3));
    const std::vector<double> want = {3, -1, -1, 1, -1, -1};
    ASSERT_EQ(three_k2.values.size(), 6u);
    for (int i = 0; i < 6; ++i) EXPECT_NEAR(three_k2.values[i], want[i], 1e-9);
    EXPECT_EQ(three_k2.distinct_count, 3);

    const auto c5 = g_sequence(cycle(5));
    EXPECT_EQ(c5.distinct_count, 2);
    EXPECT_NEAR(c5.values[0], 1, 1e-9);
    for (int i = 1; i < 5; ++i) EXPECT_NEAR(c5.values[i], -1, 1e-9);

    const auto hj = g_sequence(load_fixture("hall_janko"));
    EXPECT_EQ(hj.distinct_count, 3);
    EXPECT_NEAR(hj.values[0], 62, 1e-8);
    ASSERT_TRUE(hj.third_value);
    EXPECT_NEAR(*hj.third_value, 9, 1e-8);
    EXPECT_EQ(hj.third_value_multiplicity, 27);
}

TEST(GSequence, FirstTermAndNonSrgGraphs) {
    for (const Graph& g : {petersen(), cycle(7), hypercube(4)}) {
        const auto s = g_sequence(g);
        EXPECT_NEAR(s.values[0], g.n() - *g.regular_degree() - 2, 1e-9);
    }
    EXPECT_GT(g_sequence(cycle(7)).distinct_count, 3);
    EXPECT_THROW(g_sequence(complete(4)), Inapplicable);
    EXPECT_THROW(g_sequence(path(4)), Inapplicable);
}

TEST(SelfComplementary, EigenvalueBounds) {
    const auto b5 = self_complementary_eig_bounds(5);
    EXPECT_NEAR(lambda2(cycle(5)), b5.l2_lower, 1e-12);
    EXPECT_NEAR(lambda2(paley(13)), self_complementary_eig_bounds(13).l2_lower, 1e-7);
    EXPECT_NEAR(lambda_min(paley(17)), self_complementary_eig_bounds(17).lmin_upper, 1e-7);
    EXPECT_THROW(self_complementary_eig_bounds(8), Inapplicable);
}

TEST(CliqueBounds, Haemers) {
    EXPECT_NEAR(haemers_clique_upper(10, 3, 1), 2.5, 1e-12);
    EXPECT_EQ(floor_tol(haemers_clique_upper(10, 3, 1)), clique_number(petersen()).value);
    EXPECT_NEAR(haemers_clique_upper(16, 6, 2), 4, 1e-12);
    EXPECT_LE(clique_number(shrikhande()).value, 4);
    EXPECT_NEAR(haemers_clique_upper(6, 3, 0), 2, 1e-12);
    EXPECT_EQ(clique_number(complete_bipartite(3, 3)).value, 2);
    EXPECT_THROW(haemers_clique_upper(5, 4, -1), Inapplicable);
    EXPECT_NEAR(haemers_clique_upper(10, 3, 3, 1, 3), haemers_clique_upper(10, 3, 1), 1e-12);
}

TEST(CliqueBounds, Ramanujan) {
    const auto p = ramanujan_bounds(10, 3);
    EXPECT_NEAR(p.clique_upper_raw, 10 * (1 + 2 * std::sqrt(2.0)) / (7 + 2 * std::sqrt(2.0)), 1e-12);
    EXPECT_EQ(p.clique_upper, 3);
    EXPECT_NEAR(p.theta_lower, (7 + 2 * std::sqrt(2.0)) / (1 + 2 * std::sqrt(2.0)), 1e-12);
    EXPECT_LE(p.theta_lower, 4);
    EXPECT_EQ(ramanujan_bounds(4, 3).clique_upper, 4);
}

TEST(CliqueBounds, Wei) {
    EXPECT_NEAR(wei_bounds(petersen().degrees()).alpha_lower, 2.5, 1e-12);
    EXPECT_NEAR(wei_bounds(empty(7).degrees()).alpha_lower, 7, 1e-12);
    const Graph g = random_gnp(14, 0.4, 11);
    const auto w = wei_bounds(g.degrees());
    EXPECT_LE(w.alpha_lower, independence_number(g).value + 1e-12);
    EXPECT_LE(w.omega_lower, clique_number(g).value + 1e-12);
}

TEST(ProductEigenvalueBounds, PentagonTable) {
    const RegularFactor c5{5, 2, kSqrt5, -(kSqrt5 + 1) / 2};
    // Closed form (5^k - 3^k)/(5^{k/2} - 1) - 1 evaluated independently.
    for (int k = 1; k <= 5; ++k) {
        const double want = (std::pow(5.0, k) - std::pow(3.0, k)) / (std::pow(5.0, k / 2.0) - 1) - 1;
        EXPECT_NEAR(eig2_lower_product(power_factors(c5, k)).value, want, 1e-9) << k;
    }
    EXPECT_NEAR(eig2_lower_product(power_factors(c5, 1)).value, 0.6180, 5e-5);
    EXPECT_NEAR(eig2_lower_product(power_factors(c5, 2)).value, 3.0000, 5e-5);
    EXPECT_NEAR(eig2_lower_product(power_factors(c5, 3)).value, 8.6264, 5e-5);
    EXPECT_NEAR(eig2_lower_product(power_factors(c5, 5)).value, 51.4938, 5e-5);
}

TEST(ProductEigenvalueBounds, AgainstExactSpectra) {
    const Graph p = petersen();
    const RegularFactor pf = factor_of(p, 4);
    EXPECT_NEAR(eig2_lower_product({pf}).value, 1, 1e-12);
    EXPECT_NEAR(eigmin_upper_product({pf}).value, -2, 1e-12);
    const auto groups = power_spectrum_groups(eigenvalues(p).groups, 2);
    EXPECT_NEAR(eig2_lower_product({pf, pf}).value, 4.6, 1e-12);
    EXPECT_LE(eig2_lower_product({pf, pf}).value, groups[1].value);
    EXPECT_NEAR(groups[1].value, 7, 1e-9);

    const RegularFactor c5{5, 2, kSqrt5, -(kSqrt5 + 1) / 2};
    const double ub = eigmin_upper_product({c5, c5}).value;
    EXPECT_NEAR(ub, -2, 1e-12);
    const double exact_min = power_spectrum_groups(eigenvalues(cycle(5)).groups, 2).back().value;
    EXPECT_NEAR(exact_min, 3 * (1 - (kSqrt5 + 1) / 2) - 1, 1e-9);
    EXPECT_LE(exact_min, ub);

    for (int n : {3, 5, 8}) {
        const RegularFactor kn{n, n - 1.0, 1, -1};
        EXPECT_NEAR(eigmin_upper_product({kn}).value, -1, 1e-12);
        EXPECT_THROW(eig2_lower_product({kn}), Inapplicable);
    }
}

TEST(ProductEigenvalueBounds, MixedFactorsAgainstMaterialised) {
    const Graph a = cycle(5), b = petersen(), c = shrikhande();
    const std::vector<RegularFactor> fs = {factor_of(a, kSqrt5), factor_of(b, 4), factor_of(c, 4)};
    const Spectrum s = product_spectrum({eigenvalues(a), eigenvalues(b), eigenvalues(c)});
    const auto lb = eig2_lower_product(fs);
    EXPECT_LE(lb.value, s.values[1] + 1e-9);
    ASSERT_TRUE(lb.weakened);
    EXPECT_LE(*lb.weakened, lb.value + 1e-9);
    const auto ub = eigmin_upper_product(fs);
    EXPECT_GE(ub.value, s.smallest() - 1e-9);
    ASSERT_TRUE(ub.weakened);
    EXPECT_GE(*ub.weakened, ub.value - 1e-9);
    EXPECT_NEAR(product_degree(fs), 3 * 4 * 7 - 1, 1e-12);
}

TEST(NonRamanujan, K0Values) {
    EXPECT_EQ(non_ramanujan_k0_self_complementary(5).k0, 5);
    EXPECT_EQ(non_ramanujan_k0_self_complementary(9).k0, 4);
    EXPECT_EQ(non_ramanujan_k0_self_complementary(13).k0, 3);
    EXPECT_EQ(non_ramanujan_k0(5, 2, kSqrt5).k0, 5);

    // Independent evaluation of the closed form for Petersen: raw 3.6743683608692.
    const auto p = non_ramanujan_k0(10, 3, 4);
    ASSERT_TRUE(p.applicable);
    EXPECT_NEAR(p.raw, 3.6743683608692, 1e-9);
    EXPECT_EQ(p.k0, 4);
    const auto groups = eigenvalues(petersen()).groups;
    for (int k = 4; k <= 6; ++k) {
        const auto fs = power_factors({10, 3, 4, std::nullopt}, k);
        const double threshold = alon_boppana(product_degree(fs));
        EXPECT_GT(eig2_lower_product(fs).value, threshold) << k;
        EXPECT_FALSE(is_ramanujan(power_spectrum_groups(groups, k), product_degree(fs)).ramanujan) << k;
    }
    EXPECT_FALSE(non_ramanujan_k0(10, 9, 1).applicable);
    EXPECT_FALSE(non_ramanujan_k0(10, 3, 6).applicable);
}

TEST(Chromatic, StrongProductLowerBounds) {
    const auto c5 = chromatic_lb_strong_product({{5, kSqrt5}});
    EXPECT_EQ(c5.product, 3);
    EXPECT_EQ(chromatic_number(cycle(5)).value, 3);
    const auto mixed = chromatic_lb_strong_product({{27, 3}, {27, 3}, {16, 4}, {100, 10}});
    EXPECT_EQ(mixed.product, 9 * 9 * 4 * 10);
    const auto chang = chromatic_lb_strong_product({{28, 4}, {28, 4}, {28, 4}});
    EXPECT_EQ(chang.product, 7 * 7 * 7);
}

TEST(Chromatic, RegularFactors) {
    const RegularFactor perkel{57, 6, 0, -3};
    const RegularFactor gosset{56, 27, 0, -3};
    const RegularFactor frucht{12, 3, 0, -2.3386609494184056};
    for (int k = 1; k <= 4; ++k) {
        EXPECT_EQ(chromatic_lb_regular(power_factors(perkel, k)).value, std::pow(3, k));
        EXPECT_EQ(chromatic_lb_regular(power_factors(gosset, k)).value, std::pow(10, k));
        EXPECT_NEAR(chromatic_lb_regular(power_factors(frucht, k)).raw, std::pow(2.28278, k), 5e-5 * k * std::pow(2.3, k));
        EXPECT_LT(chromatic_lb_regular(power_factors(frucht, k)).raw, std::pow(3, k));
    }
}

TEST(Chromatic, ComplementProductNeedsCertification) {
    const RegularFactor p{10, 3, 4, -2};
    EXPECT_EQ(chromatic_lb_complement_product({p}, true).value, 4);
    EXPECT_EQ(chromatic_lb_complement_product({p, p}, true).value, 16);
    const RegularFactor c5{5, 2, kSqrt5, -(kSqrt5 + 1) / 2};
    EXPECT_EQ(chromatic_lb_complement_product({c5, c5}, true).value, 5);
    EXPECT_THROW(chromatic_lb_complement_product({p}, false), Inapplicable);
}

TEST(Chromatic, SelfComplementaryFactors) {
    EXPECT_EQ(chromatic_lb_self_complementary({5, 5}, true).value, 5);
    EXPECT_EQ(chromatic_lb_self_complementary({13}, true).value, 4);
    EXPECT_EQ(chromatic_lb_self_complementary({1}, true).value, 1);
    EXPECT_THROW(chromatic_lb_self_complementary({13}, false), Inapplicable);
}

TEST(Chromatic, SrgProducts) {
    const SrgParams suzuki{1782, 416, 100, 96};
    for (int k = 1; k <= 3; ++k) {
        const std::vector<SrgParams> ps(k, suzuki);
        EXPECT_EQ(srg_product_chromatic_bounds(ps).lower, std::pow(27, k));
    }
    EXPECT_EQ(srg_product_chromatic_bounds({{16, 6, 2, 2}}).lower, 4);
    const auto hs = srg_product_chromatic_bounds({{50, 7, 0, 1}});
    EXPECT_NEAR(hs.raw, 10.0 / 3.0, 1e-12);
    EXPECT_EQ(hs.lower, 4);
    const auto withchi = srg_product_chromatic_bounds({{16, 6, 2, 2}, {16, 6, 2, 2}}, std::vector<long long>{4, 4});
    EXPECT_EQ(withchi.upper, 16);
}

TEST(AffinePolar, Parameters) {
    const auto a = affine_polar_params(2, 2, PolarSign::Plus);
    EXPECT_EQ(a.params, (SrgParams{16, 9, 4, 6}));
    EXPECT_EQ(a.theta, Rational(4));
    const auto b = affine_polar_params(2, 3, PolarSign::Plus);
    EXPECT_EQ(b.params, (SrgParams{81, 32, 13, 12}));
    EXPECT_EQ(b.theta, Rational(9));
    const auto c = affine_polar_params(3, 2, PolarSign::Plus);
    EXPECT_EQ(c.params, (SrgParams{64, 35, 18, 20}));
    EXPECT_EQ(c.theta, Rational(8));
    // VO-(4,2) is the Clebsch graph SRG(16,5,0,2): ratio bound 16*3/8 = 6.
    const auto m = affine_polar_params(2, 2, PolarSign::Minus);
    EXPECT_EQ(m.params, (SrgParams{16, 5, 0, 2}));
    EXPECT_EQ(m.theta, Rational(6));
    EXPECT_THROW(affine_polar_params(1, 3, PolarSign::Minus), Inapplicable);
    EXPECT_THROW(affine_polar_params(2, 6, PolarSign::Plus), std::invalid_argument);
}

TEST(AffinePolar, GridIsFeasibleAndConsistent) {
    for (int e = 1; e <= 4; ++e)
        for (long long q : {2, 3, 4, 5, 7, 8, 9}) {
            for (auto sign : {PolarSign::Plus, PolarSign::Minus}) {
                if (e == 1 && sign == PolarSign::Minus) continue;
                const auto a = affine_polar_params(e, q, sign);
                EXPECT_TRUE(srg_params_feasible(a.params).feasible) << e << " " << q;
                EXPECT_EQ(a.theta * a.theta_complement, Rational(a.params.n));
                EXPECT_NEAR(to_double(a.theta), theta_srg(a.params).theta, 1e-9);
            }
        }
}
