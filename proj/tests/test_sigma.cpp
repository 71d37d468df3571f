#include "splitting/catalog.hpp"
#include "splitting/notation.hpp"
#include "splitting/sigma.hpp"
#include "support/oracles.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <random>

using namespace splitting;

namespace {

Method random_integer_method(std::mt19937_64& rng, int max_units = 8) {
    std::uniform_int_distribution<int> len(1, max_units), lab(-5, 5), coin(0, 1);
    std::vector<Unit> units;
    const int n = len(rng);
    for (int k = 0; k < n; ++k) {
        int c = 0;
        while (c == 0) c = lab(rng);
        units.push_back(unit_from_label(Coefficient(c), coin(rng) == 1));
    }
    return Method(units);
}

int sign_power(int order) { return order % 2 == 1 ? 1 : -1; } // (-1)^{order+1}

} // namespace

TEST(Sigma, SingleUnitValues) {
    // One plain unit of weight a: sigma^1 = a and every commutator label vanishes
    // except the pure powers sigma^p = a^p.
    const auto s = sigma_vector(parse_method("(3)"));
    EXPECT_EQ(s[Label::S1], Coefficient(3));
    EXPECT_EQ(s[Label::S2], Coefficient(9));
    EXPECT_EQ(s[Label::S5], Coefficient(243));
    for (Label x : {Label::S12, Label::S13, Label::S112, Label::S221, Label::S1112}) EXPECT_TRUE(s[x].is_zero());
}

TEST(Sigma, TwoUnitHandValue) {
    // (1)(1)^T: sigma^1 = 2, sigma^2 = 1 - 1 = 0.
    const auto s = sigma_vector(parse_method("(1)(1)^T"));
    EXPECT_EQ(s[Label::S1], Coefficient(2));
    EXPECT_TRUE(s[Label::S2].is_zero());
    EXPECT_EQ(order_of(parse_method("(1)(1)^T")).achieved_order, 2);
}

TEST(Sigma, CatalogHandValues) {
    EXPECT_EQ(sigma_p(catalog_method("Z3_1"), 1), Coefficient(6));
    const Method z35 = parse_method("(5)^T(7)(12)(-13)^T(1)");
    EXPECT_EQ(sigma_p(z35, 1), Coefficient(12));
    EXPECT_TRUE(sigma_p(z35, 2).is_zero());
    EXPECT_TRUE(sigma_p(z35, 3).is_zero());
    EXPECT_TRUE(sigma_pq(z35, 12).is_zero());
}

TEST(Sigma, AccessorsValidateLabels) {
    const Method m = parse_method("(1)");
    EXPECT_THROW(sigma_p(m, 0), std::out_of_range);
    EXPECT_THROW(sigma_p(m, 6), std::out_of_range);
    EXPECT_THROW(sigma_pq(m, 15), std::invalid_argument);
    EXPECT_THROW(sigma_ppq(m, 111), std::invalid_argument);
    EXPECT_EQ(parse_label("1112"), Label::S1112);
    EXPECT_FALSE(parse_label("9").has_value());
    for (Label x : all_labels) EXPECT_EQ(parse_label(label_name(x)), x);
}

TEST(Sigma, TransposeLaw) {
    // transpose negates time: sigma^X -> (-1)^{order(X)+1} sigma^X.
    std::mt19937_64 rng(21);
    for (int k = 0; k < 200; ++k) {
        const Method m = random_integer_method(rng);
        const auto s = sigma_vector(m);
        const auto t = sigma_vector(transpose(m));
        for (Label x : all_labels) EXPECT_EQ(t[x], s[x] * Coefficient(sign_power(label_order(x)))) << label_name(x);
    }
}

TEST(Sigma, ScalingLaw) {
    std::mt19937_64 rng(22);
    const Coefficient lambda(Rational(-3, 2));
    for (int k = 0; k < 200; ++k) {
        const Method m = random_integer_method(rng);
        const auto s = sigma_vector(m);
        const auto t = sigma_vector(scale(m, lambda));
        for (Label x : all_labels) {
            Coefficient factor(1);
            for (int p = 0; p < label_order(x); ++p) factor *= lambda;
            EXPECT_EQ(t[x], s[x] * factor) << label_name(x);
        }
    }
}

TEST(Sigma, GenericEngineAgreesWithExact) {
    std::mt19937_64 rng(23);
    for (int k = 0; k < 200; ++k) {
        const Method m = random_integer_method(rng);
        const auto exact = sigma_vector(m);
        const auto dbl = sigma_vector<double>(oracle::to_double_units(m));
        for (Label x : all_labels) {
            const double e = exact[x].to_double();
            EXPECT_NEAR(dbl[x], e, 1e-9 * std::max(1.0, std::abs(e)));
        }
    }
}

TEST(Sigma, MatrixLogOracle) {
    // The sigma engine plus the expansion table reproduce log(U) through
    // fifth order, so the residual shrinks like h^6.
    std::mt19937_64 rng(24);
    std::uniform_real_distribution<double> coef(-1.0, 1.0);
    std::uniform_int_distribution<int> len(2, 6), coin(0, 1);
    const std::vector<double> hs{0.1, 0.05, 0.025};
    for (int trial = 0; trial < 5; ++trial) {
        const auto a1 = oracle::random_anti_hermitian(rng, 4);
        const auto a2 = oracle::random_anti_hermitian(rng, 4);
        std::vector<BasicUnit<double>> units;
        const int n = len(rng);
        for (int k = 0; k < n; ++k) units.push_back({coin(rng) ? 1 : -1, coef(rng)});
        std::vector<double> res;
        for (double h : hs) res.push_back(oracle::log_residual(units, a1, a2, h));
        EXPECT_GE(oracle::slope(hs, res), 5.7);
    }
}

TEST(Sigma, CommutatorMatrixLogOracle) {
    // The fourth-order gate leaves only fifth-order words: slope about 5.
    // Unit-norm operators keep 12 h^2 [A1, A2] on the principal log branch.
    std::mt19937_64 rng(25);
    const auto units = oracle::to_double_units(catalog_method("COMM4"));
    const std::vector<double> hs{0.1, 0.05, 0.025};
    for (int trial = 0; trial < 3; ++trial) {
        auto a1 = oracle::random_anti_hermitian(rng, 4);
        auto a2 = oracle::random_anti_hermitian(rng, 4);
        a1 /= a1.norm();
        a2 /= a2.norm();
        std::vector<double> res;
        for (double h : hs) {
            const oracle::CMatrix log_u = oracle::product(units, a1, a2, h).log();
            const oracle::CMatrix target = 12.0 * h * h * oracle::nested_commutator("12", a1, a2);
            res.push_back((log_u - target).norm());
        }
        EXPECT_GE(oracle::slope(hs, res), 4.7);
    }
}

TEST(Order, SumTargetReports) {
    EXPECT_EQ(order_of(parse_method("(1)")).achieved_order, 1);
    const auto z31 = order_of(catalog_method("Z3_1"));
    EXPECT_EQ(z31.achieved_order, 3);
    EXPECT_FALSE(z31.at_ceiling);
    // sigma^1 <= 0 is not a sum method at all.
    EXPECT_EQ(order_of(parse_method("(1)(-1)")).achieved_order, 0);
    const auto c6 = order_of(catalog_method("C6_594"));
    EXPECT_EQ(c6.achieved_order, 5);
    EXPECT_TRUE(c6.at_ceiling);
}

TEST(Order, CommutatorTargetReports) {
    // (1)(-1): sigma^1 = 0, sigma^2 = 2, sigma^{12} = 1.
    const Method m = parse_method("(1)(-1)", Target::Commutator);
    EXPECT_EQ(sigma_p(m, 2), Coefficient(2));
    EXPECT_EQ(order_of(m).achieved_order, 2);
    const auto rev = order_of(parse_method("(1)^T(-1)^T", Target::Commutator));
    EXPECT_TRUE(rev.reversed_direction);
    EXPECT_EQ(order_of(catalog_method("COMM4")).achieved_order, 4);
}

TEST(Order, FloatZeroTestScalesWithWeight) {
    const Method r3 = catalog_method("R3_1");
    EXPECT_FALSE(zero_test_for(r3).exact);
    EXPECT_EQ(order_of(r3).achieved_order, 3);
}
