#include "splitting/catalog.hpp"
#include "splitting/notation.hpp"
#include "splitting/residual.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <random>

using namespace splitting;

TEST(Residual, ContractionMatchesClosedForms) {
    std::mt19937_64 rng(31);
    std::uniform_int_distribution<int> len(1, 9), lab(-6, 6), coin(0, 1);
    for (int k = 0; k < 300; ++k) {
        std::vector<Unit> units;
        const int n = len(rng);
        for (int j = 0; j < n; ++j) {
            int c = 0;
            while (c == 0) c = lab(rng);
            units.push_back(unit_from_label(Coefficient(c), coin(rng) == 1));
        }
        const auto s = sigma_vector(Method(units));
        const auto a = rho_from_formulas(s);
        const auto b = rho_by_contraction(s);
        for (Word w : all_words) EXPECT_EQ(a[w], b[w]) << word_name(w);
    }
}

TEST(Residual, TableShape) {
    EXPECT_EQ(b2_table().size(), 39u);
    EXPECT_EQ(b2_coefficient(Label::S2, Word::W12), Rational(1, 2));
    EXPECT_EQ(b2_coefficient(Label::S5, Word::W11112), Rational(-1, 720));
    EXPECT_EQ(b2_coefficient(Label::S1, Word::W12), Rational(0));
    for (Word w : all_words) EXPECT_EQ(parse_word(word_name(w)), w);
}

TEST(Residual, WordSets) {
    EXPECT_EQ(residual_words(1).size(), 1u);
    EXPECT_EQ(residual_words(2).size(), 2u);
    EXPECT_EQ(residual_words(3).size(), 3u);
    EXPECT_EQ(residual_words(4).size(), 6u);
    EXPECT_THROW(residual_words(5), std::invalid_argument);
}

TEST(Residual, HandComputedThirdOrder) {
    const MethodReport r = report(catalog_method("Z3_1"));
    EXPECT_EQ(r.rho[Word::W1112], Coefficient(-1));
    EXPECT_EQ(r.rho[Word::W1221], Coefficient(Rational(1, 2)));
    EXPECT_TRUE(r.rho[Word::W2221].is_zero());
    EXPECT_NEAR(*r.R, std::sqrt(1.25), 1e-15);
    EXPECT_NEAR(*r.R_over_D, std::sqrt(1.25) / 6, 1e-15);
    EXPECT_EQ(r.I, 9);
    EXPECT_EQ(r.L, Coefficient(10));
    EXPECT_NEAR(*r.Z, 1.5 * std::cbrt(std::sqrt(1.25) / 6), 1e-14);
}

TEST(Residual, RIsTransposeInvariant) {
    for (const char* id : {"Z3_1", "Z3_2", "Z3_5", "Z4_1", "Z4_3", "R3_1", "R4_2"}) {
        const Method m = catalog_method(id);
        EXPECT_NEAR(*report(m).R, *report(transpose(m)).R, 1e-12) << id;
    }
}

TEST(Residual, CommutatorReportHasNoZ) {
    const MethodReport r = report(catalog_method("COMM4"));
    EXPECT_EQ(r.D, Coefficient(24));
    EXPECT_EQ(r.rho[Word::W12], Coefficient(12));
    EXPECT_FALSE(r.Z.has_value());
}

TEST(Residual, RejectsNonPositiveD) {
    EXPECT_THROW(report(parse_method("(1)(-1)")), std::domain_error);
}

TEST(CostModel, SwitchDominatedAndClamped) {
    const MethodReport z31 = report(catalog_method("Z3_1"));
    const MethodReport z35 = report(catalog_method("Z3_5"));
    CostModel cm{1.0, 0.0, 1.0, 1e-6, std::nullopt};
    const auto a = computer_time(z31, cm, 2);
    const auto b = computer_time(z35, cm, 2);
    EXPECT_EQ(a.regime, CostRegime::SwitchDominated);
    EXPECT_LT(a.computer_time, b.computer_time);
    // dt = (E D / (T_p R))^{1/3}; n = T_p / (D dt); T_c = n I N t_g.
    const double dt = std::cbrt(1e-6 * 6 / *z31.R);
    EXPECT_NEAR(a.timestep, dt, 1e-15);
    EXPECT_NEAR(a.computer_time, 1.0 / (6 * dt) * 9 * 2, 1e-9);

    cm.min_timestep = 1.0;
    const auto c = computer_time(z31, cm, 2);
    EXPECT_EQ(c.regime, CostRegime::ApplicationDominated);
    EXPECT_DOUBLE_EQ(c.timestep, 1.0);
}
