#include "splitting/catalog.hpp"
#include "splitting/composer.hpp"
#include "splitting/gate.hpp"
#include "splitting/notation.hpp"
#include "splitting/sigma.hpp"

#include <gtest/gtest.h>

using namespace splitting;

namespace {

bool all_vanish_through(const Method& m, int order) {
    const auto s = sigma_vector(m);
    for (Label x : all_labels)
        if (x != Label::S1 && label_order(x) <= order && !s[x].is_zero()) return false;
    return true;
}

} // namespace

TEST(Composer, DoublingRaisesOddOrder) {
    std::string warning;
    const Method z2 = double_to_even(parse_method("(1)"), &warning);
    EXPECT_EQ(format_method(z2), "(1)(1)^T");
    EXPECT_TRUE(warning.empty());
    EXPECT_EQ(order_of(z2).achieved_order, 2);

    const Method z4 = double_to_even(catalog_method("Z3_1"), &warning);
    EXPECT_EQ(order_of(z4).achieved_order, 4);
    EXPECT_TRUE(is_self_transpose(z4));

    double_to_even(z2, &warning);
    EXPECT_FALSE(warning.empty());
}

TEST(Composer, FourthOrderFromSecond) {
    const Method c4 = raise_order(parse_method("(1)(1)^T"), 2, default_schedule(2));
    EXPECT_EQ(c4.size(), 18u);
    EXPECT_EQ(c4, catalog_method("C4_18"));
    EXPECT_TRUE(is_self_transpose(c4));
    EXPECT_TRUE(all_vanish_through(c4, 3));
    EXPECT_EQ(order_of(c4).achieved_order, 4);
    EXPECT_EQ(certified_order(c4), 4);
}

TEST(Composer, SixthOrderHas594Units) {
    const Method c6 = auto_compose(parse_method("(1)(1)^T"), 6);
    EXPECT_EQ(c6.size(), 594u);
    EXPECT_EQ(c6, catalog_method("C6_594"));
    EXPECT_TRUE(is_self_transpose(c6));
    EXPECT_TRUE(all_vanish_through(c6, 5));
    EXPECT_EQ(certified_order(c6), 6);
    EXPECT_EQ(time_advance(c6), Coefficient(360));
}

TEST(Composer, ScheduleValidation) {
    const Method base = parse_method("(1)(1)^T");
    // Moment condition violated.
    EXPECT_THROW(raise_order(base, 2, Schedule{{1, Rational(1)}, {1, Rational(1)}}), std::invalid_argument);
    // No net time advance.
    EXPECT_THROW(raise_order(base, 2, Schedule{{1, Rational(1)}, {-1, Rational(1)}}), std::invalid_argument);
    EXPECT_THROW(raise_order(base, 2, Schedule{}), std::invalid_argument);
    EXPECT_THROW(raise_order(base, 2, Schedule{{2, Rational(1)}}), std::invalid_argument);
    EXPECT_THROW(make_palindromic(Schedule{{1, Rational(1)}, {1, Rational(2)}}), std::invalid_argument);
    EXPECT_THROW(auto_compose(base, 7), std::invalid_argument);
}

TEST(Composer, PalindromicScheduleGivesSelfTranspose) {
    const Schedule s = make_palindromic(Schedule{{1, Rational(1)}, {1, Rational(1)}, {-1, Rational(-2)}});
    ASSERT_EQ(s.size(), 3u);
    EXPECT_EQ(s[1], (ScheduleStep{-1, Rational(-2)}));
    EXPECT_EQ(schedule_advance(s), Rational(4));
    EXPECT_EQ(schedule_moment(s, 3), Rational(10));
}

TEST(Gate, CommutatorMethods) {
    const Method m4 = commutator_method_4();
    EXPECT_EQ(m4.size(), 34u);
    EXPECT_EQ(m4, catalog_method("COMM4"));
    EXPECT_EQ(sigma_p(m4, 2), Coefficient(24));
    EXPECT_TRUE(sigma_p(m4, 1).is_zero());
    EXPECT_EQ(verify_commutator(m4).achieved_order, 4);

    const Method m5 = commutator_method_5();
    EXPECT_EQ(sigma_p(m5, 2), Coefficient(48));
    const auto r5 = verify_commutator(m5);
    EXPECT_EQ(r5.achieved_order, 5);
    EXPECT_TRUE(r5.at_ceiling);
    // Pairing with the transpose cancels sigma^2 instead.
    EXPECT_TRUE(sigma_p(concat(m4, transpose(m4)), 2).is_zero());
}
