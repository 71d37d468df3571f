#include "splitting/notation.hpp"
#include "splitting/search.hpp"
#include "splitting/sigma.hpp"
#include "support/oracles.hpp"

#include <gtest/gtest.h>

#include <set>

using namespace splitting;

namespace {

std::set<std::string> searched(int order, int units, int a_max, Target target) {
    SearchSpec spec;
    spec.target_order = order;
    spec.units = units;
    spec.a_max = a_max;
    spec.target = target;
    std::set<std::string> out;
    for (const auto& r : search(spec).results) out.insert(format_method(r.method));
    return out;
}

bool contains_up_to_transpose(const SearchOutcome& o, const std::string& text) {
    const std::string want = format_method(transpose_canonical(parse_method(text)));
    for (const auto& r : o.results)
        if (format_method(transpose_canonical(r.method)) == want) return true;
    return false;
}

} // namespace

TEST(Search, MatchesBruteForceOrder2) {
    for (int units = 1; units <= 4; ++units)
        EXPECT_EQ(searched(2, units, 3, Target::Sum), oracle::brute_force(2, units, 3, Target::Sum)) << units;
}

TEST(Search, MatchesBruteForceOrder3) {
    for (int units = 1; units <= 4; ++units)
        for (int a_max = 1; a_max <= 3; ++a_max)
            EXPECT_EQ(searched(3, units, a_max, Target::Sum), oracle::brute_force(3, units, a_max, Target::Sum))
                << units << " " << a_max;
}

TEST(Search, MatchesBruteForceCommutator) {
    for (int order : {2, 3})
        for (int units = 1; units <= 4; ++units)
            EXPECT_EQ(searched(order, units, 3, Target::Commutator),
                      oracle::brute_force(order, units, 3, Target::Commutator))
                << order << " " << units;
}

TEST(Search, StageOneFilters) {
    SearchSpec spec;
    spec.target_order = 3;
    spec.units = 2;
    spec.a_max = 13;
    // Two units cannot reach third order.
    EXPECT_TRUE(search(spec).results.empty());
    spec.units = 3;
    for (const auto& ms : stage_signs(spec, 3)) {
        int sum = 0, cubes = 0;
        bool negative = false;
        for (int c : ms) {
            sum += c;
            cubes += c * c * c;
            negative |= c < 0;
        }
        EXPECT_GT(sum, 0);
        EXPECT_EQ(cubes, 0);
        EXPECT_EQ(sum % 6, 0);
        EXPECT_TRUE(negative); // an all-positive multiset never survives
    }
}

TEST(Search, RediscoversThirdOrderMethods) {
    SearchSpec spec;
    spec.target_order = 3;
    spec.units = 6;
    spec.a_max = 4;
    EXPECT_TRUE(contains_up_to_transpose(search(spec), "(3)(-4)^T(1)(3)(2)^T(1)"));
    spec.units = 5;
    spec.a_max = 13;
    EXPECT_TRUE(contains_up_to_transpose(search(spec), "(5)^T(7)(12)(-13)^T(1)"));
}

TEST(Search, ParallelMatchesSerial) {
    SearchSpec spec;
    spec.target_order = 3;
    spec.units = 7;
    spec.a_max = 3;
    const auto a = search(spec);
    const auto b = search_serial(spec);
    ASSERT_EQ(a.results.size(), b.results.size());
    for (std::size_t k = 0; k < a.results.size(); ++k) EXPECT_EQ(a.results[k].method, b.results[k].method);
}

TEST(Search, ResultsSortedAndVerified) {
    SearchSpec spec;
    spec.target_order = 3;
    spec.units = 7;
    spec.a_max = 3;
    const auto o = search(spec);
    ASSERT_FALSE(o.results.empty());
    for (std::size_t k = 0; k < o.results.size(); ++k) {
        const auto& r = o.results[k];
        EXPECT_GE(order_of(r.method).achieved_order, 3);
        int negatives = 0;
        for (const auto& u : r.method.units()) negatives += label_of(u).sign() < 0;
        EXPECT_GE(negatives, 1);
        EXPECT_TRUE(oracle::divisible(time_advance(r.method).exact(), 6));
        if (k > 0) EXPECT_LE(*o.results[k - 1].report.Z, *r.report.Z + 1e-12);
    }
}

TEST(Search, ResultCapIsDeterministic) {
    SearchSpec spec;
    spec.target_order = 3;
    spec.units = 7;
    spec.a_max = 3;
    spec.max_results = 5;
    const auto a = search(spec);
    const auto b = search(spec);
    EXPECT_EQ(a.status, SearchStatus::ResultLimit);
    ASSERT_EQ(a.results.size(), 5u);
    for (std::size_t k = 0; k < 5; ++k) EXPECT_EQ(a.results[k].method, b.results[k].method);
}

TEST(Search, ValidatesSpec) {
    SearchSpec spec;
    spec.target_order = 6;
    EXPECT_THROW(search(spec), std::invalid_argument);
    spec.target_order = 3;
    spec.a_max = 0;
    EXPECT_THROW(search(spec), std::invalid_argument);
}
