#pragma once

#include "splitting/method.hpp"
#include "splitting/residual.hpp"

#include <json.hpp>

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace splitting {

struct SearchSpec {
    int target_order = 3;
    int units = 6;           // I
    int min_units = 0;       // when > 0, every I in [min_units, units] is searched
    int a_max = 4;
    Target target = Target::Sum;
    std::size_t max_results = 0;            // 0: unlimited
    bool dedup = true;                      // one representative per transpose pair
    std::optional<double> time_limit_seconds;
};

/// Throws std::invalid_argument for out-of-range fields.
void validate(const SearchSpec& spec);

// Stage 1: sorted multisets of labels c_i = alpha_i a_i (nonzero, |c_i| <= a_max)
// satisfying every condition that depends only on the labels: the sign of
// sum c, the odd power sums, and the divisibility of D.
std::vector<std::vector<int>> stage_signs(const SearchSpec& spec, int units);

/// A multiset with alpha signs attached; units sorted by (label, alpha).
struct Assignment {
    std::vector<int> labels;
    std::vector<int> alphas;
    bool self_flip = false; // negating every alpha gives the same assignment
};

// Stage 2: alpha choices for a multiset meeting the even power-sum conditions.
// With dedup on and a sum target only one of each alpha-flip pair is kept.
std::vector<Assignment> stage_even(const SearchSpec& spec, std::span<const int> multiset);

// Stage 3: distinct orderings satisfying the remaining conditions, evaluated
// in scaled 128-bit integers. Emitted in transpose-canonical form.
std::vector<Method> stage_permute(const SearchSpec& spec, const Assignment& assignment);

struct SearchResult {
    Method method;
    MethodReport report;
};

enum class SearchStatus { Exhausted, TimeLimit, ResultLimit };
std::string_view to_string(SearchStatus s);

struct SearchOutcome {
    std::vector<SearchResult> results; // ascending Z, then L/D, then notation
    SearchStatus status = SearchStatus::Exhausted;
    std::vector<std::string> warnings;
    std::size_t multisets = 0;
    std::size_t assignments = 0;
    double seconds = 0.0;
};

/// Parallel driver; output identical to search_serial unless a time limit hits.
SearchOutcome search(const SearchSpec& spec);
SearchOutcome search_serial(const SearchSpec& spec);

nlohmann::json search_result_to_json(const SearchResult& r);

} // namespace splitting
