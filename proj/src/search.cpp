#include "splitting/search.hpp"

#include "splitting/notation.hpp"
#include "splitting/sigma.hpp"

#include <omp.h>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdint>
#include <limits>
#include <stdexcept>

namespace splitting {

namespace {

using i64 = std::int64_t;
__extension__ typedef __int128 i128;

i64 ipow(i64 v, int p) {
    i64 r = 1;
    for (int i = 0; i < p; ++i) r *= v;
    return r;
}

struct Requirements {
    bool sum_target;
    bool cube, fifth, fourth, square;
    i64 d_modulus;
    bool q12, q13, q112, q14, q23, q113, q221, q1112;
};

Requirements requirements(const SearchSpec& spec) {
    const int o = spec.target_order;
    Requirements r{};
    r.sum_target = spec.target == Target::Sum;
    r.square = r.sum_target && o >= 2; // commutator targets need sigma^2 > 0 instead
    r.cube = o >= 3;
    r.fourth = o >= 4;
    r.fifth = o >= 5;
    r.d_modulus = !r.sum_target ? 1 : o >= 5 ? 30 : o >= 3 ? 6 : o >= 2 ? 2 : 1;
    r.q12 = o >= 3;
    r.q13 = r.q112 = o >= 4;
    r.q14 = r.q23 = r.q113 = r.q221 = r.q1112 = o >= 5;
    return r;
}

class Clock {
public:
    explicit Clock(std::optional<double> limit) : start_(std::chrono::steady_clock::now()), limit_(limit) {}

    double elapsed() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    }

    bool expired() {
        if (stopped_.load(std::memory_order_relaxed)) return true;
        if (limit_ && elapsed() > *limit_) {
            stopped_.store(true, std::memory_order_relaxed);
            return true;
        }
        return false;
    }

    bool stopped() const { return stopped_.load(std::memory_order_relaxed); }

private:
    std::chrono::steady_clock::time_point start_;
    std::optional<double> limit_;
    std::atomic<bool> stopped_{false};
};

// ---- stage 1 -------------------------------------------------------------

struct SignsWalker {
    const SearchSpec& spec;
    Requirements req;
    std::vector<int> values;
    std::vector<int> current;
    std::vector<std::vector<int>> out;

    void walk(std::size_t start, int remaining, i64 s1, i64 s3, i64 s5) {
        if (remaining == 0) {
            if (req.sum_target ? s1 <= 0 : s1 != 0) return;
            if (req.cube && s3 != 0) return;
            if (req.fifth && s5 != 0) return;
            if (s1 % req.d_modulus != 0) return;
            out.push_back(current);
            return;
        }
        // Every remaining label lies in [values[j], a_max]: the upper bounds
        // do not depend on j, the lower bounds grow with it.
        const i64 top = spec.a_max;
        const i64 k = remaining;
        if (req.sum_target ? s1 + k * top <= 0 : s1 + k * top < 0) return;
        if (req.cube && s3 + k * ipow(top, 3) < 0) return;
        if (req.fifth && s5 + k * ipow(top, 5) < 0) return;
        for (std::size_t j = start; j < values.size(); ++j) {
            const i64 v = values[j];
            if (!req.sum_target && s1 + k * v > 0) break;
            if (req.cube && s3 + k * ipow(v, 3) > 0) break;
            if (req.fifth && s5 + k * ipow(v, 5) > 0) break;
            current.push_back(static_cast<int>(v));
            walk(j, remaining - 1, s1 + v, s3 + v * v * v, s5 + ipow(v, 5));
            current.pop_back();
        }
    }
};

// ---- stage 3 -------------------------------------------------------------

struct Item {
    int label;
    int alpha;
    int count;
};

struct PermuteState {
    i64 s1, s2, s3, s4;
    i128 sum12, sum13, sum14, sum23, sum112, sum113, sum221, sum1112;
};

class PermuteWalker {
public:
    PermuteWalker(const SearchSpec& spec, const Assignment& as, Clock* clock)
        : spec_(spec), req_(requirements(spec)), clock_(clock) {
        for (std::size_t i = 0; i < as.labels.size(); ++i) {
            if (!items_.empty() && items_.back().label == as.labels[i] && items_.back().alpha == as.alphas[i])
                ++items_.back().count;
            else
                items_.push_back(Item{as.labels[i], as.alphas[i], 1});
        }
        n_ = as.labels.size();
        self_flip_ = as.self_flip;
        order_.resize(n_);
        // Totals are order independent.
        for (std::size_t i = 0; i < n_; ++i) {
            const i64 c = as.labels[i], al = as.alphas[i];
            S1 += c;
            S2 += al * c * c;
            S3 += c * c * c;
            S4 += al * c * c * c * c;
        }
    }

    std::vector<Method> run() {
        PermuteState st{};
        walk(0, st);
        return std::move(out_);
    }

private:
    void walk(std::size_t depth, const PermuteState& st) {
        if (depth == n_) {
            leaf(st);
            return;
        }
        for (std::size_t k = 0; k < items_.size(); ++k) {
            Item& it = items_[k];
            if (it.count == 0) continue;
            --it.count;
            order_[depth] = k;
            walk(depth + 1, advance(st, it));
            ++it.count;
            if (clock_ && stopped_) return;
        }
    }

    static PermuteState advance(const PermuteState& p, const Item& it) {
        const i64 al = it.alpha;
        const i64 a = al * it.label; // coefficient a = alpha * c
        const i64 a2 = a * a, a3 = a2 * a, a4 = a3 * a;
        PermuteState n = p;
        n.s1 = p.s1 + al * a;
        n.s2 = p.s2 + al * a2;
        n.s3 = p.s3 + al * a3;
        n.s4 = p.s4 + al * a4;

        const i128 x1 = p.s1, y1 = n.s1;
        const i128 d1_2 = y1 * y1 - x1 * x1;
        const i128 d1_3 = y1 * y1 * y1 - x1 * x1 * x1;
        const i128 d1_4 = y1 * y1 * y1 * y1 - x1 * x1 * x1 * x1;
        const i128 x2 = p.s2, y2 = n.s2;
        const i128 d2_2 = y2 * y2 - x2 * x2;
        const i128 d = static_cast<i128>(al) * a2;
        // ((x + d)^3 - x^3) / a with d = alpha a^2.
        const i128 cube_over_a = static_cast<i128>(al) * a * (3 * x2 * x2 + 3 * x2 * d + d * d);

        n.sum12 = p.sum12 + a * d1_2;
        n.sum13 = p.sum13 + a2 * d1_2;
        n.sum14 = p.sum14 + a3 * d1_2;
        n.sum23 = p.sum23 + a * d2_2;
        n.sum112 = p.sum112 + a * d1_3;
        n.sum113 = p.sum113 + a2 * d1_3;
        n.sum221 = p.sum221 + cube_over_a;
        n.sum1112 = p.sum1112 + a * d1_4;
        return n;
    }

    void leaf(const PermuteState& st) {
        if (clock_ && (++leaves_ & 0x3fff) == 0 && clock_->expired()) {
            stopped_ = true;
            return;
        }
        const i128 s1 = S1, s2 = S2, s3 = S3, s4 = S4;
        // Scaled: q12 = 2 sigma^12, q112 = 12 sigma^112, q1112 = 24 sigma^1112.
        const i128 q12 = st.sum12 - s1 * s2;
        if (req_.q12 && q12 != 0) return;
        const i128 q13 = st.sum13 - s1 * s3;
        if (req_.q13 && q13 != 0) return;
        const i128 q112 = 2 * st.sum112 - 2 * s1 * s1 * s2 - 3 * s1 * q12;
        if (req_.q112 && q112 != 0) return;
        if (req_.q14 && st.sum14 - s1 * s4 != 0) return;
        if (req_.q23 && st.sum23 - s2 * s3 != 0) return;
        if (req_.q113 && 2 * st.sum113 - 2 * s1 * s1 * s3 - 3 * s1 * q13 != 0) return;
        if (req_.q221 && 2 * st.sum221 - 2 * s2 * s2 * s1 + 3 * s2 * q12 != 0) return;
        if (req_.q1112 && st.sum1112 - s1 * s1 * s1 * s2 - s1 * q112 - 2 * s1 * s1 * q12 != 0) return;

        std::vector<Unit> units;
        units.reserve(n_);
        for (std::size_t i = 0; i < n_; ++i) {
            const Item& it = items_[order_[i]];
            units.push_back(Unit{it.alpha, Coefficient(it.alpha * it.label)});
        }
        Method m(std::move(units), spec_.target);
        if (spec_.dedup && req_.sum_target) {
            Method canonical = transpose_canonical(m);
            // A self-flip assignment produces both members of the pair.
            if (self_flip_ && !(canonical == m)) return;
            out_.push_back(std::move(canonical));
        } else {
            out_.push_back(std::move(m));
        }
    }

    const SearchSpec& spec_;
    Requirements req_;
    Clock* clock_;
    std::vector<Item> items_;
    std::vector<std::size_t> order_;
    std::size_t n_ = 0;
    bool self_flip_ = false;
    bool stopped_ = false;
    std::uint64_t leaves_ = 0;
    i64 S1 = 0, S2 = 0, S3 = 0, S4 = 0;
    std::vector<Method> out_;
};

std::vector<Method> permute(const SearchSpec& spec, const Assignment& as, Clock* clock) {
    return PermuteWalker(spec, as, clock).run();
}

// ---- driver --------------------------------------------------------------

struct BlockResult {
    std::vector<Method> methods;
    std::size_t assignments = 0;
};

BlockResult process_multiset(const SearchSpec& spec, const std::vector<int>& multiset, Clock* clock) {
    BlockResult r;
    for (const auto& as : stage_even(spec, multiset)) {
        ++r.assignments;
        auto ms = permute(spec, as, clock);
        r.methods.insert(r.methods.end(), std::make_move_iterator(ms.begin()), std::make_move_iterator(ms.end()));
        if (clock->stopped()) break;
    }
    return r;
}

SearchOutcome run(const SearchSpec& spec, bool parallel) {
    validate(spec);
    Clock clock(spec.time_limit_seconds);
    SearchOutcome outcome;

    std::vector<std::vector<int>> multisets;
    const int lo = spec.min_units > 0 ? spec.min_units : spec.units;
    for (int units = lo; units <= spec.units; ++units) {
        auto ms = stage_signs(spec, units);
        multisets.insert(multisets.end(), std::make_move_iterator(ms.begin()), std::make_move_iterator(ms.end()));
    }
    outcome.multisets = multisets.size();

    // Fixed-size blocks in enumeration order keep the result cap deterministic.
    constexpr std::size_t block = 64;
    std::vector<Method> found;
    for (std::size_t begin = 0; begin < multisets.size() && !clock.expired(); begin += block) {
        const std::size_t end = std::min(multisets.size(), begin + block);
        std::vector<BlockResult> parts(end - begin);
        const auto count = static_cast<std::int64_t>(end - begin);
#pragma omp parallel for schedule(dynamic, 1) if (parallel)
        for (std::int64_t i = 0; i < count; ++i) {
            if (clock.stopped()) continue;
            parts[static_cast<std::size_t>(i)] = process_multiset(spec, multisets[begin + static_cast<std::size_t>(i)], &clock);
        }
        for (auto& p : parts) {
            outcome.assignments += p.assignments;
            for (auto& m : p.methods) found.push_back(std::move(m));
        }
        if (spec.max_results && found.size() >= spec.max_results) {
            if (found.size() > spec.max_results || end < multisets.size()) outcome.status = SearchStatus::ResultLimit;
            found.erase(found.begin() + static_cast<std::ptrdiff_t>(spec.max_results), found.end());
            break;
        }
    }
    if (clock.stopped()) outcome.status = SearchStatus::TimeLimit;

    for (auto& m : found) {
        const OrderReport o = order_of(m);
        if (o.achieved_order < spec.target_order)
            throw std::logic_error("search emitted " + format_method(m) + " below the requested order");
        MethodReport rep = report(m, spec.target == Target::Sum ? std::optional<int>(std::min(spec.target_order, 4)) : std::nullopt);
        if (spec.target == Target::Sum && spec.target_order == 4) {
            const Rational& d = rep.D.exact();
            if (boost::multiprecision::denominator(d) != 1 || boost::multiprecision::numerator(d) % 12 != 0)
                outcome.warnings.push_back(format_method(m) + ": fourth-order D = " + rep.D.to_string() + " is not a multiple of 12");
        }
        outcome.results.push_back(SearchResult{std::move(m), std::move(rep)});
    }

    std::sort(outcome.results.begin(), outcome.results.end(), [](const SearchResult& a, const SearchResult& b) {
        const double inf = std::numeric_limits<double>::infinity();
        const double za = a.report.Z.value_or(inf), zb = b.report.Z.value_or(inf);
        if (za != zb) return za < zb;
        if (a.report.L_over_D != b.report.L_over_D) return a.report.L_over_D < b.report.L_over_D;
        return format_method(a.method) < format_method(b.method);
    });
    outcome.seconds = clock.elapsed();
    return outcome;
}

} // namespace

void validate(const SearchSpec& spec) {
    if (spec.target_order < 2 || spec.target_order > 5) throw std::invalid_argument("search: target order must be 2..5");
    if (spec.units < 1 || spec.units > 24) throw std::invalid_argument("search: unit count must be 1..24");
    if (spec.min_units < 0 || spec.min_units > spec.units) throw std::invalid_argument("search: min_units must be in 0..units");
    if (spec.a_max < 1 || spec.a_max > 64) throw std::invalid_argument("search: a_max must be 1..64");
    if (spec.time_limit_seconds && *spec.time_limit_seconds <= 0) throw std::invalid_argument("search: time limit must be positive");
}

std::vector<std::vector<int>> stage_signs(const SearchSpec& spec, int units) {
    validate(spec);
    SignsWalker w{spec, requirements(spec), {}, {}, {}};
    for (int v = -spec.a_max; v <= spec.a_max; ++v)
        if (v != 0) w.values.push_back(v);
    w.walk(0, units, 0, 0, 0);
    return std::move(w.out);
}

std::vector<Assignment> stage_even(const SearchSpec& spec, std::span<const int> multiset) {
    const Requirements req = requirements(spec);
    struct Group {
        int label;
        int count;
        i64 c2, c4;
    };
    std::vector<Group> groups;
    for (int c : multiset) {
        if (!groups.empty() && groups.back().label == c)
            ++groups.back().count;
        else
            groups.push_back(Group{c, 1, i64(c) * c, ipow(c, 4)});
    }

    // Largest possible |sigma^2|, |sigma^4| from groups g.. onwards.
    std::vector<i64> rest2(groups.size() + 1, 0), rest4(groups.size() + 1, 0);
    for (std::size_t g = groups.size(); g-- > 0;) {
        rest2[g] = rest2[g + 1] + groups[g].count * groups[g].c2;
        rest4[g] = rest4[g + 1] + groups[g].count * groups[g].c4;
    }

    std::vector<Assignment> out;
    std::vector<int> negatives(groups.size(), 0);

    auto emit = [&] {
        std::vector<int> flipped(groups.size());
        for (std::size_t g = 0; g < groups.size(); ++g) flipped[g] = groups[g].count - negatives[g];
        const bool self_flip = flipped == negatives;
        if (spec.dedup && req.sum_target && !self_flip && flipped < negatives) return;
        Assignment as;
        as.self_flip = self_flip;
        for (std::size_t g = 0; g < groups.size(); ++g)
            for (int i = 0; i < groups[g].count; ++i) {
                as.labels.push_back(groups[g].label);
                as.alphas.push_back(i < negatives[g] ? -1 : 1);
            }
        out.push_back(std::move(as));
    };

    auto walk = [&](auto&& self, std::size_t g, i64 s2, i64 s4) -> void {
        if (g == groups.size()) {
            if (req.square && s2 != 0) return;
            if (!req.sum_target && s2 <= 0) return;
            if (req.fourth && s4 != 0) return;
            emit();
            return;
        }
        if (req.square && (s2 > rest2[g] || s2 < -rest2[g])) return;
        if (!req.sum_target && s2 + rest2[g] <= 0) return;
        if (req.fourth && (s4 > rest4[g] || s4 < -rest4[g])) return;
        const Group& gr = groups[g];
        for (int k = 0; k <= gr.count; ++k) {
            negatives[g] = k;
            const i64 net = gr.count - 2 * k;
            self(self, g + 1, s2 + net * gr.c2, s4 + net * gr.c4);
        }
    };
    walk(walk, 0, 0, 0);
    return out;
}

std::vector<Method> stage_permute(const SearchSpec& spec, const Assignment& assignment) {
    return permute(spec, assignment, nullptr);
}

std::string_view to_string(SearchStatus s) {
    switch (s) {
    case SearchStatus::Exhausted: return "exhausted";
    case SearchStatus::TimeLimit: return "time-limit";
    default: return "result-limit";
    }
}

SearchOutcome search(const SearchSpec& spec) { return run(spec, true); }
SearchOutcome search_serial(const SearchSpec& spec) { return run(spec, false); }

nlohmann::json search_result_to_json(const SearchResult& r) {
    nlohmann::json j{
        {"method", format_method(r.method)},
        {"D", r.report.D.to_string()},
        {"L", r.report.L.to_string()},
        {"I", r.report.I},
        {"rho", rho_to_json(r.report.rho)},
    };
    j["Z"] = r.report.Z ? nlohmann::json(*r.report.Z) : nlohmann::json(nullptr);
    return j;
}

} // namespace splitting
