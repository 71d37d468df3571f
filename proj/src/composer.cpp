#include "splitting/composer.hpp"

#include "splitting/sigma.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <stdexcept>

namespace splitting {

Method double_to_even(const Method& m, std::string* warning) {
    if (warning) {
        const int o = order_of(m, Target::Sum).achieved_order;
        if (o % 2 == 0) *warning = "input has even order " + std::to_string(o) + "; doubling does not raise it";
        else warning->clear();
    }
    return concat(m, transpose(m));
}

Rational schedule_advance(const Schedule& s) { return schedule_moment(s, 1); }

Rational schedule_moment(const Schedule& s, int power) {
    Rational sum = 0;
    for (const auto& step : s) {
        Rational term = step.direction;
        for (int k = 0; k < power; ++k) term *= step.scale;
        sum += term;
    }
    return sum;
}

Method raise_order(const Method& base, int base_order, const Schedule& schedule) {
    if (schedule.empty()) throw std::invalid_argument("raise_order: empty schedule");
    if (base_order < 1) throw std::invalid_argument("raise_order: base order must be at least 1");
    for (const auto& step : schedule) {
        if (step.direction != 1 && step.direction != -1) throw std::invalid_argument("raise_order: directions must be +1 or -1");
        if (step.scale == 0) throw std::invalid_argument("raise_order: zero scale in schedule");
    }
    if (schedule_advance(schedule) <= 0) throw std::invalid_argument("raise_order: schedule must advance time (sum d*b > 0)");
    if (schedule_moment(schedule, base_order + 1) != 0)
        throw std::invalid_argument("raise_order: schedule must cancel the leading error (sum d*b^(o+1) = 0)");

    std::vector<Unit> units;
    for (const auto& step : schedule) {
        Method block = scale(base, Coefficient(step.scale));
        if (step.direction == -1) block = inverse(block);
        units.insert(units.end(), block.units().begin(), block.units().end());
    }
    return Method(std::move(units), base.target());
}

Schedule make_palindromic(const Schedule& schedule) {
    auto key = [](const ScheduleStep& s) { return std::pair{s.direction, s.scale}; };
    std::map<std::pair<int, Rational>, std::size_t> counts;
    for (const auto& s : schedule) ++counts[key(s)];

    Schedule left;
    std::optional<ScheduleStep> centre;
    for (const auto& [k, n] : counts) {
        if (n % 2 == 1) {
            if (centre) throw std::invalid_argument("make_palindromic: more than one step value occurs an odd number of times");
            centre = ScheduleStep{k.first, k.second};
        }
        for (std::size_t i = 0; i < n / 2; ++i) left.push_back(ScheduleStep{k.first, k.second});
    }

    Schedule out = left;
    if (centre) out.push_back(*centre);
    out.insert(out.end(), left.rbegin(), left.rend());
    return out;
}

Schedule default_schedule(int base_order) {
    if (base_order < 1 || base_order > 8) throw std::invalid_argument("default_schedule: base order must be 1..8");
    const int power = base_order + 1;
    Schedule s(static_cast<std::size_t>(1) << power, ScheduleStep{1, Rational(1)});
    s.push_back(ScheduleStep{power % 2 == 1 ? 1 : -1, Rational(-2)});
    return make_palindromic(s);
}

int certified_order(const Method& m) {
    const OrderReport r = order_of(m, Target::Sum);
    if (r.at_ceiling && is_self_transpose(m)) return r.achieved_order + 1;
    return r.achieved_order;
}

Method auto_compose(const Method& base, int target_order) {
    if (target_order < 1 || target_order > 6)
        throw std::invalid_argument("auto_compose: orders above 6 cannot be certified by the sigma engine");
    Method current = base.with_target(Target::Sum);
    for (;;) {
        const int o = certified_order(current);
        if (o == 0) throw std::invalid_argument("auto_compose: base is not a valid sum method");
        if (o >= target_order) return current;
        if (o % 2 == 1 && !is_self_transpose(current))
            current = double_to_even(current);
        else
            current = raise_order(current, o, default_schedule(o));
    }
}

} // namespace splitting
