#pragma once

#include "splitting/method.hpp"

#include <string>
#include <vector>

namespace splitting {

/// One block of a composition: the base method with every coefficient
/// multiplied by `scale`, inverted when direction = -1.
struct ScheduleStep {
    int direction = 1;
    Rational scale;

    friend bool operator==(const ScheduleStep&, const ScheduleStep&) = default;
};

using Schedule = std::vector<ScheduleStep>;

/// concat(m, transpose(m)). Returns the composed method; `warning` is set
/// when m is not of odd sum order.
Method double_to_even(const Method& m, std::string* warning = nullptr);

/// sum direction * scale, and sum direction * scale^power.
Rational schedule_advance(const Schedule& s);
Rational schedule_moment(const Schedule& s, int power);

/// Compose blocks of `base` (assumed of order `base_order`) according to
/// `schedule`. Throws std::invalid_argument unless sum d*b > 0 and
/// sum d*b^{base_order+1} = 0 hold exactly.
Method raise_order(const Method& base, int base_order, const Schedule& schedule);

/// Reorders a schedule so that the composition of a self-transpose base is
/// again self-transpose: every step value except at most one appears an
/// even number of times. Throws std::invalid_argument otherwise.
Schedule make_palindromic(const Schedule& schedule);

/// 2^{o+1} unit steps around one step of scale -2, palindromic; direction
/// of the -2 step is chosen so the (o+1)-th moment cancels.
Schedule default_schedule(int base_order);

/// Repeated default compositions until the certified order reaches
/// target_order. The base must be self-transpose or of odd order.
Method auto_compose(const Method& base, int target_order);

/// Order certified from sigma plus symmetry: a self-transpose method whose
/// engine order is odd is one order higher; at the engine ceiling a
/// self-transpose method is certified at 6.
int certified_order(const Method& m);

} // namespace splitting
