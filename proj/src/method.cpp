#include "splitting/method.hpp"

#include "splitting/notation.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace splitting {

std::string_view to_string(Target t) { return t == Target::Sum ? "sum" : "commutator"; }

Target parse_target(std::string_view text) {
    if (text == "sum") return Target::Sum;
    if (text == "commutator" || text == "comm") return Target::Commutator;
    throw std::invalid_argument("unknown target '" + std::string(text) + "' (expected sum|commutator)");
}

Unit make_unit(int alpha, Coefficient a) {
    if (alpha != 1 && alpha != -1) throw std::invalid_argument("unit alpha must be +1 or -1");
    if (a.is_zero()) throw std::invalid_argument("unit coefficient must be nonzero");
    return Unit{alpha, std::move(a)};
}

Unit unit_from_label(const Coefficient& label, bool transposed) {
    return transposed ? make_unit(-1, -label) : make_unit(1, label);
}

Method::Method(std::vector<Unit> units, Target target) : units_(std::move(units)), target_(target) {
    if (units_.empty()) throw std::invalid_argument("a method needs at least one unit");
    for (const auto& u : units_)
        if ((u.alpha != 1 && u.alpha != -1) || u.a.is_zero())
            throw std::invalid_argument("invalid unit in method");
}

bool Method::is_exact() const {
    return std::all_of(units_.begin(), units_.end(), [](const Unit& u) { return u.a.is_exact(); });
}

Method transpose(const Method& m) {
    std::vector<Unit> out;
    out.reserve(m.size());
    for (auto it = m.units().rbegin(); it != m.units().rend(); ++it) out.push_back(Unit{-it->alpha, -it->a});
    return Method(std::move(out), m.target());
}

Method inverse(const Method& m) {
    std::vector<Unit> out;
    out.reserve(m.size());
    for (auto it = m.units().rbegin(); it != m.units().rend(); ++it) out.push_back(Unit{-it->alpha, it->a});
    return Method(std::move(out), m.target());
}

Method concat(const Method& first, const Method& second) {
    std::vector<Unit> out(first.units().begin(), first.units().end());
    out.insert(out.end(), second.units().begin(), second.units().end());
    return Method(std::move(out), first.target());
}

Method scale(const Method& m, const Coefficient& lambda) {
    if (lambda.is_zero()) throw std::invalid_argument("scale factor must be nonzero");
    std::vector<Unit> out;
    out.reserve(m.size());
    for (const auto& u : m.units()) out.push_back(Unit{u.alpha, u.a * lambda});
    return Method(std::move(out), m.target());
}

Method power(const Method& m, int k) {
    if (k < 1) throw std::invalid_argument("power exponent must be positive");
    std::vector<Unit> out;
    out.reserve(m.size() * static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) out.insert(out.end(), m.units().begin(), m.units().end());
    return Method(std::move(out), m.target());
}

bool is_self_transpose(const Method& m) { return transpose(m) == m; }

Coefficient time_advance(const Method& m) {
    Coefficient d(0);
    for (const auto& u : m.units()) d += u.alpha == 1 ? u.a : -u.a;
    return d;
}

Coefficient total_weight(const Method& m) {
    Coefficient l(0);
    for (const auto& u : m.units()) l += abs(u.a);
    return l;
}

Method transpose_canonical(const Method& m) {
    Method t = transpose(m);
    return format_method(t) < format_method(m) ? t : m;
}

} // namespace splitting
