#pragma once

#include "splitting/coefficient.hpp"

#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

namespace splitting {

/// What the product of exponentials is meant to approximate:
/// exp(A_1 + ... + A_N) or exp([A_1, A_2]).
enum class Target { Sum, Commutator };

std::string_view to_string(Target t);
Target parse_target(std::string_view text);

/// One fundamental unit (e^{a A_1} ... e^{a A_N})^alpha with alpha = +-1.
/// The notation label is c = alpha * a and carries a ^T exactly when alpha = -1.
template <class T>
struct BasicUnit {
    int alpha = 1;
    T a{};

    friend bool operator==(const BasicUnit&, const BasicUnit&) = default;
};

using Unit = BasicUnit<Coefficient>;

/// Throws std::invalid_argument unless alpha is +-1 and a is nonzero.
Unit make_unit(int alpha, Coefficient a);

/// Unit for a notation label: "(c)" -> (+1, c), "(c)^T" -> (-1, -c).
Unit unit_from_label(const Coefficient& label, bool transposed);

inline Coefficient label_of(const Unit& u) { return u.alpha == 1 ? u.a : -u.a; }

/// An ordered, non-empty product of fundamental units. Immutable value type.
class Method {
public:
    Method(std::vector<Unit> units, Target target = Target::Sum);

    std::span<const Unit> units() const { return units_; }
    std::size_t size() const { return units_.size(); }
    const Unit& operator[](std::size_t i) const { return units_[i]; }
    Target target() const { return target_; }

    bool is_exact() const;
    Method with_target(Target t) const { return Method(units_, t); }

    friend bool operator==(const Method&, const Method&) = default;

private:
    std::vector<Unit> units_;
    Target target_;
};

/// Reverse unit order and negate both alpha and a: labels are kept and the
/// ^T flags toggle.
Method transpose(const Method& m);

/// Group inverse of the product: reverse order and negate alpha only.
Method inverse(const Method& m);

Method concat(const Method& first, const Method& second);

/// Multiply every a_i by lambda. Alpha signs are untouched, so
/// scale("(1)(1)^T", -2) == "(-2)(-2)^T".
Method scale(const Method& m, const Coefficient& lambda);

/// k-fold concatenation, k >= 1.
Method power(const Method& m, int k);

bool is_self_transpose(const Method& m);

/// Sum of alpha_i a_i.
Coefficient time_advance(const Method& m);

/// Sum of |a_i|.
Coefficient total_weight(const Method& m);

/// Lexicographically smaller (by canonical notation) of m and transpose(m).
Method transpose_canonical(const Method& m);

} // namespace splitting
