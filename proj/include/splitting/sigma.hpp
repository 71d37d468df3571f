#pragma once

#include "splitting/method.hpp"

#include <json.hpp>

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace splitting {

/// Basis labels of the log expansion through fifth order. The order of a
/// label is the digit sum of its name.
enum class Label { S1, S2, S3, S12, S4, S13, S112, S5, S14, S23, S113, S221, S1112 };

inline constexpr std::size_t label_count = 13;

inline constexpr std::array<Label, label_count> all_labels{
    Label::S1,  Label::S2,  Label::S3,   Label::S12,  Label::S4,   Label::S13,  Label::S112,
    Label::S5,  Label::S14, Label::S23, Label::S113, Label::S221, Label::S1112,
};

std::string_view label_name(Label x);
int label_order(Label x);
std::optional<Label> parse_label(std::string_view name);

template <class T>
struct SigmaVector {
    std::array<T, label_count> values{};

    T& operator[](Label x) { return values[static_cast<std::size_t>(x)]; }
    const T& operator[](Label x) const { return values[static_cast<std::size_t>(x)]; }
};

namespace detail {

template <class T>
T ratio(int num, int den) {
    return T(num) / T(den);
}

} // namespace detail

/// All thirteen coefficients in one pass. Works for any field-like T
/// (Coefficient, double, long double, HighPrecision, autodiff scalars).
///
/// With s_i^p the partial sums of alpha_j a_j^p over j <= i:
///   sigma^{pq}   = -1/2 s^p s^q + 1/2 sum a_i^{q-p} [(s_i^p)^2 - (s_{i-1}^p)^2]
///   sigma^{ppq}  = -1/2 s^p s^{pq} - 1/6 (s^p)^2 s^q + 1/6 sum a_i^{q-p} [cubes]
///   sigma^{1112} = -1/2 s^1 s^{112} - 1/6 (s^1)^2 s^{12} - 1/24 (s^1)^3 s^2 + 1/24 sum a_i [fourth powers]
/// and sigma^{21} = -sigma^{12}.
template <class T>
SigmaVector<T> sigma_vector(std::span<const BasicUnit<T>> units) {
    const T zero = T(0);
    std::array<T, 6> total{zero, zero, zero, zero, zero, zero};
    // Running partial sums s_{i-1}^p, updated per unit.
    std::array<T, 6> prev{zero, zero, zero, zero, zero, zero};

    T sum12 = zero, sum13 = zero, sum14 = zero, sum23 = zero;
    T sum112 = zero, sum113 = zero, sum221 = zero, sum1112 = zero;

    for (const auto& u : units) {
        const T& a = u.a;
        const T sign = T(u.alpha);
        std::array<T, 6> pw{T(1), a, zero, zero, zero, zero};
        for (int k = 2; k <= 5; ++k) pw[k] = pw[k - 1] * a;

        std::array<T, 6> cur = prev;
        for (int p = 1; p <= 5; ++p) cur[p] = prev[p] + sign * pw[p];

        const T d1_2 = cur[1] * cur[1] - prev[1] * prev[1];
        const T d2_2 = cur[2] * cur[2] - prev[2] * prev[2];
        const T c1 = cur[1] * cur[1] * cur[1];
        const T p1 = prev[1] * prev[1] * prev[1];
        const T d1_3 = c1 - p1;
        const T d2_3 = cur[2] * cur[2] * cur[2] - prev[2] * prev[2] * prev[2];
        const T d1_4 = c1 * cur[1] - p1 * prev[1];

        sum12 += pw[1] * d1_2;
        sum13 += pw[2] * d1_2;
        sum14 += pw[3] * d1_2;
        sum23 += pw[1] * d2_2;
        sum112 += pw[1] * d1_3;
        sum113 += pw[2] * d1_3;
        sum221 += d2_3 / a;
        sum1112 += pw[1] * d1_4;

        prev = cur;
    }
    total = prev;

    const T half = detail::ratio<T>(1, 2);
    const T sixth = detail::ratio<T>(1, 6);
    const T twentyfourth = detail::ratio<T>(1, 24);

    SigmaVector<T> s;
    s[Label::S1] = total[1];
    s[Label::S2] = total[2];
    s[Label::S3] = total[3];
    s[Label::S4] = total[4];
    s[Label::S5] = total[5];
    s[Label::S12] = half * (sum12 - total[1] * total[2]);
    s[Label::S13] = half * (sum13 - total[1] * total[3]);
    s[Label::S14] = half * (sum14 - total[1] * total[4]);
    s[Label::S23] = half * (sum23 - total[2] * total[3]);

    const T& s1 = total[1];
    const T& s2 = total[2];
    s[Label::S112] = sixth * (sum112 - s1 * s1 * s2) - half * s1 * s[Label::S12];
    s[Label::S113] = sixth * (sum113 - s1 * s1 * total[3]) - half * s1 * s[Label::S13];
    s[Label::S221] = sixth * (sum221 - s2 * s2 * s1) + half * s2 * s[Label::S12];
    s[Label::S1112] = twentyfourth * (sum1112 - s1 * s1 * s1 * s2) - half * s1 * s[Label::S112] -
                      sixth * s1 * s1 * s[Label::S12];
    return s;
}

template <class T>
SigmaVector<T> sigma_vector(const std::vector<BasicUnit<T>>& units) {
    return sigma_vector<T>(std::span<const BasicUnit<T>>(units));
}

SigmaVector<Coefficient> sigma_vector(const Method& m);

/// Single-label accessors. Each validates its label set:
/// p in 1..5; pq in {12, 13, 14, 23}; ppq in {112, 113, 221}.
Coefficient sigma_p(const Method& m, int p);
Coefficient sigma_pq(const Method& m, int pq);
Coefficient sigma_ppq(const Method& m, int ppq);
Coefficient sigma_1112(const Method& m);

struct OrderReport {
    Target target = Target::Sum;
    int achieved_order = 0;
    std::vector<Label> leading_nonzero_labels;
    // Every label the engine knows vanishes; the true order may be higher.
    bool at_ceiling = false;
    // Commutator target with sigma^2 < 0: approximates exp(-[A1, A2]).
    bool reversed_direction = false;
};

/// Decides which entries count as zero.
struct ZeroTest {
    bool exact = true;
    double weight = 1.0; // L = sum |a_i|
    double tolerance = 1e-12;

    bool operator()(const Coefficient& value, Label x) const;
};

ZeroTest zero_test_for(const Method& m);

OrderReport order_from_sigma(const SigmaVector<Coefficient>& s, Target target, const ZeroTest& is_zero);

/// Order against the method's own target.
OrderReport order_of(const Method& m);
OrderReport order_of(const Method& m, Target target);

nlohmann::json sigma_to_json(const SigmaVector<Coefficient>& s);
nlohmann::json order_to_json(const OrderReport& r);

} // namespace splitting
