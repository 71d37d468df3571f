#pragma once

#include "splitting/sigma.hpp"

#include <json.hpp>

#include <array>
#include <optional>
#include <span>
#include <string_view>

namespace splitting {

/// Nested-commutator words on two operators. Word "k l ... m n" stands for
/// [A_k, [A_l, ... [A_m, A_n]]]; single letters are the operators themselves.
enum class Word {
    W1, W2, W12, W112, W221,
    W1112, W1221, W2221,
    W11112, W21112, W11221, W22112, W12221, W22221,
};

inline constexpr std::size_t word_count = 14;

inline constexpr std::array<Word, word_count> all_words{
    Word::W1,     Word::W2,     Word::W12,    Word::W112,   Word::W221,   Word::W1112,  Word::W1221,
    Word::W2221,  Word::W11112, Word::W21112, Word::W11221, Word::W22112, Word::W12221, Word::W22221,
};

std::string_view word_name(Word w);
std::optional<Word> parse_word(std::string_view name);
inline int word_length(Word w) { return static_cast<int>(word_name(w).size()); }

template <class T>
struct RhoVector {
    std::array<T, word_count> values{};

    T& operator[](Word w) { return values[static_cast<std::size_t>(w)]; }
    const T& operator[](Word w) const { return values[static_cast<std::size_t>(w)]; }
};

/// One nonzero entry of the two-operator expansion B^X = sum_Y c_XY A_Y.
struct B2Entry {
    Label label;
    Word word;
    int num;
    int den;
};

std::span<const B2Entry> b2_table();
Rational b2_coefficient(Label x, Word y);

/// Residual coefficients from the closed-form list.
template <class T>
RhoVector<T> rho_from_formulas(const SigmaVector<T>& s) {
    auto q = [](int n, int d) { return T(n) / T(d); };
    const T& s1 = s[Label::S1];
    RhoVector<T> r;
    r[Word::W1] = s1;
    r[Word::W2] = s1;
    r[Word::W12] = s[Label::S2] * q(1, 2);
    r[Word::W112] = s[Label::S3] * q(1, 12) + s[Label::S12] * q(1, 2);
    r[Word::W221] = s[Label::S3] * q(1, 12) - s[Label::S12] * q(1, 2);
    r[Word::W1112] = s[Label::S13] * q(1, 12) + s[Label::S112] * q(1, 2);
    r[Word::W1221] = s[Label::S4] * q(1, 24) - s[Label::S112];
    r[Word::W2221] = s[Label::S13] * q(1, 12) - s[Label::S112] * q(1, 2);

    const T& s5 = s[Label::S5];
    const T& s14 = s[Label::S14];
    const T& s23 = s[Label::S23];
    const T& s113 = s[Label::S113];
    const T& s221 = s[Label::S221];
    const T& s1112 = s[Label::S1112];
    r[Word::W11112] = -s5 * q(1, 720) + s113 * q(1, 12) + s1112 * q(1, 2);
    r[Word::W21112] = s5 * q(1, 360) - s23 * q(1, 24) + s113 * q(1, 12) + s221 * q(1, 4) + s1112 * q(1, 2);
    r[Word::W11221] = s5 * q(1, 120) + s14 * q(1, 24) - s23 * q(1, 24) + s221 * q(1, 4) - s1112;
    r[Word::W22112] = s5 * q(1, 120) - s14 * q(1, 24) + s23 * q(1, 24) + s221 * q(1, 4) + s1112;
    r[Word::W12221] = s5 * q(1, 360) + s23 * q(1, 24) + s113 * q(1, 12) + s221 * q(1, 4) - s1112 * q(1, 2);
    r[Word::W22221] = -s5 * q(1, 720) + s113 * q(1, 12) - s1112 * q(1, 2);
    return r;
}

/// Residual coefficients by contracting sigma with the B^X expansion table.
template <class T>
RhoVector<T> rho_by_contraction(const SigmaVector<T>& s) {
    RhoVector<T> r;
    for (Word w : all_words) r[w] = T(0);
    for (const auto& e : b2_table()) r[e.word] += s[e.label] * T(e.num) / T(e.den);
    return r;
}

RhoVector<Coefficient> rho_vector(const SigmaVector<Coefficient>& s);

/// Words one order above a method of the given order: length order+1.
std::span<const Word> residual_words(int order);

/// sqrt(sum of rho_Y^2) over residual_words(order); order in 1..4.
double scalar_R(const RhoVector<Coefficient>& rho, int order);
double scalar_R(const RhoVector<double>& rho, int order);

struct MethodReport {
    Target target = Target::Sum;
    Coefficient D;
    Coefficient L;
    int I = 0;
    OrderReport order;
    RhoVector<Coefficient> rho;
    double L_over_D = 0.0;
    // Present for sum targets whose order is 1..4.
    std::optional<double> R;
    std::optional<double> R_over_D;
    std::optional<double> Z;
};

/// Metrics at the achieved order (or at `order_override` when given).
/// Throws std::domain_error when D <= 0; D is sigma^2 for commutator targets.
MethodReport report(const Method& m, std::optional<int> order_override = std::nullopt);

MethodReport report_from_sigma(const SigmaVector<Coefficient>& s, Target target, Coefficient L, int I,
                               const OrderReport& order, std::optional<int> order_override = std::nullopt);

struct CostModel {
    double gate_switch_time = 0.0; // t_g
    double coupling = 0.0;         // b
    double physical_time = 1.0;    // T_p
    double error_budget = 1e-3;    // E
    std::optional<double> min_timestep; // epsilon
};

enum class CostRegime { SwitchDominated, ApplicationDominated };
std::string_view to_string(CostRegime r);

struct CostEstimate {
    double computer_time = 0.0;
    CostRegime regime = CostRegime::SwitchDominated;
    double timestep = 0.0;
    double applications = 0.0; // n
    double switch_part = 0.0;
    double application_part = 0.0;
};

/// Wall-clock estimate for N operator factors. The error budget fixes
/// dt = (E D / (T_p R))^{1/o}; a minimum timestep above that clamps dt.
CostEstimate computer_time(const MethodReport& r, const CostModel& cm, int num_factors);

nlohmann::json rho_to_json(const RhoVector<Coefficient>& rho);
nlohmann::json report_to_json(const MethodReport& r);

} // namespace splitting
