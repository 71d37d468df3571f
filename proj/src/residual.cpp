#include "splitting/residual.hpp"

#include <cmath>
#include <stdexcept>

namespace splitting {

namespace {

constexpr std::array<std::string_view, word_count> word_names{
    "1", "2", "12", "112", "221", "1112", "1221", "2221", "11112", "21112", "11221", "22112", "12221", "22221",
};

using L = Label;
using W = Word;

constexpr std::array<B2Entry, 39> table{{
    {L::S1, W::W1, 1, 1},
    {L::S1, W::W2, 1, 1},
    {L::S2, W::W12, 1, 2},
    {L::S3, W::W112, 1, 12},
    {L::S3, W::W221, 1, 12},
    {L::S12, W::W112, 1, 2},
    {L::S12, W::W221, -1, 2},
    {L::S4, W::W1221, 1, 24},
    {L::S13, W::W1112, 1, 12},
    {L::S13, W::W2221, 1, 12},
    {L::S112, W::W1112, 1, 2},
    {L::S112, W::W2221, -1, 2},
    {L::S112, W::W1221, -1, 1},
    {L::S5, W::W11112, -1, 720},
    {L::S5, W::W21112, 1, 360},
    {L::S5, W::W11221, 1, 120},
    {L::S5, W::W22112, 1, 120},
    {L::S5, W::W12221, 1, 360},
    {L::S5, W::W22221, -1, 720},
    {L::S14, W::W11221, 1, 24},
    {L::S14, W::W22112, -1, 24},
    {L::S23, W::W21112, -1, 24},
    {L::S23, W::W11221, -1, 24},
    {L::S23, W::W22112, 1, 24},
    {L::S23, W::W12221, 1, 24},
    {L::S113, W::W11112, 1, 12},
    {L::S113, W::W21112, 1, 12},
    {L::S113, W::W12221, 1, 12},
    {L::S113, W::W22221, 1, 12},
    {L::S221, W::W21112, 1, 4},
    {L::S221, W::W11221, 1, 4},
    {L::S221, W::W22112, 1, 4},
    {L::S221, W::W12221, 1, 4},
    {L::S1112, W::W11112, 1, 2},
    {L::S1112, W::W21112, 1, 2},
    {L::S1112, W::W11221, -1, 1},
    {L::S1112, W::W22112, 1, 1},
    {L::S1112, W::W12221, -1, 2},
    {L::S1112, W::W22221, -1, 2},
}};

constexpr std::array<Word, 1> order1_words{W::W12};
constexpr std::array<Word, 2> order2_words{W::W112, W::W221};
constexpr std::array<Word, 3> order3_words{W::W1112, W::W1221, W::W2221};
constexpr std::array<Word, 6> order4_words{W::W11112, W::W21112, W::W11221, W::W22112, W::W12221, W::W22221};

template <class T>
double root_sum_squares(const RhoVector<T>& rho, int order, double (*to_d)(const T&)) {
    double sum = 0.0;
    for (Word w : residual_words(order)) {
        double v = to_d(rho[w]);
        sum += v * v;
    }
    return std::sqrt(sum);
}

} // namespace

std::string_view word_name(Word w) { return word_names[static_cast<std::size_t>(w)]; }

std::optional<Word> parse_word(std::string_view name) {
    for (std::size_t i = 0; i < word_count; ++i)
        if (word_names[i] == name) return all_words[i];
    return std::nullopt;
}

std::span<const B2Entry> b2_table() { return table; }

Rational b2_coefficient(Label x, Word y) {
    for (const auto& e : b2_table())
        if (e.label == x && e.word == y) return Rational(e.num, e.den);
    return Rational(0);
}

RhoVector<Coefficient> rho_vector(const SigmaVector<Coefficient>& s) { return rho_from_formulas(s); }

std::span<const Word> residual_words(int order) {
    switch (order) {
    case 1: return order1_words;
    case 2: return order2_words;
    case 3: return order3_words;
    case 4: return order4_words;
    default: throw std::invalid_argument("residual norm is defined for orders 1..4");
    }
}

double scalar_R(const RhoVector<Coefficient>& rho, int order) {
    return root_sum_squares<Coefficient>(rho, order, [](const Coefficient& c) { return c.to_double(); });
}

double scalar_R(const RhoVector<double>& rho, int order) {
    return root_sum_squares<double>(rho, order, [](const double& c) { return c; });
}

MethodReport report_from_sigma(const SigmaVector<Coefficient>& s, Target target, Coefficient L, int I,
                               const OrderReport& order, std::optional<int> order_override) {
    MethodReport r;
    r.target = target;
    r.D = target == Target::Sum ? s[Label::S1] : s[Label::S2];
    if (r.D.sign() <= 0) throw std::domain_error("method has D <= 0; metrics are undefined");
    r.L = std::move(L);
    r.I = I;
    r.order = order;
    r.rho = rho_vector(s);

    const double d = r.D.to_double();
    r.L_over_D = r.L.to_double() / d;

    const int o = order_override.value_or(order.achieved_order);
    if (target == Target::Sum && o >= 1 && o <= 4) {
        r.R = scalar_R(r.rho, o);
        r.R_over_D = *r.R / d;
        r.Z = (I / d) * std::pow(*r.R_over_D, 1.0 / o);
    }
    return r;
}

MethodReport report(const Method& m, std::optional<int> order_override) {
    return report_from_sigma(sigma_vector(m), m.target(), total_weight(m), static_cast<int>(m.size()), order_of(m),
                             order_override);
}

std::string_view to_string(CostRegime r) {
    return r == CostRegime::SwitchDominated ? "switch-dominated" : "application-dominated";
}

CostEstimate computer_time(const MethodReport& r, const CostModel& cm, int num_factors) {
    const double d = r.D.to_double();
    if (d <= 0) throw std::domain_error("computer_time: D must be positive");
    if (cm.error_budget <= 0) throw std::domain_error("computer_time: error budget must be positive");
    if (cm.physical_time <= 0) throw std::domain_error("computer_time: physical time must be positive");
    if (cm.gate_switch_time < 0 || cm.coupling < 0) throw std::domain_error("computer_time: t_g and b must be non-negative");
    if (cm.min_timestep && *cm.min_timestep <= 0) throw std::domain_error("computer_time: minimum timestep must be positive");
    if (num_factors < 1) throw std::domain_error("computer_time: need at least one operator factor");
    if (!r.R) throw std::domain_error("computer_time: residual norm unavailable for this method");

    const int o = r.order.achieved_order;
    const double R = *r.R;
    const double N = num_factors;

    CostEstimate est;
    est.timestep = R > 0 ? std::pow(cm.error_budget * d / (cm.physical_time * R), 1.0 / o) : INFINITY;
    if (cm.min_timestep && est.timestep < *cm.min_timestep) {
        est.regime = CostRegime::ApplicationDominated;
        est.timestep = *cm.min_timestep;
    }
    est.applications = cm.physical_time / (d * est.timestep);
    est.switch_part = est.applications * r.I * N * cm.gate_switch_time;
    est.application_part = r.L.to_double() * cm.coupling * cm.physical_time / d * N;
    est.computer_time = est.switch_part + est.application_part;
    return est;
}

nlohmann::json rho_to_json(const RhoVector<Coefficient>& rho) {
    nlohmann::json j = nlohmann::json::object();
    for (Word w : all_words) j[std::string(word_name(w))] = rho[w].to_double();
    return j;
}

nlohmann::json report_to_json(const MethodReport& r) {
    nlohmann::json j{
        {"target", std::string(to_string(r.target))},
        {"D", r.D.to_string()},
        {"L", r.L.to_string()},
        {"I", r.I},
        {"L_over_D", r.L_over_D},
        {"order", order_to_json(r.order)},
        {"rho", rho_to_json(r.rho)},
    };
    j["R"] = r.R ? nlohmann::json(*r.R) : nlohmann::json(nullptr);
    j["R_over_D"] = r.R_over_D ? nlohmann::json(*r.R_over_D) : nlohmann::json(nullptr);
    j["Z"] = r.Z ? nlohmann::json(*r.Z) : nlohmann::json(nullptr);
    return j;
}

} // namespace splitting
