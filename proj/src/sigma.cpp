#include "splitting/sigma.hpp"

#include <cmath>

namespace splitting {

namespace {

constexpr std::array<std::string_view, label_count> names{"1", "2", "3", "12", "4", "13", "112",
                                                          "5", "14", "23", "113", "221", "1112"};

} // namespace

std::string_view label_name(Label x) { return names[static_cast<std::size_t>(x)]; }

int label_order(Label x) {
    int order = 0;
    for (char c : label_name(x)) order += c - '0';
    return order;
}

std::optional<Label> parse_label(std::string_view name) {
    for (std::size_t i = 0; i < label_count; ++i)
        if (names[i] == name) return all_labels[i];
    return std::nullopt;
}

SigmaVector<Coefficient> sigma_vector(const Method& m) { return sigma_vector<Coefficient>(m.units()); }

Coefficient sigma_p(const Method& m, int p) {
    if (p < 1 || p > 5) throw std::out_of_range("sigma_p: p must be in 1..5");
    constexpr std::array powers{Label::S1, Label::S2, Label::S3, Label::S4, Label::S5};
    return sigma_vector(m)[powers[static_cast<std::size_t>(p - 1)]];
}

Coefficient sigma_pq(const Method& m, int pq) {
    std::optional<Label> x;
    switch (pq) {
    case 12: x = Label::S12; break;
    case 13: x = Label::S13; break;
    case 14: x = Label::S14; break;
    case 23: x = Label::S23; break;
    default: throw std::invalid_argument("sigma_pq: label must be one of 12, 13, 14, 23");
    }
    return sigma_vector(m)[*x];
}

Coefficient sigma_ppq(const Method& m, int ppq) {
    std::optional<Label> x;
    switch (ppq) {
    case 112: x = Label::S112; break;
    case 113: x = Label::S113; break;
    case 221: x = Label::S221; break;
    default: throw std::invalid_argument("sigma_ppq: label must be one of 112, 113, 221");
    }
    return sigma_vector(m)[*x];
}

Coefficient sigma_1112(const Method& m) { return sigma_vector(m)[Label::S1112]; }

bool ZeroTest::operator()(const Coefficient& value, Label x) const {
    if (exact && value.is_exact()) return value.is_zero();
    return std::abs(value.to_double()) <= tolerance * std::pow(weight, label_order(x));
}

ZeroTest zero_test_for(const Method& m) {
    ZeroTest t;
    t.exact = m.is_exact();
    t.weight = total_weight(m).to_double();
    return t;
}

OrderReport order_from_sigma(const SigmaVector<Coefficient>& s, Target target, const ZeroTest& is_zero) {
    OrderReport r;
    r.target = target;

    const Label lead = target == Target::Sum ? Label::S1 : Label::S2;
    if (target == Target::Sum) {
        if (is_zero(s[Label::S1], Label::S1) || s[Label::S1].sign() < 0) return r;
    } else {
        if (!is_zero(s[Label::S1], Label::S1) || is_zero(s[Label::S2], Label::S2)) return r;
        r.reversed_direction = s[Label::S2].sign() < 0;
    }

    // Lowest order with a surviving label (other than the lead term).
    int first_bad = 6;
    for (Label x : all_labels) {
        if (x == lead || x == Label::S1) continue;
        if (!is_zero(s[x], x)) first_bad = std::min(first_bad, label_order(x));
    }
    r.achieved_order = first_bad - 1;
    r.at_ceiling = first_bad == 6;
    if (!r.at_ceiling)
        for (Label x : all_labels)
            if (x != lead && label_order(x) == first_bad && !is_zero(s[x], x)) r.leading_nonzero_labels.push_back(x);
    return r;
}

OrderReport order_of(const Method& m) { return order_of(m, m.target()); }

OrderReport order_of(const Method& m, Target target) {
    return order_from_sigma(sigma_vector(m), target, zero_test_for(m));
}

nlohmann::json sigma_to_json(const SigmaVector<Coefficient>& s) {
    nlohmann::json j = nlohmann::json::object();
    for (Label x : all_labels) j[std::string(label_name(x))] = s[x].to_string();
    return j;
}

nlohmann::json order_to_json(const OrderReport& r) {
    nlohmann::json labels = nlohmann::json::array();
    for (Label x : r.leading_nonzero_labels) labels.push_back(std::string(label_name(x)));
    return {{"target", std::string(to_string(r.target))},
            {"achieved_order", r.achieved_order},
            {"at_ceiling", r.at_ceiling},
            {"reversed_direction", r.reversed_direction},
            {"leading_nonzero_labels", labels}};
}

} // namespace splitting
