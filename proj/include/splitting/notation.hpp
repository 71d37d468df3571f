#pragma once

#include "splitting/method.hpp"

#include <json.hpp>

#include <concepts>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

// Compact method notation:
//
//   method := term+
//   term   := "(" number ")" ["^T"]
//           | "[" term+ "]" ["^" int]        (also "^{int}"; default 1)
//   number := signed integer | p/q | decimal
//
// Brackets are accepted on input and expanded; output never uses them.

namespace splitting {

class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t position)
        : std::runtime_error(what + " at position " + std::to_string(position)), position_(position) {}

    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

/// A unit as written, before its number is interpreted. Lets callers build
/// units at any precision straight from the digits.
struct UnitToken {
    std::string number;
    bool transposed = false;
};

std::vector<UnitToken> tokenize_method(std::string_view text);

Method parse_method(std::string_view text, Target target = Target::Sum);
std::string format_method(const Method& m);

/// Reads a decimal or "p/q" string at the precision of Real.
template <class Real>
Real parse_real(const std::string& text) {
    if (auto slash = text.find('/'); slash != std::string::npos)
        return parse_real<Real>(text.substr(0, slash)) / parse_real<Real>(text.substr(slash + 1));
    if constexpr (std::floating_point<Real>)
        return static_cast<Real>(std::stold(text));
    else
        return Real(text);
}

/// Units straight from the digits, skipping the double rounding that
/// parse_method applies to decimal coefficients.
template <class Real>
std::vector<BasicUnit<Real>> units_at_precision(std::string_view text) {
    std::vector<BasicUnit<Real>> out;
    for (const auto& tok : tokenize_method(text)) {
        Real label = parse_real<Real>(tok.number);
        out.push_back(tok.transposed ? BasicUnit<Real>{-1, Real(-label)} : BasicUnit<Real>{1, label});
    }
    return out;
}

nlohmann::json method_to_json(const Method& m);
Method method_from_json(const nlohmann::json& j, Target target = Target::Sum);

} // namespace splitting
