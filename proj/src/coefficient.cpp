#include "splitting/coefficient.hpp"

#include <charconv>
#include <cmath>
#include <stdexcept>
#include <system_error>

namespace splitting {

namespace {

bool is_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
        if (c < '0' || c > '9') return false;
    return true;
}

BigInt parse_integer(std::string_view s) {
    bool negative = false;
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
        negative = s.front() == '-';
        s.remove_prefix(1);
    }
    if (!is_digits(s)) throw std::invalid_argument("not an integer: '" + std::string(s) + "'");
    BigInt v{std::string(s)};
    return negative ? BigInt(-v) : v;
}

} // namespace

Coefficient Coefficient::parse(std::string_view text) {
    if (text.empty()) throw std::invalid_argument("empty coefficient");
    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        BigInt num = parse_integer(text.substr(0, slash));
        BigInt den = parse_integer(text.substr(slash + 1));
        if (den == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
        return Coefficient(Rational(num, den));
    }
    if (text.find_first_of(".eE") == std::string_view::npos) return Coefficient(Rational(parse_integer(text)));

    std::string_view body = text;
    if (body.front() == '+') body.remove_prefix(1);
    double v = 0.0;
    auto [ptr, ec] = std::from_chars(body.data(), body.data() + body.size(), v);
    if (ec != std::errc() || ptr != body.data() + body.size() || !std::isfinite(v))
        throw std::invalid_argument("not a number: '" + std::string(text) + "'");
    return Coefficient(v);
}

const Rational& Coefficient::exact() const {
    if (!is_exact()) throw std::logic_error("coefficient is not exact");
    return std::get<Rational>(value_);
}

double Coefficient::to_double() const {
    if (is_exact()) return std::get<Rational>(value_).convert_to<double>();
    return std::get<double>(value_);
}

int Coefficient::sign() const {
    if (is_exact()) return std::get<Rational>(value_).sign();
    double v = std::get<double>(value_);
    return (v > 0) - (v < 0);
}

std::string Coefficient::to_string() const {
    if (is_exact()) {
        const auto& r = std::get<Rational>(value_);
        auto num = boost::multiprecision::numerator(r);
        auto den = boost::multiprecision::denominator(r);
        if (den == 1) return num.str();
        return num.str() + "/" + den.str();
    }
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, std::get<double>(value_));
    std::string s(buf, ptr);
    if (s.find_first_of(".e") == std::string::npos) s += ".0";
    return s;
}

Coefficient Coefficient::operator-() const {
    if (is_exact()) return Coefficient(Rational(-std::get<Rational>(value_)));
    return Coefficient(-std::get<double>(value_));
}

Coefficient& Coefficient::operator+=(const Coefficient& rhs) {
    if (is_exact() && rhs.is_exact())
        std::get<Rational>(value_) += std::get<Rational>(rhs.value_);
    else
        value_ = to_double() + rhs.to_double();
    return *this;
}

Coefficient& Coefficient::operator-=(const Coefficient& rhs) {
    if (is_exact() && rhs.is_exact())
        std::get<Rational>(value_) -= std::get<Rational>(rhs.value_);
    else
        value_ = to_double() - rhs.to_double();
    return *this;
}

Coefficient& Coefficient::operator*=(const Coefficient& rhs) {
    if (is_exact() && rhs.is_exact())
        std::get<Rational>(value_) *= std::get<Rational>(rhs.value_);
    else
        value_ = to_double() * rhs.to_double();
    return *this;
}

Coefficient& Coefficient::operator/=(const Coefficient& rhs) {
    if (rhs.is_zero()) throw std::domain_error("division by zero coefficient");
    if (is_exact() && rhs.is_exact())
        std::get<Rational>(value_) /= std::get<Rational>(rhs.value_);
    else
        value_ = to_double() / rhs.to_double();
    return *this;
}

bool operator==(const Coefficient& lhs, const Coefficient& rhs) { return lhs.value_ == rhs.value_; }

std::partial_ordering operator<=>(const Coefficient& lhs, const Coefficient& rhs) {
    if (lhs.is_exact() && rhs.is_exact()) {
        const auto& a = std::get<Rational>(lhs.value_);
        const auto& b = std::get<Rational>(rhs.value_);
        if (a < b) return std::partial_ordering::less;
        if (b < a) return std::partial_ordering::greater;
        return std::partial_ordering::equivalent;
    }
    return lhs.to_double() <=> rhs.to_double();
}

Coefficient abs(const Coefficient& c) { return c.sign() < 0 ? -c : c; }

Rational exact_value_of(double v) {
    if (!std::isfinite(v)) throw std::domain_error("non-finite value has no rational form");
    return Rational(v);
}

namespace {

std::string format_fixed_exact(const Rational& value, int decimals) {
    BigInt scale = boost::multiprecision::pow(BigInt(10), decimals);
    Rational scaled = boost::multiprecision::abs(value) * scale;
    BigInt num = boost::multiprecision::numerator(scaled);
    BigInt den = boost::multiprecision::denominator(scaled);
    BigInt rounded = (2 * num + den) / (2 * den);
    bool negative = value.sign() < 0 && rounded != 0;

    std::string digits = rounded.str();
    if (decimals > 0) {
        if (digits.size() <= static_cast<std::size_t>(decimals))
            digits.insert(0, static_cast<std::size_t>(decimals) + 1 - digits.size(), '0');
        digits.insert(digits.size() - static_cast<std::size_t>(decimals), ".");
    }
    return negative ? "-" + digits : digits;
}

} // namespace

std::string format_fixed(const Coefficient& c, int decimals) {
    if (c.is_exact()) return format_fixed_exact(c.exact(), decimals);
    return format_fixed(c.to_double(), decimals);
}

std::string format_fixed(double v, int decimals) {
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    return format_fixed_exact(exact_value_of(v), decimals);
}

} // namespace splitting
