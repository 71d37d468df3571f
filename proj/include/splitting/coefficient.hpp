#pragma once

#include <boost/multiprecision/cpp_dec_float.hpp>
#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <string>
#include <string_view>
#include <variant>

namespace splitting {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

// 50 significant decimal digits; used for the optional extended-precision
// evaluation of the irrational methods.
using HighPrecision = boost::multiprecision::cpp_dec_float_50;

/// A unit coefficient: either an exact rational or a binary double.
///
/// Arithmetic between two exact values stays exact; any operation that
/// touches a double produces a double. This lets one templated sigma/rho
/// implementation serve both the integer methods (where conditions must be
/// literally zero) and the irrational ones.
class Coefficient {
public:
    Coefficient() : value_(Rational(0)) {}
    Coefficient(int v) : value_(Rational(v)) {}
    Coefficient(long v) : value_(Rational(v)) {}
    Coefficient(long long v) : value_(Rational(v)) {}
    Coefficient(Rational v) : value_(std::move(v)) {}
    Coefficient(double v) : value_(v) {}

    /// Accepts "-3", "3/4", "0.4515", "1e-3". Integers and fractions are
    /// exact; anything with a decimal point or exponent becomes a double.
    static Coefficient parse(std::string_view text);

    bool is_exact() const { return std::holds_alternative<Rational>(value_); }
    const Rational& exact() const;
    double to_double() const;

    int sign() const;
    bool is_zero() const { return sign() == 0; }

    /// Canonical text: "p" or "p/q" when exact; shortest round-trip decimal
    /// (always containing '.' or 'e') otherwise.
    std::string to_string() const;

    Coefficient operator-() const;
    Coefficient& operator+=(const Coefficient& rhs);
    Coefficient& operator-=(const Coefficient& rhs);
    Coefficient& operator*=(const Coefficient& rhs);
    Coefficient& operator/=(const Coefficient& rhs);

    friend Coefficient operator+(Coefficient lhs, const Coefficient& rhs) { return lhs += rhs; }
    friend Coefficient operator-(Coefficient lhs, const Coefficient& rhs) { return lhs -= rhs; }
    friend Coefficient operator*(Coefficient lhs, const Coefficient& rhs) { return lhs *= rhs; }
    friend Coefficient operator/(Coefficient lhs, const Coefficient& rhs) { return lhs /= rhs; }

    // Identity: same representation and same value. 1 and 1.0 differ.
    friend bool operator==(const Coefficient& lhs, const Coefficient& rhs);

    // Numeric ordering across representations.
    friend std::partial_ordering operator<=>(const Coefficient& lhs, const Coefficient& rhs);

private:
    std::variant<Rational, double> value_;
};

Coefficient abs(const Coefficient& c);

/// Exact rational value of a double (every finite double is a dyadic rational).
Rational exact_value_of(double v);

/// Round half away from zero to `decimals` places and print with exactly that
/// many decimals. Exact coefficients are rounded exactly.
std::string format_fixed(const Coefficient& c, int decimals);
std::string format_fixed(double v, int decimals);

} // namespace splitting
