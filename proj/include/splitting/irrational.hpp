#pragma once

#include "splitting/method.hpp"

#include <boost/multiprecision/cpp_dec_float.hpp>

#include <array>
#include <cmath>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

namespace splitting {

namespace detail {

template <class Real>
Real real_sqrt(const Real& v) {
    using std::sqrt;
    using boost::multiprecision::sqrt;
    return sqrt(v);
}

/// Real cube root, refined by Newton in Real after a double-precision start.
template <class Real>
Real real_cbrt(const Real& v) {
    if (v == Real(0)) return v;
    Real y = static_cast<Real>(std::cbrt(static_cast<double>(v)));
    for (int i = 0; i < 4; ++i) y -= (y * y * y - v) / (Real(3) * y * y);
    return y;
}

} // namespace detail

/// Shortest third-order method: four units, alpha = (+, -, -, +), scaled so
/// sigma^1 = 1. Closed form evaluated in Real.
template <class Real = long double>
std::vector<BasicUnit<Real>> r3_shortest_units() {
    const Real thirteen = detail::real_sqrt(Real(13));
    const Real a1 = Real(1);
    const Real a2 = -(Real(5) - thirteen + Real(2) * detail::real_sqrt(Real(5) + Real(2) * thirteen)) / Real(6);
    const Real a3 = Real(1) / (Real(1) + a2);
    const Real a4 = -a2 * (Real(1) + a2) / (Real(3) + Real(2) * a2);
    const std::array<int, 4> alpha{1, -1, -1, 1};
    const std::array<Real, 4> a{a1, a2, a3, a4};

    Real d = Real(0);
    for (std::size_t i = 0; i < 4; ++i) d += Real(alpha[i]) * a[i];
    std::vector<BasicUnit<Real>> units;
    for (std::size_t i = 0; i < 4; ++i) units.push_back({alpha[i], Real(a[i] / d)});
    return units;
}

/// Monic-or-not polynomial in x, coefficients from the constant term up,
/// whose real root fixes the ratio a_2 / a_1 for a symmetric variant.
std::span<const int> r4_polynomial(int variant);

/// alpha_2 and alpha_3 of the three-unit head (alpha_1 = +1).
std::array<int, 2> r4_signs(int variant);

/// Real roots of a polynomial given low-to-high coefficients, ascending.
std::vector<double> real_roots(std::span<const double> coefficients);

/// The root of r4_polynomial(variant) that reproduces the published first
/// coefficient. Throws std::runtime_error if no real root matches.
double r4_root(int variant);

template <class Real>
Real evaluate_polynomial(std::span<const int> coefficients, const Real& x) {
    Real v = Real(0);
    for (auto it = coefficients.rbegin(); it != coefficients.rend(); ++it) v = v * x + Real(*it);
    return v;
}

/// Six-unit symmetric fourth-order method h * transpose(h) in Real. The
/// root is polished by Newton on the polynomial in Real.
template <class Real = long double>
std::vector<BasicUnit<Real>> r4_symmetric_units(int variant) {
    const auto coeffs = r4_polynomial(variant);
    const auto [alpha2, alpha3] = r4_signs(variant);

    Real x = static_cast<Real>(r4_root(variant));
    std::vector<int> deriv;
    for (std::size_t k = 1; k < coeffs.size(); ++k) deriv.push_back(static_cast<int>(k) * coeffs[k]);
    for (int i = 0; i < 8; ++i) {
        Real dp = evaluate_polynomial<Real>(deriv, x);
        if (dp == Real(0)) break;
        x -= evaluate_polynomial<Real>(coeffs, x) / dp;
    }

    const Real y = -Real(alpha3) * detail::real_cbrt<Real>(Real(alpha2) * x * x * x + Real(1));
    const Real a1 = Real(1) / (Real(2) * (Real(alpha2) * x + Real(alpha3) * y + Real(1)));
    const std::array<Real, 3> head{a1, Real(x * a1), Real(y * a1)};
    const std::array<int, 3> alpha{1, alpha2, alpha3};

    std::vector<BasicUnit<Real>> units;
    for (std::size_t i = 0; i < 3; ++i) units.push_back({alpha[i], head[i]});
    for (std::size_t i = 3; i-- > 0;) units.push_back({-alpha[i], Real(-head[i])});
    return units;
}

/// Rounds Real coefficients to double and wraps them as a Method.
template <class Real>
Method to_method(const std::vector<BasicUnit<Real>>& units, Target target = Target::Sum) {
    std::vector<Unit> out;
    for (const auto& u : units) out.push_back(make_unit(u.alpha, Coefficient(static_cast<double>(u.a))));
    return Method(std::move(out), target);
}

Method r3_shortest();
Method r4_symmetric(int variant);

enum class NewtonStatus { Converged, NoConvergence, SingularJacobian };
std::string_view to_string(NewtonStatus s);

struct NewtonOptions {
    int max_iterations = 200;
    int max_halvings = 60;
    double tolerance = 1e-13;
};

struct NewtonResult {
    NewtonStatus status = NewtonStatus::NoConvergence;
    std::vector<long double> coefficients;
    double residual = 0.0;
    int iterations = 0;
    std::optional<Method> method; // set on convergence
};

/// Damped Gauss-Newton on sigma^1 = 1 and sigma^X = 0 for every label of
/// order 2..target_order, unknowns a_i with fixed alpha signs. Over- or
/// under-determined systems take least-squares / minimum-norm steps.
NewtonResult newton_solve(std::span<const int> alphas, std::span<const double> initial, int target_order,
                          const NewtonOptions& options = {});

/// Residual vector of the system solved by newton_solve.
std::vector<long double> order_conditions(std::span<const int> alphas, std::span<const long double> a, int target_order);

} // namespace splitting
