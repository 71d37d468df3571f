#include "splitting/irrational.hpp"

#include "splitting/catalog.hpp"
#include "splitting/notation.hpp"
#include "splitting/sigma.hpp"

#include <Eigen/Dense>
#include <unsupported/Eigen/AutoDiff>
#include <unsupported/Eigen/Polynomials>

#include <algorithm>
#include <cmath>
#include <string>

namespace splitting {

namespace {

constexpr std::array<int, 2> poly1{1, 1};                           // x + 1
constexpr std::array<int, 6> poly2{-3, -3, 0, 3, 3, 1};             // x^5 + 3x^4 + 3x^3 - 3x - 3
constexpr std::array<int, 6> poly3{3, 0, 3, 3, 0, 2};               // 2x^5 + 3x^3 + 3x^2 + 3
constexpr std::array<int, 10> poly4{1, 0, 3, 0, 3, 3, 1, 3, 0, 1};  // x^9 + 3x^7 + x^6 + 3x^5 + 3x^4 + 3x^2 + 1

void check_variant(int variant) {
    if (variant < 1 || variant > 4) throw std::invalid_argument("symmetric fourth-order variant must be 1..4");
}

double published_first_coefficient(int variant) {
    const std::string id = "R4_" + std::to_string(variant);
    return label_of(catalog_method(id)[0]).to_double();
}

using Derivatives = Eigen::Matrix<long double, Eigen::Dynamic, 1>;
using Dual = Eigen::AutoDiffScalar<Derivatives>;

template <class T>
std::vector<T> conditions(std::span<const int> alphas, std::span<const T> a, int target_order) {
    std::vector<BasicUnit<T>> units;
    units.reserve(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) units.push_back({alphas[i], a[i]});
    const auto s = sigma_vector<T>(std::span<const BasicUnit<T>>(units));
    std::vector<T> f;
    f.push_back(s[Label::S1] - T(1));
    for (Label x : all_labels) {
        const int o = label_order(x);
        if (o >= 2 && o <= target_order) f.push_back(s[x]);
    }
    return f;
}

long double norm(const std::vector<long double>& f) {
    long double sum = 0;
    for (auto v : f) sum += v * v;
    return std::sqrt(sum);
}

} // namespace

std::span<const int> r4_polynomial(int variant) {
    check_variant(variant);
    switch (variant) {
    case 1: return poly1;
    case 2: return poly2;
    case 3: return poly3;
    default: return poly4;
    }
}

std::array<int, 2> r4_signs(int variant) {
    check_variant(variant);
    constexpr std::array<std::array<int, 2>, 4> signs{{{-1, 1}, {-1, -1}, {1, -1}, {1, 1}}};
    return signs[static_cast<std::size_t>(variant - 1)];
}

std::vector<double> real_roots(std::span<const double> coefficients) {
    std::size_t degree = coefficients.size();
    while (degree > 0 && coefficients[degree - 1] == 0.0) --degree;
    if (degree < 2) return {};
    Eigen::VectorXd c(static_cast<Eigen::Index>(degree));
    for (std::size_t i = 0; i < degree; ++i) c[static_cast<Eigen::Index>(i)] = coefficients[i];

    Eigen::PolynomialSolver<double, Eigen::Dynamic> solver(c);
    std::vector<double> roots;
    solver.realRoots(roots, 1e-8);
    std::sort(roots.begin(), roots.end());
    return roots;
}

double r4_root(int variant) {
    const auto poly = r4_polynomial(variant);
    const auto [alpha2, alpha3] = r4_signs(variant);
    std::vector<double> c(poly.begin(), poly.end());
    const double published = published_first_coefficient(variant);

    for (double x : real_roots(c)) {
        const double y = -alpha3 * std::cbrt(alpha2 * x * x * x + 1.0);
        const double a1 = 1.0 / (2.0 * (alpha2 * x + alpha3 * y + 1.0));
        if (std::abs(a1 - published) < 1e-6) return x;
    }
    throw std::runtime_error("no real root reproduces the published coefficients for variant " + std::to_string(variant));
}

Method r3_shortest() { return to_method(r3_shortest_units<long double>()); }

Method r4_symmetric(int variant) { return to_method(r4_symmetric_units<long double>(variant)); }

std::string_view to_string(NewtonStatus s) {
    switch (s) {
    case NewtonStatus::Converged: return "converged";
    case NewtonStatus::NoConvergence: return "no-convergence";
    default: return "singular-jacobian";
    }
}

std::vector<long double> order_conditions(std::span<const int> alphas, std::span<const long double> a, int target_order) {
    if (alphas.size() != a.size()) throw std::invalid_argument("sign pattern and coefficient counts differ");
    return conditions<long double>(alphas, a, target_order);
}

NewtonResult newton_solve(std::span<const int> alphas, std::span<const double> initial, int target_order,
                          const NewtonOptions& options) {
    if (alphas.size() != initial.size() || alphas.empty())
        throw std::invalid_argument("newton_solve: sign pattern and initial guess must have equal, nonzero length");
    if (target_order < 1 || target_order > 5) throw std::invalid_argument("newton_solve: target order must be 1..5");
    for (int s : alphas)
        if (s != 1 && s != -1) throw std::invalid_argument("newton_solve: signs must be +1 or -1");

    const auto n = static_cast<Eigen::Index>(initial.size());
    std::vector<long double> x(initial.begin(), initial.end());

    NewtonResult result;
    auto f = order_conditions(alphas, x, target_order);
    long double fnorm = norm(f);

    for (int iter = 0; iter < options.max_iterations && fnorm >= options.tolerance; ++iter) {
        result.iterations = iter + 1;

        std::vector<Dual> ax;
        for (Eigen::Index i = 0; i < n; ++i) ax.emplace_back(x[static_cast<std::size_t>(i)], n, i);
        const auto fd = conditions<Dual>(alphas, std::span<const Dual>(ax), target_order);
        const auto m = static_cast<Eigen::Index>(fd.size());
        Eigen::Matrix<long double, Eigen::Dynamic, Eigen::Dynamic> jac(m, n);
        Eigen::Matrix<long double, Eigen::Dynamic, 1> rhs(m);
        for (Eigen::Index r = 0; r < m; ++r) {
            const auto& d = fd[static_cast<std::size_t>(r)];
            rhs[r] = -d.value();
            for (Eigen::Index c = 0; c < n; ++c) jac(r, c) = d.derivatives().size() ? d.derivatives()[c] : 0.0L;
        }

        Eigen::CompleteOrthogonalDecomposition<decltype(jac)> cod(jac);
        if (cod.rank() == 0) {
            result.status = NewtonStatus::SingularJacobian;
            break;
        }
        const Eigen::Matrix<long double, Eigen::Dynamic, 1> step = cod.solve(rhs);

        long double lambda = 1;
        bool improved = false;
        for (int h = 0; h <= options.max_halvings; ++h, lambda /= 2) {
            std::vector<long double> trial(x);
            for (Eigen::Index i = 0; i < n; ++i) trial[static_cast<std::size_t>(i)] += lambda * step[i];
            if (std::any_of(trial.begin(), trial.end(), [](long double v) { return v == 0 || !std::isfinite(v); }))
                continue;
            auto ft = order_conditions(alphas, trial, target_order);
            long double tn = norm(ft);
            if (tn < fnorm) {
                x = std::move(trial);
                f = std::move(ft);
                fnorm = tn;
                improved = true;
                break;
            }
        }
        if (!improved) {
            if (cod.rank() < std::min(m, n)) result.status = NewtonStatus::SingularJacobian;
            break;
        }
    }

    result.coefficients = x;
    result.residual = static_cast<double>(fnorm);
    if (fnorm < options.tolerance) {
        result.status = NewtonStatus::Converged;
        std::vector<Unit> units;
        for (std::size_t i = 0; i < x.size(); ++i) units.push_back(make_unit(alphas[i], Coefficient(static_cast<double>(x[i]))));
        result.method = Method(std::move(units));
    }
    return result;
}

} // namespace splitting
