#pragma once

// Independent reference computations used by the unit and acceptance tests.
// Nothing here calls the code paths it is meant to check: the matrix-log
// oracle builds the product and its logarithm directly, and the brute-force
// enumerator walks every unit sequence without the staged pruning.

#include "splitting/method.hpp"
#include "splitting/notation.hpp"
#include "splitting/residual.hpp"
#include "splitting/sigma.hpp"

#include <Eigen/Dense>
#include <unsupported/Eigen/MatrixFunctions>

#include <cmath>
#include <complex>
#include <random>
#include <set>
#include <string>
#include <vector>

namespace oracle {

using CMatrix = Eigen::MatrixXcd;

inline CMatrix random_anti_hermitian(std::mt19937_64& rng, int n) {
    std::normal_distribution<double> g;
    CMatrix m(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m(i, j) = {g(rng), g(rng)};
    return (m - m.adjoint()) / 2.0;
}

// [A_{w0}, [A_{w1}, ... [A_{w(k-2)}, A_{w(k-1)}]]] for a word spelled in '1'/'2'.
inline CMatrix nested_commutator(std::string_view word, const CMatrix& a1, const CMatrix& a2) {
    auto pick = [&](char c) -> const CMatrix& { return c == '1' ? a1 : a2; };
    CMatrix m = pick(word.back());
    for (std::size_t k = word.size() - 1; k-- > 0;) {
        const CMatrix& left = pick(word[k]);
        m = left * m - m * left;
    }
    return m;
}

// Product of units written left to right; unit (alpha, a) is
// (e^{a h A1} e^{a h A2})^alpha.
inline CMatrix product(const std::vector<splitting::BasicUnit<double>>& units, const CMatrix& a1, const CMatrix& a2,
                       double h) {
    CMatrix u = CMatrix::Identity(a1.rows(), a1.cols());
    for (const auto& unit : units) {
        const CMatrix e1 = (unit.a * h * a1).exp();
        const CMatrix e2 = (unit.a * h * a2).exp();
        const CMatrix block = e1 * e2;
        u = u * (unit.alpha == 1 ? block : CMatrix(block.inverse()));
    }
    return u;
}

// sum_X sigma^X B^X with each B^X assembled from the expansion table.
inline CMatrix bch_prediction(const splitting::SigmaVector<double>& s, const CMatrix& a1, const CMatrix& a2) {
    CMatrix out = CMatrix::Zero(a1.rows(), a1.cols());
    for (const auto& e : splitting::b2_table())
        out += s[e.label] * (static_cast<double>(e.num) / e.den) *
               nested_commutator(splitting::word_name(e.word), a1, a2);
    return out;
}

// || log(U(h)) - prediction(h) ||_F for the method with coefficients scaled by h.
inline double log_residual(const std::vector<splitting::BasicUnit<double>>& units, const CMatrix& a1,
                           const CMatrix& a2, double h) {
    std::vector<splitting::BasicUnit<double>> scaled;
    for (const auto& u : units) scaled.push_back({u.alpha, u.a * h});
    const CMatrix log_u = product(units, a1, a2, h).log();
    return (log_u - bch_prediction(splitting::sigma_vector<double>(scaled), a1, a2)).norm();
}

inline double slope(const std::vector<double>& x, const std::vector<double>& y) {
    const double n = static_cast<double>(x.size());
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t k = 0; k < x.size(); ++k) {
        const double lx = std::log(x[k]), ly = std::log(y[k]);
        sx += lx;
        sy += ly;
        sxx += lx * lx;
        sxy += lx * ly;
    }
    return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

inline std::vector<splitting::BasicUnit<double>> to_double_units(const splitting::Method& m) {
    std::vector<splitting::BasicUnit<double>> out;
    for (const auto& u : m.units()) out.push_back({u.alpha, u.a.to_double()});
    return out;
}

// Every sequence of exactly `units` labels in [-a_max, a_max] \ {0}, each
// either plain or transposed, whose exact order against `target` reaches
// `order` (commutator targets need sigma^2 > 0). Sum-target results are reduced to transpose-canonical notation.
inline std::set<std::string> brute_force(int order, int units, int a_max, splitting::Target target) {
    std::vector<std::pair<int, bool>> choices;
    for (int c = -a_max; c <= a_max; ++c)
        if (c != 0)
            for (bool t : {false, true}) choices.push_back({c, t});

    std::set<std::string> found;
    std::vector<std::size_t> idx(static_cast<std::size_t>(units), 0);
    for (;;) {
        std::vector<splitting::Unit> seq;
        for (std::size_t k : idx)
            seq.push_back(splitting::unit_from_label(choices[k].first, choices[k].second));
        const splitting::Method m(seq, target);
        const auto r = splitting::order_of(m);
        if (r.achieved_order >= order && !r.reversed_direction) {
            const splitting::Method shown =
                target == splitting::Target::Sum ? splitting::transpose_canonical(m) : m;
            found.insert(splitting::format_method(shown));
        }
        std::size_t pos = 0;
        while (pos < idx.size() && ++idx[pos] == choices.size()) idx[pos++] = 0;
        if (pos == idx.size()) break;
    }
    return found;
}

// Integer and divisible by k.
inline bool divisible(const splitting::Rational& r, int k) {
    return boost::multiprecision::denominator(r) == 1 && boost::multiprecision::numerator(r) % k == 0;
}

} // namespace oracle
