#pragma once

#include "splitting/method.hpp"

#include <Eigen/Dense>

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace splitting {

using Matrix = Eigen::MatrixXcd;

/// N Hermitian terms H_1..H_N of equal dimension. Each term (and their sum)
/// is diagonalised once so exponentials cost two products.
class OperatorSet {
public:
    /// Throws std::invalid_argument for an empty set, mismatched shapes or a
    /// term that is not Hermitian to 1e-12.
    explicit OperatorSet(std::vector<Matrix> terms);

    Eigen::Index dim() const { return terms_.front().rows(); }
    std::size_t size() const { return terms_.size(); }
    const Matrix& term(std::size_t n) const { return terms_[n]; }
    const Matrix& sum() const { return sum_; }

    /// exp(-i theta H_n).
    Matrix term_exponential(std::size_t n, double theta) const;
    /// exp(-i theta sum_n H_n).
    Matrix sum_exponential(double theta) const;

private:
    struct Spectrum {
        Eigen::VectorXd values;
        Matrix vectors;
    };
    static Spectrum diagonalise(const Matrix& h);
    static Matrix exponential(const Spectrum& s, double theta);

    std::vector<Matrix> terms_;
    Matrix sum_;
    std::vector<Spectrum> spectra_;
    Spectrum sum_spectrum_;
};

/// One application of the method with step dt: units multiply left to right
/// as written; (+1, a) is e^{-i a H_1 dt} ... e^{-i a H_N dt} and (-1, a) is
/// e^{+i a H_N dt} ... e^{+i a H_1 dt}.
Matrix apply_method(const Method& m, const OperatorSet& ops, double dt);

/// exp(-i t sum H) from the eigendecomposition of the sum.
Matrix exact_evolution(const OperatorSet& ops, double t);
/// Same target through scaling-and-squaring Pade; an independent check.
Matrix exact_evolution_pade(const OperatorSet& ops, double t);

/// Euclidean distance between the Pauli components c_k(U) = (i/2) tr(s_k U).
/// Only defined for 2x2 matrices.
double pauli_error(const Matrix& approx, const Matrix& exact);
double frobenius_error(const Matrix& approx, const Matrix& exact);
double unitarity_defect(const Matrix& u); // ||U^dagger U - 1||_F

struct ErrorSample {
    double dt = 0.0;
    long steps = 0;
    double time = 0.0; // steps * D * dt
    std::optional<double> pauli; // 2x2 only
    double frobenius = 0.0;
};

/// Errors after `steps` applications for every dt.
std::vector<ErrorSample> fixed_steps_sweep(const Method& m, const OperatorSet& ops, std::span<const double> dts, long steps);
std::vector<ErrorSample> fixed_steps_sweep_serial(const Method& m, const OperatorSet& ops, std::span<const double> dts,
                                                  long steps);

/// Errors after each of 1..max_steps applications at fixed dt.
std::vector<ErrorSample> trajectory(const Method& m, const OperatorSet& ops, double dt, long max_steps);

/// Errors for steps reaching (approximately) a fixed total time, per dt.
std::vector<ErrorSample> fixed_time_sweep(const Method& m, const OperatorSet& ops, std::span<const double> dts,
                                          double total_time);

struct LineFit {
    double slope = 0.0;
    double intercept = 0.0;
};

/// Least-squares line through (log x, log y).
LineFit fit_loglog(std::span<const double> x, std::span<const double> y);

/// Slope of the running maximum of the error against time, sampled at
/// `samples` log-spaced times in [t_lo, t_hi]. Uses the Pauli error when
/// present, else Frobenius.
LineFit envelope_fit(std::span<const ErrorSample> trajectory, double t_lo, double t_hi, int samples = 60);

/// {sigma_x, sigma_y, sigma_z}.
OperatorSet build_pauli_set();

/// Periodic Heisenberg chain with nearest and next-nearest couplings,
/// split into four internally commuting groups: even / odd nearest bonds
/// and next-nearest bonds starting at i mod 4 in {0, 1} / {2, 3}.
/// num_spins must be a multiple of 4 and at most 8 (dimension 2^num_spins).
OperatorSet build_ising_nnn(int num_spins);

} // namespace splitting
