#include "splitting/harness.hpp"

#include <Eigen/Eigenvalues>
#include <unsupported/Eigen/MatrixFunctions>

#include <algorithm>
#include <cmath>
#include <complex>
#include <map>
#include <stdexcept>
#include <utility>

namespace splitting {

namespace {

using cd = std::complex<double>;
constexpr cd I_unit{0.0, 1.0};

double step_time(const Method& m) { return time_advance(m).to_double(); }

// Factor cache for one application: (term, coefficient) -> exponential.
class FactorCache {
public:
    explicit FactorCache(const OperatorSet& ops) : ops_(ops) {}

    const Matrix& get(std::size_t n, double theta) {
        auto [it, inserted] = cache_.try_emplace({n, theta});
        if (inserted) it->second = ops_.term_exponential(n, theta);
        return it->second;
    }

private:
    const OperatorSet& ops_;
    std::map<std::pair<std::size_t, double>, Matrix> cache_;
};

ErrorSample make_sample(const OperatorSet& ops, const Matrix& u, double dt, long steps, double time) {
    const Matrix exact = exact_evolution(ops, time);
    ErrorSample s;
    s.dt = dt;
    s.steps = steps;
    s.time = time;
    if (ops.dim() == 2) s.pauli = pauli_error(u, exact);
    s.frobenius = frobenius_error(u, exact);
    return s;
}

Matrix matrix_power(const Matrix& base, long k) {
    Matrix result = Matrix::Identity(base.rows(), base.cols());
    Matrix b = base;
    while (k > 0) {
        if (k & 1) result = result * b;
        k >>= 1;
        if (k > 0) b = b * b;
    }
    return result;
}

ErrorSample fixed_steps_sample(const Method& m, const OperatorSet& ops, double dt, long steps) {
    const Matrix u = matrix_power(apply_method(m, ops, dt), steps);
    return make_sample(ops, u, dt, steps, static_cast<double>(steps) * step_time(m) * dt);
}

} // namespace

OperatorSet::OperatorSet(std::vector<Matrix> terms) : terms_(std::move(terms)) {
    if (terms_.empty()) throw std::invalid_argument("operator set: no terms");
    const Eigen::Index d = terms_.front().rows();
    if (d == 0) throw std::invalid_argument("operator set: empty matrix");
    sum_ = Matrix::Zero(d, d);
    for (const auto& h : terms_) {
        if (h.rows() != d || h.cols() != d) throw std::invalid_argument("operator set: terms must be square and of equal size");
        if ((h - h.adjoint()).norm() > 1e-12) throw std::invalid_argument("operator set: term is not Hermitian");
        sum_ += h;
        spectra_.push_back(diagonalise(h));
    }
    sum_spectrum_ = diagonalise(sum_);
}

OperatorSet::Spectrum OperatorSet::diagonalise(const Matrix& h) {
    Eigen::SelfAdjointEigenSolver<Matrix> solver(h);
    if (solver.info() != Eigen::Success) throw std::runtime_error("operator set: eigendecomposition failed");
    return {solver.eigenvalues(), solver.eigenvectors()};
}

Matrix OperatorSet::exponential(const Spectrum& s, double theta) {
    const Eigen::VectorXcd phases = (-I_unit * theta * s.values.cast<cd>()).array().exp();
    return s.vectors * phases.asDiagonal() * s.vectors.adjoint();
}

Matrix OperatorSet::term_exponential(std::size_t n, double theta) const { return exponential(spectra_.at(n), theta); }

Matrix OperatorSet::sum_exponential(double theta) const { return exponential(sum_spectrum_, theta); }

Matrix apply_method(const Method& m, const OperatorSet& ops, double dt) {
    FactorCache cache(ops);
    const std::size_t n = ops.size();
    Matrix u = Matrix::Identity(ops.dim(), ops.dim());
    for (const auto& unit : m.units()) {
        const double theta = unit.a.to_double() * dt;
        if (unit.alpha == 1) {
            for (std::size_t k = 0; k < n; ++k) u = u * cache.get(k, theta);
        } else {
            for (std::size_t k = n; k-- > 0;) u = u * cache.get(k, -theta);
        }
    }
    return u;
}

Matrix exact_evolution(const OperatorSet& ops, double t) { return ops.sum_exponential(t); }

Matrix exact_evolution_pade(const OperatorSet& ops, double t) {
    const Matrix generator = -I_unit * t * ops.sum();
    return generator.exp();
}

double pauli_error(const Matrix& approx, const Matrix& exact) {
    if (approx.rows() != 2 || approx.cols() != 2 || exact.rows() != 2 || exact.cols() != 2)
        throw std::invalid_argument("pauli_error: 2x2 matrices required");
    const Matrix diff = approx - exact;
    const OperatorSet pauli = build_pauli_set();
    double sq = 0.0;
    for (std::size_t k = 0; k < 3; ++k) sq += std::norm(0.5 * I_unit * (pauli.term(k) * diff).trace());
    return std::sqrt(sq);
}

double frobenius_error(const Matrix& approx, const Matrix& exact) { return (approx - exact).norm(); }

double unitarity_defect(const Matrix& u) {
    return (u.adjoint() * u - Matrix::Identity(u.rows(), u.cols())).norm();
}

std::vector<ErrorSample> fixed_steps_sweep(const Method& m, const OperatorSet& ops, std::span<const double> dts, long steps) {
    std::vector<ErrorSample> out(dts.size());
    const auto count = static_cast<long>(dts.size());
#pragma omp parallel for schedule(dynamic)
    for (long i = 0; i < count; ++i) out[static_cast<std::size_t>(i)] = fixed_steps_sample(m, ops, dts[static_cast<std::size_t>(i)], steps);
    return out;
}

std::vector<ErrorSample> fixed_steps_sweep_serial(const Method& m, const OperatorSet& ops, std::span<const double> dts,
                                                  long steps) {
    std::vector<ErrorSample> out;
    out.reserve(dts.size());
    for (double dt : dts) out.push_back(fixed_steps_sample(m, ops, dt, steps));
    return out;
}

std::vector<ErrorSample> trajectory(const Method& m, const OperatorSet& ops, double dt, long max_steps) {
    if (max_steps < 1) throw std::invalid_argument("trajectory: max_steps must be positive");
    const Matrix step = apply_method(m, ops, dt);
    const double per_step = step_time(m) * dt;
    // Powers are serial by nature; the exact references are independent.
    std::vector<Matrix> powers(static_cast<std::size_t>(max_steps));
    Matrix u = step;
    for (long k = 0; k < max_steps; ++k) {
        if (k > 0) u = u * step;
        powers[static_cast<std::size_t>(k)] = u;
    }
    std::vector<ErrorSample> out(static_cast<std::size_t>(max_steps));
#pragma omp parallel for schedule(static)
    for (long k = 0; k < max_steps; ++k) {
        const auto idx = static_cast<std::size_t>(k);
        out[idx] = make_sample(ops, powers[idx], dt, k + 1, static_cast<double>(k + 1) * per_step);
    }
    return out;
}

std::vector<ErrorSample> fixed_time_sweep(const Method& m, const OperatorSet& ops, std::span<const double> dts,
                                          double total_time) {
    const double d = step_time(m);
    if (d <= 0.0) throw std::invalid_argument("fixed_time_sweep: method does not advance time");
    std::vector<ErrorSample> out(dts.size());
    const auto count = static_cast<long>(dts.size());
#pragma omp parallel for schedule(dynamic)
    for (long i = 0; i < count; ++i) {
        const double dt = dts[static_cast<std::size_t>(i)];
        const long steps = std::max(1L, std::lround(total_time / (d * dt)));
        out[static_cast<std::size_t>(i)] = fixed_steps_sample(m, ops, dt, steps);
    }
    return out;
}

LineFit fit_loglog(std::span<const double> x, std::span<const double> y) {
    if (x.size() != y.size() || x.size() < 2) throw std::invalid_argument("fit_loglog: need at least two paired points");
    const auto n = static_cast<Eigen::Index>(x.size());
    Eigen::MatrixXd a(n, 2);
    Eigen::VectorXd b(n);
    for (Eigen::Index i = 0; i < n; ++i) {
        const auto k = static_cast<std::size_t>(i);
        if (!(x[k] > 0.0) || !(y[k] > 0.0)) throw std::invalid_argument("fit_loglog: values must be positive");
        a(i, 0) = std::log(x[k]);
        a(i, 1) = 1.0;
        b(i) = std::log(y[k]);
    }
    const Eigen::Vector2d coef = a.colPivHouseholderQr().solve(b);
    return {coef(0), coef(1)};
}

LineFit envelope_fit(std::span<const ErrorSample> trajectory, double t_lo, double t_hi, int samples) {
    if (trajectory.empty()) throw std::invalid_argument("envelope_fit: empty trajectory");
    if (!(t_lo > 0.0) || !(t_hi > t_lo) || samples < 2) throw std::invalid_argument("envelope_fit: bad window");
    const double per_step = trajectory.front().time / static_cast<double>(trajectory.front().steps);

    std::vector<double> envelope(trajectory.size());
    double running = 0.0;
    for (std::size_t k = 0; k < trajectory.size(); ++k) {
        running = std::max(running, trajectory[k].pauli.value_or(trajectory[k].frobenius));
        envelope[k] = running;
    }

    // Log-spaced sample times snapped to whole steps; duplicates collapse.
    std::vector<std::size_t> picks;
    for (int j = 0; j < samples; ++j) {
        const double t = t_lo * std::pow(t_hi / t_lo, static_cast<double>(j) / (samples - 1));
        const long step = std::lround(t / per_step);
        if (step < 1 || static_cast<std::size_t>(step) > trajectory.size())
            throw std::invalid_argument("envelope_fit: window exceeds trajectory");
        picks.push_back(static_cast<std::size_t>(step - 1));
    }
    picks.erase(std::unique(picks.begin(), picks.end()), picks.end());

    std::vector<double> ts, es;
    for (std::size_t k : picks) {
        ts.push_back(trajectory[k].time);
        es.push_back(envelope[k]);
    }
    return fit_loglog(ts, es);
}

OperatorSet build_pauli_set() {
    Matrix x(2, 2), y(2, 2), z(2, 2);
    x << 0, 1, 1, 0;
    y << 0, -I_unit, I_unit, 0;
    z << 1, 0, 0, -1;
    return OperatorSet({x, y, z});
}

namespace {

// sigma_i . sigma_j = 2 SWAP_ij - 1 on the 2^n-dimensional space.
Matrix exchange(int num_spins, int i, int j) {
    const Eigen::Index dim = Eigen::Index{1} << num_spins;
    Matrix h = -Matrix::Identity(dim, dim);
    for (Eigen::Index s = 0; s < dim; ++s) {
        const Eigen::Index bi = (s >> i) & 1, bj = (s >> j) & 1;
        const Eigen::Index swapped = bi == bj ? s : s ^ ((Eigen::Index{1} << i) | (Eigen::Index{1} << j));
        h(swapped, s) += 2.0;
    }
    return h;
}

} // namespace

OperatorSet build_ising_nnn(int num_spins) {
    if (num_spins < 4 || num_spins % 4 != 0 || num_spins > 8)
        throw std::invalid_argument("build_ising_nnn: num_spins must be 4 or 8");
    const Eigen::Index dim = Eigen::Index{1} << num_spins;
    std::vector<std::vector<Matrix>> groups(4);
    for (int i = 0; i < num_spins; ++i) {
        groups[static_cast<std::size_t>(i % 2)].push_back(exchange(num_spins, i, (i + 1) % num_spins));
        groups[static_cast<std::size_t>(2 + (i % 4) / 2)].push_back(exchange(num_spins, i, (i + 2) % num_spins));
    }
    std::vector<Matrix> terms;
    for (const auto& bonds : groups) {
        for (std::size_t p = 0; p < bonds.size(); ++p)
            for (std::size_t q = p + 1; q < bonds.size(); ++q)
                if ((bonds[p] * bonds[q] - bonds[q] * bonds[p]).norm() > 1e-10)
                    throw std::logic_error("build_ising_nnn: bonds within a group do not commute");
        Matrix h = Matrix::Zero(dim, dim);
        for (const auto& b : bonds) h += b;
        terms.push_back(std::move(h));
    }
    return OperatorSet(std::move(terms));
}

} // namespace splitting
