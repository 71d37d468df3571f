#include "splitting/catalog.hpp"
#include "splitting/harness.hpp"
#include "splitting/notation.hpp"

#include <gtest/gtest.h>

#include <complex>
#include <random>

using namespace splitting;

namespace {

Matrix random_hermitian(std::mt19937_64& rng, int n) {
    std::normal_distribution<double> g;
    Matrix m(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m(i, j) = {g(rng), g(rng)};
    return (m + m.adjoint()) / 2.0;
}

std::vector<double> pauli_errors(const std::vector<ErrorSample>& rows) {
    std::vector<double> out;
    for (const auto& r : rows) out.push_back(*r.pauli);
    return out;
}

} // namespace

TEST(Harness, OperatorSetValidation) {
    EXPECT_THROW(OperatorSet({}), std::invalid_argument);
    Matrix bad(2, 2);
    bad << 0, 1, 0, 0;
    EXPECT_THROW(OperatorSet({bad}), std::invalid_argument);
    EXPECT_THROW(OperatorSet({Matrix::Identity(2, 2), Matrix::Identity(3, 3)}), std::invalid_argument);
}

TEST(Harness, ExponentialsAreUnitaryAndAgreeWithPade) {
    std::mt19937_64 rng(51);
    const OperatorSet ops({random_hermitian(rng, 5), random_hermitian(rng, 5), random_hermitian(rng, 5)});
    for (double t : {0.1, 1.0, 3.7}) {
        const Matrix u = exact_evolution(ops, t);
        EXPECT_LT(unitarity_defect(u), 1e-12);
        EXPECT_LT((u - exact_evolution_pade(ops, t)).norm(), 1e-11);
    }
}

TEST(Harness, TransposeGivesAdjoint) {
    std::mt19937_64 rng(52);
    const OperatorSet ops({random_hermitian(rng, 4), random_hermitian(rng, 4)});
    for (const char* id : {"Z3_1", "Z4_2", "R3_1"}) {
        const Method m = catalog_method(id);
        const Matrix a = apply_method(m, ops, 0.3);
        const Matrix b = apply_method(transpose(m), ops, -0.3);
        // transpose(M) at -dt is the inverse of M at dt.
        EXPECT_LT((a * b - Matrix::Identity(4, 4)).norm(), 1e-12) << id;
        // Equivalently transpose(M) at dt is the adjoint of M at -dt.
        EXPECT_LT((apply_method(transpose(m), ops, 0.3) - apply_method(m, ops, -0.3).adjoint()).norm(), 1e-12) << id;
    }
}

TEST(Harness, SingleUnitOrdering) {
    const OperatorSet p = build_pauli_set();
    const Matrix plain = apply_method(parse_method("(1)"), p, 0.2);
    const Matrix expect = p.term_exponential(0, 0.2) * p.term_exponential(1, 0.2) * p.term_exponential(2, 0.2);
    EXPECT_LT((plain - expect).norm(), 1e-14);
    const Matrix inv = apply_method(parse_method("(-1)^T"), p, 0.2);
    EXPECT_LT((inv - expect.adjoint()).norm(), 1e-14);
}

TEST(Harness, PauliErrorMatchesComponents) {
    const OperatorSet p = build_pauli_set();
    const Matrix id = Matrix::Identity(2, 2);
    // Adding eps * sigma_z changes c_z by (i/2) tr(sigma_z eps sigma_z) = i eps.
    EXPECT_NEAR(pauli_error(id + 1e-3 * p.term(2), id), 1e-3, 1e-15);
    EXPECT_THROW(pauli_error(Matrix::Identity(4, 4), Matrix::Identity(4, 4)), std::invalid_argument);
}

TEST(Harness, LogLogFit) {
    const std::vector<double> x{1, 2, 4, 8};
    std::vector<double> y;
    for (double v : x) y.push_back(3.0 * v * v * v);
    const LineFit f = fit_loglog(x, y);
    EXPECT_NEAR(f.slope, 3.0, 1e-12);
    EXPECT_NEAR(f.intercept, std::log(3.0), 1e-12);
    EXPECT_THROW(fit_loglog(std::vector<double>{1}, std::vector<double>{1}), std::invalid_argument);
}

TEST(Harness, FixedStepSlopes) {
    const OperatorSet p = build_pauli_set();
    const std::vector<double> dts{0.02, 0.01, 0.005};
    const char* ids[] = {"Z1_1", "Z2_1", "Z3_1", "Z4_1"};
    for (int o = 1; o <= 4; ++o) {
        const auto rows = fixed_steps_sweep(catalog_method(ids[o - 1]), p, dts, 1);
        EXPECT_NEAR(fit_loglog(dts, pauli_errors(rows)).slope, o + 1, 0.1) << ids[o - 1];
    }
}

TEST(Harness, SerialAndParallelSweepsAgree) {
    const OperatorSet p = build_pauli_set();
    const std::vector<double> dts{0.05, 0.02, 0.01, 0.005};
    const auto a = fixed_steps_sweep(catalog_method("Z3_2"), p, dts, 10);
    const auto b = fixed_steps_sweep_serial(catalog_method("Z3_2"), p, dts, 10);
    for (std::size_t k = 0; k < a.size(); ++k) EXPECT_EQ(a[k].frobenius, b[k].frobenius);
}

TEST(Harness, FixedTimeSweepReachesTarget) {
    const OperatorSet p = build_pauli_set();
    const std::vector<double> dts{0.02, 0.01};
    const auto rows = fixed_time_sweep(catalog_method("Z3_1"), p, dts, 1.2);
    EXPECT_EQ(rows[0].steps, 10);
    EXPECT_EQ(rows[1].steps, 20);
    EXPECT_NEAR(rows[1].time, 1.2, 1e-12);
}

TEST(Harness, IsingGroupsCommuteInternally) {
    const OperatorSet ising = build_ising_nnn(4);
    EXPECT_EQ(ising.size(), 4u);
    EXPECT_EQ(ising.dim(), 16);
    EXPECT_THROW(build_ising_nnn(6), std::invalid_argument);
    // Heisenberg exchange conserves total S_z and is real symmetric.
    EXPECT_LT((ising.sum() - ising.sum().transpose()).norm(), 1e-12);
}
