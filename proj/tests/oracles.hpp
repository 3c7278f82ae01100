#ifndef DEIT_TESTS_ORACLES_HPP
#define DEIT_TESTS_ORACLES_HPP

// Brute-force reference computations kept independent of the library
// implementation paths they check.

#include <Eigen/Dense>
#include <array>
#include <cmath>
#include <complex>
#include <random>

#include "deit/bloch.hpp"
#include "deit/dressed.hpp"
#include "deit/noise.hpp"

namespace deit::testing {

// Eigenvalues of the invariant-subspace block of the circuit Hamiltonian on
// span{|n,e>, |n+1,g>}, sigma_z eigenvalues +-1. Returned ascending.
inline std::pair<double, double> subspace_eigenvalues(const SystemParams& p, int n) {
    Eigen::Matrix2d block;
    const double coupling = p.eta * std::sqrt(static_cast<double>(n) + 1.0);
    block << p.omega_q + n * p.omega_0, coupling, coupling, -p.omega_q + (n + 1) * p.omega_0;
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix2d> solver(block);
    return {solver.eigenvalues()(0), solver.eigenvalues()(1)};
}

// <dressed_{n+1}| sigma_+ |dressed_n> by explicit basis change on the
// four-dimensional space {|n,e>, |n+1,g>, |n+1,e>, |n+2,g>}. Order of the
// returned amplitudes: mu->mu, nu->nu, mu->nu, nu->mu.
inline std::array<double, 4> sigma_plus_brute_force(const SystemParams& p, int n) {
    const double tn = rotation_angle(p, n).theta_n;
    const double tn1 = rotation_angle(p, n + 1).theta_n;
    Eigen::Vector4d mu_n(std::cos(tn), -std::sin(tn), 0.0, 0.0);
    Eigen::Vector4d nu_n(std::sin(tn), std::cos(tn), 0.0, 0.0);
    Eigen::Vector4d mu_n1(0.0, 0.0, std::cos(tn1), -std::sin(tn1));
    Eigen::Vector4d nu_n1(0.0, 0.0, std::sin(tn1), std::cos(tn1));
    // sigma_+ = sum_m |m,e><m,g|; within the subspace only |n+1,g> -> |n+1,e>
    Eigen::Matrix4d sigma_plus = Eigen::Matrix4d::Zero();
    sigma_plus(2, 1) = 1.0;
    return {mu_n1.dot(sigma_plus * mu_n), nu_n1.dot(sigma_plus * nu_n),
            nu_n1.dot(sigma_plus * mu_n), mu_n1.dot(sigma_plus * nu_n)};
}

// Lab-frame -i[H, rho] - decay with dense 3x3 matrices, H from the Lambda
// Hamiltonian with raising couplings zeta_p(t) = -Omega_p e^{-i w_p t} c1 s0,
// zeta_c(t) = Omega_c e^{-i w_c t} c1 c0.
inline DensityState commutator_rhs(const DensityState& state, const ThreeLevelSystem& system,
                                   const DressedRates& rates, const DriveFields& drives,
                                   double t) {
    using C = std::complex<double>;
    const C i(0.0, 1.0);
    const double c1 = std::cos(system.theta1);
    const double s0 = std::sin(system.theta0);
    const double c0 = std::cos(system.theta0);
    const C zp = -drives.omega_p_rabi * c1 * s0 * std::exp(-i * drives.omega_p * t);
    const C zc = drives.omega_c_rabi * c1 * c0 * std::exp(-i * drives.omega_c * t);

    Eigen::Matrix3cd h = Eigen::Matrix3cd::Zero();
    h(0, 0) = system.e_mu0;
    h(1, 1) = system.e_nu0;
    h(2, 2) = system.e_mu1;
    h(2, 0) = zp;
    h(0, 2) = std::conj(zp);
    h(2, 1) = zc;
    h(1, 2) = std::conj(zc);

    Eigen::Matrix3cd rho;
    rho << C(state.rho_mumu), state.rho_munu, state.rho_mu1, std::conj(state.rho_munu),
        C(state.rho_nunu), state.rho_nu1, std::conj(state.rho_mu1), std::conj(state.rho_nu1),
        C(state.rho_11);

    const Eigen::Matrix3cd d = -i * (h * rho - rho * h);
    DensityState out;
    out.rho_mumu = d(0, 0).real() - rates.gamma_mu * state.rho_mumu;
    out.rho_nunu = d(1, 1).real() - rates.gamma_nu * state.rho_nunu;
    out.rho_11 = d(2, 2).real() - rates.gamma_1 * state.rho_11;
    out.rho_mu1 = d(0, 2) - rates.gamma_mu1 * state.rho_mu1;
    out.rho_nu1 = d(1, 2) - rates.gamma_nu1 * state.rho_nu1;
    out.rho_munu = d(0, 1) - rates.gamma_munu * state.rho_munu;
    return out;
}

inline double rel_err(double got, double want) {
    const double denom = std::max(std::abs(want), 1e-300);
    return std::abs(got - want) / denom;
}

inline double uniform(std::mt19937& rng, double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(rng);
}

}  // namespace deit::testing

#endif
