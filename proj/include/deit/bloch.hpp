#ifndef DEIT_BLOCH_HPP
#define DEIT_BLOCH_HPP

#include <complex>
#include <vector>

#include "deit/dressed.hpp"
#include "deit/noise.hpp"

// Density-matrix dynamics of the dressed three-level system.
//
// Equation set (rho_ab = <a|rho|b>, raising couplings zeta_p(t) = -Omega_p
// e^{-i w_p t} cos(theta1) sin(theta0), zeta_c(t) = Omega_c e^{-i w_c t}
// cos(theta1) cos(theta0)):
//
//   d rho_mumu = -G_mu rho_mumu - i zeta_p^* rho_1mu + i zeta_p rho_mu1
//   d rho_nunu = -G_nu rho_nunu - i zeta_c^* rho_1nu + i zeta_c rho_nu1
//   d rho_11   = -G_1 rho_11 + i zeta_p^* rho_1mu + i zeta_c^* rho_1nu
//                - i zeta_p rho_mu1 - i zeta_c rho_nu1
//   d rho_mu1  = -[i(E0^mu - E1^mu) + g_mu1] rho_mu1
//                - i zeta_p^* (rho_11 - rho_mumu) + i zeta_c^* rho_munu
//   d rho_nu1  = -[i(E0^nu - E1^mu) + g_nu1] rho_nu1
//                - i zeta_c^* (rho_11 - rho_nunu) + i zeta_p^* rho_munu^*
//   d rho_munu = -[i(E0^mu - E0^nu) + g_munu] rho_munu
//                - i zeta_p^* rho_nu1^* + i zeta_c rho_mu1
//
// This is -i[H_Lambda, rho] plus the phenomenological decays; population
// decay is not trace-preserving (no repopulation terms), so long-time
// statements are scoped to the first-order subsystem below.
//
// The rotating frame removes all drive phases at once:
//   rho_mu1 = s_mu1 e^{+i w_p t}, rho_nu1 = s_nu1 e^{+i w_c t},
//   rho_munu = s_munu e^{+i (w_p - w_c) t},
// leaving static coefficients with detunings D_p = (E1^mu - E0^mu) - w_p and
// D_c = (E1^mu - E0^nu) - w_c.

namespace deit {

struct DensityState {
    double rho_mumu = 0.0;
    double rho_nunu = 0.0;
    double rho_11 = 0.0;
    std::complex<double> rho_mu1;
    std::complex<double> rho_nu1;
    std::complex<double> rho_munu;

    double trace() const { return rho_mumu + rho_nunu + rho_11; }
    static DensityState ground() { return {1.0, 0.0, 0.0, {}, {}, {}}; }
    // (|mu_0> + |nu_0>)/sqrt(2): the lower-doublet symmetric superposition
    static DensityState dark_superposition() { return {0.5, 0.5, 0.0, {}, {}, {0.5, 0.0}}; }
};

DensityState operator+(const DensityState& a, const DensityState& b);
DensityState operator*(double s, const DensityState& a);

enum class Frame { rotating, lab };

struct IntegrationConfig {
    double t_max = 0.0;      // ns
    double dt = 0.0;         // ns
    int record_stride = 1;   // steps per recorded sample

    void validate() const {
        if (!(t_max > 0.0) || !(dt > 0.0) || record_stride < 1) {
            throw InvalidParameterError("IntegrationConfig: need t_max > 0, dt > 0, stride >= 1");
        }
    }
};

DensityState bloch_rhs(const DensityState& state, const ThreeLevelSystem& system,
                       const DressedRates& rates, const DriveFields& drives, double t,
                       Frame frame = Frame::rotating);

// Largest angular-frequency scale of the generator in the chosen frame;
// the fixed-step guard requires dt * scale < 0.1.
double stiffness_scale(const ThreeLevelSystem& system, const DressedRates& rates,
                       const DriveFields& drives, Frame frame);

struct TrajectorySample {
    double t = 0.0;
    DensityState state;
};

// Classic fourth-order Runge-Kutta with a fixed step. Throws StabilityError
// (carrying a suggested dt) when the guard fails.
std::vector<TrajectorySample> integrate(const DensityState& initial,
                                        const IntegrationConfig& config,
                                        const ThreeLevelSystem& system, const DressedRates& rates,
                                        const DriveFields& drives, Frame frame = Frame::rotating);

// Steady state of the first-order rotating-frame pair
//   d s_mu1  = -(i Delta + g_mu1) s_mu1  + i zc s_munu + i zp
//   d s_munu = -(i Delta + g_munu) s_munu + i zc s_mu1
// with zp = zeta_p_bar, zc = zeta_c_bar:
//   s_mu1 = i zp (i Delta + g_munu) / [(i Delta + g_mu1)(i Delta + g_munu) + zc^2].
// dipole_factor * s_mu1 / Omega_p reproduces chi' + i chi''.
std::complex<double> steady_state_first_order(const ThreeLevelSystem& system,
                                              const DressedRates& rates,
                                              const DriveFields& drives, double delta);

struct FirstOrderSample {
    double t = 0.0;
    std::complex<double> rho_mu1;
    std::complex<double> rho_munu;
};

// Time-step the first-order pair from zero initial coherences.
std::vector<FirstOrderSample> integrate_first_order(const ThreeLevelSystem& system,
                                                    const DressedRates& rates,
                                                    const DriveFields& drives, double delta,
                                                    const IntegrationConfig& config);

// Max excited-state population over [0, t_max] for the dark initial state
// with both drives resonant and all decay off. params.omega_q is used as
// given; callers set it from trapping_spacing.
double trapping_check(const DriveFields& drives, const SystemParams& params,
                      const IntegrationConfig& config);

}  // namespace deit

#endif
