#ifndef DEIT_SUSCEPTIBILITY_HPP
#define DEIT_SUSCEPTIBILITY_HPP

#include <Eigen/Core>
#include <optional>
#include <utility>
#include <vector>

#include "deit/dressed.hpp"
#include "deit/noise.hpp"

// First-order susceptibility of the dressed three-level system and its
// extremal structure. chi is the response per unit probe Rabi amplitude:
//
//   chi'  = Z * Delta * [Delta^2 - g_mu1 g_munu - zc^2 + g_munu (g_mu1 + g_munu)]
//   chi'' = Z * [g_mu1 Delta^2 + g_mu1 g_munu^2 + g_munu zc^2]
//   Z     = dipole_factor * cos(theta1) sin(theta0)
//           / { Delta^2 (g_mu1+g_munu)^2 + [Delta^2 - g_mu1 g_munu - zc^2]^2 }
//
// with zc = Omega_c cos(theta1) cos(theta0). chi'' can go negative off-peak
// for g_mu1 < 0; the formulas are evaluated as they stand, no absolute values.

namespace deit {

struct SusceptibilityScale {
    double dipole_factor = 1.0;  // |d_mu1|^2 / epsilon_0
};

struct Susceptibility {
    double delta = 0.0;
    double chi_re = 0.0;
    double chi_im = 0.0;
};

Susceptibility chi(const ThreeLevelSystem& system, const DressedRates& rates, double delta,
                   const SusceptibilityScale& scale = {});

// chi'' over a detuning grid.
Eigen::ArrayXd chi_im_sweep(const ThreeLevelSystem& system, const DressedRates& rates,
                            const Eigen::ArrayXd& deltas, const SusceptibilityScale& scale = {});

// Nonzero roots of d chi''/d Delta. The biquadratic root magnitude is
// |Delta|^2 = {-g_munu m + (g_mu1+g_munu) zc sqrt(m)} / g_mu1, m = zc^2 + g_mu1 g_munu;
// empty when no real nonzero pair exists. At the critical locus m = 0 the pair
// collapses to (0, 0).
std::optional<std::pair<double, double>> extrema_roots(const ThreeLevelSystem& system,
                                                       const DressedRates& rates);

// Temperature- and control-amplitude-dependent factor
//   F = Omega_c^2 e^{beta w0} (1 - e^{-beta w0})^{-3} / (kappa_rel kappa_deph),
// assembled in the log domain.
double f_factor(const NoiseModel& noise, double omega_c_rabi);

// Critical qubit spacings
//   lambda_C,+- = (1/2){ w0 +- eta/(F^2 - sqrt2) [ (sqrt2+1) F^2 + 2 sqrt2
//                  - F sqrt((sqrt2-1)^2 F^2 + 16 + 8 sqrt2) ] };
// tends to (w0 -+ 2 eta)/2 for F -> infinity.
std::pair<double, double> critical_spacings(const NoiseModel& noise, double omega_c_rabi,
                                            const SystemParams& params);

enum class Regime { EIA, EIT, FLAT };

struct TurningPoint {
    double delta = 0.0;
    double chi_im = 0.0;
};

struct RegimeReport {
    Regime regime = Regime::FLAT;
    std::vector<TurningPoint> extrema;
    double lambda_c_minus = 0.0;
    double lambda_c_plus = 0.0;
    bool grid_too_coarse = false;  // adjacent turning points closer than 3 steps
};

struct RegimeGridOptions {
    int points = 4001;
    double window = 0.0;      // half-width; 0 selects 5*max(|g_mu1|+|g_munu|, |zc|)
    double flat_floor = 1e-9; // FLAT when max|chi''| < flat_floor * dipole_factor
};

// Count turning points of chi''(Delta) on a symmetric grid: one -> EIA
// (single central peak), three -> EIT (central dip between two peaks). Other
// counts fall back to the curvature at Delta = 0. lambda_C,+- reported
// alongside.
RegimeReport classify_regime(const ThreeLevelSystem& system, const DressedRates& rates,
                             const NoiseModel& noise, double omega_c_rabi,
                             const SystemParams& params, const SusceptibilityScale& scale = {},
                             const RegimeGridOptions& options = {});

struct SwitchSearchOptions {
    double omega_p_rabi = 0.0;  // 0 selects omega_c_rabi / 100
    double tolerance = 1e-6;    // rad/ns on omega_q
    RegimeGridOptions grid;
};

// Bisect the qubit spacing for the EIA <-> EIT turning-point-count change.
// Throws NoSignChangeError when both bracket ends classify identically.
double numeric_switching_frequency(const NoiseModel& noise, double omega_c_rabi,
                                   const SystemParams& params, double omega_q_lo,
                                   double omega_q_hi,
                                   const SwitchSearchOptions& options = {});

}  // namespace deit

#endif
