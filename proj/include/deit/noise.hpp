#ifndef DEIT_NOISE_HPP
#define DEIT_NOISE_HPP

#include "deit/system.hpp"
#include "deit/units.hpp"

// Thermal environment of the dressed qubit. Only two aggregate prefactors of
// the microscopic noise couplings enter any dressed formula:
//   kappa_rel  = |c_x + i c_y|^2 S_X(omega)/4   (transverse, relaxation-type)
//   kappa_deph = |c_z|^2 S_X(0)/2               (longitudinal, dephasing-type)
// They are backed out of measured undressed lifetimes; see noise_from_measured.

namespace deit {

// Classical bath power spectrum S_X(omega) = (R omega / 2 pi) coth(omega / 2 k_B T).
// Even in omega; the omega -> 0 limit is R k_B T / pi.
double power_spectrum(double omega, double resistance, double temperature_k);

struct NoiseModel {
    double kappa_rel = 0.0;   // rad/ns
    double kappa_deph = 0.0;  // rad/ns
    double temperature = 0.0; // K
    double omega_0 = 0.0;     // rad/ns

    double beta_omega0() const { return beta_omega(omega_0, temperature); }
    // exp(-beta omega_0), the resonator Boltzmann factor in (0, 1)
    double boltzmann_factor() const { return std::exp(-beta_omega0()); }

    void validate() const {
        if (!(kappa_rel >= 0.0) || !(kappa_deph >= 0.0) || !(temperature > 0.0) ||
            !(omega_0 > 0.0)) {
            throw InvalidParameterError(
                "NoiseModel: require kappa_rel, kappa_deph >= 0, temperature > 0, omega_0 > 0");
        }
    }
};

struct UndressedRates {
    double r1 = 0.0;     // relaxation
    double r_phi = 0.0;  // pure dephasing
    double r2 = 0.0;     // total dephasing, r2 = r1/2 + r_phi
};

// How the measured relaxation rate maps onto the transverse prefactor. The
// down/up split never reappears in the dressed formulas, so the default folds
// the full r1 into kappa_rel; down_only uses r1/2 instead.
enum class RelaxationSplit { full_r1, down_only };

NoiseModel noise_from_measured(double r1, double r2, double temperature_k, double omega_0,
                               RelaxationSplit split = RelaxationSplit::full_r1);

// Dressed relaxation/dephasing rates. Signs follow the angles: gamma_mu1 < 0
// and gamma_munu > 0 above resonance (theta0 > 0), both flipped below.
struct DressedRates {
    double gamma_mu = 0.0;
    double gamma_nu = 0.0;
    double gamma_1 = 0.0;
    double gamma_mu1 = 0.0;   // signed
    double gamma_nu1 = 0.0;
    double gamma_munu = 0.0;  // signed
};

DressedRates dressed_rates(const NoiseModel& noise, double theta0, double theta1);

// Gamma = Gamma_mu + Gamma_nu + Gamma_1
double total_relaxation(const DressedRates& rates);

}  // namespace deit

#endif
