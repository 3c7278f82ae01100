#include "deit/noise.hpp"

#include <cmath>

namespace deit {

double power_spectrum(double omega, double resistance, double temperature_k) {
    if (!(temperature_k > 0.0)) {
        throw InvalidParameterError("power_spectrum requires temperature > 0");
    }
    const double kbt = kBoltzmannOverHbar * temperature_k;  // rad/ns
    const double x = omega / (2.0 * kbt);
    // omega coth(omega/2kT) = 2 kT * x coth x; x coth x -> 1 + x^2/3 for small x
    double x_coth_x;
    if (std::abs(x) < 1e-8) {
        x_coth_x = 1.0 + x * x / 3.0;
    } else {
        x_coth_x = x / std::tanh(x);
    }
    return resistance * kbt * x_coth_x / kPi;
}

NoiseModel noise_from_measured(double r1, double r2, double temperature_k, double omega_0,
                               RelaxationSplit split) {
    if (!(r1 >= 0.0) || !(r2 >= 0.0)) {
        throw InvalidParameterError("noise_from_measured requires r1, r2 >= 0");
    }
    const double r_phi = r2 - 0.5 * r1;
    if (r_phi < 0.0) {
        throw InvalidRatesError("noise_from_measured: r2 < r1/2 implies negative pure dephasing");
    }
    NoiseModel model;
    model.kappa_rel = (split == RelaxationSplit::full_r1) ? r1 : 0.5 * r1;
    model.kappa_deph = r_phi;
    model.temperature = temperature_k;
    model.omega_0 = omega_0;
    model.validate();
    return model;
}

DressedRates dressed_rates(const NoiseModel& noise, double theta0, double theta1) {
    noise.validate();
    const double q = noise.boltzmann_factor();
    const double s0 = std::sin(theta0), c0 = std::cos(theta0);
    const double s1 = std::sin(theta1), c1 = std::cos(theta1);
    const double krel = noise.kappa_rel, kdeph = noise.kappa_deph;

    DressedRates r;
    r.gamma_mu = krel * (1.0 - q) * (c0 * c0 + q * s0 * s0);
    r.gamma_nu = krel * (1.0 - q) * (s0 * s0 + q * c0 * c0);
    r.gamma_1 = krel * q * (1.0 - q) * (c1 * c1 + q * s1 * s1);
    r.gamma_mu1 = -kdeph * q * (1.0 - q) * s0 * c1;
    r.gamma_nu1 = kdeph * q * (1.0 - q) * c0 * c1;
    r.gamma_munu = krel * (1.0 - q) * (1.0 - q) * c0 * s0;
    return r;
}

double total_relaxation(const DressedRates& rates) {
    return rates.gamma_mu + rates.gamma_nu + rates.gamma_1;
}

}  // namespace deit
