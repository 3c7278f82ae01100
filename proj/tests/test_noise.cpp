#include <doctest.h>

#include <cmath>
#include <random>

#include "deit/noise.hpp"
#include "deit/presets.hpp"
#include "oracles.hpp"

using namespace deit;
using namespace deit::testing;

namespace {

NoiseModel charge_noise() { return load_preset("charge").noise_model(); }

}  // namespace

TEST_CASE("power spectrum: zero-frequency limit, classical tail, evenness") {
    const double resistance = 50.0;
    const double temperature = 0.02;
    const double kbt = kBoltzmannOverHbar * temperature;

    CHECK(power_spectrum(0.0, resistance, temperature) ==
          doctest::Approx(resistance * kbt / kPi).epsilon(1e-15));
    // continuity across the series branch
    CHECK(power_spectrum(1e-12, resistance, temperature) ==
          doctest::Approx(power_spectrum(0.0, resistance, temperature)).epsilon(1e-12));

    const double omega = 200.0 * kbt;  // coth -> 1
    CHECK(power_spectrum(omega, resistance, temperature) ==
          doctest::Approx(resistance * omega / kTwoPi).epsilon(1e-12));

    for (double w : {0.1, 3.0, 44.0}) {
        CHECK(power_spectrum(-w, resistance, temperature) ==
              doctest::Approx(power_spectrum(w, resistance, temperature)).epsilon(1e-15));
    }
    CHECK_THROWS_AS(power_spectrum(1.0, resistance, 0.0), InvalidParameterError);
}

TEST_CASE("noise_from_measured: charge lifetimes and edge cases") {
    const NoiseModel noise = charge_noise();
    CHECK(noise.kappa_rel == doctest::Approx(1.4285714285714286e-3).epsilon(1e-14));
    CHECK(noise.kappa_deph == doctest::Approx(2.0119047619047618e-2).epsilon(1e-14));
    CHECK(noise.kappa_rel == doctest::Approx(1.4286e-3).epsilon(1e-4));
    CHECK(noise.kappa_deph == doctest::Approx(2.0119e-2).epsilon(1e-4));

    // r2 = r1/2: no pure dephasing
    const NoiseModel boundary = noise_from_measured(0.01, 0.005, 0.02, 40.0);
    CHECK(boundary.kappa_deph == 0.0);

    // pure-dephasing-only qubit
    const NoiseModel deph_only = noise_from_measured(0.0, 0.02, 0.02, 40.0);
    CHECK(deph_only.kappa_rel == 0.0);
    CHECK(deph_only.kappa_deph == 0.02);

    CHECK_THROWS_AS(noise_from_measured(0.01, 0.004, 0.02, 40.0), InvalidRatesError);

    const NoiseModel down = noise_from_measured(0.01, 0.01, 0.02, 40.0, RelaxationSplit::down_only);
    CHECK(down.kappa_rel == 0.005);
}

TEST_CASE("boltzmann factor of the charge preset") {
    const NoiseModel noise = charge_noise();
    CHECK(noise.beta_omega0() == doctest::Approx(16.797043720305226).epsilon(1e-12));
    CHECK(std::abs(noise.beta_omega0() - 16.8) < 0.01);
    CHECK(noise.boltzmann_factor() == doctest::Approx(5.0715019870811674e-8).epsilon(1e-10));
}

TEST_CASE("dressed rates: zero-temperature limit") {
    NoiseModel noise = charge_noise();
    noise.temperature = 1e-6;  // q underflows to zero
    const double theta0 = 0.31, theta1 = 0.42;
    const DressedRates r = dressed_rates(noise, theta0, theta1);
    CHECK(r.gamma_1 == 0.0);
    CHECK(r.gamma_mu1 == 0.0);
    CHECK(r.gamma_nu1 == 0.0);
    const double c0 = std::cos(theta0), s0 = std::sin(theta0);
    CHECK(r.gamma_mu == doctest::Approx(noise.kappa_rel * c0 * c0).epsilon(1e-14));
    CHECK(r.gamma_munu == doctest::Approx(noise.kappa_rel * c0 * s0).epsilon(1e-14));
    CHECK(total_relaxation(r) == doctest::Approx(noise.kappa_rel).epsilon(1e-14));
}

TEST_CASE("dressed rates: resonance symmetry") {
    const NoiseModel noise = charge_noise();
    const double q = noise.boltzmann_factor();
    const DressedRates r = dressed_rates(noise, kQuarterPi, kQuarterPi);
    const double want = noise.kappa_rel * (1.0 - q * q) / 2.0;
    CHECK(r.gamma_mu == doctest::Approx(want).epsilon(1e-13));
    CHECK(r.gamma_nu == doctest::Approx(want).epsilon(1e-13));
}

TEST_CASE("dressed rates: charge preset at 3.4 GHz, all six frozen") {
    const PresetValues preset = load_preset("charge");
    const NoiseModel noise = preset.noise_model();
    const SystemParams params = preset.system_params(3.4);
    const double theta0 = rotation_angle(params, 0).theta_n;
    const double theta1 = rotation_angle(params, 1).theta_n;
    const DressedRates r = dressed_rates(noise, theta0, theta1);

    CHECK(r.gamma_mu == doctest::Approx(1.2193619353319128e-3).epsilon(1e-11));
    CHECK(r.gamma_nu == doctest::Approx(2.0920949323951216e-4).epsilon(1e-11));
    CHECK(r.gamma_1 == doctest::Approx(5.7139533768054916e-11).epsilon(1e-9));
    CHECK(r.gamma_mu1 == doctest::Approx(3.467629838805541e-10).epsilon(1e-9));
    CHECK(r.gamma_nu1 == doctest::Approx(8.371598986133965e-10).epsilon(1e-9));
    CHECK(r.gamma_munu == doctest::Approx(-5.050762210462003e-4).epsilon(1e-11));

    const double total = total_relaxation(r);
    CHECK(total == doctest::Approx(r.gamma_mu + r.gamma_nu + r.gamma_1).epsilon(1e-15));
    CHECK(total_relaxation(DressedRates{}) == 0.0);
}

TEST_CASE("role exchange: gamma_munu tracks kappa_rel, gamma_x1 track kappa_deph") {
    NoiseModel noise = charge_noise();
    const double theta0 = 0.27, theta1 = theta1_of_theta0(theta0);
    const DressedRates base = dressed_rates(noise, theta0, theta1);
    noise.kappa_rel *= 2.0;
    const DressedRates scaled = dressed_rates(noise, theta0, theta1);
    CHECK(scaled.gamma_munu == doctest::Approx(2.0 * base.gamma_munu).epsilon(1e-14));
    CHECK(scaled.gamma_mu1 == base.gamma_mu1);
    CHECK(scaled.gamma_nu1 == base.gamma_nu1);
}

TEST_CASE("detuning antisymmetry sign table") {
    const NoiseModel noise = charge_noise();
    std::mt19937 rng(31);
    for (int i = 0; i < 200; ++i) {
        const double theta0 = uniform(rng, 0.01, kQuarterPi - 0.01);
        const double theta1 = theta1_of_theta0(theta0);
        const DressedRates above = dressed_rates(noise, theta0, theta1);
        const DressedRates below = dressed_rates(noise, -theta0, -theta1);
        CHECK(below.gamma_mu == doctest::Approx(above.gamma_nu).epsilon(1e-14));
        CHECK(below.gamma_nu == doctest::Approx(above.gamma_mu).epsilon(1e-14));
        CHECK(below.gamma_1 == doctest::Approx(above.gamma_1).epsilon(1e-14));
        CHECK(below.gamma_mu1 == doctest::Approx(-above.gamma_mu1).epsilon(1e-14));
        CHECK(below.gamma_nu1 == doctest::Approx(above.gamma_nu1).epsilon(1e-14));
        CHECK(below.gamma_munu == doctest::Approx(-above.gamma_munu).epsilon(1e-14));
    }
}

TEST_CASE("two-fold temperature dependence over 10..100 mK") {
    NoiseModel noise = charge_noise();
    double prev_gamma1 = -1.0;
    double prev_gamma_mu = 2.0;
    for (int i = 0; i <= 30; ++i) {
        noise.temperature = mk_to_kelvin(10.0 + 3.0 * i);
        const DressedRates r = dressed_rates(noise, 0.0, 0.0);
        CHECK(r.gamma_1 > prev_gamma1);     // resonator occupation grows with T
        CHECK(r.gamma_mu < prev_gamma_mu);  // (1 - q) shrinks with T at theta0 = 0
        prev_gamma1 = r.gamma_1;
        prev_gamma_mu = r.gamma_mu;
    }
}

TEST_CASE("population rates are nonnegative everywhere") {
    std::mt19937 rng(37);
    for (int i = 0; i < 300; ++i) {
        NoiseModel noise = charge_noise();
        noise.temperature = uniform(rng, 0.001, 1.0);
        const double theta0 = uniform(rng, -kQuarterPi, kQuarterPi);
        const DressedRates r = dressed_rates(noise, theta0, theta1_of_theta0(theta0));
        CHECK(r.gamma_mu >= 0.0);
        CHECK(r.gamma_nu >= 0.0);
        CHECK(r.gamma_1 >= 0.0);
    }
}
