#include "deit/bloch.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace deit {

using std::complex;

namespace {

constexpr complex<double> kI{0.0, 1.0};

struct Couplings {
    double zp;  // signed probe coupling, -Omega_p cos(theta1) sin(theta0)
    double zc;  // signed control coupling, +Omega_c cos(theta1) cos(theta0)
    double delta_p;
    double delta_c;
};

Couplings couplings(const ThreeLevelSystem& system, const DriveFields& drives) {
    Couplings c;
    c.zp = -system.zeta_p_bar;
    c.zc = system.zeta_c_bar;
    c.delta_p = system.probe_transition() - drives.omega_p;
    c.delta_c = system.control_transition() - drives.omega_c;
    return c;
}

}  // namespace

DensityState operator+(const DensityState& a, const DensityState& b) {
    return {a.rho_mumu + b.rho_mumu, a.rho_nunu + b.rho_nunu, a.rho_11 + b.rho_11,
            a.rho_mu1 + b.rho_mu1, a.rho_nu1 + b.rho_nu1, a.rho_munu + b.rho_munu};
}

DensityState operator*(double s, const DensityState& a) {
    return {s * a.rho_mumu, s * a.rho_nunu, s * a.rho_11,
            s * a.rho_mu1, s * a.rho_nu1, s * a.rho_munu};
}

DensityState bloch_rhs(const DensityState& state, const ThreeLevelSystem& system,
                       const DressedRates& rates, const DriveFields& drives, double t,
                       Frame frame) {
    const Couplings c = couplings(system, drives);
    DensityState d;
    if (frame == Frame::rotating) {
        const double im_mu1 = state.rho_mu1.imag();
        const double im_nu1 = state.rho_nu1.imag();
        d.rho_mumu = -rates.gamma_mu * state.rho_mumu - 2.0 * c.zp * im_mu1;
        d.rho_nunu = -rates.gamma_nu * state.rho_nunu - 2.0 * c.zc * im_nu1;
        d.rho_11 = -rates.gamma_1 * state.rho_11 + 2.0 * c.zp * im_mu1 + 2.0 * c.zc * im_nu1;
        d.rho_mu1 = (kI * c.delta_p - rates.gamma_mu1) * state.rho_mu1 -
                    kI * c.zp * (state.rho_11 - state.rho_mumu) + kI * c.zc * state.rho_munu;
        d.rho_nu1 = (kI * c.delta_c - rates.gamma_nu1) * state.rho_nu1 -
                    kI * c.zc * (state.rho_11 - state.rho_nunu) +
                    kI * c.zp * std::conj(state.rho_munu);
        d.rho_munu = (kI * (c.delta_p - c.delta_c) - rates.gamma_munu) * state.rho_munu -
                     kI * c.zp * std::conj(state.rho_nu1) + kI * c.zc * state.rho_mu1;
    } else {
        const complex<double> zp = c.zp * std::exp(-kI * drives.omega_p * t);
        const complex<double> zc = c.zc * std::exp(-kI * drives.omega_c * t);
        const double pump_p = 2.0 * std::imag(zp * state.rho_mu1);
        const double pump_c = 2.0 * std::imag(zc * state.rho_nu1);
        d.rho_mumu = -rates.gamma_mu * state.rho_mumu - pump_p;
        d.rho_nunu = -rates.gamma_nu * state.rho_nunu - pump_c;
        d.rho_11 = -rates.gamma_1 * state.rho_11 + pump_p + pump_c;
        d.rho_mu1 = -(kI * (system.e_mu0 - system.e_mu1) + rates.gamma_mu1) * state.rho_mu1 -
                    kI * std::conj(zp) * (state.rho_11 - state.rho_mumu) +
                    kI * std::conj(zc) * state.rho_munu;
        d.rho_nu1 = -(kI * (system.e_nu0 - system.e_mu1) + rates.gamma_nu1) * state.rho_nu1 -
                    kI * std::conj(zc) * (state.rho_11 - state.rho_nunu) +
                    kI * std::conj(zp) * std::conj(state.rho_munu);
        d.rho_munu = -(kI * (system.e_mu0 - system.e_nu0) + rates.gamma_munu) * state.rho_munu -
                     kI * std::conj(zp) * std::conj(state.rho_nu1) + kI * zc * state.rho_mu1;
    }
    return d;
}

double stiffness_scale(const ThreeLevelSystem& system, const DressedRates& rates,
                       const DriveFields& drives, Frame frame) {
    const Couplings c = couplings(system, drives);
    double scale = std::max({std::abs(rates.gamma_mu), std::abs(rates.gamma_nu),
                             std::abs(rates.gamma_1), std::abs(rates.gamma_mu1),
                             std::abs(rates.gamma_nu1), std::abs(rates.gamma_munu),
                             std::abs(c.zp), std::abs(c.zc)});
    if (frame == Frame::rotating) {
        scale = std::max({scale, std::abs(c.delta_p), std::abs(c.delta_c),
                          std::abs(c.delta_p - c.delta_c)});
    } else {
        scale = std::max({scale, std::abs(system.e_mu0 - system.e_mu1),
                          std::abs(system.e_nu0 - system.e_mu1),
                          std::abs(system.e_mu0 - system.e_nu0), std::abs(drives.omega_p),
                          std::abs(drives.omega_c)});
    }
    return scale;
}

namespace {

void check_stability(const IntegrationConfig& config, double scale) {
    if (scale > 0.0 && config.dt * scale >= 0.1) {
        const double suggested = 0.05 / scale;
        std::ostringstream msg;
        msg << "dt = " << config.dt << " ns too large for the fastest scale " << scale
            << " rad/ns; suggested dt = " << suggested << " ns";
        throw StabilityError(msg.str(), suggested);
    }
}

DensityState rk4_step(const DensityState& y, double t, double dt, const ThreeLevelSystem& system,
                      const DressedRates& rates, const DriveFields& drives, Frame frame) {
    const DensityState k1 = bloch_rhs(y, system, rates, drives, t, frame);
    const DensityState k2 =
        bloch_rhs(y + 0.5 * dt * k1, system, rates, drives, t + 0.5 * dt, frame);
    const DensityState k3 =
        bloch_rhs(y + 0.5 * dt * k2, system, rates, drives, t + 0.5 * dt, frame);
    const DensityState k4 = bloch_rhs(y + dt * k3, system, rates, drives, t + dt, frame);
    return y + (dt / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
}

}  // namespace

std::vector<TrajectorySample> integrate(const DensityState& initial,
                                        const IntegrationConfig& config,
                                        const ThreeLevelSystem& system, const DressedRates& rates,
                                        const DriveFields& drives, Frame frame) {
    config.validate();
    check_stability(config, stiffness_scale(system, rates, drives, frame));

    const long long n_steps = static_cast<long long>(std::ceil(config.t_max / config.dt - 1e-12));
    std::vector<TrajectorySample> out;
    out.reserve(static_cast<std::size_t>(n_steps / config.record_stride) + 2);

    DensityState y = initial;
    out.push_back({0.0, y});
    for (long long i = 0; i < n_steps; ++i) {
        const double t = static_cast<double>(i) * config.dt;
        y = rk4_step(y, t, config.dt, system, rates, drives, frame);
        if ((i + 1) % config.record_stride == 0 || i + 1 == n_steps) {
            out.push_back({static_cast<double>(i + 1) * config.dt, y});
        }
    }
    return out;
}

std::complex<double> steady_state_first_order(const ThreeLevelSystem& system,
                                              const DressedRates& rates,
                                              const DriveFields& drives, double delta) {
    (void)drives;
    const double zp = system.zeta_p_bar;
    const double zc = system.zeta_c_bar;
    const complex<double> a = kI * delta + rates.gamma_mu1;
    const complex<double> b = kI * delta + rates.gamma_munu;
    const complex<double> denom = a * b + zc * zc;
    if (denom == 0.0) {
        throw SingularPointError("steady_state_first_order: singular denominator");
    }
    return kI * zp * b / denom;
}

std::vector<FirstOrderSample> integrate_first_order(const ThreeLevelSystem& system,
                                                    const DressedRates& rates,
                                                    const DriveFields& drives, double delta,
                                                    const IntegrationConfig& config) {
    (void)drives;
    config.validate();
    const double zp = system.zeta_p_bar;
    const double zc = system.zeta_c_bar;
    const double scale =
        std::max({std::abs(delta), std::abs(rates.gamma_mu1), std::abs(rates.gamma_munu),
                  std::abs(zp), std::abs(zc)});
    check_stability(config, scale);

    const complex<double> a1 = -(kI * delta + rates.gamma_mu1);
    const complex<double> a2 = -(kI * delta + rates.gamma_munu);
    auto rhs = [&](complex<double> s1, complex<double> s2) {
        return std::pair<complex<double>, complex<double>>{a1 * s1 + kI * zc * s2 + kI * zp,
                                                           a2 * s2 + kI * zc * s1};
    };

    const long long n_steps = static_cast<long long>(std::ceil(config.t_max / config.dt - 1e-12));
    std::vector<FirstOrderSample> out;
    out.reserve(static_cast<std::size_t>(n_steps / config.record_stride) + 2);

    complex<double> s1{}, s2{};
    out.push_back({0.0, s1, s2});
    const double dt = config.dt;
    for (long long i = 0; i < n_steps; ++i) {
        const auto k1 = rhs(s1, s2);
        const auto k2 = rhs(s1 + 0.5 * dt * k1.first, s2 + 0.5 * dt * k1.second);
        const auto k3 = rhs(s1 + 0.5 * dt * k2.first, s2 + 0.5 * dt * k2.second);
        const auto k4 = rhs(s1 + dt * k3.first, s2 + dt * k3.second);
        s1 += (dt / 6.0) * (k1.first + 2.0 * k2.first + 2.0 * k3.first + k4.first);
        s2 += (dt / 6.0) * (k1.second + 2.0 * k2.second + 2.0 * k3.second + k4.second);
        if ((i + 1) % config.record_stride == 0 || i + 1 == n_steps) {
            out.push_back({static_cast<double>(i + 1) * dt, s1, s2});
        }
    }
    return out;
}

double trapping_check(const DriveFields& drives, const SystemParams& params,
                      const IntegrationConfig& config) {
    config.validate();
    ThreeLevelSystem system = build_three_level(params, drives);
    DriveFields resonant = drives;
    resonant.omega_p = system.probe_transition();
    resonant.omega_c = system.control_transition();
    const DressedRates no_decay{};

    check_stability(config, stiffness_scale(system, no_decay, resonant, Frame::rotating));

    const long long n_steps = static_cast<long long>(std::ceil(config.t_max / config.dt - 1e-12));
    DensityState y = DensityState::dark_superposition();
    double max_excited = y.rho_11;
    for (long long i = 0; i < n_steps; ++i) {
        y = rk4_step(y, static_cast<double>(i) * config.dt, config.dt, system, no_decay, resonant,
                     Frame::rotating);
        max_excited = std::max(max_excited, y.rho_11);
    }
    return max_excited;
}

}  // namespace deit
