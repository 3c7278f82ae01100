#include "deit/susceptibility.hpp"

#include <cmath>
#include <limits>

namespace deit {

namespace {

struct ChiCoefficients {
    double prefactor;  // dipole_factor * cos(theta1) * sin(theta0)
    double g1;         // gamma_mu1
    double gn;         // gamma_munu
    double zc2;        // zeta_c_bar^2
    double gsum;       // g1 + gn
};

ChiCoefficients chi_coefficients(const ThreeLevelSystem& system, const DressedRates& rates,
                                 const SusceptibilityScale& scale) {
    ChiCoefficients c;
    c.prefactor = scale.dipole_factor * std::cos(system.theta1) * std::sin(system.theta0);
    c.g1 = rates.gamma_mu1;
    c.gn = rates.gamma_munu;
    c.zc2 = system.zeta_c_bar * system.zeta_c_bar;
    c.gsum = c.g1 + c.gn;
    return c;
}

double chi_im_at(const ChiCoefficients& c, double delta) {
    const double d2 = delta * delta;
    const double a = d2 - c.g1 * c.gn - c.zc2;
    const double denom = d2 * c.gsum * c.gsum + a * a;
    return c.prefactor * (c.g1 * d2 + c.g1 * c.gn * c.gn + c.gn * c.zc2) / denom;
}

}  // namespace

Susceptibility chi(const ThreeLevelSystem& system, const DressedRates& rates, double delta,
                   const SusceptibilityScale& scale) {
    const ChiCoefficients c = chi_coefficients(system, rates, scale);
    const double d2 = delta * delta;
    const double a = d2 - c.g1 * c.gn - c.zc2;
    const double denom = d2 * c.gsum * c.gsum + a * a;
    if (denom == 0.0) {
        throw SingularPointError("chi: common-factor denominator vanishes at this detuning");
    }
    const double z = c.prefactor / denom;
    Susceptibility out;
    out.delta = delta;
    out.chi_re = z * delta * (a + c.gn * c.gsum);
    out.chi_im = z * (c.g1 * d2 + c.g1 * c.gn * c.gn + c.gn * c.zc2);
    return out;
}

Eigen::ArrayXd chi_im_sweep(const ThreeLevelSystem& system, const DressedRates& rates,
                            const Eigen::ArrayXd& deltas, const SusceptibilityScale& scale) {
    const ChiCoefficients c = chi_coefficients(system, rates, scale);
    Eigen::ArrayXd out(deltas.size());
    for (Eigen::Index i = 0; i < deltas.size(); ++i) out[i] = chi_im_at(c, deltas[i]);
    return out;
}

std::optional<std::pair<double, double>> extrema_roots(const ThreeLevelSystem& system,
                                                       const DressedRates& rates) {
    const double g1 = rates.gamma_mu1;
    const double gn = rates.gamma_munu;
    const double zc = system.zeta_c_bar;
    if (g1 == 0.0) {
        throw InvalidParameterError("extrema_roots requires gamma_mu1 != 0");
    }
    const double m = zc * zc + g1 * gn;
    if (m < 0.0) return std::nullopt;
    const double root_sq = (-gn * m + (g1 + gn) * zc * std::sqrt(m)) / g1;
    if (root_sq < 0.0) return std::nullopt;
    const double d = std::sqrt(root_sq);
    return std::make_pair(-d, d);
}

double f_factor(const NoiseModel& noise, double omega_c_rabi) {
    noise.validate();
    if (!(omega_c_rabi >= 0.0)) {
        throw InvalidParameterError("f_factor requires Omega_c >= 0");
    }
    if (omega_c_rabi == 0.0) return 0.0;
    const double q = noise.boltzmann_factor();
    const double log_f = 2.0 * std::log(omega_c_rabi) + noise.beta_omega0() -
                         3.0 * std::log1p(-q) - std::log(noise.kappa_rel) -
                         std::log(noise.kappa_deph);
    if (log_f > 709.0) {
        throw OverflowError("f_factor exceeds double range even in the log domain");
    }
    return std::exp(log_f);
}

std::pair<double, double> critical_spacings(const NoiseModel& noise, double omega_c_rabi,
                                            const SystemParams& params) {
    params.validate();
    const double f = f_factor(noise, omega_c_rabi);
    const double denom = f * f - kSqrt2;
    if (denom == 0.0) {
        throw SingularFactorError("critical_spacings singular: F^2 = sqrt(2)");
    }
    const double bracket = (kSqrt2 + 1.0) * f * f + 2.0 * kSqrt2 -
                           f * std::sqrt((kSqrt2 - 1.0) * (kSqrt2 - 1.0) * f * f + 16.0 +
                                         8.0 * kSqrt2);
    const double offset = params.eta * bracket / denom;
    return {0.5 * (params.omega_0 - offset), 0.5 * (params.omega_0 + offset)};
}

RegimeReport classify_regime(const ThreeLevelSystem& system, const DressedRates& rates,
                             const NoiseModel& noise, double omega_c_rabi,
                             const SystemParams& params, const SusceptibilityScale& scale,
                             const RegimeGridOptions& options) {
    if (options.points < 5) {
        throw InvalidParameterError("classify_regime needs at least 5 grid points");
    }
    double window = options.window;
    if (window <= 0.0) {
        window = 5.0 * std::max(std::abs(rates.gamma_mu1) + std::abs(rates.gamma_munu),
                                std::abs(system.zeta_c_bar));
    }
    if (!(window > 0.0)) {
        throw InvalidParameterError("classify_regime: empty detuning window");
    }

    const int n = options.points;
    Eigen::ArrayXd deltas(n);
    for (int i = 0; i < n; ++i) {
        deltas[i] = -window + 2.0 * window * static_cast<double>(i) / (n - 1);
    }
    deltas[n - 1] = window;
    const Eigen::ArrayXd values = chi_im_sweep(system, rates, deltas, scale);

    RegimeReport report;
    const auto lambdas = critical_spacings(noise, omega_c_rabi, params);
    report.lambda_c_minus = lambdas.first;
    report.lambda_c_plus = lambdas.second;

    const double peak = values.abs().maxCoeff();
    if (peak < options.flat_floor * scale.dipole_factor) {
        report.regime = Regime::FLAT;
        return report;
    }

    // Turning points: sign changes of the discrete derivative. Zero slopes
    // inherit the previous sign so plateaus do not double-count.
    int last_sign = 0;
    int last_index = -1;
    for (int i = 0; i + 1 < n; ++i) {
        const double diff = values[i + 1] - values[i];
        int sign = (diff > 0.0) ? 1 : (diff < 0.0 ? -1 : 0);
        if (sign == 0) sign = last_sign;
        if (last_sign != 0 && sign != 0 && sign != last_sign) {
            if (last_index >= 0 && i - last_index < 3) report.grid_too_coarse = true;
            report.extrema.push_back({deltas[i], values[i]});
            last_index = i;
        }
        if (sign != 0) last_sign = sign;
    }

    const std::size_t count = report.extrema.size();
    if (count == 1) {
        report.regime = Regime::EIA;
    } else if (count == 3) {
        report.regime = Regime::EIT;
    } else if (count == 0) {
        report.regime = Regime::FLAT;
    } else {
        // Ambiguous count: fall back to the curvature at Delta = 0.
        const int mid = n / 2;
        const bool central_min = values[mid] <= values[mid - 1] && values[mid] <= values[mid + 1];
        report.regime = central_min ? Regime::EIT : Regime::EIA;
        report.grid_too_coarse = true;
    }
    return report;
}

namespace {

Regime regime_at(const NoiseModel& noise, double omega_c_rabi, const SystemParams& base,
                 double omega_q, const SwitchSearchOptions& options) {
    SystemParams params = base;
    params.omega_q = omega_q;
    DriveFields drives;
    drives.omega_c_rabi = omega_c_rabi;
    drives.omega_p_rabi = options.omega_p_rabi > 0.0 ? options.omega_p_rabi : omega_c_rabi / 100.0;
    const ThreeLevelSystem system = build_three_level(params, drives);
    const DressedRates rates = dressed_rates(noise, system.theta0, system.theta1);
    return classify_regime(system, rates, noise, omega_c_rabi, params, {}, options.grid).regime;
}

}  // namespace

double numeric_switching_frequency(const NoiseModel& noise, double omega_c_rabi,
                                   const SystemParams& params, double omega_q_lo,
                                   double omega_q_hi, const SwitchSearchOptions& options) {
    if (!(omega_q_lo < omega_q_hi)) {
        throw InvalidParameterError("numeric_switching_frequency: bad bracket");
    }
    Regime lo = regime_at(noise, omega_c_rabi, params, omega_q_lo, options);
    Regime hi = regime_at(noise, omega_c_rabi, params, omega_q_hi, options);
    if (lo == hi) {
        throw NoSignChangeError("turning-point count does not change across the bracket");
    }
    double a = omega_q_lo, b = omega_q_hi;
    while (b - a > options.tolerance) {
        const double mid = 0.5 * (a + b);
        const Regime r = regime_at(noise, omega_c_rabi, params, mid, options);
        if (r == lo) {
            a = mid;
        } else {
            b = mid;
        }
    }
    return 0.5 * (a + b);
}

}  // namespace deit
