#include "deit/dressed.hpp"

#include <cmath>

#include "deit/units.hpp"

namespace deit {

namespace {

void require_level(int n) {
    if (n < 0) throw InvalidParameterError("level index n must be >= 0");
}

}  // namespace

DressedAngles rotation_angle(const SystemParams& params, int n) {
    params.validate();
    require_level(n);
    const double detuning = params.omega_q - 0.5 * params.omega_0;
    const double coupling = params.eta * std::sqrt(static_cast<double>(n) + 1.0);
    if (detuning == 0.0) {
        if (coupling == 0.0) {
            throw DegenerateBasisError(
                "rotation angle undefined: eta = 0 at omega_q = omega_0/2; use the bare basis");
        }
        return {n, kQuarterPi};
    }
    return {n, 0.5 * std::atan(coupling / detuning)};
}

DressedLevels dressed_energies(const SystemParams& params, int n) {
    params.validate();
    require_level(n);
    const double detuning = params.omega_q - 0.5 * params.omega_0;
    const double coupling = params.eta * std::sqrt(static_cast<double>(n) + 1.0);
    const double center = (static_cast<double>(n) + 0.5) * params.omega_0;
    const double rabi = std::hypot(detuning, coupling);
    return {n, center + rabi, center - rabi};
}

double theta1_of_theta0(double theta0) {
    // Poles of tan(2 theta0) sit at theta0 = l pi/2 + pi/4.
    if (std::remainder(theta0 - kQuarterPi, kPi / 2.0) == 0.0) return kQuarterPi;
    return 0.5 * std::atan(kSqrt2 * std::tan(2.0 * theta0));
}

std::array<SigmaPlusElement, 4> sigma_plus_elements(const SystemParams& params, int n) {
    const double tn = rotation_angle(params, n).theta_n;
    const double tn1 = rotation_angle(params, n + 1).theta_n;
    const double sn = std::sin(tn), cn = std::cos(tn);
    const double sn1 = std::sin(tn1), cn1 = std::cos(tn1);
    using B = DressedBranch;
    return {{
        {{B::mu, n}, {B::mu, n + 1}, -cn1 * sn},
        {{B::nu, n}, {B::nu, n + 1}, sn1 * cn},
        {{B::mu, n}, {B::nu, n + 1}, -sn1 * sn},
        {{B::nu, n}, {B::mu, n + 1}, cn1 * cn},
    }};
}

ThreeLevelSystem build_three_level(const SystemParams& params, const DriveFields& drives,
                                   std::optional<double> omega_c_override) {
    drives.validate();
    const double theta0 = rotation_angle(params, 0).theta_n;
    const double theta1 = rotation_angle(params, 1).theta_n;
    const DressedLevels lower = dressed_energies(params, 0);
    const DressedLevels upper = dressed_energies(params, 1);

    ThreeLevelSystem sys;
    sys.e_mu0 = lower.e_mu;
    sys.e_nu0 = lower.e_nu;
    sys.e_mu1 = upper.e_mu;
    sys.theta0 = theta0;
    sys.theta1 = theta1;
    sys.zeta_p_bar = drives.omega_p_rabi * std::cos(theta1) * std::sin(theta0);
    sys.zeta_c_bar = drives.omega_c_rabi * std::cos(theta1) * std::cos(theta0);
    sys.omega_c = omega_c_override.value_or(sys.e_mu1 - sys.e_nu0);
    return sys;
}

double degeneracy_threshold(const SystemParams& params) {
    params.validate();
    const double gap = params.omega_0 - (kSqrt2 + 1.0) * params.eta;
    if (params.eta > 0.0 && gap <= 0.0) {
        throw InvalidParameterError("degeneracy_threshold requires omega_0 > (sqrt2+1) eta");
    }
    return std::sqrt(2.0 * params.eta * gap);
}

double trapping_spacing(const DriveFields& drives, const SystemParams& params) {
    params.validate();
    if (!(drives.omega_p_rabi > 0.0)) {
        throw InvalidParameterError("trapping_spacing requires Omega_p > 0");
    }
    const double t = std::tan(2.0 * std::atan(drives.omega_c_rabi / drives.omega_p_rabi));
    if (t == 0.0) {
        throw NoTrappingSpacingError("no finite trapping spacing: Omega_c = 0");
    }
    return 0.5 * params.omega_0 + params.eta / t;
}

}  // namespace deit
