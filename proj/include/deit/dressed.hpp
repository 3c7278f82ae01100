#ifndef DEIT_DRESSED_HPP
#define DEIT_DRESSED_HPP

#include <array>
#include <optional>

#include "deit/system.hpp"

// Diagonalization of the Jaynes-Cummings circuit Hamiltonian on its invariant
// subspaces V_n = span{|n,e>, |n+1,g>}. The combined ground state |0,g> does
// not belong to any V_n and is excluded from every dressed enumeration.
//
// Conventions (fixed project-wide):
//  - theta_n uses the signed principal arctan branch, so theta_n changes sign
//    with the detuning omega_q - omega_0/2 and lies in (-pi/4, pi/4).
//  - Exactly at resonance omega_q = omega_0/2 (with eta > 0) theta_n := pi/4,
//    the limit from the positive-detuning side.

namespace deit {

struct DressedAngles {
    int n = 0;
    double theta_n = 0.0;
};

struct DressedLevels {
    int n = 0;
    double e_mu = 0.0;  // plus branch
    double e_nu = 0.0;  // minus branch

    double splitting() const { return e_mu - e_nu; }
};

enum class DressedBranch { mu, nu };

struct DressedStateRef {
    DressedBranch branch = DressedBranch::mu;
    int n = 0;
};

// One first-off-diagonal matrix element of sigma_+ in the dressed basis.
struct SigmaPlusElement {
    DressedStateRef from_state;
    DressedStateRef to_state;
    double amplitude = 0.0;
};

// The lowest three dressed levels {|mu_0>, |nu_0>, |mu_1>} with the effective
// probe/control couplings of the Lambda Hamiltonian.
struct ThreeLevelSystem {
    double e_mu0 = 0.0;
    double e_nu0 = 0.0;
    double e_mu1 = 0.0;
    double theta0 = 0.0;
    double theta1 = 0.0;
    double zeta_p_bar = 0.0;  // Omega_p * cos(theta1) * sin(theta0), signed
    double zeta_c_bar = 0.0;  // Omega_c * cos(theta1) * cos(theta0), signed
    double omega_c = 0.0;     // control frequency, resonant unless overridden

    double probe_transition() const { return e_mu1 - e_mu0; }
    double control_transition() const { return e_mu1 - e_nu0; }
};

// theta_n = (1/2) atan(eta sqrt(n+1) / (omega_q - omega_0/2)).
// Throws DegenerateBasisError when eta = 0 and omega_q = omega_0/2.
DressedAngles rotation_angle(const SystemParams& params, int n);

// E_n^{mu,nu} = (n + 1/2) omega_0 +- sqrt((omega_q - omega_0/2)^2 + eta^2 (n+1)).
DressedLevels dressed_energies(const SystemParams& params, int n);

// theta_1 = (1/2) atan(sqrt(2) tan(2 theta_0)), principal branch; the value at
// the non-differentiable points theta_0 = l pi/2 + pi/4 is the left limit pi/4.
// Defined on all of R for plotting; physical constructors only emit
// principal-branch angles.
double theta1_of_theta0(double theta0);

// The four nonzero amplitudes of sigma_+ out of level n, attached to
// |mu_{n+1}><mu_n|, |nu_{n+1}><nu_n|, |nu_{n+1}><mu_n|, |mu_{n+1}><nu_n|.
std::array<SigmaPlusElement, 4> sigma_plus_elements(const SystemParams& params, int n);

// Assemble the Lambda system; the control frequency defaults to the exact
// resonance E_1^mu - E_0^nu.
ThreeLevelSystem build_three_level(const SystemParams& params, const DriveFields& drives,
                                   std::optional<double> omega_c_override = std::nullopt);

// Control amplitude whose first-order shift of |nu_0> equals the minimal
// lower-doublet splitting 2 eta: Omega_c = sqrt(2 eta [omega_0 - (sqrt2+1) eta]).
double degeneracy_threshold(const SystemParams& params);

// Qubit spacing at which the symmetric superposition of the lower doublet is
// dark: omega_q = omega_0/2 + eta / tan(2 atan(Omega_c/Omega_p)).
double trapping_spacing(const DriveFields& drives, const SystemParams& params);

}  // namespace deit

#endif
