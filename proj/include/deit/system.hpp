#ifndef DEIT_SYSTEM_HPP
#define DEIT_SYSTEM_HPP

#include <cmath>

#include "deit/errors.hpp"

namespace deit {

// Circuit parameters of the qubit-resonator system (rad/ns, hbar = 1).
struct SystemParams {
    double omega_q = 0.0;  // qubit level spacing
    double omega_0 = 0.0;  // resonator frequency
    double eta = 0.0;      // qubit-resonator coupling

    void validate() const {
        if (!(omega_0 > 0.0) || !(omega_q > 0.0) || !(eta >= 0.0) ||
            !std::isfinite(omega_q) || !std::isfinite(omega_0) || !std::isfinite(eta)) {
            throw InvalidParameterError(
                "SystemParams: require omega_q > 0, omega_0 > 0, eta >= 0, all finite");
        }
    }
};

// Classical probe and control drives: Rabi amplitudes and travel frequencies.
struct DriveFields {
    double omega_p_rabi = 0.0;
    double omega_c_rabi = 0.0;
    double omega_p = 0.0;
    double omega_c = 0.0;

    void validate() const {
        if (!(omega_p_rabi >= 0.0) || !(omega_c_rabi >= 0.0) ||
            !std::isfinite(omega_p_rabi) || !std::isfinite(omega_c_rabi) ||
            !std::isfinite(omega_p) || !std::isfinite(omega_c)) {
            throw InvalidParameterError("DriveFields: Rabi amplitudes must be >= 0 and finite");
        }
    }

    // First-order treatment assumes a weak probe; advisory only.
    bool weak_probe(double factor = 10.0) const {
        return omega_p_rabi * factor <= omega_c_rabi;
    }
};

}  // namespace deit

#endif
