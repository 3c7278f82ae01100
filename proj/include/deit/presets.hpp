#ifndef DEIT_PRESETS_HPP
#define DEIT_PRESETS_HPP

#include <array>
#include <string>

#include "deit/noise.hpp"
#include "deit/system.hpp"

// Experimentally published operating points for the three qubit families.
// Values are kept as decimal strings and parsed exactly once so the table can
// be checksummed bit-for-bit.

namespace deit {

struct QubitPreset {
    const char* name;
    const char* omega0_ghz;
    const char* eta_ghz;
    const char* t1_ns;
    const char* t2_ns;
    const char* temperature_mk;
    const char* omega_c_ghz;
    const char* wq_min_ghz;
    const char* wq_max_ghz;
    const char* delta_min_ghz;
    const char* delta_max_ghz;
};

const std::array<QubitPreset, 3>& preset_table();

// Parsed preset in boundary units (GHz / ns / mK).
struct PresetValues {
    std::string name;
    double omega0_ghz = 0.0;
    double eta_ghz = 0.0;
    double t1_ns = 0.0;
    double t2_ns = 0.0;
    double temperature_mk = 0.0;
    double omega_c_ghz = 0.0;
    double wq_min_ghz = 0.0;
    double wq_max_ghz = 0.0;
    double delta_min_ghz = 0.0;
    double delta_max_ghz = 0.0;

    // internal-unit views
    SystemParams system_params(double omega_q_ghz) const;
    NoiseModel noise_model() const;
    double omega_c_rabi() const;  // rad/ns
};

// Throws InvalidParameterError for unknown names.
PresetValues load_preset(const std::string& name);

// FNV-1a over every string in the table; pinned by a test.
unsigned long long preset_table_checksum();

}  // namespace deit

#endif
