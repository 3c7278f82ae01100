#include "deit/presets.hpp"

#include <cstdlib>

#include "deit/units.hpp"

namespace deit {

const std::array<QubitPreset, 3>& preset_table() {
    static const std::array<QubitPreset, 3> table = {{
        {"charge", "7", "0.1", "700", "48", "20", "0.012", "3.3", "3.7", "-0.025", "0.025"},
        {"phase", "6.57", "0.019", "650", "150", "25", "0.00385", "3.2", "3.37", "-0.0065",
         "0.0065"},
        {"flux", "9.907", "0.1", "1900", "1000", "50", "0.00063", "4.7", "5.2", "-0.0015",
         "0.0015"},
    }};
    return table;
}

SystemParams PresetValues::system_params(double omega_q_ghz) const {
    SystemParams p;
    p.omega_q = ghz_to_rad_ns(omega_q_ghz);
    p.omega_0 = ghz_to_rad_ns(omega0_ghz);
    p.eta = ghz_to_rad_ns(eta_ghz);
    return p;
}

NoiseModel PresetValues::noise_model() const {
    return noise_from_measured(lifetime_ns_to_rate(t1_ns), lifetime_ns_to_rate(t2_ns),
                               mk_to_kelvin(temperature_mk), ghz_to_rad_ns(omega0_ghz));
}

double PresetValues::omega_c_rabi() const { return ghz_to_rad_ns(omega_c_ghz); }

PresetValues load_preset(const std::string& name) {
    for (const QubitPreset& p : preset_table()) {
        if (name == p.name) {
            PresetValues v;
            v.name = p.name;
            v.omega0_ghz = std::strtod(p.omega0_ghz, nullptr);
            v.eta_ghz = std::strtod(p.eta_ghz, nullptr);
            v.t1_ns = std::strtod(p.t1_ns, nullptr);
            v.t2_ns = std::strtod(p.t2_ns, nullptr);
            v.temperature_mk = std::strtod(p.temperature_mk, nullptr);
            v.omega_c_ghz = std::strtod(p.omega_c_ghz, nullptr);
            v.wq_min_ghz = std::strtod(p.wq_min_ghz, nullptr);
            v.wq_max_ghz = std::strtod(p.wq_max_ghz, nullptr);
            v.delta_min_ghz = std::strtod(p.delta_min_ghz, nullptr);
            v.delta_max_ghz = std::strtod(p.delta_max_ghz, nullptr);
            return v;
        }
    }
    throw InvalidParameterError("unknown preset: " + name);
}

unsigned long long preset_table_checksum() {
    unsigned long long hash = 1469598103934665603ULL;
    auto mix = [&hash](const char* s) {
        for (; *s; ++s) {
            hash ^= static_cast<unsigned char>(*s);
            hash *= 1099511628211ULL;
        }
        hash ^= '\n';
        hash *= 1099511628211ULL;
    };
    for (const QubitPreset& p : preset_table()) {
        mix(p.name);
        mix(p.omega0_ghz);
        mix(p.eta_ghz);
        mix(p.t1_ns);
        mix(p.t2_ns);
        mix(p.temperature_mk);
        mix(p.omega_c_ghz);
        mix(p.wq_min_ghz);
        mix(p.wq_max_ghz);
        mix(p.delta_min_ghz);
        mix(p.delta_max_ghz);
    }
    return hash;
}

}  // namespace deit
