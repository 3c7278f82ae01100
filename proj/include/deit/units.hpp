#ifndef DEIT_UNITS_HPP
#define DEIT_UNITS_HPP

// Internal unit system: angular frequencies and rates in rad/ns, time in ns,
// temperature in kelvin. The CLI boundary speaks ordinary frequency (GHz),
// lifetimes (ns) and millikelvin; conversion happens exactly once at parse
// time.

namespace deit {

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kTwoPi = 2.0 * kPi;
inline constexpr double kQuarterPi = kPi / 4.0;
inline constexpr double kSqrt2 = 1.41421356237309504880;

// k_B/hbar expressed so that beta*omega is dimensionless with omega in rad/ns.
inline constexpr double kBoltzmannOverHbar = kTwoPi * 20.837;  // rad/ns per K

constexpr double ghz_to_rad_ns(double f_ghz) { return kTwoPi * f_ghz; }
constexpr double rad_ns_to_ghz(double omega) { return omega / kTwoPi; }
constexpr double mk_to_kelvin(double t_mk) { return t_mk * 1e-3; }
constexpr double lifetime_ns_to_rate(double t_ns) { return 1.0 / t_ns; }

// beta * omega with beta = hbar/(k_B T)
constexpr double beta_omega(double omega_rad_ns, double temperature_k) {
    return omega_rad_ns / (kBoltzmannOverHbar * temperature_k);
}

}  // namespace deit

#endif
