#ifndef DEIT_ERRORS_HPP
#define DEIT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace deit {

// Invalid physical inputs (negative frequencies, bad sweep specs, ...).
class InvalidParameterError : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

// eta = 0 together with omega_q = omega_0/2: the invariant subspace is
// degenerate and the rotation is undefined; callers should fall back to the
// bare basis.
class DegenerateBasisError : public std::domain_error {
  public:
    using std::domain_error::domain_error;
};

// r2 < r1/2 would imply a negative pure-dephasing rate.
class InvalidRatesError : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

// Susceptibility evaluated where the common-factor denominator vanishes.
class SingularPointError : public std::domain_error {
  public:
    using std::domain_error::domain_error;
};

// F^2 = sqrt(2) makes the critical-spacing expression singular.
class SingularFactorError : public std::domain_error {
  public:
    using std::domain_error::domain_error;
};

// Value not representable even when assembled in the log domain.
class OverflowError : public std::range_error {
  public:
    using std::range_error::range_error;
};

// No finite trapping spacing exists (control amplitude zero).
class NoTrappingSpacingError : public std::domain_error {
  public:
    using std::domain_error::domain_error;
};

// Fixed-step integrator refused: dt too large for the fastest system scale.
class StabilityError : public std::runtime_error {
  public:
    StabilityError(const std::string& what, double suggested_dt)
        : std::runtime_error(what), suggested_dt(suggested_dt) {}
    double suggested_dt;
};

// Bisection bracket does not straddle a regime change.
class NoSignChangeError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

}  // namespace deit

#endif
