// SPDX-License-Identifier: MIT
#pragma once

#include "hexp/hyperexp.hpp"
#include "hexp/processes.hpp"

#include <complex>
#include <functional>
#include <vector>

namespace hexp {

enum class Scheme { Trapezoid, Simpson };

/// Discretization of the damped Fourier inversion integrals. A NaN damping
/// selects the operation default (0.5 for CDFs, the midpoint of (1, rho)
/// for calls). Integration runs in IEEE double precision.
struct InversionGrid {
    double damping = std::numeric_limits<double>::quiet_NaN();
    double u_max = 2000.0;
    double du = 0.05;
    Scheme scheme = Scheme::Simpson;
    double tail_tol = 1e-6; // truncation-error budget
};

/// Coefficients of psi(z) = r2 z^2 + r1 z + r0 + O(1/z) for z -> infinity
/// along vertical lines; computed symbolically from the mixture fields.
struct AsymptoticTriple {
    double r2;
    double r1;
    double r0;
};

AsymptoticTriple asymptotic_coeffs(const HyperExpProcess& hep);

/// Double-precision evaluation target for the Fourier integrals.
struct FourierTarget {
    std::function<std::complex<double>(const std::complex<double>&)> psi;
    double rho;          // upper analyticity bound (damping validation)
    bool remove_atom;    // finite-activity law: subtract the atom transform
    double r0, r1;       // atom parameters (mass e^{t r0} at x = r1 t)
};

FourierTarget make_target(const LevyModel& model);
FourierTarget make_target(const HyperExpProcess& hep);

/// P(X_t <= x) for x > 0 by damped Fourier inversion with atom removal.
double cdf(const FourierTarget& target, double t, double x, const InversionGrid& grid);
double cdf(const HyperExpProcess& hep, double t, double x, const InversionGrid& grid);
double cdf(const LevyModel& model, double t, double x, const InversionGrid& grid);

/// Vectorized CDF over many thresholds; the integrand is evaluated once per
/// grid point and reused across x via a phase recurrence. Thresholds must be
/// positive.
std::vector<double> cdf_sweep(const FourierTarget& target, double t,
                              const std::vector<double>& xs, const InversionGrid& grid);

/// Damped-payoff European call. For exact models the martingale gate
/// |psi(1)-r| <= 1e-20 is enforced in extended precision (the BigReal
/// overload keeps a decimal rate exact); hyperexponential approximants are
/// priced as-is (they inherit the target's calibrated drift).
double price_european_call(const LevyModel& model, double S0, double K, double T,
                           const BigReal& r, const InversionGrid& grid);
double price_european_call(const LevyModel& model, double S0, double K, double T, double r,
                           const InversionGrid& grid);
double price_european_call(const HyperExpProcess& hep, double S0, double K, double T, double r,
                           const InversionGrid& grid);

/// Put priced by integrating the CDF over strikes: an independent route used
/// to validate put-call parity.
double price_european_put_cdf(const FourierTarget& target, double S0, double K, double T,
                              double r, const InversionGrid& grid);

} // namespace hexp
