// SPDX-License-Identifier: MIT
#pragma once

#include "hexp/pade.hpp"
#include "hexp/processes.hpp"
#include "hexp/quadrature.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

namespace hexp {

/// One exponential mixture component of a Levy density: amplitude * e^{-rate x}
/// on its half-line. Positive-side rates are > 0, negative-side rates < 0.
struct ExpTerm {
    BigReal amplitude;
    BigReal rate;
};

enum class Cutoff { HZero, HLinear };

struct Provenance {
    nlohmann::json model;
    int n = 0;
    int k = -1; // -1 for the two-sided scheme
    std::string variant;
};

/// Levy process with hyperexponential jumps. Internally the drift is stored
/// in the h==0 convention (hyperexponential jumps always have finite
/// variation); `cutoff` records the convention used for reporting the
/// characteristic triple.
struct HyperExpProcess {
    BigReal drift0;
    BigReal sigma2;
    std::vector<ExpTerm> pos; // rates > 0
    std::vector<ExpTerm> neg; // rates < 0
    Cutoff cutoff = Cutoff::HZero;
    std::optional<Provenance> provenance;

    /// Total jump intensity (mixtures are finite activity).
    BigReal intensity() const;
    /// Integral of x pi(x) dx over the real line.
    BigReal mean_jump() const;
    /// Triple drift under the declared cutoff convention.
    BigReal drift_reported() const;

    BigComplex laplace(const BigComplex& z) const;
    BigReal laplace_real(const BigReal& z) const;
    std::complex<double> laplace_d(const std::complex<double>& z) const;

    /// pi(x) for x != 0.
    BigReal levy_density(const BigReal& x) const;

    /// Cumulants 1..j_max (index 0 unused): kappa_j = j! [z^j] psi.
    std::vector<BigReal> cumulants(int j_max) const;

    nlohmann::json to_json(int digits = 30) const;
    static HyperExpProcess from_json(const nlohmann::json& j);
};

/// Cumulants 1..j_max of a target model (j! times its Taylor coefficients).
std::vector<BigReal> model_cumulants(const LevyModel& model, int j_max);

struct CumulantRow {
    int order;
    BigReal model_value;
    BigReal approx_value;
    bool matched; // order within the scheme's matching guarantee
};

struct ApproximationReport {
    int n = 0;
    int k = -1;
    std::string variant;
    RationalFunction psi; // the [m/n] rational Laplace exponent
    QuadratureRule rule;
    std::vector<CumulantRow> cumulants;
};

/// Two-sided scheme: order-n Gaussian quadrature of |v|^3 mu*(dv) built from
/// Taylor coefficients c_2..c_{2n+1}; the rational exponent is the [n+1/n]
/// approximant and the first 2n+1 cumulants match.
std::pair<HyperExpProcess, ApproximationReport> approx_two_sided(const LevyModel& model, int n);

/// One-sided scheme with k in {0,1,2} (k >= 1 when the target has jumps of
/// infinite variation): quadrature of v^{2+k} mu*(dv) from coefficients
/// c_{k+1}..c_{k+2n}; the exponent is the [n+k/n] approximant.
std::pair<HyperExpProcess, ApproximationReport> approx_one_sided(const LevyModel& model, int n,
                                                                 int k);

/// Closed-form [n+k/n] approximant of -log(1-z): denominator
/// z^n P_n^{(0,k)}(2/z-1); k=0 numerator from the harmonic-number formula,
/// k in {1,2} numerators from the order conditions.
RationalFunction approx_gamma_explicit(int n, int k);

/// Closed-form [n+k/n] approximant of Gamma(-alpha)((1-z)^alpha - 1):
/// denominator z^n P_n^{(alpha,k-alpha)}(2/z-1), numerator from the
/// factorial/rising-factorial sum.
RationalFunction approx_tempered_stable_explicit(const BigReal& alpha, int n, int k);

/// X = pos - mirror(neg) + extra_drift * t; both inputs spectrally positive.
HyperExpProcess compose_difference(const HyperExpProcess& pos, const HyperExpProcess& neg,
                                   const BigReal& extra_drift);

/// Brownian motion sigma W + a t time-changed by a hyperexponential
/// subordinator: each pole beta spawns the two real roots of
/// sigma^2 z^2/2 + a z = beta.
HyperExpProcess subordinate_brownian(const HyperExpProcess& sub, const BigReal& sigma_bm,
                                     const BigReal& a_bm);

/// psi_new(z) = lambda psi(c z) for c, lambda > 0.
HyperExpProcess rescale(const HyperExpProcess& hep, const BigReal& space_scale,
                        const BigReal& rate_scale);

HyperExpProcess with_extra_drift(HyperExpProcess hep, const BigReal& drift);

struct ApproxOptions {
    bool two_sided = false;
    int n = 1;
    int k = 1;
    int n_neg = -1; // defaults to n
    int k_neg = -1; // defaults to k
};

/// Model-aware construction: direct schemes for one-sided models, the
/// difference-of-one-sided composition for VG/CGMY, and the subordinated
/// Brownian route for NIG.
HyperExpProcess approximate_model(const LevyModel& model, const ApproxOptions& opt);

} // namespace hexp
