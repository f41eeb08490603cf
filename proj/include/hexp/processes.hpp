// SPDX-License-Identifier: MIT
#pragma once

#include "hexp/bigcomplex.hpp"
#include "hexp/bigreal.hpp"

#include <complex>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace hexp {

/// Analyticity strip of a Laplace exponent: psi is analytic on
/// C \ ((-inf, -rho_hat] u [rho, inf)).
struct Strip {
    BigReal rho_hat;       // decay rate of negative jumps (ignored if infinite)
    BigReal rho;           // decay rate of positive jumps
    bool rho_hat_infinite = false;
};

enum class Family { Gamma, TemperedStable, VG, CGMY, NIGSubordinator, NIG, Custom };

struct CustomModel {
    std::string name;
    Strip strip;
    bool finite_variation = true;
    /// Taylor coefficients of psi at `center` (c_0 = 0 handled by caller):
    /// entry i is psi^(i)(center)/i! for i >= 1; entry 0 unused.
    std::function<std::vector<BigReal>(const BigReal& center, int count)> coeffs_at;
    std::function<BigComplex(const BigComplex&)> psi;
};

/// Parametric descriptor of a target process with completely monotone jumps.
class LevyModel {
public:
    static LevyModel gamma();
    static LevyModel tempered_stable(BigReal alpha);
    static LevyModel vg_direct(BigReal a, BigReal ahat, BigReal nu,
                               std::optional<BigReal> mu = std::nullopt);
    static LevyModel vg_theta(const BigReal& theta, const BigReal& sigma, BigReal nu,
                              std::optional<BigReal> mu = std::nullopt);
    static LevyModel cgmy(BigReal C, BigReal G, BigReal M, BigReal Y,
                          std::optional<BigReal> mu = std::nullopt);
    static LevyModel nig_subordinator(BigReal kappa);
    static LevyModel nig(BigReal kappa, BigReal sigma, BigReal a_bm,
                         std::optional<BigReal> mu = std::nullopt);
    static LevyModel custom(CustomModel m);

    Family family() const { return family_; }
    std::string name() const;
    Strip strip() const;
    bool one_sided() const;
    bool finite_variation() const;

    /// psi(z) with principal branches; raises OutsideStrip on the real cuts.
    BigComplex laplace(const BigComplex& z) const;
    BigReal laplace_real(const BigReal& z) const;
    std::complex<double> laplace_d(const std::complex<double>& z) const;

    /// Taylor coefficients c_0..c_N of psi at 0 (c_0 = 0).
    std::vector<BigReal> taylor(int order) const;
    /// Coefficients of z -> psi(s+z) - psi(s) at 0.
    std::vector<BigReal> taylor_at(const BigReal& s, int order) const;

    bool has_mu() const { return mu_.has_value(); }
    BigReal mu_or_zero() const { return mu_.value_or(BigReal(0L)); }
    LevyModel with_mu(BigReal mu) const;

    nlohmann::json to_json() const;
    static LevyModel from_json(const nlohmann::json& j);

    // family parameters (meaningful per family; see constructors)
    BigReal ts_alpha() const { return p1_; }
    BigReal vg_a() const { return p1_; }
    BigReal vg_ahat() const { return p2_; }
    BigReal vg_nu() const { return p3_; }
    BigReal cgmy_C() const { return p1_; }
    BigReal cgmy_G() const { return p2_; }
    BigReal cgmy_M() const { return p3_; }
    BigReal cgmy_Y() const { return p4_; }
    BigReal nig_kappa() const { return p1_; }
    BigReal nig_sigma() const { return p2_; }
    BigReal nig_abm() const { return p3_; }

private:
    LevyModel() = default;
    Family family_ = Family::Gamma;
    BigReal p1_, p2_, p3_, p4_;
    std::optional<BigReal> mu_;
    std::shared_ptr<const CustomModel> custom_;
};

/// Esscher transform: psi~(z) = psi(a+z) - psi(a), strip shifted to
/// (rho_hat + a, rho - a). `a_shift` must lie strictly inside the strip.
LevyModel esscher_shift(const LevyModel& model, const BigReal& a_shift);

/// Drift mu such that the completed model satisfies psi(1) = r.
/// Raises StripTooNarrow when rho <= 1.
BigReal martingale_drift(const LevyModel& model_without_mu, const BigReal& r);

} // namespace hexp
