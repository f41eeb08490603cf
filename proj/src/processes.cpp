// SPDX-License-Identifier: MIT
#include "hexp/processes.hpp"

#include "hexp/errors.hpp"

#include <cmath>

namespace hexp {

namespace {

/// Rising factorial (x)_i = x (x+1) ... (x+i-1).
BigReal rising(const BigReal& x, int i) {
    BigReal r(1L);
    for (int t = 0; t < i; ++t) r *= x + t;
    return r;
}

BigReal factorial(int i) {
    BigReal r(1L);
    for (int t = 2; t <= i; ++t) r *= t;
    return r;
}

void check_real_in_strip(const Strip& s, const BigReal& re) {
    bool low_ok = s.rho_hat_infinite || re > -s.rho_hat;
    if (!low_ok || !(re < s.rho))
        raise(ErrorKind::OutsideStrip,
              "z = " + re.to_string(8) + " lies on a branch cut (strip is (-" +
                  (s.rho_hat_infinite ? std::string("inf") : s.rho_hat.to_string(6)) + ", " +
                  s.rho.to_string(6) + "))");
}

/// Truncated composition f(w(u)) where w(u) = w1 u + w2 u^2 and f is given
/// by coefficients f_0..f_N.
std::vector<BigReal> compose_quadratic(const std::vector<BigReal>& f, const BigReal& w1,
                                       const BigReal& w2, int order) {
    std::vector<BigReal> acc(order + 1, BigReal(0L));
    for (int i = static_cast<int>(f.size()) - 1; i >= 0; --i) {
        std::vector<BigReal> next(order + 1, BigReal(0L));
        for (int u = 0; u <= order; ++u) {
            if (acc[u].is_zero()) continue;
            if (u + 1 <= order) next[u + 1] += acc[u] * w1;
            if (u + 2 <= order) next[u + 2] += acc[u] * w2;
        }
        next[0] += f[i];
        acc = std::move(next);
    }
    return acc;
}

} // namespace

LevyModel LevyModel::gamma() {
    LevyModel m;
    m.family_ = Family::Gamma;
    return m;
}

LevyModel LevyModel::tempered_stable(BigReal alpha) {
    if (!(alpha > BigReal(0L)) || !(alpha < BigReal(2L)) || alpha == BigReal(1L))
        raise(ErrorKind::InvalidArgument, "tempered stable index must lie in (0,1) u (1,2)");
    LevyModel m;
    m.family_ = Family::TemperedStable;
    m.p1_ = std::move(alpha);
    return m;
}

LevyModel LevyModel::vg_direct(BigReal a, BigReal ahat, BigReal nu, std::optional<BigReal> mu) {
    if (!(a > BigReal(0L)) || !(ahat > BigReal(0L)) || !(nu > BigReal(0L)))
        raise(ErrorKind::InvalidArgument, "VG requires a, ahat, nu > 0");
    LevyModel m;
    m.family_ = Family::VG;
    m.p1_ = std::move(a);
    m.p2_ = std::move(ahat);
    m.p3_ = std::move(nu);
    m.mu_ = std::move(mu);
    return m;
}

LevyModel LevyModel::vg_theta(const BigReal& theta, const BigReal& sigma, BigReal nu,
                              std::optional<BigReal> mu) {
    // mu_p = sqrt(theta^2 + 2 sigma^2/nu)/2 + theta/2, mu_n = mu_p - theta;
    // a = 1/(mu_p nu), ahat = 1/(mu_n nu)
    BigReal mu_p = sqrt(theta * theta + BigReal(2L) * sigma * sigma / nu) / 2L + theta / 2L;
    BigReal mu_n = mu_p - theta;
    return vg_direct(BigReal(1L) / (mu_p * nu), BigReal(1L) / (mu_n * nu), nu, std::move(mu));
}

LevyModel LevyModel::cgmy(BigReal C, BigReal G, BigReal M, BigReal Y, std::optional<BigReal> mu) {
    if (!(C > BigReal(0L)) || !(G > BigReal(0L)) || !(M > BigReal(0L)))
        raise(ErrorKind::InvalidArgument, "CGMY requires C, G, M > 0");
    if (!(Y > BigReal(0L)) || !(Y < BigReal(2L)) || Y == BigReal(1L))
        raise(ErrorKind::InvalidArgument, "CGMY exponent Y must lie in (0,1) u (1,2)");
    LevyModel m;
    m.family_ = Family::CGMY;
    m.p1_ = std::move(C);
    m.p2_ = std::move(G);
    m.p3_ = std::move(M);
    m.p4_ = std::move(Y);
    m.mu_ = std::move(mu);
    return m;
}

LevyModel LevyModel::nig_subordinator(BigReal kappa) {
    if (!(kappa > BigReal(0L)))
        raise(ErrorKind::InvalidArgument, "inverse Gaussian time change requires kappa > 0");
    LevyModel m;
    m.family_ = Family::NIGSubordinator;
    m.p1_ = std::move(kappa);
    return m;
}

LevyModel LevyModel::nig(BigReal kappa, BigReal sigma, BigReal a_bm, std::optional<BigReal> mu) {
    if (!(kappa > BigReal(0L)) || !(sigma > BigReal(0L)))
        raise(ErrorKind::InvalidArgument, "NIG requires kappa, sigma > 0");
    LevyModel m;
    m.family_ = Family::NIG;
    m.p1_ = std::move(kappa);
    m.p2_ = std::move(sigma);
    m.p3_ = std::move(a_bm);
    m.mu_ = std::move(mu);
    return m;
}

LevyModel LevyModel::custom(CustomModel cm) {
    LevyModel m;
    m.family_ = Family::Custom;
    m.custom_ = std::make_shared<CustomModel>(std::move(cm));
    return m;
}

std::string LevyModel::name() const {
    switch (family_) {
        case Family::Gamma:           return "gamma";
        case Family::TemperedStable:  return "tempered_stable";
        case Family::VG:              return "vg";
        case Family::CGMY:            return "cgmy";
        case Family::NIGSubordinator: return "nig_subordinator";
        case Family::NIG:             return "nig";
        case Family::Custom:          return custom_->name;
    }
    return "?";
}

Strip LevyModel::strip() const {
    switch (family_) {
        case Family::Gamma:
        case Family::TemperedStable:
            return Strip{BigReal(0L), BigReal(1L), true};
        case Family::VG:
            return Strip{p2_, p1_, false};
        case Family::CGMY:
            return Strip{p2_, p3_, false};
        case Family::NIGSubordinator:
            return Strip{BigReal(0L), BigReal(1L) / p1_, true};
        case Family::NIG: {
            // roots of 1 - kappa (sigma^2 z^2/2 + a z) = 0
            const BigReal &kappa = p1_, &sigma = p2_, &a = p3_;
            BigReal disc = sqrt(a * a + BigReal(2L) * sigma * sigma / kappa);
            BigReal s2 = sigma * sigma;
            return Strip{(disc + a) / s2, (disc - a) / s2, false};
        }
        case Family::Custom:
            return custom_->strip;
    }
    return {};
}

bool LevyModel::one_sided() const { return strip().rho_hat_infinite; }

bool LevyModel::finite_variation() const {
    switch (family_) {
        case Family::Gamma:
        case Family::VG:
        case Family::NIGSubordinator:
            return true;
        case Family::TemperedStable:
            return p1_ < BigReal(1L);
        case Family::CGMY:
            return p4_ < BigReal(1L);
        case Family::NIG:
            return false;
        case Family::Custom:
            return custom_->finite_variation;
    }
    return false;
}

BigComplex LevyModel::laplace(const BigComplex& z) const {
    if (z.im.is_zero()) check_real_in_strip(strip(), z.re);
    BigComplex one(BigReal(1L));
    switch (family_) {
        case Family::Gamma:
            return -log(one - z);
        case Family::TemperedStable:
            return tgamma(-p1_) * (pow(one - z, p1_) - one);
        case Family::VG: {
            BigComplex acc = mu_or_zero() * z;
            BigReal inv_nu = BigReal(1L) / p3_;
            acc = acc - inv_nu * log(one - BigReal(1L) / p1_ * z);
            acc = acc - inv_nu * log(one + BigReal(1L) / p2_ * z);
            return acc;
        }
        case Family::CGMY: {
            const BigReal &C = p1_, &G = p2_, &M = p3_, &Y = p4_;
            BigComplex acc = mu_or_zero() * z;
            BigComplex s = pow(BigComplex(M) - z, Y) - BigComplex(pow(M, Y)) +
                           pow(BigComplex(G) + z, Y) - BigComplex(pow(G, Y));
            return acc + (C * tgamma(-Y)) * s;
        }
        case Family::NIGSubordinator:
            return BigReal(1L) / p1_ * (one - sqrt(one - p1_ * z));
        case Family::NIG: {
            const BigReal &kappa = p1_, &sigma = p2_, &a = p3_;
            BigComplex w = (sigma * sigma / 2L) * (z * z) + a * z;
            BigComplex ig = BigReal(1L) / kappa * (one - sqrt(one - kappa * w));
            return mu_or_zero() * z + ig;
        }
        case Family::Custom:
            return custom_->psi(z);
    }
    return BigComplex(0L);
}

BigReal LevyModel::laplace_real(const BigReal& z) const { return laplace(BigComplex(z)).re; }

std::complex<double> LevyModel::laplace_d(const std::complex<double>& z) const {
    using C = std::complex<double>;
    switch (family_) {
        case Family::Gamma:
            return -std::log(1.0 - z);
        case Family::TemperedStable: {
            double alpha = p1_.to_double();
            return std::tgamma(-alpha) * (std::pow(1.0 - z, alpha) - 1.0);
        }
        case Family::VG: {
            double a = p1_.to_double(), ahat = p2_.to_double(), nu = p3_.to_double();
            double mu = mu_or_zero().to_double();
            return mu * z - std::log(1.0 - z / a) / nu - std::log(1.0 + z / ahat) / nu;
        }
        case Family::CGMY: {
            double C_ = p1_.to_double(), G = p2_.to_double(), M = p3_.to_double(),
                   Y = p4_.to_double();
            double mu = mu_or_zero().to_double();
            C s = std::pow(M - z, Y) - std::pow(M, Y) + std::pow(G + z, Y) - std::pow(G, Y);
            return mu * z + C_ * std::tgamma(-Y) * s;
        }
        case Family::NIGSubordinator: {
            double kappa = p1_.to_double();
            return (1.0 - std::sqrt(1.0 - kappa * z)) / kappa;
        }
        case Family::NIG: {
            double kappa = p1_.to_double(), sigma = p2_.to_double(), a = p3_.to_double();
            double mu = mu_or_zero().to_double();
            C w = 0.5 * sigma * sigma * z * z + a * z;
            return mu * z + (1.0 - std::sqrt(1.0 - kappa * w)) / kappa;
        }
        case Family::Custom: {
            BigComplex r = custom_->psi(BigComplex(BigReal(z.real()), BigReal(z.imag())));
            return r.to_complex();
        }
    }
    return {};
}

std::vector<BigReal> LevyModel::taylor(int order) const { return taylor_at(BigReal(0L), order); }

std::vector<BigReal> LevyModel::taylor_at(const BigReal& s, int order) const {
    if (order < 1) raise(ErrorKind::InvalidArgument, "taylor order must be >= 1");
    if (!s.is_zero()) {
        Strip st = strip();
        bool low_ok = st.rho_hat_infinite || s > -st.rho_hat;
        if (!low_ok || !(s < st.rho))
            raise(ErrorKind::OutsideStrip, "expansion center outside the strip");
    }
    std::vector<BigReal> c(order + 1, BigReal(0L));
    switch (family_) {
        case Family::Gamma: {
            BigReal q = BigReal(1L) - s;
            for (int i = 1; i <= order; ++i) c[i] = BigReal(1L) / (pow(q, static_cast<long>(i)) * i);
            break;
        }
        case Family::TemperedStable: {
            const BigReal& alpha = p1_;
            BigReal g = tgamma(-alpha);
            BigReal q = BigReal(1L) - s;
            for (int i = 1; i <= order; ++i)
                c[i] = g * rising(-alpha, i) * pow(q, alpha - i) / factorial(i);
            break;
        }
        case Family::VG: {
            BigReal inv_nu = BigReal(1L) / p3_;
            BigReal qp = p1_ - s, qn = p2_ + s;
            for (int i = 1; i <= order; ++i) {
                BigReal sign = (i % 2 == 0) ? BigReal(1L) : BigReal(-1L);
                c[i] = inv_nu / i *
                       (BigReal(1L) / pow(qp, static_cast<long>(i)) +
                        sign / pow(qn, static_cast<long>(i)));
            }
            c[1] += mu_or_zero();
            break;
        }
        case Family::CGMY: {
            const BigReal &C = p1_, &G = p2_, &M = p3_, &Y = p4_;
            BigReal g = C * tgamma(-Y);
            BigReal qp = M - s, qn = G + s;
            for (int i = 1; i <= order; ++i) {
                BigReal sign = (i % 2 == 0) ? BigReal(1L) : BigReal(-1L);
                c[i] = g * rising(-Y, i) / factorial(i) * (pow(qp, Y - i) + sign * pow(qn, Y - i));
            }
            c[1] += mu_or_zero();
            break;
        }
        case Family::NIGSubordinator: {
            const BigReal& kappa = p1_;
            BigReal q = BigReal(1L) - kappa * s;
            BigReal sq = sqrt(q);
            for (int i = 1; i <= order; ++i)
                c[i] = -(sq / kappa) * rising(BigReal(-0.5), i) * pow(kappa / q, static_cast<long>(i)) /
                       factorial(i);
            break;
        }
        case Family::NIG: {
            const BigReal &kappa = p1_, &sigma = p2_, &a = p3_;
            BigReal s2h = sigma * sigma / 2L;
            BigReal ws = s2h * s * s + a * s;
            // IG coefficients at ws, then compose with w(s+u)-w(s) = (a + sigma^2 s) u + s2h u^2
            LevyModel ig = nig_subordinator(kappa);
            std::vector<BigReal> f = ig.taylor_at(ws, order);
            c = compose_quadratic(f, a + sigma * sigma * s, s2h, order);
            c[0] = BigReal(0L);
            c[1] += mu_or_zero();
            break;
        }
        case Family::Custom: {
            c = custom_->coeffs_at(s, order);
            c.resize(order + 1, BigReal(0L));
            c[0] = BigReal(0L);
            break;
        }
    }
    return c;
}

LevyModel LevyModel::with_mu(BigReal mu) const {
    if (family_ != Family::VG && family_ != Family::CGMY && family_ != Family::NIG)
        raise(ErrorKind::InvalidArgument, "model family '" + name() + "' has no drift parameter");
    LevyModel m = *this;
    m.mu_ = std::move(mu);
    return m;
}

LevyModel esscher_shift(const LevyModel& model, const BigReal& a_shift) {
    Strip st = model.strip();
    bool low_ok = st.rho_hat_infinite || a_shift > -st.rho_hat;
    if (!low_ok || !(a_shift < st.rho))
        raise(ErrorKind::OutsideStrip, "Esscher shift " + a_shift.to_string(8) + " outside strip");
    if (a_shift.is_zero()) return model;

    CustomModel cm;
    cm.name = "esscher(" + model.name() + ", " + a_shift.to_string(8) + ")";
    cm.strip = Strip{st.rho_hat + a_shift, st.rho - a_shift, st.rho_hat_infinite};
    cm.finite_variation = model.finite_variation();
    LevyModel base = model;
    BigReal shift = a_shift;
    cm.coeffs_at = [base, shift](const BigReal& center, int count) {
        return base.taylor_at(shift + center, count);
    };
    cm.psi = [base, shift](const BigComplex& z) {
        return base.laplace(BigComplex(shift) + z) - base.laplace(BigComplex(shift));
    };
    return LevyModel::custom(std::move(cm));
}

BigReal martingale_drift(const LevyModel& model, const BigReal& r) {
    Strip st = model.strip();
    if (!(st.rho > BigReal(1L)))
        raise(ErrorKind::StripTooNarrow,
              "martingale calibration needs rho > 1, got rho = " + st.rho.to_string(6));
    LevyModel zero_mu = model;
    switch (model.family()) {
        case Family::VG:
        case Family::CGMY:
        case Family::NIG:
            zero_mu = model.with_mu(BigReal(0L));
            break;
        default:
            break;
    }
    return r - zero_mu.laplace_real(BigReal(1L));
}

namespace {

BigReal get_param(const nlohmann::json& j, const char* key) {
    if (!j.contains(key))
        raise(ErrorKind::InvalidArgument, std::string("model spec missing field '") + key + "'");
    const auto& v = j.at(key);
    if (v.is_string()) return BigReal(v.get<std::string>());
    if (v.is_number()) return BigReal(v.get<double>());
    raise(ErrorKind::InvalidArgument, std::string("field '") + key + "' must be a number or string");
}

std::optional<BigReal> get_opt(const nlohmann::json& j, const char* key) {
    if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
    return get_param(j, key);
}

} // namespace

nlohmann::json LevyModel::to_json() const {
    nlohmann::json j;
    j["family"] = name();
    auto put = [&j](const char* k, const BigReal& v) { j[k] = v.to_string(30); };
    switch (family_) {
        case Family::Gamma:
            break;
        case Family::TemperedStable:
            put("alpha", p1_);
            break;
        case Family::VG:
            put("a", p1_);
            put("ahat", p2_);
            put("nu", p3_);
            if (mu_) put("mu", *mu_);
            break;
        case Family::CGMY:
            put("C", p1_);
            put("G", p2_);
            put("M", p3_);
            put("Y", p4_);
            if (mu_) put("mu", *mu_);
            break;
        case Family::NIGSubordinator:
            put("kappa", p1_);
            break;
        case Family::NIG:
            put("kappa", p1_);
            put("sigma", p2_);
            put("a_bm", p3_);
            if (mu_) put("mu", *mu_);
            break;
        case Family::Custom:
            raise(ErrorKind::InvalidArgument, "custom models have no serialized form");
    }
    return j;
}

LevyModel LevyModel::from_json(const nlohmann::json& j) {
    if (j.contains("precision")) set_default_digits(j.at("precision").get<int>());
    std::string fam = j.at("family").get<std::string>();
    if (fam == "gamma") return gamma();
    if (fam == "tempered_stable" || fam == "ts") return tempered_stable(get_param(j, "alpha"));
    if (fam == "vg") {
        if (j.contains("theta"))
            return vg_theta(get_param(j, "theta"), get_param(j, "sigma"), get_param(j, "nu"),
                            get_opt(j, "mu"));
        return vg_direct(get_param(j, "a"), get_param(j, "ahat"), get_param(j, "nu"),
                         get_opt(j, "mu"));
    }
    if (fam == "cgmy")
        return cgmy(get_param(j, "C"), get_param(j, "G"), get_param(j, "M"), get_param(j, "Y"),
                    get_opt(j, "mu"));
    if (fam == "nig_subordinator")
        return nig_subordinator(get_param(j, "kappa"));
    if (fam == "nig")
        return nig(get_param(j, "kappa"), get_param(j, "sigma"), get_param(j, "a_bm"),
                   get_opt(j, "mu"));
    raise(ErrorKind::InvalidArgument, "unknown model family '" + fam + "'");
}

} // namespace hexp
