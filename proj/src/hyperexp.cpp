// SPDX-License-Identifier: MIT
#include "hexp/hyperexp.hpp"

#include "hexp/errors.hpp"

#include <algorithm>

namespace hexp {

namespace {

BigReal binom_real(const BigReal& a, long k) {
    BigReal r(1L);
    for (long t = 0; t < k; ++t) r *= (a - t) / (t + 1);
    return r;
}

BigReal binom_int(long a, long k) { return binom_real(BigReal(a), k); }

BigReal rising(const BigReal& x, int i) {
    BigReal r(1L);
    for (int t = 0; t < i; ++t) r *= x + t;
    return r;
}

} // namespace

BigReal HyperExpProcess::intensity() const {
    BigReal s(0L);
    for (const auto& t : pos) s += t.amplitude / t.rate;
    for (const auto& t : neg) s += t.amplitude / abs(t.rate);
    return s;
}

BigReal HyperExpProcess::mean_jump() const {
    BigReal s(0L);
    for (const auto& t : pos) s += t.amplitude / (t.rate * t.rate);
    for (const auto& t : neg) s -= t.amplitude / (t.rate * t.rate);
    return s;
}

BigReal HyperExpProcess::drift_reported() const {
    return cutoff == Cutoff::HZero ? drift0 : drift0 + mean_jump();
}

BigComplex HyperExpProcess::laplace(const BigComplex& z) const {
    int p = default_digits();
    BigReal guard = BigReal::pow10(-(p / 2));
    BigComplex acc = drift0 * z + (sigma2 / 2L) * (z * z);
    for (const auto& t : pos) {
        BigComplex d = BigComplex(t.rate) - z;
        if (abs(d) <= guard * abs(t.rate))
            raise(ErrorKind::PoleEvaluation, "z hits the pole at " + t.rate.to_string(8));
        acc = acc + (t.amplitude / t.rate) * z / d;
    }
    for (const auto& t : neg) {
        BigComplex d = z - BigComplex(t.rate);
        if (abs(d) <= guard * abs(t.rate))
            raise(ErrorKind::PoleEvaluation, "z hits the pole at " + t.rate.to_string(8));
        acc = acc + (t.amplitude / t.rate) * z / d;
    }
    return acc;
}

BigReal HyperExpProcess::laplace_real(const BigReal& z) const {
    return laplace(BigComplex(z)).re;
}

std::complex<double> HyperExpProcess::laplace_d(const std::complex<double>& z) const {
    std::complex<double> acc = drift0.to_double() * z + 0.5 * sigma2.to_double() * z * z;
    for (const auto& t : pos) {
        double beta = t.rate.to_double();
        acc += t.amplitude.to_double() / beta * z / (beta - z);
    }
    for (const auto& t : neg) {
        double beta = t.rate.to_double();
        acc += t.amplitude.to_double() / beta * z / (z - beta);
    }
    return acc;
}

BigReal HyperExpProcess::levy_density(const BigReal& x) const {
    if (x.is_zero()) raise(ErrorKind::InvalidArgument, "Levy density is evaluated away from 0");
    BigReal s(0L);
    if (x > BigReal(0L)) {
        for (const auto& t : pos) s += t.amplitude * exp(-t.rate * x);
    } else {
        for (const auto& t : neg) s += t.amplitude * exp(-t.rate * x);
    }
    return s;
}

std::vector<BigReal> HyperExpProcess::cumulants(int j_max) const {
    std::vector<BigReal> kappa(j_max + 1, BigReal(0L));
    BigReal fact(1L);
    for (int j = 1; j <= j_max; ++j) {
        fact *= j;
        BigReal coeff(0L);
        if (j == 1) coeff += drift0;
        if (j == 2) coeff += sigma2 / 2L;
        for (const auto& t : pos) coeff += t.amplitude / pow(t.rate, static_cast<long>(j + 1));
        for (const auto& t : neg) coeff -= t.amplitude / pow(t.rate, static_cast<long>(j + 1));
        kappa[j] = fact * coeff;
    }
    return kappa;
}

std::vector<BigReal> model_cumulants(const LevyModel& model, int j_max) {
    auto c = model.taylor(j_max);
    std::vector<BigReal> kappa(j_max + 1, BigReal(0L));
    BigReal fact(1L);
    for (int j = 1; j <= j_max; ++j) {
        fact *= j;
        kappa[j] = fact * c[j];
    }
    return kappa;
}

nlohmann::json HyperExpProcess::to_json(int digits) const {
    nlohmann::json j;
    j["drift"] = drift_reported().to_string(digits);
    j["sigma2"] = sigma2.to_string(digits);
    j["cutoff"] = cutoff == Cutoff::HZero ? "h0" : "hx";
    auto dump_terms = [digits](const std::vector<ExpTerm>& terms) {
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& t : terms)
            arr.push_back({{"amplitude", t.amplitude.to_string(digits)},
                           {"rate", t.rate.to_string(digits)}});
        return arr;
    };
    j["pos_terms"] = dump_terms(pos);
    j["neg_terms"] = dump_terms(neg);
    if (provenance) {
        j["provenance"] = {{"model", provenance->model},
                           {"n", provenance->n},
                           {"k", provenance->k},
                           {"variant", provenance->variant}};
    }
    return j;
}

HyperExpProcess HyperExpProcess::from_json(const nlohmann::json& j) {
    HyperExpProcess h;
    auto num = [](const nlohmann::json& v) {
        return v.is_string() ? BigReal(v.get<std::string>()) : BigReal(v.get<double>());
    };
    auto load_terms = [&num](const nlohmann::json& arr, bool negative) {
        std::vector<ExpTerm> terms;
        for (const auto& e : arr) {
            ExpTerm t{num(e.at("amplitude")), num(e.at("rate"))};
            if (!(t.amplitude > BigReal(0L)))
                raise(ErrorKind::InvalidArgument, "term amplitudes must be positive");
            if (negative ? !(t.rate < BigReal(0L)) : !(t.rate > BigReal(0L)))
                raise(ErrorKind::InvalidArgument, "term rate on the wrong side of zero");
            terms.push_back(std::move(t));
        }
        return terms;
    };
    h.pos = load_terms(j.at("pos_terms"), false);
    h.neg = load_terms(j.at("neg_terms"), true);
    h.sigma2 = num(j.at("sigma2"));
    std::string cut = j.at("cutoff").get<std::string>();
    if (cut != "h0" && cut != "hx")
        raise(ErrorKind::InvalidArgument, "cutoff must be 'h0' or 'hx'");
    h.cutoff = cut == "h0" ? Cutoff::HZero : Cutoff::HLinear;
    BigReal reported = num(j.at("drift"));
    h.drift0 = h.cutoff == Cutoff::HZero ? reported : reported - h.mean_jump();
    if (j.contains("provenance")) {
        const auto& pv = j.at("provenance");
        Provenance prov;
        prov.model = pv.value("model", nlohmann::json{});
        prov.n = pv.value("n", 0);
        prov.k = pv.value("k", -1);
        prov.variant = pv.value("variant", "");
        h.provenance = std::move(prov);
    }
    return h;
}

namespace {

/// Rational exponent assembled from a quadrature rule:
/// psi(z) = sum_{j=1..k} c_j z^j + z^{k+1} sum_i w_i / (1 - x_i z).
RationalFunction rational_from_rule(const std::vector<BigReal>& head, int k,
                                    const QuadratureRule& rule) {
    Poly q(std::vector<BigReal>{BigReal(1L)});
    for (const auto& x : rule.nodes)
        q = q * Poly(std::vector<BigReal>{BigReal(1L), -x});

    Poly num;
    for (size_t i = 0; i < rule.nodes.size(); ++i) {
        Poly term(std::vector<BigReal>{rule.weights[i]});
        for (size_t jj = 0; jj < rule.nodes.size(); ++jj) {
            if (jj == i) continue;
            term = term * Poly(std::vector<BigReal>{BigReal(1L), -rule.nodes[jj]});
        }
        num = num + term;
    }
    // shift by z^{k+1}
    std::vector<BigReal> shifted(k + 1, BigReal(0L));
    shifted.insert(shifted.end(), num.c.begin(), num.c.end());
    num = Poly(std::move(shifted));

    Poly head_poly(std::vector<BigReal>(k + 1, BigReal(0L)));
    for (int j = 1; j <= k; ++j) head_poly.c[j] = head[j];
    num = num + head_poly * q;

    RationalFunction r;
    r.center = BigReal(0L);
    r.num = std::move(num);
    r.den = std::move(q);
    return r;
}

ApproximationReport make_report(const LevyModel& model, const HyperExpProcess& hep, int n, int k,
                                const std::string& variant, RationalFunction psi,
                                QuadratureRule rule, int matched) {
    ApproximationReport rep;
    rep.n = n;
    rep.k = k;
    rep.variant = variant;
    rep.psi = std::move(psi);
    rep.rule = std::move(rule);
    auto mc = model_cumulants(model, matched + 1);
    auto ac = hep.cumulants(matched + 1);
    for (int j = 1; j <= matched + 1; ++j)
        rep.cumulants.push_back(CumulantRow{j, mc[j], ac[j], j <= matched});
    return rep;
}

Provenance make_provenance(const LevyModel& model, int n, int k, const std::string& variant) {
    Provenance prov;
    prov.model = model.family() == Family::Custom ? nlohmann::json{{"family", model.name()}}
                                                  : model.to_json();
    prov.n = n;
    prov.k = k;
    prov.variant = variant;
    return prov;
}

} // namespace

std::pair<HyperExpProcess, ApproximationReport> approx_two_sided(const LevyModel& model, int n) {
    if (n < 1) raise(ErrorKind::InvalidArgument, "approximation order must be >= 1");
    Strip st = model.strip();
    auto c = model.taylor(2 * n + 1);
    std::vector<BigReal> moments(c.begin() + 2, c.begin() + 2 + 2 * n);
    BigReal lo = st.rho_hat_infinite ? BigReal(0L) : -BigReal(1L) / st.rho_hat;
    BigReal hi = BigReal(1L) / st.rho;
    auto rule = gauss_from_moments(moments, lo, hi);

    int p = default_digits();
    BigReal max_node(0L);
    for (const auto& x : rule.nodes) max_node = max(max_node, abs(x));
    BigReal ambiguous = BigReal::pow10(-(p / 2)) * max_node;

    HyperExpProcess hep;
    hep.sigma2 = BigReal(0L);
    hep.cutoff = Cutoff::HLinear;
    for (size_t i = 0; i < rule.nodes.size(); ++i) {
        const BigReal& x = rule.nodes[i];
        const BigReal& w = rule.weights[i];
        if (rule.zero_node[i]) {
            hep.sigma2 += 2L * w;
            continue;
        }
        if (abs(x) < ambiguous)
            raise(ErrorKind::ZeroNodeAmbiguity,
                  "node " + x.to_string(6) + " is numerically indistinguishable from zero; "
                  "raise the precision or change n");
        BigReal ax = abs(x);
        ExpTerm t{w / (ax * ax * ax), BigReal(1L) / x};
        if (x > BigReal(0L)) hep.pos.push_back(std::move(t));
        else hep.neg.push_back(std::move(t));
    }
    auto by_rate = [](const ExpTerm& a, const ExpTerm& b) { return a.rate < b.rate; };
    std::sort(hep.pos.begin(), hep.pos.end(), by_rate);
    std::sort(hep.neg.begin(), hep.neg.end(), by_rate);
    hep.drift0 = c[1] - hep.mean_jump();
    hep.provenance = make_provenance(model, n, -1, "two-sided");

    std::vector<BigReal> head{BigReal(0L), c[1]};
    auto rep = make_report(model, hep, n, -1, "two-sided", rational_from_rule(head, 1, rule),
                           rule, 2 * n + 1);
    return {std::move(hep), std::move(rep)};
}

std::pair<HyperExpProcess, ApproximationReport> approx_one_sided(const LevyModel& model, int n,
                                                                 int k) {
    if (n < 1) raise(ErrorKind::InvalidArgument, "approximation order must be >= 1");
    if (k < 0 || k > 2) raise(ErrorKind::InvalidArgument, "k must be 0, 1 or 2");
    if (!model.one_sided())
        raise(ErrorKind::VariantUnavailable,
              "one-sided schemes need a spectrally positive target; '" + model.name() +
                  "' has negative jumps (use the composed construction)");
    if (!model.finite_variation() && k == 0)
        raise(ErrorKind::VariantUnavailable,
              "k=0 is limited to subordinators with jumps of finite variation; '" + model.name() +
                  "' has jumps of infinite variation (choose k in {1,2})");

    Strip st = model.strip();
    auto c = model.taylor(k + 2 * n);
    std::vector<BigReal> moments(c.begin() + (k + 1), c.begin() + (k + 1) + 2 * n);
    auto rule = gauss_from_moments(moments, BigReal(0L), BigReal(1L) / st.rho);

    BigReal sum_w_over_x(0L), sum_w_over_x2(0L);
    for (size_t i = 0; i < rule.nodes.size(); ++i) {
        sum_w_over_x += rule.weights[i] / rule.nodes[i];
        sum_w_over_x2 += rule.weights[i] / (rule.nodes[i] * rule.nodes[i]);
    }

    HyperExpProcess hep;
    hep.sigma2 = BigReal(0L);
    for (size_t i = 0; i < rule.nodes.size(); ++i) {
        const BigReal& x = rule.nodes[i];
        hep.pos.push_back(ExpTerm{rule.weights[i] / pow(x, static_cast<long>(2 + k)),
                                  BigReal(1L) / x});
    }
    std::sort(hep.pos.begin(), hep.pos.end(),
              [](const ExpTerm& a, const ExpTerm& b) { return a.rate < b.rate; });
    switch (k) {
        case 0:
            hep.drift0 = BigReal(0L);
            hep.cutoff = Cutoff::HZero;
            break;
        case 1:
            hep.drift0 = c[1] - sum_w_over_x;
            hep.cutoff = model.finite_variation() ? Cutoff::HZero : Cutoff::HLinear;
            break;
        case 2: {
            BigReal sigma2 = 2L * (c[2] - sum_w_over_x);
            if (!(sigma2 > BigReal(0L)))
                raise(ErrorKind::NonpositiveGaussian,
                      "k=2 Gaussian coefficient " + sigma2.to_string(6) +
                          " is not positive: precision exhausted or assumptions violated");
            hep.sigma2 = sigma2;
            hep.drift0 = c[1] - sum_w_over_x2;
            hep.cutoff = Cutoff::HLinear;
            break;
        }
    }
    hep.provenance = make_provenance(model, n, k, "one-sided");

    std::vector<BigReal> head(k + 1, BigReal(0L));
    for (int j = 1; j <= k; ++j) head[j] = c[j];
    auto rep = make_report(model, hep, n, k, "one-sided", rational_from_rule(head, k, rule),
                           rule, 2 * n + k);
    return {std::move(hep), std::move(rep)};
}

namespace {

/// q_{n,k}(z) = z^n P_n^{(alpha,k-alpha)}(2/z - 1)
///           = sum_j C(alpha+n, n-j) C(k+n+j, j) (1-z)^j z^{n-j}, un-normalized.
Poly explicit_denominator(const BigReal& alpha, int n, int k) {
    Poly acc;
    for (int j = 0; j <= n; ++j) {
        BigReal cj = binom_real(alpha + n, n - j) * binom_int(k + n + j, j);
        // (1-z)^j z^{n-j}
        Poly term(std::vector<BigReal>{cj});
        for (int t = 0; t < j; ++t)
            term = term * Poly(std::vector<BigReal>{BigReal(1L), BigReal(-1L)});
        std::vector<BigReal> shifted(n - j, BigReal(0L));
        shifted.insert(shifted.end(), term.c.begin(), term.c.end());
        acc = acc + Poly(std::move(shifted));
    }
    return acc;
}

} // namespace

RationalFunction approx_gamma_explicit(int n, int k) {
    if (n < 1 || k < 0 || k > 2)
        raise(ErrorKind::InvalidArgument, "need n >= 1 and k in {0,1,2}");
    Poly q = explicit_denominator(BigReal(0L), n, k);
    BigReal q0 = q.c[0];

    Poly pnum;
    if (k == 0) {
        // 2 sum_j C(n,j)^2 [H_{n-j} - H_j] (1-z)^j
        std::vector<BigReal> harmonic(n + 1, BigReal(0L));
        for (int j = 1; j <= n; ++j) harmonic[j] = harmonic[j - 1] + BigReal::from_ratio(1, j);
        for (int j = 0; j <= n; ++j) {
            BigReal cj = 2L * binom_int(n, j) * binom_int(n, j) * (harmonic[n - j] - harmonic[j]);
            Poly term(std::vector<BigReal>{cj});
            for (int t = 0; t < j; ++t)
                term = term * Poly(std::vector<BigReal>{BigReal(1L), BigReal(-1L)});
            pnum = pnum + term;
        }
    } else {
        // order conditions against the harmonic series
        std::vector<BigReal> pn(n + k + 1, BigReal(0L));
        for (int i = 1; i <= n + k; ++i) {
            BigReal acc(0L);
            for (int l = 0; l <= std::min(i - 1, n); ++l)
                acc += q.c[l] / (i - l); // c_{i-l} = 1/(i-l), c_0 = 0
            pn[i] = acc;
        }
        pnum = Poly(std::move(pn));
    }

    RationalFunction r;
    r.center = BigReal(0L);
    r.num = (BigReal(1L) / q0) * pnum;
    r.den = (BigReal(1L) / q0) * q;
    return r;
}

RationalFunction approx_tempered_stable_explicit(const BigReal& alpha, int n, int k) {
    if (n < 1 || k < 0 || k > 2)
        raise(ErrorKind::InvalidArgument, "need n >= 1 and k in {0,1,2}");
    bool fv = alpha < BigReal(1L);
    if (!(alpha > BigReal(0L)) || !(alpha < BigReal(2L)) || alpha == BigReal(1L))
        raise(ErrorKind::InvalidArgument, "alpha must lie in (0,1) u (1,2)");
    if (!fv && k == 0)
        raise(ErrorKind::VariantUnavailable,
              "k=0 is unavailable for the infinite-variation regime alpha in (1,2)");

    Poly q = explicit_denominator(alpha, n, k);
    BigReal q0 = q.c[0];

    BigReal nfact(1L);
    for (int t = 2; t <= n; ++t) nfact *= t;
    std::vector<BigReal> sum(n + k + 1, BigReal(0L));
    BigReal jfact(1L);
    for (int j = 0; j <= n + k; ++j) {
        if (j > 0) jfact *= j;
        BigReal top(1L);
        for (int t = 2; t <= 2 * n + k - j; ++t) top *= t;
        BigReal bottom = jfact;
        for (int t = 2; t <= n + k - j; ++t) bottom *= t;
        sum[j] = top * rising(-BigReal(n) - alpha, j) / (bottom * nfact);
    }
    Poly pnum = tgamma(-alpha) * (Poly(std::move(sum)) - q);

    RationalFunction r;
    r.center = BigReal(0L);
    r.num = (BigReal(1L) / q0) * pnum;
    r.den = (BigReal(1L) / q0) * q;
    return r;
}

HyperExpProcess compose_difference(const HyperExpProcess& pos, const HyperExpProcess& neg,
                                   const BigReal& extra_drift) {
    if (!pos.neg.empty() || !neg.neg.empty())
        raise(ErrorKind::InvalidArgument,
              "compose_difference expects two spectrally positive processes");
    HyperExpProcess out;
    out.pos = pos.pos;
    for (const auto& t : neg.pos) out.neg.push_back(ExpTerm{t.amplitude, -t.rate});
    std::sort(out.neg.begin(), out.neg.end(),
              [](const ExpTerm& a, const ExpTerm& b) { return a.rate < b.rate; });
    out.drift0 = pos.drift0 - neg.drift0 + extra_drift;
    out.sigma2 = pos.sigma2 + neg.sigma2;
    out.cutoff = (out.sigma2 > BigReal(0L) || pos.cutoff == Cutoff::HLinear ||
                  neg.cutoff == Cutoff::HLinear)
                     ? Cutoff::HLinear
                     : Cutoff::HZero;
    return out;
}

HyperExpProcess subordinate_brownian(const HyperExpProcess& sub, const BigReal& sigma_bm,
                                     const BigReal& a_bm) {
    if (!sub.neg.empty() || !sub.sigma2.is_zero() || sub.drift0 < BigReal(0L))
        raise(ErrorKind::InvalidArgument,
              "time change requires a hyperexponential subordinator (no negative jumps, "
              "no Gaussian part, nonnegative drift)");
    if (!(sigma_bm > BigReal(0L)))
        raise(ErrorKind::InvalidArgument, "Brownian volatility must be positive");
    BigReal s2 = sigma_bm * sigma_bm;
    HyperExpProcess out;
    out.drift0 = sub.drift0 * a_bm;
    out.sigma2 = sub.drift0 * s2;
    for (const auto& t : sub.pos) {
        BigReal disc = a_bm * a_bm + 2L * s2 * t.rate;
        if (!(disc > BigReal(0L)))
            raise(ErrorKind::ComplexPoleRoots,
                  "quadratic for pole " + t.rate.to_string(6) + " has no real roots");
        BigReal root = sqrt(disc);
        BigReal amp = t.amplitude / root;
        out.pos.push_back(ExpTerm{amp, (root - a_bm) / s2});
        out.neg.push_back(ExpTerm{amp, -(root + a_bm) / s2});
    }
    std::sort(out.pos.begin(), out.pos.end(),
              [](const ExpTerm& a, const ExpTerm& b) { return a.rate < b.rate; });
    std::sort(out.neg.begin(), out.neg.end(),
              [](const ExpTerm& a, const ExpTerm& b) { return a.rate < b.rate; });
    out.cutoff = out.sigma2 > BigReal(0L) ? Cutoff::HLinear : Cutoff::HZero;
    return out;
}

HyperExpProcess rescale(const HyperExpProcess& hep, const BigReal& space_scale,
                        const BigReal& rate_scale) {
    if (!(space_scale > BigReal(0L)) || !(rate_scale > BigReal(0L)))
        raise(ErrorKind::InvalidArgument, "rescale factors must be positive");
    HyperExpProcess out;
    out.drift0 = rate_scale * space_scale * hep.drift0;
    out.sigma2 = rate_scale * space_scale * space_scale * hep.sigma2;
    auto map_terms = [&](const std::vector<ExpTerm>& terms) {
        std::vector<ExpTerm> r;
        for (const auto& t : terms)
            r.push_back(ExpTerm{rate_scale * t.amplitude / space_scale, t.rate / space_scale});
        return r;
    };
    out.pos = map_terms(hep.pos);
    out.neg = map_terms(hep.neg);
    out.cutoff = hep.cutoff;
    return out;
}

HyperExpProcess with_extra_drift(HyperExpProcess hep, const BigReal& drift) {
    hep.drift0 += drift;
    return hep;
}

HyperExpProcess approximate_model(const LevyModel& model, const ApproxOptions& opt) {
    if (opt.two_sided) return approx_two_sided(model, opt.n).first;

    int n2 = opt.n_neg > 0 ? opt.n_neg : opt.n;
    int k2 = opt.k_neg >= 0 ? opt.k_neg : opt.k;
    HyperExpProcess hep;
    switch (model.family()) {
        case Family::Gamma:
        case Family::TemperedStable:
        case Family::NIGSubordinator:
        case Family::Custom:
            return approx_one_sided(model, opt.n, opt.k).first;
        case Family::VG: {
            // mu z - (1/nu) log(1 - z/a) - (1/nu) log(1 + z/ahat)
            auto gpos = approx_one_sided(LevyModel::gamma(), opt.n, opt.k).first;
            auto gneg = approx_one_sided(LevyModel::gamma(), n2, k2).first;
            BigReal inv_nu = BigReal(1L) / model.vg_nu();
            hep = compose_difference(rescale(gpos, BigReal(1L) / model.vg_a(), inv_nu),
                                     rescale(gneg, BigReal(1L) / model.vg_ahat(), inv_nu),
                                     model.mu_or_zero());
            break;
        }
        case Family::CGMY: {
            auto ts_pos = approx_one_sided(LevyModel::tempered_stable(model.cgmy_Y()), opt.n,
                                           opt.k).first;
            auto ts_neg = approx_one_sided(LevyModel::tempered_stable(model.cgmy_Y()), n2, k2)
                              .first;
            BigReal lp = model.cgmy_C() * pow(model.cgmy_M(), model.cgmy_Y());
            BigReal ln = model.cgmy_C() * pow(model.cgmy_G(), model.cgmy_Y());
            hep = compose_difference(rescale(ts_pos, BigReal(1L) / model.cgmy_M(), lp),
                                     rescale(ts_neg, BigReal(1L) / model.cgmy_G(), ln),
                                     model.mu_or_zero());
            break;
        }
        case Family::NIG: {
            if (opt.k > 1)
                raise(ErrorKind::VariantUnavailable,
                      "the time-change route needs a subordinator approximation (k in {0,1})");
            auto ts = approx_one_sided(LevyModel::tempered_stable(BigReal(0.5)), opt.n, opt.k)
                          .first;
            BigReal kappa = model.nig_kappa();
            BigReal lambda = BigReal(1L) / (2L * sqrt(BigReal::pi()) * kappa);
            auto ig = rescale(ts, kappa, lambda);
            hep = subordinate_brownian(ig, model.nig_sigma(), model.nig_abm());
            hep = with_extra_drift(std::move(hep), model.mu_or_zero());
            break;
        }
    }
    // per-tail orders may differ; the guaranteed cumulant match is the weaker one
    hep.provenance =
        make_provenance(model, std::min(opt.n, n2), std::min(opt.k, k2), "one-sided-composed");
    return hep;
}

} // namespace hexp
