// SPDX-License-Identifier: MIT
#include "hexp/transforms.hpp"

#include "hexp/errors.hpp"

#include <cmath>

namespace hexp {

namespace {

using C = std::complex<double>;

struct Kahan {
    double sum = 0.0, carry = 0.0;
    void add(double v) {
        double y = v - carry;
        double t = sum + y;
        carry = (t - sum) - y;
        sum = t;
    }
};

struct GridSpec {
    int steps; // number of intervals, even for Simpson
    double du;
};

GridSpec resolve_steps(const InversionGrid& g) {
    if (!(g.du > 0.0) || !(g.u_max > g.du))
        raise(ErrorKind::InvalidArgument, "grid needs 0 < du < u_max");
    int steps = static_cast<int>(std::llround(g.u_max / g.du));
    if (std::abs(steps * g.du - g.u_max) > 1e-9 * g.u_max)
        raise(ErrorKind::InvalidArgument, "u_max must be an integer number of du steps");
    if (g.scheme == Scheme::Simpson && steps % 2 != 0) ++steps;
    return {steps, g.du};
}

double weight_at(const InversionGrid& g, int j, int steps) {
    if (g.scheme == Scheme::Trapezoid) return (j == 0 || j == steps) ? 0.5 : 1.0;
    if (j == 0 || j == steps) return 1.0 / 3.0;
    return (j % 2 == 1) ? 4.0 / 3.0 : 2.0 / 3.0;
}

double resolve_cdf_damping(const FourierTarget& t, const InversionGrid& g) {
    double c = std::isnan(g.damping) ? 0.5 : g.damping;
    if (!(c > 0.0) || !(c < 1.0) || !(c < t.rho))
        raise(ErrorKind::InvalidArgument,
              "CDF damping must lie in (0,1) inside the strip, got " + std::to_string(c));
    return c;
}

} // namespace

AsymptoticTriple asymptotic_coeffs(const HyperExpProcess& hep) {
    return {hep.sigma2.to_double() / 2.0, hep.drift0.to_double(), -hep.intensity().to_double()};
}

FourierTarget make_target(const LevyModel& model) {
    FourierTarget t;
    LevyModel m = model;
    t.psi = [m](const C& z) { return m.laplace_d(z); };
    t.rho = model.strip().rho.to_double();
    t.remove_atom = false;
    t.r0 = t.r1 = 0.0;
    return t;
}

FourierTarget make_target(const HyperExpProcess& hep) {
    struct TermD {
        double amp_over_rate, rate;
    };
    // (a/b) z/(b-z) for rates b > 0; (a/b) z/(z-b) = (-a/b) z/(b-z) for b < 0
    std::vector<TermD> terms;
    for (const auto& e : hep.pos)
        terms.push_back({e.amplitude.to_double() / e.rate.to_double(), e.rate.to_double()});
    for (const auto& e : hep.neg)
        terms.push_back({-e.amplitude.to_double() / e.rate.to_double(), e.rate.to_double()});
    double d0 = hep.drift0.to_double();
    double s2 = hep.sigma2.to_double();

    FourierTarget t;
    t.psi = [terms, d0, s2](const C& z) {
        C acc = d0 * z + 0.5 * s2 * z * z;
        for (const auto& e : terms) acc += e.amp_over_rate * z / (e.rate - z);
        return acc;
    };
    double rho = std::numeric_limits<double>::infinity();
    for (const auto& e : hep.pos) rho = std::min(rho, e.rate.to_double());
    t.rho = rho;
    auto a = asymptotic_coeffs(hep);
    t.remove_atom = s2 == 0.0;
    t.r0 = a.r0;
    t.r1 = a.r1;
    return t;
}

namespace {

/// phi(c + iu)/(c + iu) on the u-grid, with the atom transform subtracted
/// for finite-activity laws.
std::vector<C> integrand_values(const FourierTarget& tg, double t, double c,
                                const GridSpec& spec) {
    std::vector<C> g(spec.steps + 1);
    for (int j = 0; j <= spec.steps; ++j) {
        C z(c, j * spec.du);
        C phi = std::exp(t * tg.psi(z));
        if (tg.remove_atom) phi -= std::exp(t * (tg.r0 + tg.r1 * z));
        g[j] = phi / z;
    }
    return g;
}

} // namespace

std::vector<double> cdf_sweep(const FourierTarget& target, double t,
                              const std::vector<double>& xs, const InversionGrid& grid) {
    if (!(t > 0.0)) raise(ErrorKind::InvalidArgument, "time horizon must be positive");
    for (double x : xs)
        if (!(x > 0.0))
            raise(ErrorKind::InvalidArgument, "CDF thresholds must be positive, got " +
                                                  std::to_string(x));
    double c = resolve_cdf_damping(target, grid);
    GridSpec spec = resolve_steps(grid);
    std::vector<C> g = integrand_values(target, t, c, spec);

    // by-parts truncation estimate |tail| <= 2 |g(u_max)| / x
    double gu = std::abs(g.back());
    for (double x : xs) {
        double est = std::exp(-c * x) / M_PI * 2.0 * gu / x;
        if (est > grid.tail_tol)
            raise(ErrorKind::GridInsufficient,
                  "truncation estimate " + std::to_string(est) + " at x = " + std::to_string(x) +
                      " exceeds the tolerance; increase u_max");
    }

    double atom_mass = target.remove_atom ? std::exp(t * target.r0) : 0.0;
    std::vector<double> out;
    out.reserve(xs.size());
    for (double x : xs) {
        C rot = std::exp(C(0.0, -spec.du * x));
        C phase(1.0, 0.0);
        Kahan acc;
        for (int j = 0; j <= spec.steps; ++j) {
            acc.add(weight_at(grid, j, spec.steps) * (g[j] * phase).real());
            phase *= rot;
        }
        double integral = acc.sum * spec.du;
        double p = 1.0 - std::exp(-c * x) / M_PI * integral;
        if (target.remove_atom && x <= target.r1 * t) p -= atom_mass;
        out.push_back(p);
    }
    return out;
}

double cdf(const FourierTarget& target, double t, double x, const InversionGrid& grid) {
    return cdf_sweep(target, t, {x}, grid)[0];
}

double cdf(const HyperExpProcess& hep, double t, double x, const InversionGrid& grid) {
    return cdf(make_target(hep), t, x, grid);
}

double cdf(const LevyModel& model, double t, double x, const InversionGrid& grid) {
    return cdf(make_target(model), t, x, grid);
}

namespace {

double price_call_target(const FourierTarget& tg, double S0, double K, double T, double r,
                         const InversionGrid& grid) {
    if (!(S0 > 0.0) || !(K > 0.0) || !(T > 0.0))
        raise(ErrorKind::InvalidArgument, "require S0, K, T > 0");
    double cdamp = std::isnan(grid.damping) ? 0.5 * (1.0 + tg.rho) : grid.damping;
    double gamma = cdamp - 1.0;
    if (!(gamma > 0.0) || !(cdamp < tg.rho))
        raise(ErrorKind::InvalidArgument,
              "call damping must lie in (1, rho), got " + std::to_string(cdamp));
    GridSpec spec = resolve_steps(grid);
    double kp = std::log(K / S0);

    Kahan acc;
    C rot = std::exp(C(0.0, -spec.du * kp));
    C phase(1.0, 0.0);
    double gu = 0.0;
    for (int j = 0; j <= spec.steps; ++j) {
        C z(gamma + 1.0, j * spec.du);
        C phi = std::exp(T * tg.psi(z));
        if (tg.remove_atom) phi -= std::exp(T * (tg.r0 + tg.r1 * z));
        C g = phi / ((z - 1.0) * z); // (gamma + iu)(gamma + 1 + iu)
        if (j == spec.steps) gu = std::abs(g);
        acc.add(weight_at(grid, j, spec.steps) * (g * phase).real());
        phase *= rot;
    }
    double integral = acc.sum * spec.du;
    double damped = std::exp(-gamma * kp) / M_PI;

    // decay is at least 1/u^3 past the atom removal: tail <= |g(U)| U / 2
    double est = S0 * std::exp(-r * T) * damped * gu * grid.u_max / 2.0;
    if (est > grid.tail_tol)
        raise(ErrorKind::GridInsufficient,
              "price truncation estimate " + std::to_string(est) +
                  " exceeds the tolerance; increase u_max");

    double atom = 0.0;
    if (tg.remove_atom)
        atom = std::exp(T * tg.r0) * std::max(std::exp(tg.r1 * T) - std::exp(kp), 0.0);
    return S0 * std::exp(-r * T) * (damped * integral + atom);
}

} // namespace

double price_european_call(const LevyModel& model, double S0, double K, double T,
                           const BigReal& r, const InversionGrid& grid) {
    BigReal defect = abs(model.laplace_real(BigReal(1L)) - r);
    if (defect > BigReal::pow10(-20))
        raise(ErrorKind::MartingaleViolated,
              "psi(1) - r = " + defect.to_string(6) + "; calibrate the drift with martingale_drift");
    return price_call_target(make_target(model), S0, K, T, r.to_double(), grid);
}

double price_european_call(const LevyModel& model, double S0, double K, double T, double r,
                           const InversionGrid& grid) {
    return price_european_call(model, S0, K, T, BigReal(r), grid);
}

double price_european_call(const HyperExpProcess& hep, double S0, double K, double T, double r,
                           const InversionGrid& grid) {
    return price_call_target(make_target(hep), S0, K, T, r, grid);
}

double price_european_put_cdf(const FourierTarget& target, double S0, double K, double T,
                              double r, const InversionGrid& grid) {
    if (!(S0 > 0.0) || !(K > 0.0) || !(T > 0.0))
        raise(ErrorKind::InvalidArgument, "require S0, K, T > 0");
    // E[(K - S_T)^+] = int_0^K P(S_T <= y) dy with S_T = S0 e^{X_T}
    double c = resolve_cdf_damping(target, InversionGrid{0.5, grid.u_max, grid.du, grid.scheme,
                                                         grid.tail_tol});
    GridSpec spec = resolve_steps(grid);
    std::vector<C> g = integrand_values(target, T, c, spec);
    double atom_mass = target.remove_atom ? std::exp(T * target.r0) : 0.0;

    auto cdf_at = [&](double x) {
        C rot = std::exp(C(0.0, -spec.du * x));
        C phase(1.0, 0.0);
        Kahan acc;
        for (int j = 0; j <= spec.steps; ++j) {
            acc.add(weight_at(grid, j, spec.steps) * (g[j] * phase).real());
            phase *= rot;
        }
        double p = 1.0 - std::exp(-c * x) / M_PI * acc.sum * spec.du;
        if (target.remove_atom && x <= target.r1 * T) p -= atom_mass;
        return p;
    };

    // composite Simpson over strikes on [K*1e-6, K]; the skipped sliver near
    // zero contributes at most K*1e-6
    const int segments = 512;
    double y0 = K * 1e-6;
    double h = (K - y0) / segments;
    Kahan acc;
    for (int i = 0; i <= segments; ++i) {
        double w = (i == 0 || i == segments) ? 1.0 / 3.0 : (i % 2 == 1 ? 4.0 / 3.0 : 2.0 / 3.0);
        acc.add(w * cdf_at(std::log((y0 + i * h) / S0)));
    }
    return std::exp(-r * T) * h * acc.sum;
}

} // namespace hexp
