// SPDX-License-Identifier: MIT
//
// Acceptance suite: one line per criterion, nonzero exit on any failure.

#include "hexp/harness.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

using namespace hexp;

namespace {

int g_failures = 0;

void report(int id, bool pass, const std::string& detail, double seconds, double budget) {
    bool ok = pass && (budget <= 0 || seconds <= budget);
    if (!ok) ++g_failures;
    std::printf("[%s] criterion %d: %s (%.1f s%s)\n", ok ? "PASS" : "FAIL", id, detail.c_str(),
                seconds, budget > 0 && seconds > budget ? ", over budget" : "");
    std::fflush(stdout);
}

double run_timed(const std::function<void()>& fn) {
    auto t0 = std::chrono::steady_clock::now();
    fn();
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string cells_summary(const TableReport& rep) {
    std::string s;
    for (const auto& c : rep.cells) {
        char buf[160];
        std::snprintf(buf, sizeof(buf), "%s%s=%.3e(ref %.3e)", s.empty() ? "" : ", ",
                      c.label.c_str(), c.measured, c.paper);
        s += buf;
    }
    return s;
}

LevyModel calibrated_vg() {
    auto base = LevyModel::vg_direct(BigReal("21.8735"), BigReal("56.4414"), BigReal("0.20"));
    return base.with_mu(martingale_drift(base, BigReal("0.04")));
}

LevyModel calibrated_cgmy() {
    auto base = LevyModel::cgmy(BigReal(1L), BigReal("8.8"), BigReal("14.5"), BigReal("1.2"));
    return base.with_mu(martingale_drift(base, BigReal("0.04")));
}

void criterion_table(int id, const std::string& table, double budget) {
    TableReport rep;
    double el = run_timed([&] { rep = reproduce_table(table); });
    report(id, rep.pass, table + ": " + cells_summary(rep), el, budget);
}

void criterion_moments() {
    bool pass = true;
    std::string worst_detail;
    BigReal worst(0L);
    double el = run_timed([&] {
        BigReal tol = BigReal::pow10(-40);
        for (const auto& m : {LevyModel::gamma(), calibrated_vg(), calibrated_cgmy()}) {
            for (int n : {3, 8, 15}) {
                auto hep = approx_two_sided(m, n).first;
                auto rows = moment_report(m, hep, 2 * n + 1, 2 * n + 1);
                for (const auto& row : rows) {
                    BigReal rel = abs(row.approx_value - row.model_value) /
                                  max(BigReal::pow10(-300), abs(row.model_value));
                    if (rel > worst) {
                        worst = rel;
                        worst_detail = m.name() + " n=" + std::to_string(n) +
                                       " order " + std::to_string(row.order);
                    }
                    if (rel > tol) pass = false;
                }
            }
        }
    });
    report(4, pass,
           "cumulants 1..2n+1 match to 1e-40; worst rel err " + worst.to_string(3) + " at " +
               worst_detail,
           el, 60.0);
}

void criterion_explicit() {
    bool pass = true;
    BigReal tol = BigReal::pow10(-100);
    BigReal worst(0L);
    double el = run_timed([&] {
        auto compare = [&](const RationalFunction& a, const RationalFunction& b) {
            for (size_t i = 0; i < std::max(a.den.c.size(), b.den.c.size()); ++i) {
                BigReal av = i < a.den.c.size() ? a.den.c[i] : BigReal(0L);
                BigReal bv = i < b.den.c.size() ? b.den.c[i] : BigReal(0L);
                worst = max(worst, abs(av - bv));
            }
            for (size_t i = 0; i < std::max(a.num.c.size(), b.num.c.size()); ++i) {
                BigReal av = i < a.num.c.size() ? a.num.c[i] : BigReal(0L);
                BigReal bv = i < b.num.c.size() ? b.num.c[i] : BigReal(0L);
                worst = max(worst, abs(av - bv));
            }
        };
        for (int n = 1; n <= 10; ++n) {
            for (int k : {0, 1, 2}) {
                auto gm = LevyModel::gamma();
                compare(approx_gamma_explicit(n, k),
                        pade(TaylorSeries(BigReal(0L), gm.taylor(2 * n + k)), n + k, n));
                for (double alpha : {0.5, 1.2}) {
                    if (alpha > 1.0 && k == 0) continue;
                    auto ts = LevyModel::tempered_stable(BigReal(alpha));
                    compare(approx_tempered_stable_explicit(BigReal(alpha), n, k),
                            pade(TaylorSeries(BigReal(0L), ts.taylor(2 * n + k)), n + k, n));
                }
            }
        }
        pass = worst <= tol;
    });
    report(5, pass, "explicit formulas vs generic Pade, worst coefficient gap " +
                        worst.to_string(3), el, 30.0);
}

void criterion_lemma2() {
    bool pass = true;
    std::string detail = "k=2 Gaussian coefficient positive for n=1..20 across the catalogue";
    double el = run_timed([&] {
        for (const auto& m :
             {LevyModel::gamma(), LevyModel::tempered_stable(BigReal("0.5")),
              LevyModel::tempered_stable(BigReal("1.2")),
              LevyModel::nig_subordinator(BigReal("0.3")),
              LevyModel::nig_subordinator(BigReal("0.8"))}) {
            for (int n = 1; n <= 20; ++n) {
                try {
                    auto hep = approx_one_sided(m, n, 2).first;
                    if (!(hep.sigma2 > BigReal(0L))) {
                        pass = false;
                        detail = "nonpositive sigma2 for " + m.name() + " n=" + std::to_string(n);
                    }
                } catch (const std::exception& e) {
                    pass = false;
                    detail = e.what();
                }
            }
        }
    });
    report(6, pass, detail, el, 0);
}

void criterion_quadrature() {
    bool pass = true;
    std::string detail;
    BigReal worst(0L);
    double el = run_timed([&] {
        BigReal tol = BigReal::pow10(-30);
        auto check_rule = [&](const LevyModel& m, int n, int shift) {
            auto c = m.taylor(shift + 2 * (n + 1));
            std::vector<BigReal> mom(c.begin() + shift, c.begin() + shift + 2 * n);
            Strip st = m.strip();
            BigReal lo = st.rho_hat_infinite ? BigReal(0L) : -BigReal(1L) / st.rho_hat;
            auto rule = gauss_from_moments(mom, lo, BigReal(1L) / st.rho);
            for (int j = 0; j < 2 * n; ++j) {
                BigReal rel = abs(rule.moment(j) - mom[j]) / abs(mom[j]);
                worst = max(worst, rel);
                if (rel > tol) {
                    pass = false;
                    detail = "exactness failed for " + m.name();
                }
            }
            for (size_t i = 0; i < rule.weights.size(); ++i) {
                if (!(rule.weights[i] > BigReal(0L))) pass = false;
                if (i > 0 && !(rule.nodes[i] > rule.nodes[i - 1])) pass = false;
            }
            // interlacing against the order-(n+1) rule
            std::vector<BigReal> mom2(c.begin() + shift, c.begin() + shift + 2 * (n + 1));
            auto next = gauss_from_moments(mom2, lo, BigReal(1L) / st.rho);
            for (int i = 0; i < n; ++i) {
                if (!(next.nodes[i] < rule.nodes[i] && rule.nodes[i] < next.nodes[i + 1])) {
                    pass = false;
                    detail = "interlacing failed for " + m.name();
                }
            }
        };
        for (int n : {2, 5, 8}) {
            check_rule(LevyModel::gamma(), n, 1);                                // v^2 mu*
            check_rule(LevyModel::gamma(), n, 2);                                // v^3 mu*
            check_rule(LevyModel::tempered_stable(BigReal("0.5")), n, 2);
            check_rule(calibrated_vg(), n, 2);
            check_rule(calibrated_cgmy(), n, 2);
        }
    });
    if (detail.empty()) detail = "exactness/positivity/interlacing, worst rel " + worst.to_string(3);
    report(7, pass, detail, el, 0);
}

void criterion_convergence() {
    bool pass = true;
    std::string detail;
    double el = run_timed([&] {
        auto gamma_study = convergence_study(LevyModel::gamma(), 2, 12, {BigReal("0.5")});
        auto vg_study = convergence_study(calibrated_vg(), 2, 12, {BigReal(5L)});
        char buf[200];
        std::snprintf(buf, sizeof(buf),
                      "gamma slope %.3f (envelope log %.3f), vg slope %.3f",
                      gamma_study.fitted_slope, std::log(gamma_study.envelope_factor),
                      vg_study.fitted_slope);
        detail = buf;
        if (!(gamma_study.fitted_slope < 0.0) || !(vg_study.fitted_slope < 0.0)) pass = false;
        const double kConstant = 5.0;
        for (const auto& rec : gamma_study.records) {
            if (std::isnan(rec.step_ratio)) continue;
            if (rec.step_ratio > kConstant * gamma_study.envelope_factor) {
                pass = false;
                detail += "; ratio " + std::to_string(rec.step_ratio) + " at n=" +
                          std::to_string(rec.n) + " breaks the envelope";
            }
        }
    });
    report(8, pass, detail, el, 0);
}

} // namespace

int main() {
    std::printf("acceptance suite (precision %d digits)\n", default_digits());
    criterion_table(1, "T1", 120.0);
    criterion_table(2, "T2", 60.0);
    criterion_table(3, "T3", 60.0);
    criterion_moments();
    criterion_explicit();
    criterion_lemma2();
    criterion_quadrature();
    criterion_convergence();
    std::printf("%s: %d criterion(s) failed\n", g_failures == 0 ? "SUCCESS" : "FAILURE",
                g_failures);
    return g_failures == 0 ? 0 : 1;
}
