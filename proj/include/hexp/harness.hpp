// SPDX-License-Identifier: MIT
#pragma once

#include "hexp/hyperexp.hpp"
#include "hexp/transforms.hpp"

#include <string>
#include <vector>

namespace hexp {

/// Levy density of a target model at x != 0 (families with a closed form).
BigReal model_levy_density(const LevyModel& model, const BigReal& x);

/// Cumulant comparison table; `matched_orders` flags which orders the
/// construction guarantees (taken from provenance when negative).
std::vector<CumulantRow> moment_report(const LevyModel& model, const HyperExpProcess& hep,
                                       int j_max, int matched_orders = -1);

struct DensityRow {
    BigReal x;
    BigReal x_pi_model;
    BigReal x_pi_approx;
};

std::vector<DensityRow> density_comparison(const LevyModel& model, const HyperExpProcess& hep,
                                           const std::vector<BigReal>& xs);

struct ConvergenceRecord {
    int n;
    BigReal max_err;        // max |psi_n(z) - psi(z)| over the sample points
    double step_ratio;      // max_err(n) / max_err(n-1), NaN for the first row
    double envelope_factor; // squared conformal factor from the error bound
};

struct ConvergenceStudy {
    std::vector<ConvergenceRecord> records;
    double fitted_slope;    // least-squares slope of log max_err against n
    double envelope_factor; // worst (largest) factor over the sample points
};

/// Error decay of the two-sided approximants over n in [n_lo, n_hi] at real
/// sample points inside the strip.
ConvergenceStudy convergence_study(const LevyModel& model, int n_lo, int n_hi,
                                   const std::vector<BigReal>& zs);

struct TableCell {
    std::string label;
    double measured;
    double paper;
    double rel_delta; // |measured - paper| / |paper|
    bool pass;
};

struct TableReport {
    std::string table;
    std::vector<TableCell> cells;
    bool pass;
};

/// Reproduces the benchmark tables at desk scale: "T1" (Gamma CDF errors),
/// "T2" (VG European call), "T3" (CGMY European call).
TableReport reproduce_table(const std::string& id);

/// Max over the x-grid (step 0.01 on [0,40], x=0 through the atom mass) of
/// |P(X_t <= x) - P(X_t^{(n,k)} <= x)| for the Gamma target.
double gamma_cdf_max_error(int n, int k, double t, const InversionGrid& grid);

} // namespace hexp
