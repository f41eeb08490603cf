// SPDX-License-Identifier: MIT
#include "hexp/harness.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

namespace py = pybind11;
using namespace hexp;

namespace {

nlohmann::json parse(const std::string& text) { return nlohmann::json::parse(text); }

bool is_hep(const nlohmann::json& j) { return j.contains("pos_terms"); }

InversionGrid grid_from(double damping, double du, double umax, double tail_tol) {
    InversionGrid g;
    g.damping = damping;
    g.du = du;
    g.u_max = umax;
    g.tail_tol = tail_tol;
    return g;
}

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

} // namespace

PYBIND11_MODULE(pyhexp, m) {
    m.doc() = "hyperexponential approximation of Levy processes with completely monotone jumps";

    m.def(
        "set_precision", [](int digits) { set_default_digits(digits); },
        py::arg("digits"), "set the working precision in decimal digits (default 200)");

    m.def(
        "martingale_drift",
        [](const std::string& model_json, const std::string& r) {
            auto model = LevyModel::from_json(parse(model_json));
            return martingale_drift(model, BigReal(r)).to_string(30);
        },
        py::arg("model"), py::arg("r"),
        "drift mu such that psi(1) = r, as a decimal string");

    m.def(
        "approximate",
        [](const std::string& model_json, bool two_sided, int n, int k, int n_neg, int k_neg,
           int digits) {
            auto model = LevyModel::from_json(parse(model_json));
            ApproxOptions opt{two_sided, n, k, n_neg, k_neg};
            return approximate_model(model, opt).to_json(digits).dump();
        },
        py::arg("model"), py::arg("two_sided") = false, py::arg("n") = 1, py::arg("k") = 1,
        py::arg("n_neg") = -1, py::arg("k_neg") = -1, py::arg("digits") = 30,
        "construct a hyperexponential approximation; returns the process JSON");

    m.def(
        "cumulants",
        [](const std::string& spec_json, int j_max) {
            auto j = parse(spec_json);
            std::vector<std::string> out;
            auto dump = [&out](const std::vector<BigReal>& v) {
                for (size_t i = 1; i < v.size(); ++i) out.push_back(v[i].to_string(30));
            };
            if (is_hep(j)) dump(HyperExpProcess::from_json(j).cumulants(j_max));
            else dump(model_cumulants(LevyModel::from_json(j), j_max));
            return out;
        },
        py::arg("spec"), py::arg("j_max"),
        "cumulants 1..j_max of a model or hyperexponential process, as decimal strings");

    m.def(
        "levy_density",
        [](const std::string& spec_json, double x) {
            auto j = parse(spec_json);
            if (is_hep(j)) return HyperExpProcess::from_json(j).levy_density(BigReal(x)).to_double();
            return model_levy_density(LevyModel::from_json(j), BigReal(x)).to_double();
        },
        py::arg("spec"), py::arg("x"), "Levy density at x != 0");

    m.def(
        "cdf",
        [](const std::string& spec_json, double t, double x, double damping, double du,
           double umax, double tail_tol) {
            auto j = parse(spec_json);
            auto g = grid_from(damping, du, umax, tail_tol);
            if (is_hep(j)) return cdf(HyperExpProcess::from_json(j), t, x, g);
            return cdf(LevyModel::from_json(j), t, x, g);
        },
        py::arg("spec"), py::arg("t"), py::arg("x"), py::arg("damping") = kNaN,
        py::arg("du") = 0.05, py::arg("umax") = 2000.0, py::arg("tail_tol") = 1e-6,
        "P(X_t <= x) by Fourier inversion (model JSON uses the exact exponent)");

    m.def(
        "price_european_call",
        [](const std::string& spec_json, double S0, double K, double T, const std::string& r,
           double damping, double du, double umax, double tail_tol) {
            auto j = parse(spec_json);
            auto g = grid_from(damping, du, umax, tail_tol);
            if (is_hep(j))
                return price_european_call(HyperExpProcess::from_json(j), S0, K, T,
                                           BigReal(r).to_double(), g);
            return price_european_call(LevyModel::from_json(j), S0, K, T, BigReal(r), g);
        },
        py::arg("spec"), py::arg("S0"), py::arg("K"), py::arg("T"), py::arg("r"),
        py::arg("damping") = kNaN, py::arg("du") = 0.05, py::arg("umax") = 2000.0,
        py::arg("tail_tol") = 1e-6,
        "European call price; spec is a model JSON (exact exponent) or process JSON");

    m.def(
        "gamma_cdf_max_error",
        [](int n, int k, double t, double du, double umax, double tail_tol) {
            return gamma_cdf_max_error(n, k, t, grid_from(kNaN, du, umax, tail_tol));
        },
        py::arg("n"), py::arg("k"), py::arg("t"), py::arg("du") = 0.05,
        py::arg("umax") = 2000.0, py::arg("tail_tol") = 1e-3,
        "max CDF error of the Gamma approximation over the benchmark x-grid");

    m.attr("__version__") = "1.0.0";
}
