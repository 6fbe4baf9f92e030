#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "rcarlab/limit_laws.hpp"
#include "rcarlab/mixing.hpp"
#include "rcarlab/panel.hpp"
#include "rcarlab/poisson_sim.hpp"
#include "rcarlab/regime.hpp"
#include "rcarlab/stats.hpp"

namespace py = pybind11;
using namespace rcarlab;

namespace {

std::vector<std::complex<double>> cf_grid_values(
    const std::function<std::complex<double>(double)>& cf, const std::vector<double>& thetas) {
    std::vector<std::complex<double>> values(thetas.size());
    for (std::size_t k = 0; k < thetas.size(); ++k) values[k] = cf(thetas[k]);
    return values;
}

}  // namespace

PYBIND11_MODULE(_rcarlab, m) {
    m.doc() = "random-coefficient AR(1) aggregation laboratory (C++ core)";

    py::enum_<StableFlavor>(m, "StableFlavor")
        .value("ExactStable", StableFlavor::ExactStable)
        .value("TwoSidedPareto", StableFlavor::TwoSidedPareto)
        .value("Gaussian", StableFlavor::Gaussian);

    py::class_<StableLaw>(m, "StableLaw")
        .def_static("gaussian", &StableLaw::gaussian, py::arg("variance") = 1.0)
        .def_static("exact_stable", &StableLaw::exact_stable, py::arg("alpha"), py::arg("c1"),
                    py::arg("c2"))
        .def_static("two_sided_pareto", &StableLaw::two_sided_pareto, py::arg("alpha"),
                    py::arg("c1"), py::arg("c2"))
        .def_readonly("alpha", &StableLaw::alpha)
        .def_readonly("c1", &StableLaw::c1)
        .def_readonly("c2", &StableLaw::c2)
        .def_readonly("variance", &StableLaw::variance)
        .def_readonly("flavor", &StableLaw::flavor);

    py::class_<MixingLaw>(m, "MixingLaw")
        .def_static("pure_power", &MixingLaw::pure_power, py::arg("beta"))
        .def_readonly("beta", &MixingLaw::beta)
        .def_readonly("psi1", &MixingLaw::psi1);

    py::class_<QuadratureSpec>(m, "QuadratureSpec")
        .def(py::init<>())
        .def_static("nested", &QuadratureSpec::nested)
        .def_readwrite("rel_tol", &QuadratureSpec::rel_tol)
        .def_readwrite("abs_tol", &QuadratureSpec::abs_tol)
        .def_readwrite("max_subdivisions", &QuadratureSpec::max_subdivisions)
        .def_readwrite("x_split", &QuadratureSpec::x_split);

    m.def("omega", [](double theta, const StableLaw& law) {
        const auto w = omega(theta, law);
        return std::complex<double>{w.re, w.im_sign_pos};
    });
    m.def("cf_levy", &cf_levy, py::arg("theta"), py::arg("tau"), py::arg("law"));

    m.def(
        "sample_stable",
        [](const StableLaw& law, std::size_t count, std::uint64_t seed) {
            RngStream rng = substream(seed, 0);
            std::vector<double> out(count);
            for (auto& v : out) v = sample_stable(law, rng);
            return out;
        },
        py::arg("law"), py::arg("count"), py::arg("seed"));
    m.def(
        "sample_innovation",
        [](const StableLaw& law, std::size_t count, std::uint64_t seed) {
            RngStream rng = substream(seed, 0);
            std::vector<double> out(count);
            for (auto& v : out) v = sample_innovation(law, rng);
            return out;
        },
        py::arg("law"), py::arg("count"), py::arg("seed"));
    m.def(
        "sample_coefficient",
        [](const MixingLaw& law, std::size_t count, std::uint64_t seed) {
            RngStream rng = substream(seed, 0);
            std::vector<double> out(count);
            for (auto& v : out) v = sample_coefficient(law, rng);
            return out;
        },
        py::arg("law"), py::arg("count"), py::arg("seed"));

    m.def("f_tau", &f_tau, py::arg("x"), py::arg("s"), py::arg("tau"));
    m.def("kappa_alpha", &kappa_alpha, py::arg("law"), py::arg("alpha"));
    m.def("kappa_lambda", &kappa_lambda, py::arg("lam"), py::arg("alpha"), py::arg("beta"),
          py::arg("psi1"));
    m.def("kappa_lambda_integral", &kappa_lambda_integral, py::arg("lam"), py::arg("alpha"),
          py::arg("beta"), py::arg("psi1"), py::arg("quad") = QuadratureSpec::nested());
    m.def("cov_lambda2", &cov_Lambda2, py::arg("tau1"), py::arg("tau2"), py::arg("beta"),
          py::arg("psi1"), py::arg("variance"));
    m.def("cov_lambda2_quadrature", &cov_Lambda2_quadrature, py::arg("tau1"), py::arg("tau2"),
          py::arg("beta"), py::arg("psi1"), py::arg("variance"),
          py::arg("quad") = QuadratureSpec::nested());

    m.def(
        "cf_v",
        [](const std::vector<double>& thetas, double beta, double psi1, const StableLaw& law) {
            return cf_grid_values([&](double t) { return cf_V(t, beta, psi1, law); }, thetas);
        },
        py::arg("thetas"), py::arg("beta"), py::arg("psi1"), py::arg("law"));
    m.def(
        "cf_v1",
        [](const std::vector<double>& thetas, double psi1, const StableLaw& law) {
            return cf_grid_values([&](double t) { return cf_V1(t, psi1, law); }, thetas);
        },
        py::arg("thetas"), py::arg("psi1"), py::arg("law"));
    m.def(
        "cf_w",
        [](const std::vector<double>& thetas, double tau, double beta, double psi1,
           const StableLaw& law) {
            return cf_grid_values([&](double t) { return cf_W(t, tau, beta, psi1, law); }, thetas);
        },
        py::arg("thetas"), py::arg("tau"), py::arg("beta"), py::arg("psi1"), py::arg("law"));
    m.def(
        "cf_lambda",
        [](const std::vector<double>& thetas, double tau, double beta, double psi1,
           const StableLaw& law, const QuadratureSpec& quad) {
            return cf_grid_values(
                [&](double t) { return cf_Lambda(t, tau, beta, psi1, law, quad); }, thetas);
        },
        py::arg("thetas"), py::arg("tau"), py::arg("beta"), py::arg("psi1"), py::arg("law"),
        py::arg("quad") = QuadratureSpec::nested());
    m.def(
        "cf_z",
        [](const std::vector<double>& thetas, double tau, double beta, double psi1,
           const StableLaw& law, const QuadratureSpec& quad) {
            return cf_grid_values([&](double t) { return cf_Z(t, tau, beta, psi1, law, quad); },
                                  thetas);
        },
        py::arg("thetas"), py::arg("tau"), py::arg("beta"), py::arg("psi1"), py::arg("law"),
        py::arg("quad") = QuadratureSpec::nested());

    py::class_<LimitLawDescriptor>(m, "LimitLawDescriptor")
        .def_property_readonly("name", &LimitLawDescriptor::name)
        .def_property_readonly("stability", &LimitLawDescriptor::stability)
        .def_readonly("mu", &LimitLawDescriptor::mu)
        .def_readonly("kappa_alpha", &LimitLawDescriptor::kappa_alpha_value)
        .def("cf", &LimitLawDescriptor::cf, py::arg("theta"), py::arg("tau"), py::arg("law"),
             py::arg("quad") = QuadratureSpec::nested());

    py::class_<RegimeReport>(m, "RegimeReport")
        .def_property_readonly("case",
                               [](const RegimeReport& r) { return std::string(to_string(r.regime)); })
        .def_readonly("mu_proxy", &RegimeReport::mu_proxy)
        .def_property_readonly("gamma",
                               [](const RegimeReport& r) { return r.gamma ? py::cast(*r.gamma) : py::none().cast<py::object>(); })
        .def_readonly("normalization", &RegimeReport::normalization)
        .def_readonly("limit_law", &RegimeReport::limit_law);

    m.def("classify", &classify, py::arg("alpha"), py::arg("beta"), py::arg("N"), py::arg("n"),
          py::arg("mu_threshold") = 4.0);

    py::class_<PanelSpec>(m, "PanelSpec")
        .def(py::init<>())
        .def_readwrite("innovation", &PanelSpec::innovation)
        .def_readwrite("mixing", &PanelSpec::mixing)
        .def_readwrite("N", &PanelSpec::N)
        .def_readwrite("n", &PanelSpec::n)
        .def_readwrite("taus", &PanelSpec::taus)
        .def_readwrite("seed", &PanelSpec::seed)
        .def_readwrite("burn_in_tol", &PanelSpec::burn_in_tol);

    m.def("ma_weight", &ma_weight, py::arg("a"), py::arg("n"), py::arg("s"));
    m.def(
        "aggregate_replicates",
        [](const PanelSpec& spec, std::int64_t replicates, int workers) {
            const auto samples = aggregate_replicates(spec, replicates, workers);
            std::vector<std::vector<double>> out(samples.size());
            for (std::size_t r = 0; r < samples.size(); ++r) out[r] = samples[r].values;
            return out;
        },
        py::arg("spec"), py::arg("replicates"), py::arg("workers") = 1);

    py::class_<PoissonSimSpec>(m, "PoissonSimSpec")
        .def(py::init<>())
        .def_readwrite("alpha", &PoissonSimSpec::alpha)
        .def_readwrite("beta", &PoissonSimSpec::beta)
        .def_readwrite("psi1", &PoissonSimSpec::psi1)
        .def_readwrite("driver", &PoissonSimSpec::driver)
        .def_readwrite("tau_grid", &PoissonSimSpec::tau_grid)
        .def_readwrite("x_min", &PoissonSimSpec::x_min)
        .def_readwrite("x_max", &PoissonSimSpec::x_max)
        .def_readwrite("dt", &PoissonSimSpec::dt)
        .def_readwrite("seed", &PoissonSimSpec::seed)
        .def("expected_points", &PoissonSimSpec::expected_points);

    m.def("default_truncation", [](double alpha, double beta, double psi1, double tau_max,
                                   double tol) {
        const auto bounds = default_truncation(alpha, beta, psi1, tau_max, tol);
        return std::pair{bounds.x_min, bounds.x_max};
    });
    m.def("simulate_z_replicates", &simulate_Z_replicates, py::arg("spec"), py::arg("replicates"),
          py::arg("workers") = 1);

    m.def(
        "empirical_cf",
        [](const std::vector<double>& samples, const std::vector<double>& thetas) {
            const CFGrid grid = empirical_cf(samples, thetas);
            return grid.values;
        },
        py::arg("samples"), py::arg("thetas"));
    m.def("hill_index",
          [](const std::vector<double>& samples, std::size_t k) { return hill_index(samples, k); });
    m.def("theta_grid", &theta_grid, py::arg("lo"), py::arg("hi"), py::arg("count"));
    m.def(
        "invert_cf_cdf",
        [](const std::function<std::complex<double>(double)>& cf, double x,
           const QuadratureSpec& quad) { return invert_cf_cdf(cf, x, quad); },
        py::arg("cf"), py::arg("x"), py::arg("quad") = QuadratureSpec::nested());
}
