// Python bindings for the closed-form layer: parameters, profiles, flow
// divergences, high-dimensional scans, exact sampling, and the reference
// finite-volume solver. Thin wrappers only; all logic lives in the C++ core.

#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <cstdio>
#include <string>
#include <vector>

#include "fpcutoff/barenblatt.hpp"
#include "fpcutoff/cutoff.hpp"
#include "fpcutoff/divergences.hpp"
#include "fpcutoff/dynamics.hpp"
#include "fpcutoff/errors.hpp"
#include "fpcutoff/oracles.hpp"
#include "fpcutoff/ot.hpp"
#include "fpcutoff/pde.hpp"
#include "fpcutoff/sampling.hpp"

namespace py = pybind11;
using namespace fpcutoff;

namespace {

std::string params_repr(const ModelParams& p) {
    char buf[160];
    std::snprintf(buf, sizeof buf, "ModelParams(d=%d, m=%.12g, alpha=%.12g, regime='%s')",
                  p.d, p.m, p.alpha,
                  p.regime == Regime::FastDiffusion ? "fast-diffusion"
                  : p.regime == Regime::Gaussian    ? "gaussian"
                                                    : "porous-medium");
    return buf;
}

std::vector<std::vector<double>> cloud_rows(const SampleCloud& cloud) {
    std::vector<std::vector<double>> rows(static_cast<std::size_t>(cloud.n));
    for (int i = 0; i < cloud.n; ++i) {
        rows[static_cast<std::size_t>(i)].assign(
            cloud.points.begin() + static_cast<std::ptrdiff_t>(i) * cloud.d,
            cloud.points.begin() + static_cast<std::ptrdiff_t>(i + 1) * cloud.d);
    }
    return rows;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Closed-form Fokker-Planck toolkit: profile laws, flow divergences, "
              "dimension scans, exact samplers, and a reference PDE solver.";

    auto err = py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
    py::register_exception<DomainError>(m, "DomainError", err.ptr());
    py::register_exception<ConstraintError>(m, "ConstraintError", err.ptr());
    py::register_exception<InfiniteMomentError>(m, "InfiniteMomentError", err.ptr());
    py::register_exception<ConvergenceError>(m, "ConvergenceError", err.ptr());
    py::register_exception<StabilityError>(m, "StabilityError", err.ptr());
    py::register_exception<ResolutionError>(m, "ResolutionError", err.ptr());
    py::register_exception<InsufficientDataError>(m, "InsufficientDataError", err.ptr());
    py::register_exception<UnsupportedSizeError>(m, "UnsupportedSizeError", err.ptr());
    py::register_exception<PreconditionError>(m, "PreconditionError", err.ptr());

    py::enum_<Regime>(m, "Regime")
        .value("FAST_DIFFUSION", Regime::FastDiffusion)
        .value("GAUSSIAN", Regime::Gaussian)
        .value("POROUS_MEDIUM", Regime::PorousMedium);

    py::enum_<Profile>(m, "Profile")
        .value("UNIT_TIME", Profile::UnitTimeB)
        .value("STATIONARY", Profile::StationaryVinf);

    py::enum_<AsymptoticMode>(m, "AsymptoticMode")
        .value("FIXED_ALPHA", AsymptoticMode::FixedAlpha)
        .value("FIXED_M", AsymptoticMode::FixedM);

    py::enum_<Metric>(m, "Metric")
        .value("W2_SQ", Metric::W2Sq)
        .value("ENTROPY", Metric::Entropy)
        .value("FISHER", Metric::Fisher);

    py::enum_<Side>(m, "Side").value("BELOW", Side::Below).value("ABOVE", Side::Above);

    py::enum_<TrendVerdict>(m, "TrendVerdict")
        .value("DIVERGES", TrendVerdict::Diverges)
        .value("VANISHES", TrendVerdict::Vanishes)
        .value("INCONCLUSIVE", TrendVerdict::Inconclusive);

    py::class_<ModelParams>(m, "ModelParams")
        .def_readonly("d", &ModelParams::d)
        .def_readonly("m", &ModelParams::m)
        .def_readonly("alpha", &ModelParams::alpha)
        .def_readonly("p", &ModelParams::p)
        .def_readonly("b", &ModelParams::b)
        .def_readonly("c", &ModelParams::c)
        .def_readonly("C_stat", &ModelParams::C_stat)
        .def_readonly("beta", &ModelParams::beta)
        .def_readonly("regime", &ModelParams::regime)
        .def_readonly("second_moment_finite", &ModelParams::second_moment_finite)
        .def("__repr__", &params_repr);

    m.def("params_from_m", &params_from_m, py::arg("d"), py::arg("m"));
    m.def("params_from_alpha", &params_from_alpha, py::arg("d"), py::arg("alpha"));

    m.def("moment", &moment, py::arg("params"), py::arg("a"));
    m.def("lm_norm", &lm_norm, py::arg("params"));
    m.def("density_at", &density_at, py::arg("params"), py::arg("radius"),
          py::arg("which") = Profile::StationaryVinf);
    m.def("support_radius", &support_radius, py::arg("params"),
          py::arg("which") = Profile::StationaryVinf);

    m.def(
        "asymptotic_targets",
        [](AsymptoticMode mode, double value) {
            const AsymptoticTargets t = asymptotic_targets(mode, value);
            py::dict out;
            out["m2_over_d"] = t.m2_over_d;
            out["nm"] = t.nm;
            if (t.c_stat_over_bd) out["c_stat_over_bd"] = *t.c_stat_over_bd;
            return out;
        },
        py::arg("mode"), py::arg("value"));

    py::class_<FlowState>(m, "FlowState")
        .def_readonly("params", &FlowState::params)
        .def_readonly("t", &FlowState::t)
        .def_readonly("x0_norm", &FlowState::x0_norm)
        .def_readonly("a", &FlowState::a)
        .def_readonly("h_norm", &FlowState::h_norm);

    m.def("scale_factor", &scale_factor, py::arg("t"), py::arg("alpha"));
    m.def("flow_state", &flow_state, py::arg("params"), py::arg("t"), py::arg("x0_norm"));
    m.def("solution_density", &solution_density, py::arg("state"),
          py::arg("radius_from_center"));
    m.def("self_similar_density", &self_similar_density, py::arg("params"), py::arg("t"),
          py::arg("radius_from_x0"));
    m.def("time_rescaling", &time_rescaling, py::arg("t"), py::arg("alpha"));
    m.def("time_rescaling_inverse", &time_rescaling_inverse, py::arg("tau"), py::arg("alpha"));

    py::class_<DivergenceReport>(m, "DivergenceReport")
        .def_readonly("w2_sq", &DivergenceReport::w2_sq)
        .def_readonly("entropy", &DivergenceReport::entropy)
        .def_readonly("fisher", &DivergenceReport::fisher)
        .def_readonly("d", &DivergenceReport::d)
        .def_readonly("t", &DivergenceReport::t)
        .def_readonly("x0_norm", &DivergenceReport::x0_norm)
        .def_readonly("m", &DivergenceReport::m);

    m.def("w2_sq_flow", &w2_sq_flow, py::arg("params"), py::arg("t"), py::arg("x0_norm"));
    m.def("entropy_flow", &entropy_flow, py::arg("params"), py::arg("t"), py::arg("x0_norm"));
    m.def("fisher_flow", &fisher_flow, py::arg("params"), py::arg("t"), py::arg("x0_norm"));
    m.def("distances_closed_form", &distances_closed_form, py::arg("params"), py::arg("t"),
          py::arg("x0_norm"));

    m.def("moment_quadrature", &moment_quadrature, py::arg("params"), py::arg("a"));
    m.def("entropy_quadrature", &entropy_quadrature, py::arg("params"), py::arg("t"),
          py::arg("x0_norm"));
    m.def("fisher_quadrature", &fisher_quadrature, py::arg("params"), py::arg("t"),
          py::arg("x0_norm"));

    py::class_<ScheduleSpec>(m, "ScheduleSpec")
        .def(py::init([](AsymptoticMode mode, double value, double eps, double theta, double r,
                         Metric metric) {
                 ScheduleSpec spec;
                 spec.mode = mode;
                 spec.value = value;
                 spec.eps = eps;
                 spec.theta = theta;
                 spec.r = r;
                 spec.metric = metric;
                 return spec;
             }),
             py::arg("mode"), py::arg("value"), py::arg("eps") = 0.1, py::arg("theta") = 0.5,
             py::arg("r") = 1.0, py::arg("metric") = Metric::W2Sq)
        .def_readwrite("mode", &ScheduleSpec::mode)
        .def_readwrite("value", &ScheduleSpec::value)
        .def_readwrite("eps", &ScheduleSpec::eps)
        .def_readwrite("theta", &ScheduleSpec::theta)
        .def_readwrite("r", &ScheduleSpec::r)
        .def_readwrite("metric", &ScheduleSpec::metric);

    py::class_<CutoffScanRow>(m, "CutoffScanRow")
        .def_readonly("d", &CutoffScanRow::d)
        .def_readonly("side", &CutoffScanRow::side)
        .def_readonly("eps", &CutoffScanRow::eps)
        .def_readonly("t", &CutoffScanRow::t)
        .def_readonly("metric", &CutoffScanRow::metric)
        .def_readonly("sup_dist", &CutoffScanRow::sup_dist)
        .def_readonly("x0_norm", &CutoffScanRow::x0_norm);

    py::class_<TrendFit>(m, "TrendFit")
        .def_readonly("slope", &TrendFit::slope)
        .def_readonly("intercept", &TrendFit::intercept)
        .def_readonly("r_squared", &TrendFit::r_squared)
        .def_readonly("n_finite", &TrendFit::n_finite)
        .def_readonly("verdict", &TrendFit::verdict);

    m.def("critical_time", &critical_time, py::arg("d"), py::arg("spec"));
    m.def("sup_distance", &sup_distance, py::arg("params"), py::arg("t"), py::arg("x0_norm"),
          py::arg("metric"));
    m.def("scan", &scan, py::arg("spec"), py::arg("dims"));
    m.def("trend_fit", &trend_fit, py::arg("rows"), py::arg("side"));

    py::class_<SampleCloud>(m, "SampleCloud")
        .def_readonly("n", &SampleCloud::n)
        .def_readonly("d", &SampleCloud::d)
        .def_readonly("seed", &SampleCloud::seed)
        .def_property_readonly("rows", &cloud_rows);

    m.def("sample_barenblatt", &sample_barenblatt, py::arg("params"), py::arg("n"),
          py::arg("x0"), py::arg("seed"), py::arg("which") = Profile::StationaryVinf,
          py::arg("threads") = 1);
    m.def("sample_flow", &sample_flow, py::arg("params"), py::arg("t"), py::arg("x0"),
          py::arg("n"), py::arg("seed"), py::arg("threads") = 1);
    m.def("ot_assignment", &ot_assignment, py::arg("a"), py::arg("b"));

    py::class_<Cdf1D>(m, "Cdf1D")
        .def(py::init([](std::function<double(double)> cdf, double lo, double hi) {
                 Cdf1D law;
                 law.cdf = std::move(cdf);
                 law.lo = lo;
                 law.hi = hi;
                 return law;
             }),
             py::arg("cdf"), py::arg("lo"), py::arg("hi"));
    m.def("flow_cdf_1d", &flow_cdf_1d, py::arg("params"), py::arg("t"), py::arg("x0"));
    m.def("stationary_cdf_1d", &stationary_cdf_1d, py::arg("params"), py::arg("x0"));
    m.def("ot_1d_quantile", &ot_1d_quantile, py::arg("mu"), py::arg("nu"),
          py::arg("n_quantiles"));

    py::class_<GridSpec>(m, "GridSpec")
        .def(py::init([](int d, int n_cells, double length) {
                 GridSpec g;
                 g.d = d;
                 g.n_cells = n_cells;
                 g.length = length;
                 return g;
             }),
             py::arg("d"), py::arg("n_cells"), py::arg("length"));

    py::class_<GridDensity>(m, "GridDensity")
        .def_readonly("d", &GridDensity::d)
        .def_readonly("n", &GridDensity::n)
        .def_readonly("time", &GridDensity::time)
        .def_readonly("clipped_mass", &GridDensity::clipped_mass)
        .def_readonly("v", &GridDensity::v)
        .def_readonly("centers", &GridDensity::centers)
        .def_readonly("volumes", &GridDensity::volumes);

    py::class_<EvolveReport>(m, "EvolveReport")
        .def_readonly("n_steps", &EvolveReport::n_steps)
        .def_readonly("clipped_mass", &EvolveReport::clipped_mass)
        .def_readonly("final_time", &EvolveReport::final_time);

    m.def("init_from_closed_form", &init_from_closed_form, py::arg("params"), py::arg("grid"),
          py::arg("t0"), py::arg("x0_norm"));
    m.def("evolve", &evolve, py::arg("grid"), py::arg("t_end"));
    m.def("grid_mass", &grid_mass, py::arg("grid"));
    m.def("discrete_entropy", &discrete_entropy, py::arg("grid"));
    m.def("front_radius", &front_radius, py::arg("grid"));
    m.def("l1_error_vs_closed_form", &l1_error_vs_closed_form, py::arg("grid"));
}
