#include "commands.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <sstream>

#include "fpcutoff/cutoff.hpp"
#include "fpcutoff/divergences.hpp"
#include "fpcutoff/dynamics.hpp"
#include "fpcutoff/errors.hpp"
#include "fpcutoff/io_util.hpp"
#include "fpcutoff/pde.hpp"
#include "fpcutoff/sampling.hpp"
#include "fpcutoff/threading.hpp"
#include "verify_suites.hpp"

namespace fpcutoff::cli {

namespace {

const char* regime_name(Regime regime) {
    switch (regime) {
        case Regime::FastDiffusion:
            return "fast-diffusion";
        case Regime::Gaussian:
            return "gaussian";
        case Regime::PorousMedium:
            return "porous-medium";
    }
    return "?";
}

int write_out(const GlobalOptions& g, const std::string& text) {
    if (g.out_path.empty()) {
        std::fwrite(text.data(), 1, text.size(), stdout);
        return 0;
    }
    std::ofstream out(g.out_path, std::ios::binary);
    if (!out) throw DomainError("cannot open output file '" + g.out_path + "'");
    out.write(text.data(), static_cast<std::streamsize>(text.size()));
    return 0;
}

std::string pick_format(const GlobalOptions& g, const char* def) {
    return g.format.empty() ? def : g.format;
}

}  // namespace

ModelParams resolve_profile(const ProfileArgs& a) {
    if (a.has_m == a.has_alpha) {
        throw DomainError("provide exactly one of --m or --alpha");
    }
    return a.has_m ? params_from_m(a.d, a.m) : params_from_alpha(a.d, a.alpha);
}

int cmd_params(const GlobalOptions& g, const ProfileArgs& a) {
    const ModelParams params = resolve_profile(a);
    if (!params.second_moment_finite) {
        std::ostringstream msg;
        msg << "second moment diverges for d=" << params.d << ", m=" << params.m
            << ": need m > d/(d+2) = " << format_double(params.d / (params.d + 2.0));
        throw InfiniteMomentError(msg.str());
    }
    const double m2 = moment(params, 2.0);
    const double nm = lm_norm(params);
    const double r_stat = support_radius(params, Profile::StationaryVinf);
    const double r_unit = support_radius(params, Profile::UnitTimeB);

    const std::string fmt = pick_format(g, "json");
    std::ostringstream out;
    if (fmt == "json") {
        out << "{\n";
        out << "  \"d\": " << params.d << ",\n";
        out << "  \"m\": " << format_double(params.m) << ",\n";
        out << "  \"alpha\": " << format_double(params.alpha) << ",\n";
        out << "  \"p\": " << json_number(params.p) << ",\n";
        out << "  \"b\": " << format_double(params.b) << ",\n";
        out << "  \"c\": " << format_double(params.c) << ",\n";
        out << "  \"C_stat\": " << format_double(params.C_stat) << ",\n";
        out << "  \"beta\": " << format_double(params.beta) << ",\n";
        out << "  \"regime\": " << json_string(regime_name(params.regime)) << ",\n";
        out << "  \"second_moment_finite\": " << json_bool(params.second_moment_finite) << ",\n";
        out << "  \"second_moment\": " << json_number(m2) << ",\n";
        out << "  \"profile_lm_norm\": " << json_number(nm) << ",\n";
        out << "  \"support_radius_stationary\": " << json_number(r_stat) << ",\n";
        out << "  \"support_radius_unit_time\": " << json_number(r_unit) << "\n";
        out << "}\n";
    } else {
        out << "d,m,alpha,p,b,c,C_stat,beta,regime,second_moment_finite,second_moment,"
               "profile_lm_norm,support_radius_stationary,support_radius_unit_time\n";
        out << params.d << ',' << format_double(params.m) << ',' << format_double(params.alpha)
            << ',' << format_double(params.p) << ',' << format_double(params.b) << ','
            << format_double(params.c) << ',' << format_double(params.C_stat) << ','
            << format_double(params.beta) << ',' << regime_name(params.regime) << ','
            << (params.second_moment_finite ? "true" : "false") << ',' << format_double(m2) << ','
            << format_double(nm) << ',' << format_double(r_stat) << ',' << format_double(r_unit)
            << '\n';
    }
    return write_out(g, out.str());
}

int cmd_distance(const GlobalOptions& g, const DistanceArgs& a) {
    const ModelParams params = resolve_profile(a.profile);
    if (!(a.t > 0.0)) throw DomainError("--t must be positive");
    if (!(a.x0 >= 0.0)) throw DomainError("--x0 must be non-negative");
    const DivergenceReport report = distances_closed_form(params, a.t, a.x0);

    const std::string fmt = pick_format(g, "json");
    std::ostringstream out;
    if (fmt == "json") {
        out << "{\n";
        out << "  \"d\": " << params.d << ",\n";
        out << "  \"m\": " << format_double(params.m) << ",\n";
        out << "  \"alpha\": " << format_double(params.alpha) << ",\n";
        out << "  \"t\": " << format_double(a.t) << ",\n";
        out << "  \"x0_norm\": " << format_double(a.x0) << ",\n";
        out << "  \"w2_sq\": " << json_number(report.w2_sq) << ",\n";
        out << "  \"entropy\": " << json_number(report.entropy) << ",\n";
        out << "  \"fisher\": " << json_number(report.fisher) << "\n";
        out << "}\n";
    } else {
        out << "d,m,alpha,t,x0_norm,w2_sq,entropy,fisher\n";
        out << params.d << ',' << format_double(params.m) << ',' << format_double(params.alpha)
            << ',' << format_double(a.t) << ',' << format_double(a.x0) << ','
            << format_double(report.w2_sq) << ',' << format_double(report.entropy) << ','
            << format_double(report.fisher) << '\n';
    }
    return write_out(g, out.str());
}

namespace {

std::string trend_json(const std::vector<CutoffScanRow>& rows, Side side) {
    std::ostringstream out;
    try {
        const TrendFit fit = trend_fit(rows, side);
        out << "{\"slope\": " << format_double(fit.slope)
            << ", \"intercept\": " << format_double(fit.intercept)
            << ", \"r_squared\": " << format_double(fit.r_squared)
            << ", \"n_finite\": " << fit.n_finite << ", \"verdict\": "
            << json_string(trend_verdict_name(fit.verdict)) << "}";
    } catch (const InsufficientDataError&) {
        out << "{\"verdict\": \"insufficient-data\"}";
    }
    return out.str();
}

}  // namespace

int cmd_scan(const GlobalOptions& g, const ScanArgs& a) {
    ScheduleSpec spec;
    if (a.mode == "fixed-alpha") {
        spec.mode = AsymptoticMode::FixedAlpha;
    } else if (a.mode == "fixed-m") {
        spec.mode = AsymptoticMode::FixedM;
    } else {
        throw DomainError("--mode must be fixed-alpha or fixed-m");
    }
    spec.value = a.value;
    spec.eps = a.eps;
    spec.theta = a.theta;
    spec.r = a.r;
    spec.metric = metric_from_name(a.metric);
    if (a.dims.empty()) throw DomainError("--dims must list at least one dimension");

    const std::vector<CutoffScanRow> rows = scan(spec, a.dims);
    const std::string trend = "{\"below\": " + trend_json(rows, Side::Below) +
                              ", \"above\": " + trend_json(rows, Side::Above) + "}";

    const std::string fmt = pick_format(g, "csv");
    std::ostringstream out;
    if (fmt == "csv") {
        out << "d,side,eps,t,metric,sup_dist,x0_norm\n";
        for (const auto& row : rows) {
            out << row.d << ',' << side_name(row.side) << ',' << format_double(row.eps) << ','
                << format_double(row.t) << ',' << metric_name(row.metric) << ','
                << format_double(row.sup_dist) << ',' << format_double(row.x0_norm) << '\n';
        }
        out << "# " << trend << '\n';
    } else {
        out << "{\n  \"rows\": [\n";
        for (std::size_t i = 0; i < rows.size(); ++i) {
            const auto& row = rows[i];
            out << "    {\"d\": " << row.d << ", \"side\": " << json_string(side_name(row.side))
                << ", \"eps\": " << format_double(row.eps)
                << ", \"t\": " << format_double(row.t)
                << ", \"metric\": " << json_string(metric_name(row.metric))
                << ", \"sup_dist\": " << json_number(row.sup_dist)
                << ", \"x0_norm\": " << format_double(row.x0_norm) << "}"
                << (i + 1 < rows.size() ? "," : "") << '\n';
        }
        out << "  ],\n  \"trend\": " << trend << "\n}\n";
    }
    return write_out(g, out.str());
}

int cmd_pde(const GlobalOptions& g, const PdeArgs& a) {
    const ModelParams params = resolve_profile(a.profile);
    GridSpec grid;
    grid.d = params.d;
    grid.n_cells = a.cells;
    grid.length = a.length;
    if (!(a.t_end >= a.t0)) throw DomainError("--t must not precede --t0");

    GridDensity state = init_from_closed_form(params, grid, a.t0, a.x0);
    const double entropy_initial = discrete_entropy(state);
    const EvolveReport report = evolve(state, a.t_end);
    const double mass = grid_mass(state);
    const double entropy_final = discrete_entropy(state);
    const double front = front_radius(state);
    const double l1 = l1_error_vs_closed_form(state);

    std::ostringstream summary;
    summary << "{\"time\": " << format_double(state.time)
            << ", \"n_steps\": " << report.n_steps
            << ", \"mass\": " << format_double(mass)
            << ", \"mass_drift\": " << format_double(mass - 1.0)
            << ", \"clipped_mass\": " << format_double(report.clipped_mass)
            << ", \"entropy_initial\": " << format_double(entropy_initial)
            << ", \"entropy_final\": " << format_double(entropy_final)
            << ", \"front_radius\": " << format_double(front)
            << ", \"l1_error_vs_closed_form\": " << format_double(l1) << "}";

    const std::string fmt = pick_format(g, "csv");
    std::ostringstream out;
    if (fmt == "csv") {
        out << "time,cell_center,value\n";
        const std::string time_str = format_double(state.time);
        for (int i = 0; i < state.n; ++i) {
            out << time_str << ',' << format_double(state.centers[i]) << ','
                << format_double(state.v[i]) << '\n';
        }
        out << "# " << summary.str() << '\n';
    } else {
        out << "{\n  \"summary\": " << summary.str() << ",\n  \"cells\": [\n";
        for (int i = 0; i < state.n; ++i) {
            out << "    {\"center\": " << format_double(state.centers[i])
                << ", \"value\": " << format_double(state.v[i]) << "}"
                << (i + 1 < state.n ? "," : "") << '\n';
        }
        out << "  ]\n}\n";
    }
    return write_out(g, out.str());
}

int cmd_sample(const GlobalOptions& g, const SampleArgs& a) {
    const ModelParams params = resolve_profile(a.profile);
    if (a.n < 1) throw DomainError("--n must be positive");
    if (!(a.x0 >= 0.0)) throw DomainError("--x0 must be non-negative");
    std::vector<double> x0(params.d, 0.0);
    x0[0] = a.x0;

    SampleCloud cloud;
    if (a.law == "stationary") {
        cloud = sample_barenblatt(params, a.n, x0, g.seed, Profile::StationaryVinf, g.threads);
    } else if (a.law == "unit-time") {
        cloud = sample_barenblatt(params, a.n, x0, g.seed, Profile::UnitTimeB, g.threads);
    } else if (a.law == "flow") {
        if (!(a.t > 0.0)) throw DomainError("--law flow needs --t > 0");
        cloud = sample_flow(params, a.t, x0, a.n, g.seed, g.threads);
    } else {
        throw DomainError("--law must be stationary, unit-time or flow");
    }

    const std::string fmt = pick_format(g, "csv");
    std::ostringstream out;
    if (fmt == "csv") {
        out << "index";
        for (int j = 1; j <= cloud.d; ++j) out << ",x_" << j;
        out << '\n';
        for (int i = 0; i < cloud.n; ++i) {
            out << i;
            for (int j = 0; j < cloud.d; ++j) out << ',' << format_double(cloud.coord(i, j));
            out << '\n';
        }
    } else {
        out << "{\n  \"seed\": " << cloud.seed << ",\n  \"n\": " << cloud.n
            << ",\n  \"d\": " << cloud.d << ",\n  \"points\": [\n";
        for (int i = 0; i < cloud.n; ++i) {
            out << "    [";
            for (int j = 0; j < cloud.d; ++j) {
                out << format_double(cloud.coord(i, j)) << (j + 1 < cloud.d ? ", " : "");
            }
            out << "]" << (i + 1 < cloud.n ? "," : "") << '\n';
        }
        out << "  ]\n}\n";
    }
    return write_out(g, out.str());
}

int cmd_verify(const GlobalOptions& g, const VerifyArgs& a) {
    const std::vector<CheckResult> checks = run_suite(a.suite, g.seed, g.threads);
    int n_failed = 0;
    for (const auto& check : checks) {
        if (!check.pass) ++n_failed;
    }

    const std::string fmt = pick_format(g, "json");
    std::ostringstream out;
    if (fmt == "json") {
        out << "{\n  \"suite\": " << json_string(a.suite) << ",\n  \"seed\": " << g.seed
            << ",\n  \"checks\": [\n";
        for (std::size_t i = 0; i < checks.size(); ++i) {
            const auto& check = checks[i];
            out << "    {\"id\": " << json_string(check.id)
                << ", \"description\": " << json_string(check.description)
                << ", \"value\": " << json_number(check.value)
                << ", \"tolerance\": " << json_number(check.tolerance)
                << ", \"pass\": " << json_bool(check.pass) << "}"
                << (i + 1 < checks.size() ? "," : "") << '\n';
        }
        out << "  ],\n  \"n_checks\": " << checks.size() << ",\n  \"n_failed\": " << n_failed
            << "\n}\n";
    } else {
        out << "id,description,value,tolerance,pass\n";
        for (const auto& check : checks) {
            out << check.id << ',' << check.description << ',' << format_double(check.value)
                << ',' << format_double(check.tolerance) << ','
                << (check.pass ? "true" : "false") << '\n';
        }
    }
    write_out(g, out.str());
    return n_failed == 0 ? 0 : 1;
}

}  // namespace fpcutoff::cli
