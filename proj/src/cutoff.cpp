#include "fpcutoff/cutoff.hpp"

#include <cmath>
#include <limits>

#include "fpcutoff/divergences.hpp"
#include "fpcutoff/errors.hpp"

namespace fpcutoff {

const char* metric_name(Metric metric) {
    switch (metric) {
        case Metric::W2Sq:
            return "w2";
        case Metric::Entropy:
            return "entropy";
        case Metric::Fisher:
            return "fisher";
    }
    return "?";
}

Metric metric_from_name(const std::string& name) {
    if (name == "w2") return Metric::W2Sq;
    if (name == "entropy") return Metric::Entropy;
    if (name == "fisher") return Metric::Fisher;
    throw DomainError("unknown metric '" + name + "' (expected w2, entropy or fisher)");
}

const char* side_name(Side side) { return side == Side::Below ? "below" : "above"; }

const char* trend_verdict_name(TrendVerdict verdict) {
    switch (verdict) {
        case TrendVerdict::Diverges:
            return "diverges";
        case TrendVerdict::Vanishes:
            return "vanishes";
        case TrendVerdict::Inconclusive:
            return "inconclusive";
    }
    return "?";
}

ModelParams params_for_dim(int d, const ScheduleSpec& spec) {
    return spec.mode == AsymptoticMode::FixedAlpha ? params_from_alpha(d, spec.value)
                                                   : params_from_m(d, spec.value);
}

double critical_time(int d, const ScheduleSpec& spec) {
    if (d < 1) throw DomainError("dimension must be positive");
    if (!(spec.theta > 0.0)) throw DomainError("theta must be positive");
    const double logd = std::log(static_cast<double>(d));
    if (spec.mode == AsymptoticMode::FixedAlpha) {
        return std::max(0.5 * spec.value, spec.theta) * logd;
    }
    return spec.theta * logd;
}

double sup_distance(const ModelParams& params, double t, double x0_norm, Metric metric) {
    switch (metric) {
        case Metric::W2Sq:
            return w2_sq_flow(params, t, x0_norm);
        case Metric::Entropy:
            return entropy_flow(params, t, x0_norm);
        case Metric::Fisher:
            return fisher_flow(params, t, x0_norm);
    }
    throw DomainError("unknown metric");
}

std::vector<CutoffScanRow> scan(const ScheduleSpec& spec, const std::vector<int>& dims) {
    if (!(spec.eps > 0.0) || !(spec.eps < 1.0)) {
        throw DomainError("eps must lie in (0,1)");
    }
    if (!(spec.r > 0.0)) throw DomainError("start multiplier r must be positive");
    if (dims.empty()) throw DomainError("scan needs at least one dimension");
    std::vector<CutoffScanRow> rows;
    rows.reserve(2 * dims.size());
    for (const int d : dims) {
        const ModelParams params = params_for_dim(d, spec);
        const double t_c = critical_time(d, spec);
        const double x0_norm = spec.r * std::pow(static_cast<double>(d), spec.theta);
        for (const Side side : {Side::Below, Side::Above}) {
            CutoffScanRow row;
            row.d = d;
            row.side = side;
            row.eps = spec.eps;
            row.t = (side == Side::Below ? 1.0 - spec.eps : 1.0 + spec.eps) * t_c;
            row.metric = spec.metric;
            row.x0_norm = x0_norm;
            row.sup_dist = sup_distance(params, row.t, x0_norm, spec.metric);
            rows.push_back(row);
        }
    }
    return rows;
}

TrendFit trend_fit(const std::vector<CutoffScanRow>& rows, Side side) {
    std::vector<double> xs, ys;
    for (const auto& row : rows) {
        if (row.side != side) continue;
        if (!std::isfinite(row.sup_dist) || !(row.sup_dist > 0.0)) continue;
        xs.push_back(std::log(static_cast<double>(row.d)));
        ys.push_back(std::log(row.sup_dist));
    }
    TrendFit fit;
    fit.n_finite = static_cast<int>(xs.size());
    if (fit.n_finite < 3) {
        throw InsufficientDataError("trend fit needs at least 3 finite positive rows");
    }
    const double n = static_cast<double>(xs.size());
    double sx = 0.0, sy = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        sx += xs[i];
        sy += ys[i];
    }
    const double mx = sx / n;
    const double my = sy / n;
    double sxx = 0.0, sxy = 0.0, syy = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        const double dx = xs[i] - mx;
        const double dy = ys[i] - my;
        sxx += dx * dx;
        sxy += dx * dy;
        syy += dy * dy;
    }
    if (!(sxx > 0.0)) throw InsufficientDataError("trend fit needs distinct dimensions");
    fit.slope = sxy / sxx;
    fit.intercept = my - fit.slope * mx;
    double ss_res = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        const double resid = ys[i] - (fit.intercept + fit.slope * xs[i]);
        ss_res += resid * resid;
    }
    fit.r_squared = syy > 0.0 ? 1.0 - ss_res / syy : 0.0;
    if (fit.slope > 0.05 && fit.r_squared > 0.9) {
        fit.verdict = TrendVerdict::Diverges;
    } else if (fit.slope < -0.05 && fit.r_squared > 0.9) {
        fit.verdict = TrendVerdict::Vanishes;
    } else {
        fit.verdict = TrendVerdict::Inconclusive;
    }
    return fit;
}

W2Terms w2_flow_terms(const ModelParams& params, double t, double x0_norm) {
    if (!(t > 0.0)) throw DomainError("need t > 0");
    W2Terms terms;
    terms.shift_term = std::exp(-2.0 * t) * x0_norm * x0_norm;
    if (params.regime == Regime::FastDiffusion && !params.second_moment_finite) {
        terms.profile_term = std::numeric_limits<double>::infinity();
        return terms;
    }
    const double u = std::exp(-t / params.alpha);
    const double one_minus_a = -std::expm1(params.alpha * std::log1p(-u));
    terms.profile_term = one_minus_a * one_minus_a * moment(params, 2.0);
    return terms;
}

}  // namespace fpcutoff
