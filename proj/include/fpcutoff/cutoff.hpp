#pragma once

#include <string>
#include <vector>

#include "fpcutoff/barenblatt.hpp"

namespace fpcutoff {

enum class Metric { W2Sq, Entropy, Fisher };

const char* metric_name(Metric metric);
Metric metric_from_name(const std::string& name);

// High-dimensional schedule: the profile family is pinned either by alpha or
// by m, the start is placed at norm r * d^theta, and the scan evaluates the
// chosen divergence at times (1 -+ eps) * critical_time.
struct ScheduleSpec {
    AsymptoticMode mode = AsymptoticMode::FixedAlpha;
    double value = 1.0;  // alpha (FixedAlpha) or m (FixedM)
    double eps = 0.1;
    double theta = 0.5;
    double r = 1.0;
    Metric metric = Metric::W2Sq;
};

ModelParams params_for_dim(int d, const ScheduleSpec& spec);

// Time scale at which the divergence from equilibrium collapses:
// max(alpha/2, theta) * ln d when alpha is pinned, theta * ln d when m is.
double critical_time(int d, const ScheduleSpec& spec);

// Largest divergence over admissible starts |x0| <= x0_norm; every metric
// here is increasing in the start norm, so this is the value at the boundary.
double sup_distance(const ModelParams& params, double t, double x0_norm, Metric metric);

enum class Side { Below, Above };

const char* side_name(Side side);

struct CutoffScanRow {
    int d = 0;
    Side side = Side::Below;
    double eps = 0.0;
    double t = 0.0;
    Metric metric = Metric::W2Sq;
    double sup_dist = 0.0;
    double x0_norm = 0.0;
};

// Two rows per dimension: the divergence slightly before and slightly after
// the critical time.
std::vector<CutoffScanRow> scan(const ScheduleSpec& spec, const std::vector<int>& dims);

enum class TrendVerdict { Diverges, Vanishes, Inconclusive };

const char* trend_verdict_name(TrendVerdict verdict);

struct TrendFit {
    double slope = 0.0;
    double intercept = 0.0;
    double r_squared = 0.0;
    int n_finite = 0;
    TrendVerdict verdict = TrendVerdict::Inconclusive;
};

// Least-squares fit of ln sup_dist against ln d for one side of the scan.
// Throws InsufficientDataError with fewer than 3 finite positive rows.
TrendFit trend_fit(const std::vector<CutoffScanRow>& rows, Side side);

// Decomposition of the squared transport distance along the flow into the
// profile-contraction term and the center-decay term.
struct W2Terms {
    double profile_term = 0.0;
    double shift_term = 0.0;
};

W2Terms w2_flow_terms(const ModelParams& params, double t, double x0_norm);

}  // namespace fpcutoff
