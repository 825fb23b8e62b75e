#include <doctest.h>

#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include "fpcutoff/cutoff.hpp"
#include "fpcutoff/divergences.hpp"
#include "fpcutoff/errors.hpp"

using namespace fpcutoff;

namespace {

std::vector<CutoffScanRow> synthetic_rows(const std::vector<int>& dims, double exponent) {
    std::vector<CutoffScanRow> rows;
    for (int d : dims) {
        CutoffScanRow row;
        row.d = d;
        row.side = Side::Below;
        row.sup_dist = std::pow(static_cast<double>(d), exponent);
        rows.push_back(row);
    }
    return rows;
}

}  // namespace

TEST_CASE("metric names round trip") {
    CHECK(metric_from_name("w2") == Metric::W2Sq);
    CHECK(metric_from_name("entropy") == Metric::Entropy);
    CHECK(metric_from_name("fisher") == Metric::Fisher);
    CHECK(std::string(metric_name(Metric::W2Sq)) == "w2");
    CHECK_THROWS_AS(metric_from_name("l2"), DomainError);
}

TEST_CASE("critical time scales") {
    ScheduleSpec spec;
    spec.mode = AsymptoticMode::FixedAlpha;
    spec.value = 2.0;
    spec.theta = 0.5;
    CHECK(critical_time(100, spec) ==
          doctest::Approx(std::log(100.0)).epsilon(1e-13));  // max(alpha/2, theta) = 1

    spec.value = 0.25;  // alpha/2 = 0.125 < theta
    CHECK(critical_time(100, spec) ==
          doctest::Approx(0.5 * std::log(100.0)).epsilon(1e-13));

    ScheduleSpec fm;
    fm.mode = AsymptoticMode::FixedM;
    fm.value = 2.0;
    fm.theta = 0.4;
    CHECK(critical_time(1000, fm) ==
          doctest::Approx(0.4 * std::log(1000.0)).epsilon(1e-13));
}

TEST_CASE("params_for_dim pins the right family member") {
    ScheduleSpec spec;
    spec.mode = AsymptoticMode::FixedAlpha;
    spec.value = 0.25;
    const ModelParams by_alpha = params_for_dim(50, spec);
    CHECK(by_alpha.alpha == doctest::Approx(0.25).epsilon(1e-13));
    CHECK(by_alpha.d == 50);

    spec.mode = AsymptoticMode::FixedM;
    spec.value = 2.0;
    const ModelParams by_m = params_for_dim(50, spec);
    CHECK(by_m.m == doctest::Approx(2.0).epsilon(1e-15));
}

TEST_CASE("sup distance grows with the start norm") {
    const ModelParams params = params_from_m(10, 1.5);
    for (Metric metric : {Metric::W2Sq, Metric::Entropy, Metric::Fisher}) {
        const double lo = sup_distance(params, 1.0, 1.0, metric);
        const double hi = sup_distance(params, 1.0, 5.0, metric);
        CAPTURE(metric_name(metric));
        CHECK(hi > lo);
    }
}

TEST_CASE("scan emits two ordered rows per dimension") {
    ScheduleSpec spec;
    spec.mode = AsymptoticMode::FixedAlpha;
    spec.value = 1.0;
    spec.eps = 0.2;
    const std::vector<int> dims = {100, 1000};
    const std::vector<CutoffScanRow> rows = scan(spec, dims);
    REQUIRE(rows.size() == 4);
    CHECK(rows[0].d == 100);
    CHECK(rows[0].side == Side::Below);
    CHECK(rows[1].d == 100);
    CHECK(rows[1].side == Side::Above);
    CHECK(rows[2].d == 1000);
    // Start norm follows r * d^theta.
    CHECK(rows[0].x0_norm == doctest::Approx(std::pow(100.0, 0.5)).epsilon(1e-12));
    // Time placement follows (1 -+ eps) * critical time.
    const double tc = critical_time(100, spec);
    CHECK(rows[0].t == doctest::Approx(0.8 * tc).epsilon(1e-12));
    CHECK(rows[1].t == doctest::Approx(1.2 * tc).epsilon(1e-12));
    // The below-side value dominates the above-side value at the same d.
    CHECK(rows[0].sup_dist > rows[1].sup_dist);
}

TEST_CASE("scan validates its schedule") {
    ScheduleSpec spec;
    spec.eps = 1.5;
    CHECK_THROWS_AS(scan(spec, {100}), DomainError);
    spec.eps = 0.1;
    spec.r = -1.0;
    CHECK_THROWS_AS(scan(spec, {100}), DomainError);
    spec.r = 1.0;
    CHECK_THROWS_AS(scan(spec, std::vector<int>{}), DomainError);
}

TEST_CASE("trend fit classifies clean power laws") {
    const std::vector<int> dims = {100, 1000, 10000, 100000};
    const TrendFit up = trend_fit(synthetic_rows(dims, 0.3), Side::Below);
    CHECK(up.slope == doctest::Approx(0.3).epsilon(1e-12));
    CHECK(up.r_squared == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(up.verdict == TrendVerdict::Diverges);

    const TrendFit down = trend_fit(synthetic_rows(dims, -0.2), Side::Below);
    CHECK(down.verdict == TrendVerdict::Vanishes);

    const TrendFit flat = trend_fit(synthetic_rows(dims, 0.0), Side::Below);
    CHECK(flat.verdict == TrendVerdict::Inconclusive);
}

TEST_CASE("trend fit needs three finite positive points") {
    const std::vector<int> dims = {100, 1000};
    CHECK_THROWS_AS(trend_fit(synthetic_rows(dims, 0.3), Side::Below),
                    InsufficientDataError);

    // Infinite rows are dropped before the count.
    std::vector<CutoffScanRow> rows = synthetic_rows({100, 1000, 10000}, 0.3);
    rows[0].sup_dist = std::numeric_limits<double>::infinity();
    CHECK_THROWS_AS(trend_fit(rows, Side::Below), InsufficientDataError);
}

TEST_CASE("transport terms decompose the closed form") {
    const ModelParams params = params_from_m(20, 1.5);
    const double t = 1.3, x0 = 4.0;
    const W2Terms terms = w2_flow_terms(params, t, x0);
    CHECK(terms.profile_term + terms.shift_term ==
          doctest::Approx(w2_sq_flow(params, t, x0)).epsilon(1e-12));
    CHECK(terms.profile_term > 0.0);
    CHECK(terms.shift_term > 0.0);
}

TEST_CASE("scan slopes bracket the schedule exponent on both sides") {
    // Transport metric, pinned alpha = 1, theta = 1/2: the scan is built so
    // that ln sup behaves like +/- 2 eps theta ln d to leading order; with
    // eps = 0.2 the measured slopes sit within 25 percent of +/- 0.2.
    ScheduleSpec spec;
    spec.mode = AsymptoticMode::FixedAlpha;
    spec.value = 1.0;
    spec.eps = 0.2;
    spec.metric = Metric::W2Sq;
    const std::vector<int> dims = {100, 1000, 10000, 100000, 1000000};
    const std::vector<CutoffScanRow> rows = scan(spec, dims);
    const TrendFit below = trend_fit(rows, Side::Below);
    const TrendFit above = trend_fit(rows, Side::Above);
    CHECK(below.verdict == TrendVerdict::Diverges);
    CHECK(above.verdict == TrendVerdict::Vanishes);
    CHECK(std::fabs(below.slope - 0.2) <= 0.05);
    CHECK(std::fabs(above.slope + 0.2) <= 0.05);
}
