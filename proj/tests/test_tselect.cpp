#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "psik/tables.hpp"
#include "psik/tselect.hpp"
#include "psik/zero_estimates.hpp"
#include "test_util.hpp"

using namespace psik;

namespace {
const double kTwoPi = 2.0 * std::numbers::pi;
const double kSqrt5 = std::sqrt(5.0);
const double kKappa = kSqrt5 - 1.0;

// independent bisection for T (log(T/2pi) + sqrt5 + logdelta) = a
double tw_oracle(double a, double logdelta) {
    double lo = 1e-6, hi = 1e12;
    for (int i = 0; i < 200; ++i) {
        double mid = std::sqrt(lo * hi);
        double v = mid * (std::log(mid / kTwoPi) + kSqrt5 + logdelta);
        if (v < a) lo = mid; else hi = mid;
    }
    return std::sqrt(lo * hi);
}
} // namespace

TEST_CASE("t_f is the positive root of its quadratic") {
    double tf = t_f();
    CHECK_THAT(tf, Catch::Matchers::WithinAbs(8.282137, 1e-6));
    CHECK(std::abs(tf * tf - 7.0604 * tf - 10.1186) <= 1e-10);
    CHECK(tf > 5.0);
}

TEST_CASE("truncation selection") {
    auto q = rational_profile();
    auto s = select_truncation(q, 1e6);
    CHECK(std::abs(s.residual) <= 1e-9);
    CHECK(s.t >= 8.2822);
    CHECK(s.t_w == s.a / s.w);

    // a by direct substitution, T_W against the bisection oracle
    double a = kKappa * std::numbers::pi * 500.0 + 21.3270 + 33.3542;
    CHECK(testutil::close_rel(s.a, a, 1e-13));
    CHECK(testutil::close_rel(s.t_w, tw_oracle(a, 0.0), 1e-9));

    CHECK_THROWS_AS(select_truncation(q, 2.0), DomainError);

    testutil::ProfileGen gen;
    for (int i = 0; i < 30; ++i) {
        auto p = gen.next();
        for (double x : {3.0, 1e4, 1e8}) {
            auto sel = select_truncation(p, x);
            CHECK(std::abs(sel.residual) <= 1e-9);
            CHECK(sel.t >= 8.2822);
        }
    }
}

TEST_CASE("selection T monotone in x and in the root discriminant") {
    auto q = rational_profile();
    double prev = 0;
    for (double x : {3.0, 10.0, 1e3, 1e6, 1e9}) {
        double t = select_truncation(q, x).t;
        CHECK(t > prev);
        prev = t;
    }
    double prev_t = 1e300;
    for (double logdelta : {0.0, 1.0, 2.0, 4.0, 8.0}) {
        auto p = make_profile_log_disc(2, 2.0 * logdelta, 2, 0);
        double t = select_truncation(p, 1e6).t;
        CHECK(t < prev_t);
        prev_t = t;
    }
}

TEST_CASE("implicit T0: bracketing, residual, and the T_F + T_W ceiling") {
    auto q = rational_profile();
    const auto& c = bound_constants();

    // the left side vanishes at T_F, so the root is bracketed above it
    double tf = t_f();
    CHECK(std::abs(tf - c.tf_lin - c.tf_const / tf) <= 1e-12);

    // and strictly increasing beyond T_F: both factors positive and growing
    auto lhs_at = [&](double T) {
        return (T - 7.0604 - 10.1186 / T) * (std::log(T / kTwoPi) + kSqrt5);
    };
    double prev_lhs = 0.0;
    for (double T = tf * 1.0001; T < 1e4; T *= 1.9) {
        CHECK(lhs_at(T) > prev_lhs);
        prev_lhs = lhs_at(T);
    }

    auto r = solve_t0(q, 1e6);
    CHECK(std::abs(r.residual) <= 1e-9);

    // plug back into the defining equation
    double S = kKappa * std::numbers::pi * 500.0 + 21.3270 + 33.5251;
    double lhs = (r.x - 7.0604 - 10.1186 / r.x) * (std::log(r.x / kTwoPi) + kSqrt5);
    CHECK(testutil::close_rel(lhs, S, 1e-9));

    testutil::ProfileGen gen;
    for (int i = 0; i < 25; ++i) {
        auto p = gen.next();
        for (double x : {3.0, 100.0, 1e6}) {
            auto sel = select_truncation(p, x);
            auto t0 = solve_t0(p, x);
            CHECK(t0.x > sel.t_f);
            CHECK(t0.x <= sel.t_f + sel.t_w);
        }
    }
}

TEST_CASE("T_min diagnostics") {
    auto q = rational_profile();
    auto d = truncation_diagnostics(q, 1e6);
    REQUIRE(d.t0.has_value());
    REQUIRE(d.tmin.has_value());
    CHECK(*d.tmin < *d.t0);
    CHECK(std::abs(*d.t0_residual) <= 1e-9);
    CHECK(std::abs(*d.tmin_residual) <= 1e-9);

    // gap ~ 7.0604 / log T0 at large x
    auto big = truncation_diagnostics(q, 1e10);
    double gap = *big.t0 - *big.tmin;
    double predicted = 7.0604 / std::log(*big.t0);
    CHECK(gap <= 1.5 * predicted);
    CHECK(gap >= predicted / 1.5);
}

TEST_CASE("truncation cost: divergence, stationarity, domination") {
    auto q = rational_profile();
    CHECK(truncation_cost(q, 100.0, 1e8) > truncation_cost(q, 100.0, 1e3));
    CHECK_THROWS_AS(truncation_cost(q, 2.0, 10.0), DomainError);
    CHECK_THROWS_AS(truncation_cost(q, 10.0, 4.9), DomainError);

    // near-zero slope at the exact stationary point
    for (double x : {100.0, 1e6}) {
        double tmin = solve_tmin(q, x).x;
        double h = 1e-3 * tmin;
        double dE = (truncation_cost(q, x, tmin + h) - truncation_cost(q, x, tmin - h)) / (2 * h);
        double E = truncation_cost(q, x, tmin);
        CHECK(std::abs(dE) <= 1e-6 * std::abs(E) / tmin);
    }

    // cost dominates the assembled gap bound
    testutil::ProfileGen gen;
    for (int i = 0; i < 25; ++i) {
        auto p = gen.next();
        for (double x : {3.0, 1e3, 1e7})
            for (double T : {5.0, 30.0, 2e3}) {
                double lhs = std::sqrt(x) * p.degree / std::numbers::pi *
                                 truncation_cost(p, x, T) +
                             1.0155 * p.log_disc - 2.1042 * p.degree +
                             epsilon_term(p, x, T);
                CHECK(lhs >= gap_bound_at(p, x, T, kKappa).value - 1e-9 * std::abs(lhs));
            }
    }
}

TEST_CASE("cost remainder: decreasing in x and eventually negative") {
    auto p3 = make_profile(3, 23.0, 1, 1);
    CHECK(cost_remainder(p3, 100.0) > cost_remainder(p3, 1e4));

    auto q = rational_profile();
    CHECK(cost_remainder(q, 3.0) > 0.0);
    CHECK(cost_remainder(q, 1e10) < 0.0); // 5.0593 w has overtaken the numerator

    auto p7 = make_profile(7, 184607.0, 1, 3);
    CHECK(cost_remainder(p7, 3.0) < 0.0);
}

TEST_CASE("solved w nondecreasing in the root discriminant") {
    double prev = -1e300;
    for (double logdelta : {0.0, 0.5, 1.0, 2.0, 4.0}) {
        auto p = make_profile_log_disc(2, 2.0 * logdelta, 0, 1);
        double T0 = solve_t0(p, 1e4).x;
        double w = std::log(T0 / kTwoPi) + kSqrt5 + logdelta;
        CHECK(w >= prev);
        prev = w;
    }
}

TEST_CASE("remainder envelope scan reproduces reference rows") {
    auto r3 = scan_remainder_envelope(3, 23.0);
    CHECK_THAT(r3.c_max, Catch::Matchers::WithinAbs(0.5167, 1e-4));
    CHECK(r3.x_at_max == 3986);
    CHECK(r3.n_points == 6398);

    auto r1 = scan_remainder_envelope(1, 1.0);
    CHECK_THAT(r1.c_max, Catch::Matchers::WithinAbs(0.2110, 1e-4));
    CHECK(r1.x_at_max == 2810);
    CHECK(r1.n_points == 6411);

    auto r7 = scan_remainder_envelope(7, 184607.0);
    CHECK(r7.c_max < 0.0);
    CHECK(r7.x_at_max == 3);
    CHECK(r7.n_points == 1);

    auto agg = scan_remainder_envelope_aggregate(9685993193.0);
    CHECK(agg.c_max < 0.0);
    CHECK(agg.n_points == 1);

    CHECK_THROWS_AS(scan_remainder_envelope(0, 1.0), DomainError);
    CHECK_THROWS_AS(scan_remainder_envelope(2, 0.5), DomainError);
}

TEST_CASE("envelope table detects a perturbed constant") {
    // negative control: nudging one coefficient must break the golden rows
    auto corrupted = corrupted_constants("f_t2", 1.001);
    auto rows = cmax_table(refdata::min_disc_defaults(), corrupted);
    int mismatches = 0;
    for (const auto& r : rows) mismatches += r.match ? 0 : 1;
    CHECK(mismatches > 0);
}

TEST_CASE("scan envelope stays under the published constant") {
    // the degree-3 row is the global maximum; every scanned remainder obeys
    // R(x) <= c_max pi / (n sqrt x) by construction of the scan
    const double mins[] = {1.0, 3.0, 23.0, 117.0, 1609.0, 9747.0, 184607.0, 1257728.0};
    double global = -1e300;
    for (int n = 1; n <= 8; ++n) {
        auto r = scan_remainder_envelope(n, mins[n - 1]);
        CHECK(r.n_points >= 1);
        CHECK(r.x_at_max >= 3);
        global = std::max(global, r.c_max);
    }
    CHECK(global <= 0.5167 + 1e-4);
    CHECK(global > 0.5166); // attained by the degree-3 row
}
