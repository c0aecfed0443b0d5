// Acceptance suite: one line per criterion, nonzero exit on any failure.
// Tolerances are pinned here, not configurable.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "psik/psik.hpp"

namespace {

int g_failures = 0;

struct Timer {
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    }
};

void report(int number, const std::string& name, bool pass, const std::string& detail,
            double seconds) {
    std::printf("[%s] criterion %d: %s (%s, %.1fs)\n", pass ? "PASS" : "FAIL", number,
                name.c_str(), detail.c_str(), seconds);
    if (!pass) ++g_failures;
}

// 1. remainder-envelope table: c_max to 1e-4, x_at_max and n_points exact
void criterion_1() {
    Timer t;
    auto rows = psik::cmax_table();
    int bad = 0;
    for (const auto& r : rows)
        if (!r.match) {
            ++bad;
            std::printf("    row %s: computed %s expected %s\n", r.inputs.c_str(),
                        r.computed.c_str(), r.expected.c_str());
        }
    char d[64];
    std::snprintf(d, sizeof(d), "%zu/%zu rows", rows.size() - bad, rows.size());
    report(1, "remainder-envelope table reproduction", bad == 0, d, t.seconds());
}

// 2. crossover tables: clamped entries exact, the rest within 0.1% / one grid step
void criterion_2() {
    Timer t;
    int bad = 0;
    std::size_t total = 0;
    for (bool best : {false, true}) {
        auto rows = psik::crossover_table(best);
        total += rows.size();
        for (const auto& r : rows)
            if (!r.match) {
                ++bad;
                std::printf("    %s row %s: computed %s expected %s\n",
                            best ? "best-of" : "plain", r.inputs.c_str(), r.computed.c_str(),
                            r.expected.c_str());
            } else if (r.delta != 0.0) {
                std::printf("    deviation (within tolerance) %s: computed %s expected %s\n",
                            r.inputs.c_str(), r.computed.c_str(), r.expected.c_str());
            }
    }
    char d[64];
    std::snprintf(d, sizeof(d), "%zu/%zu rows", total - bad, total);
    report(2, "crossover table reproduction", bad == 0, d, t.seconds());
}

// 3. empirical validation of every bound on its validity range up to 1e6
void criterion_3() {
    Timer t;
    const double xmax = 1e6;
    const psik::BoundFormula formulas[] = {psik::BoundFormula::Eq11, psik::BoundFormula::Eq12,
                                           psik::BoundFormula::Eq13, psik::BoundFormula::Eq14,
                                           psik::BoundFormula::Eq15};
    const long long discs[] = {-3, -4, 5, 8, -7, 12};
    bool ok = true;
    double worst = 0;
    std::string worst_at;
    auto take = [&](const psik::VerifyReport& rep) {
        if (rep.max_ratio > worst) {
            worst = rep.max_ratio;
            worst_at = rep.field + " " + psik::formula_name(rep.formula);
        }
        if (!rep.pass) {
            ok = false;
            std::printf("    VIOLATION %s %s: ratio %.6f at x=%.0f\n", rep.field.c_str(),
                        psik::formula_name(rep.formula), rep.max_ratio, rep.argmax_x);
        }
    };
    for (auto f : formulas) {
        take(psik::verify_bound_rational(f, xmax));
        for (long long D : discs)
            take(psik::verify_bound_quadratic(psik::QuadraticField::make(D), f, xmax));
    }
    char d[96];
    std::snprintf(d, sizeof(d), "max ratio %.4f at %s", worst, worst_at.c_str());
    report(3, "bounds hold against exact psi_K up to 1e6", ok, d, t.seconds());
}

// 4. the two psi_K routes agree to 1e-9 max(1, x)
void criterion_4() {
    Timer t;
    bool ok = true;
    double worst = 0;
    for (long long D : {-3LL, -4LL, 5LL, 8LL, -7LL, 12LL}) {
        auto f = psik::QuadraticField::make(D);
        for (double x : {10.0, 100.0, 1e3, 1e4, 1e5, 3.33e5, 1e6}) {
            double a = psik::psi_quadratic(f, x, psik::PsiMethod::DirectIdeals).value;
            double b = psik::psi_quadratic(f, x, psik::PsiMethod::CharacterDecomp).value;
            double err = std::abs(a - b) / std::max(1.0, x);
            worst = std::max(worst, err);
            if (err > 1e-9) {
                ok = false;
                std::printf("    D=%lld x=%.0f: |direct - character| = %.3e\n",
                            static_cast<long long>(D), x, std::abs(a - b));
            }
        }
    }
    char d[64];
    std::snprintf(d, sizeof(d), "worst scaled gap %.2e", worst);
    report(4, "psi_K oracle route equivalence", ok, d, t.seconds());
}

// 5. Lambert-W residual and printed upper bound
void criterion_5() {
    Timer t;
    bool ok = true;
    double worst = 0;
    for (int i = 0; i <= 200; ++i) {
        double x = (i == 0) ? 0.0 : std::pow(10.0, -8.0 + 38.0 * i / 200.0);
        double w = psik::lambert_w0(x);
        double res = std::abs(w * std::exp(w) - x) / std::max(1.0, x);
        worst = std::max(worst, res);
        if (res > 1e-12) ok = false;
    }
    for (int i = 0; i <= 200; ++i) {
        double t2 = std::numbers::e * std::pow(10.0, 20.0 * i / 200.0);
        t2 = std::min(t2, 1e20);
        if (psik::lambert_w0(t2) > psik::lambert_w_upper(t2)) {
            ok = false;
            std::printf("    upper bound violated at t=%.3e\n", t2);
        }
    }
    char d[64];
    std::snprintf(d, sizeof(d), "worst residual %.2e", worst);
    report(5, "Lambert-W residual and upper bound", ok, d, t.seconds());
}

// 6. bound 1.1 dominates the gap bound at the selected T; zero violations
void criterion_6() {
    Timer t;
    const double kappa = std::sqrt(5.0) - 1.0;
    bool ok = true;
    int pairs = 0;
    double worst_margin = 1e300;
    struct Sig { int n, r2; };
    const Sig sigs[] = {{2, 0}, {2, 1}, {3, 0}, {4, 2}, {6, 3}, {10, 0}, {10, 5}, {50, 0},
                        {100, 50}};
    for (auto [n, r2] : sigs) {
        for (double logdelta : {0.5 * std::log(5.0), 1.0, 2.0, 4.0, 9.0}) {
            auto p = psik::make_profile_log_disc(n, n * logdelta, n - 2 * r2, r2);
            for (double x : {3.0, 10.0, 100.0, 1e3, 1e4, 1e5, 1e6, 1e7, 1e8}) {
                ++pairs;
                double T = psik::select_truncation(p, x).t;
                double lhs = psik::bound_1_1(p, x).value;
                double rhs = psik::gap_bound_at(p, x, T, kappa).value;
                worst_margin = std::min(worst_margin, (lhs - rhs) / rhs);
                if (lhs < rhs) {
                    ok = false;
                    std::printf("    VIOLATION n=%d logdelta=%.3f x=%.0f: %.6f < %.6f\n", n,
                                logdelta, x, lhs, rhs);
                }
            }
        }
    }
    char d[96];
    std::snprintf(d, sizeof(d), "%d pairs, worst margin %.2e", pairs, worst_margin);
    report(6, "bound 1.1 dominates the gap bound at selected T", ok && pairs >= 200, d,
           t.seconds());
}

// 7. coefficient identities, positivity, and the epsilon-tilde justification
void criterion_7() {
    Timer t;
    const auto& c = psik::bound_constants();
    bool ok = true;

    for (double k : {0.5, 1.0, std::sqrt(5.0) - 1.0, 2.0})
        for (double T : {5.0, 10.0, 100.0, 1e4}) {
            auto s = psik::smoothing_coefficients(k, T);
            if (std::abs(s.d_w - (s.m_w_plus - s.m_w_minus)) > 1e-12 ||
                std::abs(s.d_n - (s.m_n_plus - s.m_n_minus)) > 1e-12 ||
                std::abs(s.d_c - (s.m_c_plus - s.m_c_minus)) > 1e-12) {
                ok = false;
                std::printf("    difference identity broken at kappa=%.4f T=%.1f\n", k, T);
            }
        }

    for (int i = 0; i <= 1000; ++i) {
        double k = -6.0 + 10.0 * i / 1000.0;
        bool pos = psik::d_c_coefficient(k, 5.0) > 0.0 &&
                   c.dw_k0 - c.dw_k1 * k - c.pw_m_t2_k2 * k * k > 0.0 &&
                   c.dn_k0 - c.dn_k1 * k - c.pn_m_t2_k2 * k * k > 0.0;
        if (!pos) {
            ok = false;
            std::printf("    positivity fails at kappa=%.2f\n", k);
        }
    }

    for (double T : {5.0, 7.0, 15.0, 60.0, 400.0, 1e4})
        for (double k = 0.0; k <= 2.0 + 1e-12; k += 0.1)
            for (double logdelta : {0.5 * std::log(5.0), 1.2, 4.0})
                for (int n : {2, 4, 9}) {
                    auto p = psik::make_profile_log_disc(n, n * logdelta, n % 2, n / 2);
                    double lhs =
                        psik::d_w_coefficient(k, T) * psik::zero_density_weight(p, T) / n +
                        psik::d_n_coefficient(k, T);
                    if (!(lhs >= c.eps_coef * c.pi / T)) {
                        ok = false;
                        std::printf("    justification fails at T=%.1f kappa=%.2f n=%d\n", T, k,
                                    n);
                    }
                }

    report(7, "coefficient identities, positivity, justification", ok, "all grids", t.seconds());
}

// 8. asymptotic identity and trend of bound 1.1 toward it
void criterion_8() {
    Timer t;
    bool ok = true;
    const psik::FieldProfile profiles[] = {
        psik::rational_profile(),
        psik::make_profile(2, 5.0, 2, 0),
        psik::make_profile(3, 23.0, 1, 1),
        psik::make_profile(6, 9747.0, 0, 3),
        psik::make_profile_log_disc(20, 64.0, 20, 0),
    };
    for (const auto& p : profiles)
        for (double x : {16.0, 100.0, 1e4, 1e8, 1e12, 1e16}) {
            double a = psik::asymptotic_rhs(p, x, psik::AsymptoticForm::Expanded);
            double b = psik::asymptotic_rhs(p, x, psik::AsymptoticForm::Reorganized);
            if (std::abs(a - b) > 1e-12 * std::max(std::abs(a), std::abs(b))) {
                ok = false;
                std::printf("    forms disagree at n=%d x=%.1e\n", p.degree, x);
            }
        }
    double final_gap = 0;
    for (const auto& p : {psik::rational_profile(), psik::make_profile(2, 5.0, 2, 0)}) {
        double prev = 1e300;
        for (double x : {1e8, 1e12, 1e16}) {
            double gap = std::abs(psik::bound_1_1(p, x).value /
                                      psik::asymptotic_rhs(p, x, psik::AsymptoticForm::Expanded) -
                                  1.0);
            if (!(gap < prev)) {
                // Known defect of the stated criterion: for the rational
                // field the |ratio - 1| samples are 1.74e-4 (1e8),
                // 7.57e-4 (1e12), 5.11e-4 (1e16) -- the 1e8 point sits in a
                // transient cancellation, so the monotone-trend requirement
                // fails there.  Confirmed with 40-digit arithmetic; the
                // formulas themselves are pinned green by criteria 1, 2, 6.
                ok = false;
                std::printf("    ratio gap not decreasing at n=%d x=%.1e "
                            "(|ratio-1| %.3e after %.3e)\n",
                            p.degree, x, gap, prev);
            }
            prev = gap;
            final_gap = gap;
        }
    }
    char d[64];
    std::snprintf(d, sizeof(d), "final |ratio-1| = %.2e", final_gap);
    report(8, "asymptotic identity and convergence", ok, d, t.seconds());
}

// 9. derivative bounds of the archimedean remainder under finite differences
void criterion_9() {
    Timer t;
    bool ok = true;
    struct Sig { int r1, r2; };
    const Sig sigs[] = {{1, 0}, {0, 1}, {2, 0}, {0, 2}, {3, 1}};
    for (auto [r1, r2] : sigs) {
        auto p = psik::make_profile_log_disc(r1 + 2 * r2, 0.0, r1, r2);
        for (double x : {3.0, 10.0, 100.0, 1e4}) {
            double h = 1e-5 * x;
            double center = (x == 3.0) ? x + h : x;
            double fd = (psik::gamma_factor_remainder(p, center + h) -
                         psik::gamma_factor_remainder(p, center - h)) / (2.0 * h);
            double lower = -(r1 + r2 - 1.0) * std::log(center);
            double upper = 0.0;
            if (r1 == 1 && r2 == 0) upper = -std::log1p(-1.0 / (center * center));
            if (r1 == 0 && r2 == 1) upper = -std::log1p(-1.0 / center);
            double slack =
                1e-6 * std::max({1.0, std::abs(fd), std::abs(lower), std::abs(upper)});
            if (!(fd >= lower - slack && fd <= upper + slack)) {
                ok = false;
                std::printf("    bound fails at (%d,%d) x=%.0f: fd=%.8f in [%.8f, %.8f]?\n", r1,
                            r2, x, fd, lower, upper);
            }
        }
    }
    report(9, "archimedean remainder derivative bounds", ok, "5 signatures x 4 points",
           t.seconds());
}

} // namespace

int main() {
    Timer total;
    criterion_1();
    criterion_2();
    criterion_3();
    criterion_4();
    criterion_5();
    criterion_6();
    criterion_7();
    criterion_8();
    criterion_9();
    std::printf("%s: %d criterion failure(s), %.1fs total\n",
                g_failures == 0 ? "ACCEPTANCE PASS" : "ACCEPTANCE FAIL", g_failures,
                total.seconds());
    return g_failures == 0 ? 0 : 1;
}
