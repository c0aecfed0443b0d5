#pragma once

// Invariant suite behind the selftest command.  Every check recomputes a
// cross-checkable identity from scratch; all take the constants table as a
// parameter so a deliberately corrupted copy provably trips them.

#include <cmath>
#include <string>
#include <vector>

#include "psik/bounds.hpp"
#include "psik/psi_oracle.hpp"
#include "psik/specfun.hpp"
#include "psik/zero_estimates.hpp"

namespace psik::selfcheck {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

// |W e^W - x| <= 1e-12 max(1, x) on a log grid over [0, 1e30], and the
// logarithmic upper bound holds on [e, 1e20].
inline CheckResult check_lambert(const BoundConstants&) {
    CheckResult r{"lambert_residual", true, ""};
    double worst = 0.0;
    for (int i = 0; i <= 200; ++i) {
        double x = (i == 0) ? 0.0 : std::pow(10.0, -6.0 + 36.0 * i / 200.0);
        double w = lambert_w0(x);
        double res = std::abs(w * std::exp(w) - x) / std::max(1.0, x);
        worst = std::max(worst, res);
    }
    if (worst > 1e-12) {
        r.pass = false;
        r.detail = "residual " + std::to_string(worst);
        return r;
    }
    for (int i = 0; i <= 100; ++i) {
        double t = std::pow(10.0, (std::log10(std::numbers::e)) +
                                      (20.0 - std::log10(std::numbers::e)) * i / 100.0);
        t = std::max(t, std::numbers::e);
        if (lambert_w0(t) > lambert_w_upper(t) + 1e-14) {
            r.pass = false;
            r.detail = "upper bound violated at t=" + std::to_string(t);
            return r;
        }
    }
    return r;
}

// D = M_+ - M_- for all three coefficient differences on a (kappa, T) grid.
inline CheckResult check_coefficients(const BoundConstants& c) {
    CheckResult r{"coefficient_differences", true, ""};
    const double sqrt5 = std::sqrt(5.0);
    const double kappas[] = {0.5, 1.0, sqrt5 - 1.0, 2.0};
    const double Ts[] = {5.0, 10.0, 100.0, 1e4};
    for (double k : kappas)
        for (double T : Ts) {
            auto s = smoothing_coefficients(k, T, c);
            double e1 = std::abs(s.d_w - (s.m_w_plus - s.m_w_minus));
            double e2 = std::abs(s.d_n - (s.m_n_plus - s.m_n_minus));
            double e3 = std::abs(s.d_c - (s.m_c_plus - s.m_c_minus));
            if (e1 > 1e-12 || e2 > 1e-12 || e3 > 1e-12) {
                r.pass = false;
                char buf[160];
                std::snprintf(buf, sizeof(buf),
                              "kappa=%.6f T=%.1f errors %.3e %.3e %.3e", k, T, e1, e2, e3);
                r.detail = buf;
                return r;
            }
        }
    return r;
}

// The expanded and reorganized asymptotic forms are the same polynomial in
// (log x, log log x, log delta); they must agree to relative 1e-12.
inline CheckResult check_asymptotic_identity(const BoundConstants& c) {
    CheckResult r{"asymptotic_identity", true, ""};
    const FieldProfile profiles[] = {
        rational_profile(),
        make_profile(2, 5.0, 2, 0),
        make_profile(3, 23.0, 1, 1),
        make_profile_log_disc(10, 60.0, 0, 5),
    };
    for (const auto& p : profiles)
        for (double x : {16.0, 100.0, 1e4, 1e8, 1e12, 1e16}) {
            double a = asymptotic_rhs(p, x, AsymptoticForm::Expanded, c);
            double b = asymptotic_rhs(p, x, AsymptoticForm::Reorganized, c);
            if (std::abs(a - b) > 1e-12 * std::max(std::abs(a), std::abs(b))) {
                char buf[160];
                std::snprintf(buf, sizeof(buf), "n=%d x=%.3g: %.17g vs %.17g",
                              p.degree, x, a, b);
                r.pass = false;
                r.detail = buf;
                return r;
            }
        }
    return r;
}

// Direct-ideal and character-decomposition psi_K agree.
inline CheckResult check_psi_dual_method(const BoundConstants&) {
    CheckResult r{"psi_dual_method", true, ""};
    for (std::int64_t D : {-3, -4, 5, 8, -7, 12, 13})
        for (double x : {10.0, 97.0, 1024.0, 20000.0}) {
            auto f = QuadraticField::make(D);
            double a = psi_quadratic(f, x, PsiMethod::DirectIdeals).value;
            double b = psi_quadratic(f, x, PsiMethod::CharacterDecomp).value;
            if (std::abs(a - b) > 1e-9 * std::max(1.0, x)) {
                char buf[160];
                std::snprintf(buf, sizeof(buf), "D=%lld x=%.0f: %.12f vs %.12f",
                              static_cast<long long>(D), x, a, b);
                r.pass = false;
                r.detail = buf;
                return r;
            }
        }
    return r;
}

inline std::vector<CheckResult> run_all(const BoundConstants& c = bound_constants()) {
    return {
        check_lambert(c),
        check_coefficients(c),
        check_asymptotic_identity(c),
        check_psi_dual_method(c),
    };
}

} // namespace psik::selfcheck
