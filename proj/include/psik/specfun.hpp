#pragma once

// Special functions: principal-branch Lambert-W on [0, inf), its printed
// logarithmic upper bound, and the archimedean remainder series f1, f2, R.

#include <cmath>
#include <limits>

#include "psik/errors.hpp"
#include "psik/field.hpp"

namespace psik {

namespace detail {

// One Halley step for f(w) = w e^w - x.
inline double halley_we(double w, double x) {
    double ew = std::exp(w);
    double f = w * ew - x;
    double d = ew * (w + 1.0);
    double step = f / (d - f * (w + 2.0) / (2.0 * (w + 1.0)));
    return w - step;
}

// One Halley step for g(w) = w + log w - log x (same root, overflow-free).
inline double halley_log(double w, double logx) {
    double g = w + std::log(w) - logx;
    double d = 1.0 + 1.0 / w;
    double step = g / (d + g * 0.5 / (w * w * d));
    return w - step;
}

} // namespace detail

// Principal branch of W(x) e^{W(x)} = x for x >= 0.
// Bracketing plus Halley refinement from a log-based initial guess;
// residual |W e^W - x| <= 1e-12 max(1, x) over [0, 1e30] and beyond.
inline double lambert_w0(double x) {
    if (!(x >= 0) || !std::isfinite(x))
        throw DomainError("lambert_w0: x >= 0 required");
    if (x == 0.0) return 0.0;

    const double e = std::numbers::e;
    double lo, hi, w;
    if (x >= e) {
        // W(x) in [1, log x]
        double L = std::log(x);
        double LL = std::log(L);
        lo = 1.0;
        hi = L;
        w = (L > 3.0) ? L - LL + LL / L : std::max(1.0, L - LL);
    } else {
        // w <= min(x, 1) since e^w >= 1 and w e^w is increasing
        lo = 0.0;
        hi = std::min(x, 1.0);
        w = hi * (1.0 - 0.25 * hi); // crude but inside the bracket
    }

    const bool use_log_form = x > 1e10;
    const double logx = std::log(x);
    for (int i = 0; i < 60; ++i) {
        double next = use_log_form ? detail::halley_log(w, logx) : detail::halley_we(w, x);
        if (!(next >= lo && next <= hi)) next = 0.5 * (lo + hi);
        double r = use_log_form ? next + std::log(next) - logx
                                : next * std::exp(next) - x;
        if (r > 0) hi = next; else lo = next;
        if (std::abs(next - w) <= 1e-16 * std::max(1.0, std::abs(next)) && i > 1) {
            w = next;
            break;
        }
        w = next;
    }
    return w;
}

// Right side of W(t) <= log t - log log t + 1.024 log log t / log t, t >= e.
inline double lambert_w_upper(double t) {
    if (!(t >= std::numbers::e))
        throw DomainError("lambert_w_upper: t >= e required");
    double L = std::log(t);
    double LL = std::log(L);
    return L - LL + 1.024 * LL / L;
}

struct SeriesPolicy {
    double rel_tol = 1e-16;
    int max_terms = 200;
};

namespace detail {
inline void require_policy(const SeriesPolicy& policy) {
    if (!(policy.rel_tol > 0) || policy.max_terms < 10)
        throw DomainError("series policy: rel_tol > 0 and max_terms >= 10 required");
}
} // namespace detail

// f1(x) = sum_{r>=1} x^{1-2r} / (2r (2r-1)), x > 1.
inline double f1_series(double x, SeriesPolicy policy = {}) {
    detail::require_policy(policy);
    if (!(x > 1))
        throw DomainError("f1_series: x > 1 required");
    double inv2 = 1.0 / (x * x);
    double pow = 1.0 / x; // x^{1-2r} at r = 1
    double sum = 0.0;
    for (int r = 1; r <= policy.max_terms; ++r) {
        double term = pow / (2.0 * r * (2.0 * r - 1.0));
        sum += term;
        if (term < policy.rel_tol * sum) break;
        pow *= inv2;
    }
    return sum;
}

// f2(x) = sum_{r>=2} x^{2-2r} / ((2r-1)(2r-2)), x > 1.
inline double f2_series(double x, SeriesPolicy policy = {}) {
    detail::require_policy(policy);
    if (!(x > 1))
        throw DomainError("f2_series: x > 1 required");
    double inv2 = 1.0 / (x * x);
    double pow = inv2; // x^{2-2r} at r = 2
    double sum = 0.0;
    for (int r = 2; r <= policy.max_terms; ++r) {
        double term = pow / ((2.0 * r - 1.0) * (2.0 * r - 2.0));
        sum += term;
        if (term < policy.rel_tol * sum) break;
        pow *= inv2;
    }
    return sum;
}

// R_{r1,r2}(x) = -(r1+r2-1)(x log x - x) + r2 (log x + 1)
//               - (r1+r2) f1(x) - r2 f2(x), for x >= 3.
inline double gamma_factor_remainder(const FieldProfile& p, double x) {
    if (!(x >= 3))
        throw DomainError("gamma_factor_remainder: x >= 3 required");
    double r1 = p.real_places, r2 = p.imag_places;
    double lx = std::log(x);
    return -(r1 + r2 - 1.0) * (x * lx - x) + r2 * (lx + 1.0)
           - (r1 + r2) * f1_series(x) - r2 * f2_series(x);
}

} // namespace psik
