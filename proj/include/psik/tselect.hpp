#pragma once

// Truncation-parameter selection.  The gap bound at fixed x is minimized
// over the cutoff height T; the near-optimal closed form uses Lambert-W:
//
//   a   = kappa pi sqrt(x) / (2 n_K) + 21.3270 + 33.3542 / n_K
//   w   = W( (e^{sqrt 5} / 2 pi) delta_K a )
//   T_W = a / w,      T = 8.2822 + T_W
//
// with kappa = sqrt(5) - 1 throughout.  T_0 is the implicit solution of the
// modified stationarity equation, T_min of the exact one; both live above
// T_F, the positive root of T^2 - 7.0604 T - 10.1186.

#include <cmath>
#include <cstdint>
#include <optional>

#include "psik/constants.hpp"
#include "psik/errors.hpp"
#include "psik/field.hpp"
#include "psik/roots.hpp"
#include "psik/specfun.hpp"

namespace psik {

inline double t_f(const BoundConstants& c = bound_constants()) {
    return 0.5 * (c.tf_lin + std::sqrt(c.tf_lin * c.tf_lin + 4.0 * c.tf_const));
}

struct TSelection {
    double a = 0;
    double w = 0;
    double t_f = 0;
    double t_w = 0;   // a / w
    double t = 0;     // 8.2822 + a / w
    double residual = 0; // plug-back residual of the T_W equation, relative to a
    std::optional<double> t0;
    std::optional<double> tmin;
    std::optional<double> t0_residual;
    std::optional<double> tmin_residual;
};

inline TSelection select_truncation(const FieldProfile& p, double x,
                                    const BoundConstants& c = bound_constants()) {
    if (!(x >= 3))
        throw DomainError("select_truncation: x >= 3 required");
    TSelection s;
    s.a = c.kappa * c.pi * std::sqrt(x) / (2.0 * p.degree) + c.s_const + c.a_n / p.degree;
    s.w = lambert_w0(c.e_sqrt5 / (2.0 * c.pi) * p.root_disc() * s.a);
    s.t_f = t_f(c);
    s.t_w = s.a / s.w;
    s.t = c.t_shift + s.t_w;
    // T_W solves T (log(T/2pi) + sqrt5 + log delta) = a
    double lhs = s.t_w * (std::log(s.t_w / (2.0 * c.pi)) + c.sqrt5 + p.root_disc_log());
    s.residual = (lhs - s.a) / s.a;
    return s;
}

namespace detail {

// Root above T_F of (T - 7.0604 - 10.1186/T)(log(T/2pi) + sqrt5 + log delta) = S.
inline RootResult t0_root(const FieldProfile& p, double S, double t_w_hint,
                          const BoundConstants& c) {
    const double TF = t_f(c);
    const double d = p.root_disc_log();
    auto g = [&](double T) {
        return (T - c.tf_lin - c.tf_const / T)
                   * (std::log(T / (2.0 * c.pi)) + c.sqrt5 + d)
               - S;
    };
    auto dg = [&](double T) {
        double first = T - c.tf_lin - c.tf_const / T;
        double second = std::log(T / (2.0 * c.pi)) + c.sqrt5 + d;
        return (1.0 + c.tf_const / (T * T)) * second + first / T;
    };
    double hi = TF + t_w_hint + 1.0;
    while (g(hi) < 0) hi = TF + (hi - TF) * 4.0;
    auto res = bracketed_newton(g, dg, TF + 1e-9, hi, 1e-9 * std::abs(S));
    res.residual /= S;
    return res;
}

} // namespace detail

// Implicit T_0: right side kappa pi sqrt(x)/(2 n) + 21.3270 + 33.5251/n.
inline RootResult solve_t0(const FieldProfile& p, double x,
                           const BoundConstants& c = bound_constants()) {
    if (!(x >= 3))
        throw DomainError("solve_t0: x >= 3 required");
    double S = c.kappa * c.pi * std::sqrt(x) / (2.0 * p.degree) + c.s_const + c.t0_n / p.degree;
    double hint = select_truncation(p, x, c).t_w;
    return detail::t0_root(p, S, hint, c);
}

// T_min: exact stationarity of the cost, right side T-dependent and
// decreasing, so the root above T_F is unique.  Diagnostic only.
inline RootResult solve_tmin(const FieldProfile& p, double x,
                             const BoundConstants& c = bound_constants()) {
    if (!(x >= 3))
        throw DomainError("solve_tmin: x >= 3 required");
    const double TF = t_f(c);
    const double d = p.root_disc_log();
    const double n = p.degree;
    const double base = c.kappa * c.pi * std::sqrt(x) / (2.0 * n);
    auto rhs = [&](double T) {
        return base + c.tmin_const + c.tmin_t / T + (c.a_n + c.tmin_n_t / T) / n;
    };
    auto g = [&](double T) {
        return (T - c.tf_lin - c.tf_const / T)
                   * (std::log(T / (2.0 * c.pi)) + c.sqrt5 + d)
               - rhs(T);
    };
    auto dg = [&](double T) {
        double first = T - c.tf_lin - c.tf_const / T;
        double second = std::log(T / (2.0 * c.pi)) + c.sqrt5 + d;
        return (1.0 + c.tf_const / (T * T)) * second + first / T
               + (c.tmin_t + c.tmin_n_t / n) / (T * T);
    };
    double hi = TF + select_truncation(p, x, c).t_w + 1.0;
    while (g(hi) < 0) hi = TF + (hi - TF) * 4.0;
    auto res = bracketed_newton(g, dg, TF + 1e-9, hi, 1e-9 * rhs(TF));
    res.residual /= rhs(res.x);
    return res;
}

inline TSelection truncation_diagnostics(const FieldProfile& p, double x,
                                         const BoundConstants& c = bound_constants()) {
    TSelection s = select_truncation(p, x, c);
    auto r0 = solve_t0(p, x, c);
    auto rm = solve_tmin(p, x, c);
    s.t0 = r0.x;
    s.t0_residual = r0.residual;
    s.tmin = rm.x;
    s.tmin_residual = rm.residual;
    return s;
}

// The per-degree cost E(x, T) whose minimizer the selection approximates,
// kappa = sqrt(5) - 1:
//   E = (log(T/2pi) + sqrt5 + log delta)^2 / 2 - log^2(delta)/2
//     + (7.0604/T + 5.0594/T^2)(log(T/2pi) + sqrt5 + log delta)
//     + kappa pi sqrt(x)/(2 n T) + 21.3270/T + 18.7781/T^2
//     + (33.3542/T + 27.5673/T^2)/n
//     + 3.9792 log delta - 2.9969 + 25.5362/n + 8.3423 pi/(n sqrt x).
inline double truncation_cost(const FieldProfile& p, double x, double T,
                              const BoundConstants& c = bound_constants()) {
    if (!(x >= 3))
        throw DomainError("truncation_cost: x >= 3 required");
    if (!(T >= 5))
        throw DomainError("truncation_cost: T >= 5 required");
    const double d = p.root_disc_log();
    const double n = p.degree;
    const double ell = std::log(T / (2.0 * c.pi)) + c.sqrt5 + d;
    return 0.5 * ell * ell - 0.5 * d * d
           + (c.tf_lin / T + c.cost_t2 / (T * T)) * ell
           + c.kappa * c.pi * std::sqrt(x) / (2.0 * n * T)
           + c.s_const / T + c.cost_t2_n0 / (T * T)
           + (c.a_n / T + c.cost_t2_n1 / (T * T)) / n
           + c.alpha * d - c.g_const + c.gamma / n
           + c.rk_const * c.pi / (n * std::sqrt(x));
}

// Remainder of the cost at the implicit T_0:
//   R = (18.7781 + 27.5673/n - 5.0593 w) / T_0^2,  w = log(T_0/2pi) + sqrt5 + log delta.
// The envelope scan solves the T_0 equation with right side equal to the
// selection aggregate a (constant 33.3542); solve_t0's 33.5251 variant is
// kept separate.  The shipped c_max table only reproduces with the former.
inline double cost_remainder(const FieldProfile& p, double x,
                             const BoundConstants& c = bound_constants()) {
    if (!(x >= 3))
        throw DomainError("cost_remainder: x >= 3 required");
    double S = c.kappa * c.pi * std::sqrt(x) / (2.0 * p.degree) + c.s_const + c.a_n / p.degree;
    double hint = S / 2.0; // any positive hint works; the bracket self-expands
    double T0 = detail::t0_root(p, S, hint, c).x;
    double w = std::log(T0 / (2.0 * c.pi)) + c.sqrt5 + p.root_disc_log();
    return (c.cost_t2_n0 + c.cost_t2_n1 / p.degree - c.f_t2 * w) / (T0 * T0);
}

// ---------------------------------------------------------------------------
// Envelope scan: c_n = n sqrt(x_{n+1}) / pi * R(x_n) over the fixed grid
// x_1 = 3, step 1 below 5000, 10 below 10^4, 100 below 10^5, doubling after;
// stops at the first negative remainder.

struct CmaxResult {
    int degree = 0;
    double disc_used = 0;
    double c_max = 0;
    std::int64_t x_at_max = 0;
    std::int64_t n_points = 0;
};

namespace detail {

inline std::int64_t scan_next(std::int64_t x) {
    if (x < 5000) return x + 1;
    if (x < 10000) return x + 10;
    if (x < 100000) return x + 100;
    return 2 * x;
}

template <class RFunc>
CmaxResult scan_envelope(int degree, double disc_min, RFunc&& remainder,
                         const BoundConstants& c) {
    constexpr std::int64_t x_cap = 1'000'000'000'000; // failsafe
    CmaxResult out;
    out.degree = degree;
    out.disc_used = disc_min;
    std::int64_t x = 3;
    std::int64_t count = 0;
    double best = -std::numeric_limits<double>::infinity();
    std::int64_t best_x = 3;
    while (true) {
        double R = remainder(static_cast<double>(x));
        std::int64_t xn = scan_next(x);
        double cn = degree * std::sqrt(static_cast<double>(xn)) / c.pi * R;
        if (R < 0) {
            if (count == 0) { best = cn; best_x = x; count = 1; }
            break;
        }
        ++count;
        if (cn > best) { best = cn; best_x = x; }
        if (xn > x_cap)
            throw ConvergenceError("scan_envelope: remainder still nonnegative at the 1e12 cap");
        x = xn;
    }
    out.c_max = best;
    out.x_at_max = best_x;
    out.n_points = count;
    return out;
}

} // namespace detail

inline CmaxResult scan_remainder_envelope(int degree, double disc_min,
                                          const BoundConstants& c = bound_constants()) {
    if (degree < 1 || !(disc_min >= 1))
        throw DomainError("scan_remainder_envelope: degree >= 1 and disc >= 1 required");
    // signature does not enter the remainder; any consistent one will do
    FieldProfile p = make_profile(degree, disc_min, degree % 2, degree / 2);
    return detail::scan_envelope(
        degree, disc_min, [&](double x) { return cost_remainder(p, x, c); }, c);
}

// Aggregate row covering every degree >= 9: remainder evaluated at degree 9
// with S = 21.3270 and T_0 = T_F, which only strengthens the scan.
inline CmaxResult scan_remainder_envelope_aggregate(double disc_min_degree9,
                                                    const BoundConstants& c = bound_constants()) {
    if (!(disc_min_degree9 >= 1))
        throw DomainError("scan_remainder_envelope_aggregate: disc >= 1 required");
    const int degree = 9;
    FieldProfile p = make_profile(degree, disc_min_degree9, 1, 4);
    const double TF = t_f(c);
    const double w = std::log(TF / (2.0 * c.pi)) + c.sqrt5 + p.root_disc_log();
    const double R = (c.cost_t2_n0 + c.cost_t2_n1 / degree - c.f_t2 * w) / (TF * TF);
    return detail::scan_envelope(degree, disc_min_degree9,
                                 [&](double) { return R; }, c);
}

} // namespace psik
