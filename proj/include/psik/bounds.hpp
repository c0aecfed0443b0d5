#pragma once

// The bound catalog.  1.1 is the Lambert-W-tuned bound (near-optimal as
// x -> infinity), 1.2 a Chebyshev-type bound whose linear term does not
// depend on the field, 1.3-1.5 earlier reference bounds kept for
// comparison.  The crossover engine locates the point from which 1.1
// (or the better of 1.1 and 1.2) stays below a reference bound.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

#include "psik/bound_result.hpp"
#include "psik/constants.hpp"
#include "psik/errors.hpp"
#include "psik/field.hpp"
#include "psik/tselect.hpp"
#include "psik/zero_estimates.hpp"

namespace psik {

enum class BoundFormula { Eq11, Eq12, Eq13, Eq14, Eq15, General };

inline double validity_min_x(BoundFormula f) {
    switch (f) {
        case BoundFormula::Eq13: return 100.0;
        case BoundFormula::Eq15: return 2000.0;
        default: return 3.0;
    }
}

inline const char* formula_name(BoundFormula f) {
    switch (f) {
        case BoundFormula::Eq11: return "eq1.1";
        case BoundFormula::Eq12: return "eq1.2";
        case BoundFormula::Eq13: return "eq1.3";
        case BoundFormula::Eq14: return "eq1.4";
        case BoundFormula::Eq15: return "eq1.5";
        case BoundFormula::General: return "thm2.5";
    }
    return "?";
}

inline BoundFormula parse_formula(const std::string& s) {
    if (s == "eq1.1") return BoundFormula::Eq11;
    if (s == "eq1.2") return BoundFormula::Eq12;
    if (s == "eq1.3") return BoundFormula::Eq13;
    if (s == "eq1.4") return BoundFormula::Eq14;
    if (s == "eq1.5") return BoundFormula::Eq15;
    if (s == "thm2.5") return BoundFormula::General;
    throw DomainError("unknown formula '" + s +
                      "' (expected eq1.1, eq1.2, eq1.3, eq1.4, eq1.5 or thm2.5)");
}

namespace detail {
inline void require_validity(BoundFormula f, double x) {
    double m = validity_min_x(f);
    if (!(x >= m))
        throw ValidityError(std::string(formula_name(f)) + " requires x >= " +
                            std::to_string(static_cast<long long>(m)));
}
} // namespace detail

// Bound 1.1:
//   sqrt(x)/pi [ ( log^2(e^{w+1} + 33.5251 delta)/2 - log^2(delta)/2
//                 + 3.9792 log delta - 3.4969 ) n_K + 25.5362 ]
//   + 1.0155 log|disc| - 2.1042 n_K + 8.8590 + epsilon_K(x, T),
// with w and T from the truncation selection.
inline BoundResult bound_1_1(const FieldProfile& p, double x,
                             const BoundConstants& c = bound_constants()) {
    detail::require_validity(BoundFormula::Eq11, x);
    TSelection sel = select_truncation(p, x, c);
    const double d = p.root_disc_log();
    const double lg = std::log(std::exp(sel.w + 1.0) + c.t0_n * p.root_disc());
    const double bracket = 0.5 * lg * lg - 0.5 * d * d + c.alpha * d - c.b11_n_const;
    const double sx = std::sqrt(x) / c.pi;

    BoundResult r;
    r.x = x; r.T = sel.t; r.kappa = c.kappa;
    r.disc_term = c.rk_disc * p.log_disc;
    r.degree_term = sx * bracket * p.degree - c.rk_deg * p.degree;
    r.const_term = sx * c.gamma + c.b11_const;
    r.epsilon_term = epsilon_term(p, x, sel.t, c);
    r.value = r.disc_term + r.degree_term + r.const_term + r.epsilon_term;
    return r;
}

// Bound 1.2: (2.2543 sqrt x + 1.0155) log|disc| + (0.9722 sqrt x - 2.1042) n_K
//            + x/10 + 9.0458 sqrt x + 7.0320 + epsilon_K(x, 10).
inline BoundResult bound_1_2(const FieldProfile& p, double x,
                             const BoundConstants& c = bound_constants()) {
    detail::require_validity(BoundFormula::Eq12, x);
    const double sx = std::sqrt(x);
    BoundResult r;
    r.x = x; r.T = c.b12_T; r.kappa = 2.0;
    r.disc_term = (c.b12_disc * sx + c.rk_disc) * p.log_disc;
    r.degree_term = (c.b12_deg * sx - c.rk_deg) * p.degree;
    r.const_term = x / c.b12_x_denom + c.b12_sqrt * sx + c.lowzero_const;
    r.epsilon_term = epsilon_term(p, x, c.b12_T, c);
    r.value = r.disc_term + r.degree_term + r.const_term + r.epsilon_term;
    return r;
}

// Bound 1.3 (x >= 100): sqrt x [ (log x / 2pi + 2) log|disc| + (log^2 x / 8pi + 2) n_K ].
inline BoundResult bound_1_3(const FieldProfile& p, double x,
                             const BoundConstants& c = bound_constants()) {
    detail::require_validity(BoundFormula::Eq13, x);
    const double sx = std::sqrt(x), lx = std::log(x);
    BoundResult r;
    r.x = x;
    r.disc_term = sx * (lx / (2.0 * c.pi) + c.b13_disc_c) * p.log_disc;
    r.degree_term = sx * (lx * lx / (8.0 * c.pi) + c.b13_deg_c) * p.degree;
    r.value = r.disc_term + r.degree_term;
    return r;
}

// Bound 1.4 (x >= 3), with L = log(18.8 x / log^2 x):
//   sqrt x [ (L/2pi + 2.3) log|disc| + (L^2/8pi + 1.3) n_K + 0.3 log x + 14.6 ].
inline BoundResult bound_1_4(const FieldProfile& p, double x,
                             const BoundConstants& c = bound_constants()) {
    detail::require_validity(BoundFormula::Eq14, x);
    const double sx = std::sqrt(x), lx = std::log(x);
    const double L = std::log(c.b14_scale * x / (lx * lx));
    BoundResult r;
    r.x = x;
    r.disc_term = sx * (L / (2.0 * c.pi) + c.b14_disc_c) * p.log_disc;
    r.degree_term = sx * (L * L / (8.0 * c.pi) + c.b14_deg_c) * p.degree;
    r.const_term = sx * (c.b14_log_c * lx + c.b14_const);
    r.value = r.disc_term + r.degree_term + r.const_term;
    return r;
}

// Bound 1.5 (x >= 2000), with L = log(x / log^2 x):
//   sqrt x [ (L/2pi + 1.8) log|disc| + (L^2/8pi + 1.1) n_K + 1.2 log x + 10.2 ].
inline BoundResult bound_1_5(const FieldProfile& p, double x,
                             const BoundConstants& c = bound_constants()) {
    detail::require_validity(BoundFormula::Eq15, x);
    const double sx = std::sqrt(x), lx = std::log(x);
    const double L = std::log(x / (lx * lx));
    BoundResult r;
    r.x = x;
    r.disc_term = sx * (L / (2.0 * c.pi) + c.b15_disc_c) * p.log_disc;
    r.degree_term = sx * (L * L / (8.0 * c.pi) + c.b15_deg_c) * p.degree;
    r.const_term = sx * (c.b15_log_c * lx + c.b15_const);
    r.value = r.disc_term + r.degree_term + r.const_term;
    return r;
}

// Dispatcher for the pure x-indexed catalog (General needs explicit T, kappa).
inline BoundResult evaluate_bound(BoundFormula f, const FieldProfile& p, double x,
                                  const BoundConstants& c = bound_constants()) {
    switch (f) {
        case BoundFormula::Eq11: return bound_1_1(p, x, c);
        case BoundFormula::Eq12: return bound_1_2(p, x, c);
        case BoundFormula::Eq13: return bound_1_3(p, x, c);
        case BoundFormula::Eq14: return bound_1_4(p, x, c);
        case BoundFormula::Eq15: return bound_1_5(p, x, c);
        case BoundFormula::General:
            throw DomainError("thm2.5 requires explicit --T and --kappa");
    }
    throw DomainError("evaluate_bound: bad formula");
}

// ---------------------------------------------------------------------------
// Asymptotic main term of bound 1.1 as x -> infinity, in the two printed
// rearrangements (exactly equal algebraically; evaluating both catches
// transcription slips).  nu = ((sqrt 5 - 1)/2) e^{sqrt 5}.

enum class AsymptoticForm { Expanded, Reorganized };

inline double asymptotic_rhs(const FieldProfile& p, double x, AsymptoticForm form,
                             const BoundConstants& c = bound_constants()) {
    if (!(x >= 16))
        throw DomainError("asymptotic_rhs: x >= 16 required");
    const double n = p.degree;
    const double d = p.root_disc_log();
    const double L = std::log(x);
    const double M = std::log(L);
    const double sx = std::sqrt(x);
    const double u = std::log(c.nu / n);

    if (form == AsymptoticForm::Expanded) {
        double bracket = 0.25 * L * L - L * M + (d + u + 1.0) * L + M * M
                         - 2.0 * (d + u) * M + (2.0 * u + c.asym_d_shift) * d
                         + u * u - c.asym_const;
        return n * sx / (2.0 * c.pi) * bracket + c.gamma * sx / c.pi;
    }
    // reorganized: log(e^2 nu^2 / n^2 * x / log^2 x) = L - 2M + 2u + 2
    double big = L - 2.0 * M + 2.0 * u + 2.0;
    double disc_part = sx / (2.0 * c.pi) * (big + c.asym_r_d) * p.log_disc;
    double deg_part = sx / (8.0 * c.pi)
                      * (big * big - 4.0 * (2.0 * u - 2.0 * M + 2.0) - c.asym_r_n) * n;
    return disc_part + deg_part + c.gamma * sx / c.pi;
}

// ---------------------------------------------------------------------------
// Crossover search.  Grid: every integer up to 1e5, multiplicative steps of
// 1.001 above.  The crossover is the first grid point from which the bound
// stays at or below the reference bound through x_cap; "first sign change"
// would be ambiguous because the difference can oscillate.

struct CrossoverRow {
    FieldProfile profile;
    BoundFormula rival = BoundFormula::Eq13;
    std::int64_t crossover_x = 0;
    bool clamped = false;
    bool best_of = false;
};

namespace detail {

inline std::vector<double> crossover_grid(double vmin, double x_cap) {
    std::vector<double> xs;
    double top = std::min(x_cap, 1e5);
    for (double x = vmin; x <= top; x += 1.0) xs.push_back(x);
    if (x_cap > 1e5) {
        for (double x = 1e5 * 1.001; x <= x_cap; x *= 1.001) xs.push_back(x);
    }
    return xs;
}

inline CrossoverRow crossover_impl(const FieldProfile& p, BoundFormula rival,
                                   std::int64_t x_cap, bool best_of,
                                   const BoundConstants& c) {
    if (rival != BoundFormula::Eq13 && rival != BoundFormula::Eq14 &&
        rival != BoundFormula::Eq15)
        throw DomainError("crossover: rival must be eq1.3, eq1.4 or eq1.5");
    const double vmin = validity_min_x(rival);
    if (!(static_cast<double>(x_cap) >= vmin))
        throw DomainError("crossover: x_cap below the rival's validity range");

    auto xs = crossover_grid(vmin, static_cast<double>(x_cap));
    std::ptrdiff_t last_violation = -1;
    for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(xs.size()); ++i) {
        double x = xs[i];
        double ours = bound_1_1(p, x, c).value;
        if (best_of) ours = std::min(ours, bound_1_2(p, x, c).value);
        if (ours > evaluate_bound(rival, p, x, c).value) last_violation = i;
    }

    CrossoverRow row;
    row.profile = p;
    row.rival = rival;
    row.best_of = best_of;
    if (last_violation < 0) {
        row.crossover_x = static_cast<std::int64_t>(vmin);
        row.clamped = true;
        return row;
    }
    if (last_violation + 1 >= static_cast<std::ptrdiff_t>(xs.size()))
        throw NoCrossoverError("crossover: still above the reference bound at x_cap");
    row.crossover_x = std::llround(xs[last_violation + 1]);
    row.clamped = false;
    return row;
}

} // namespace detail

inline CrossoverRow crossover(const FieldProfile& p, BoundFormula rival,
                              std::int64_t x_cap = 10'000'000,
                              const BoundConstants& c = bound_constants()) {
    return detail::crossover_impl(p, rival, x_cap, false, c);
}

inline CrossoverRow crossover_best(const FieldProfile& p, BoundFormula rival,
                                   std::int64_t x_cap = 10'000'000,
                                   const BoundConstants& c = bound_constants()) {
    return detail::crossover_impl(p, rival, x_cap, true, c);
}

} // namespace psik
