#pragma once

// Bracketed hybrid root finder: bisection safeguarding Newton steps.
// All solves in this project start from a sign-changing bracket, so the
// iteration cannot escape and pure-Newton stalls on flat stretches fall
// back to halving.

#include <cmath>
#include <functional>

#include "psik/errors.hpp"

namespace psik {

struct RootResult {
    double x = 0;
    double residual = 0;
    int iterations = 0;
};

// f(lo) and f(hi) must straddle zero.  Stops when |f(x)| <= abs_tol.
template <class F, class DF>
RootResult bracketed_newton(F&& f, DF&& df, double lo, double hi,
                            double abs_tol, int max_iter = 200) {
    double flo = f(lo);
    double fhi = f(hi);
    if (flo == 0.0) return {lo, 0.0, 0};
    if (fhi == 0.0) return {hi, 0.0, 0};
    if ((flo > 0) == (fhi > 0))
        throw ConvergenceError("bracketed_newton: no sign change on bracket");

    double x = 0.5 * (lo + hi);
    for (int i = 1; i <= max_iter; ++i) {
        double fx = f(x);
        if (std::abs(fx) <= abs_tol) return {x, fx, i};
        if ((fx > 0) == (fhi > 0)) { hi = x; fhi = fx; }
        else { lo = x; flo = fx; }

        double dfx = df(x);
        double next = x - fx / dfx;
        if (!(next > lo && next < hi) || !std::isfinite(next))
            next = 0.5 * (lo + hi);
        if (next == x) next = 0.5 * (lo + hi);
        x = next;
    }
    throw ConvergenceError("bracketed_newton: residual target not met");
}

} // namespace psik
