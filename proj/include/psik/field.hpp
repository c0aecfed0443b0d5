#pragma once

// Number-field profiles: the tuple (n_K, |disc|, r1, r2) plus the derived
// invariants the bounds consume.  The absolute discriminant is held as
// log|disc| so table profiles up to 10^749 stay representable; plain-double
// construction is the common path.

#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include "psik/constants.hpp"
#include "psik/errors.hpp"

namespace psik {

struct FieldProfile {
    int degree = 1;      // n_K
    double log_disc = 0; // log |disc|
    int real_places = 1; // r1
    int imag_places = 0; // r2

    double root_disc_log() const { return log_disc / degree; }
    double root_disc() const { return std::exp(root_disc_log()); } // delta_K
    double abs_disc() const { return std::exp(log_disc); } // may overflow to inf
    int unit_rank() const { return real_places + imag_places - 1; } // d_K
    bool is_rational() const { return degree == 1; }
};

inline FieldProfile make_profile_log_disc(int degree, double log_disc, int r1, int r2) {
    if (degree < 1 || r1 < 0 || r2 < 0 || !std::isfinite(log_disc))
        throw DomainError("profile: degree >= 1, r1, r2 >= 0, finite disc required");
    if (degree != r1 + 2 * r2)
        throw SignatureMismatch("profile: degree " + std::to_string(degree) +
                                " != r1 + 2 r2 = " + std::to_string(r1 + 2 * r2));
    return FieldProfile{degree, log_disc, r1, r2};
}

inline FieldProfile make_profile(int degree, double abs_disc, int r1, int r2) {
    if (!(abs_disc > 0) || !std::isfinite(abs_disc))
        throw DomainError("profile: |disc| must be positive and finite");
    return make_profile_log_disc(degree, std::log(abs_disc), r1, r2);
}

// |disc| given as mantissa * 10^exp10, as the reference tables print it.
inline FieldProfile make_profile_sci(int degree, double mantissa, int exp10, int r1, int r2) {
    if (!(mantissa > 0) || !std::isfinite(mantissa))
        throw DomainError("profile: mantissa must be positive");
    return make_profile_log_disc(degree, std::log(mantissa) + exp10 * std::numbers::ln10, r1, r2);
}

inline FieldProfile rational_profile() { return make_profile(1, 1.0, 1, 0); }

struct Diagnostic {
    enum class Severity { Warning, Error };
    Severity severity = Severity::Warning;
    std::string message;
};

// Minkowski lower bound log |disc| >= 2 [n log n - log n! + r2 log(pi/4)].
inline double minkowski_log_disc_lower(int degree, int r2) {
    double n = degree;
    return 2.0 * (n * std::log(n) - std::lgamma(n + 1.0) + r2 * std::log(std::numbers::pi / 4.0));
}

// Sanity diagnostics.  delta_K < sqrt(5) with d_K > 0 invalidates the
// justification of the epsilon-tilde branch of the general bound, yet some
// comparison profiles (Odlyzko lower bounds) sit exactly there, so it is a
// warning.  strict mode turns warnings into a thrown ValidityError.
inline std::vector<Diagnostic> validate(const FieldProfile& p, bool strict = false) {
    std::vector<Diagnostic> out;
    if (p.unit_rank() > 0 && p.root_disc_log() < 0.5 * std::log(5.0))
        out.push_back({Diagnostic::Severity::Warning,
                       "root discriminant below sqrt(5) with positive unit rank; "
                       "the epsilon-tilde justification condition fails"});
    if (p.log_disc < minkowski_log_disc_lower(p.degree, p.imag_places) - 1e-12)
        out.push_back({Diagnostic::Severity::Warning,
                       "|disc| below the Minkowski lower bound for this signature"});
    if (p.degree == 1 && std::abs(p.log_disc) > 1e-12)
        out.push_back({Diagnostic::Severity::Warning,
                       "degree 1 admits only |disc| = 1"});
    if (strict && !out.empty()) {
        std::string msg = "strict validation failed:";
        for (auto& d : out) {
            d.severity = Diagnostic::Severity::Error;
            msg += "\n  " + d.message;
        }
        throw ValidityError(msg);
    }
    return out;
}

// e_K offset of the Laurent-constant bound.
inline double e_term(const FieldProfile& p, const BoundConstants& c = bound_constants()) {
    if (p.real_places == 1 && p.imag_places == 0) return c.e_term_single_real;
    if (p.real_places == 0 && p.imag_places == 1) return c.e_term_single_imag;
    return 0.0;
}

// Zero-density weight W_K(T) = log|disc| + n_K log(T / 2 pi).
inline double zero_density_weight(const FieldProfile& p, double T) {
    if (!(T > 0))
        throw DomainError("zero_density_weight: T > 0 required");
    return p.log_disc + p.degree * std::log(T / (2.0 * std::numbers::pi));
}

} // namespace psik
