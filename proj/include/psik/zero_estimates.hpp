#pragma once

// Closed-form GRH estimates for zero statistics of the Dedekind zeta
// function, the (kappa, T)-parameterized general bound on the zero-sum
// corrected gap |psi_K(x) - x + sum_{|gamma|<T} x^rho / rho|, and its
// assembly into the |psi_K(x) - x| bound with the coefficient functions
// F, G, H.  Everything is an explicit formula in (n_K, log|disc|, x, T,
// kappa); no zero data is ever touched.

#include <cmath>

#include "psik/bound_result.hpp"
#include "psik/constants.hpp"
#include "psik/errors.hpp"
#include "psik/field.hpp"

namespace psik {

namespace detail {
inline void require_T5(double T) {
    if (!(T >= 5))
        throw DomainError("T >= 5 required");
}
inline void require_x3(double x) {
    if (!(x >= 3))
        throw DomainError("x >= 3 required");
}
inline void require_kappa(double kappa) {
    if (!(kappa > 0 && kappa <= 2))
        throw DomainError("kappa in (0, 2] required");
}
} // namespace detail

// |r_K| <= rk_disc log|disc| - rk_deg n_K + rk_const - e_K.
inline double laurent_constant_bound(const FieldProfile& p,
                                     const BoundConstants& c = bound_constants()) {
    return c.rk_disc * p.log_disc - c.rk_deg * p.degree + c.rk_const - e_term(p, c);
}

// Exact value for the rational field: r_Q = log(2 pi).
inline double laurent_constant_rational(const BoundConstants& c = bound_constants()) {
    return c.r_rational;
}

// sum_{|gamma| <= 5} 1/|rho| <= ...
inline double low_zero_inverse_sum_bound(const FieldProfile& p,
                                         const BoundConstants& c = bound_constants()) {
    return c.lowzero_disc * p.log_disc - c.lowzero_deg * p.degree + c.lowzero_const;
}

// sum_{|gamma| <= T} 1 <= (T/pi)(1 + 1.4427/T) W_K(T) - (T/pi)(1 - 8.9250/T) n_K + 8.6542/pi.
inline double zero_count_bound(const FieldProfile& p, double T,
                               const BoundConstants& c = bound_constants()) {
    detail::require_T5(T);
    double W = zero_density_weight(p, T);
    return T / c.pi * (1.0 + c.count_w_t / T) * W
           - T / c.pi * (1.0 - c.count_n_t / T) * p.degree
           + c.count_const / c.pi;
}

// sum_{|gamma| >= T} 1/|rho|^2 <= (1 + 2.8854/T) W_K(T)/(pi T) + (1 + 18.6019/T) n_K/(pi T)
//                                 + 17.3084/(pi T^2).
inline double zero_tail_inverse_square_bound(const FieldProfile& p, double T,
                                             const BoundConstants& c = bound_constants()) {
    detail::require_T5(T);
    double W = zero_density_weight(p, T);
    return (1.0 + c.tail_w_t / T) * W / (c.pi * T)
           + (1.0 + c.tail_n_t / T) * p.degree / (c.pi * T)
           + c.tail_const / (c.pi * T * T);
}

// sum_{|gamma| <= T} pi/|rho| <= (log(T/2pi) + alpha) log|disc|
//                                + (log^2(T/2pi)/2 + beta) n_K + gamma.
inline double zero_inverse_sum_bound(const FieldProfile& p, double T,
                                     const BoundConstants& c = bound_constants()) {
    detail::require_T5(T);
    double lt = std::log(T / (2.0 * c.pi));
    return (lt + c.alpha) * p.log_disc + (0.5 * lt * lt + c.beta) * p.degree + c.gamma;
}

// |sum_{|gamma| < T} x^rho / rho| <= (sqrt(x)/pi) [ (log(T/2pi)+alpha) log|disc|
//                                    + (log^2(T/2pi)/2 + beta) n_K + gamma ].
inline double zero_power_sum_bound(const FieldProfile& p, double x, double T,
                                   const BoundConstants& c = bound_constants()) {
    detail::require_T5(T);
    if (!(x > 0))
        throw DomainError("zero_power_sum_bound: x > 0 required");
    return std::sqrt(x) / c.pi * zero_inverse_sum_bound(p, T, c);
}

// epsilon_K(x,T) = max(0, d_K log x - 3.6133 n_K sqrt(x)/T), every signature.
inline double epsilon_term(const FieldProfile& p, double x, double T,
                           const BoundConstants& c = bound_constants()) {
    detail::require_x3(x);
    if (!(T > 0))
        throw DomainError("epsilon_term: T > 0 required");
    return std::max(0.0, p.unit_rank() * std::log(x) - c.eps_coef * p.degree * std::sqrt(x) / T);
}

// epsilon-tilde: exact small-x correction for the two rank-zero signatures,
// epsilon_K otherwise.
inline double epsilon_tilde_term(const FieldProfile& p, double x, double T,
                                 const BoundConstants& c = bound_constants()) {
    detail::require_x3(x);
    detail::require_T5(T);
    if (p.real_places == 1 && p.imag_places == 0)
        return -std::log1p(-1.0 / (x * x));
    if (p.real_places == 0 && p.imag_places == 1)
        return -std::log1p(-1.0 / x);
    return epsilon_term(p, x, T, c);
}

// ---------------------------------------------------------------------------
// Coefficient functions of the smoothed +/- estimates and their differences.

struct CoefficientSet {
    double m_w_plus, m_n_plus, m_c_plus;
    double m_w_minus, m_n_minus, m_c_minus;
    double d_w, d_n, d_c;
};

inline double d_w_coefficient(double kappa, double T,
                              const BoundConstants& c = bound_constants()) {
    detail::require_T5(T);
    if (!(kappa >= -6 && kappa <= 4))
        throw DomainError("d_w_coefficient: kappa in [-6, 4] required");
    return (18.0 - kappa * kappa) / (6.0 * T)
           + (c.dw_k0 - c.dw_k1 * kappa - c.pw_m_t2_k2 * kappa * kappa) / (T * T);
}

inline double d_n_coefficient(double kappa, double T,
                              const BoundConstants& c = bound_constants()) {
    detail::require_T5(T);
    if (!(kappa >= -6 && kappa <= 4))
        throw DomainError("d_n_coefficient: kappa in [-6, 4] required");
    return (18.0 + kappa * kappa) / (6.0 * T)
           + (c.dn_k0 - c.dn_k1 * kappa - c.pn_m_t2_k2 * kappa * kappa) / (T * T);
}

inline double d_c_coefficient(double kappa, double T,
                              const BoundConstants& c = bound_constants()) {
    detail::require_T5(T);
    if (!(kappa >= -6 && kappa <= 4))
        throw DomainError("d_c_coefficient: kappa in [-6, 4] required");
    return (c.dc_k0 - c.dc_k1 * kappa - c.pc_m_t2_k2 * kappa * kappa) / (T * T);
}

inline CoefficientSet smoothing_coefficients(double kappa, double T,
                                             const BoundConstants& c = bound_constants()) {
    detail::require_T5(T);
    detail::require_kappa(kappa);
    const double k = kappa, k2 = kappa * kappa, k3 = k2 * kappa, T2 = T * T;
    CoefficientSet s{};
    s.m_w_plus = 2.0 / k + k / 2.0
                 + (c.gw_t_k2 * k2 + c.gw_t_k1 * k + c.gw_t_k0) / (2.0 * k * T)
                 + (c.gw_t2_k1 * k + c.pw_t2_k0) / T2;
    s.m_w_minus = 2.0 / k + k / 2.0
                  + (k3 / 3.0 + c.gw_t_k2 * k2 - c.gw_t_k1 * k + c.gw_t_k0) / (2.0 * k * T)
                  + (c.pw_m_t2_k2 * k2 + c.pw_m_t2_k1 * k - c.pw_t2_k0) / T2;
    s.m_n_plus = 2.0 / k - k / 2.0
                 + (c.gn_t_k2 * k2 + c.gn_t_k1 * k + c.gn_t_k0) / (2.0 * k * T)
                 + (c.gn_t2_k1 * k + c.gn_t2_k0) / T2;
    s.m_n_minus = 2.0 / k - k / 2.0
                  + (-k3 / 3.0 + c.gn_t_k2 * k2 - c.gn_t_k1 * k + c.gn_t_k0) / (2.0 * k * T)
                  + (c.pn_m_t2_k2 * k2 + c.pn_m_t2_k1 * k - c.pn_m_t2_k0) / T2;
    s.m_c_plus = (c.pc_t_k2 * k2 + c.pc_t_k0) / (k * T)
                 + (c.pc_p_t2_k1 * k + c.pc_t2_k0) / T2;
    s.m_c_minus = (c.pc_t_k2 * k2 + c.pc_t_k0) / (k * T)
                  + (c.pc_m_t2_k2 * k2 + c.pc_m_t2_k1 * k - c.pc_t2_k0) / T2;
    s.d_w = d_w_coefficient(kappa, T, c);
    s.d_n = d_n_coefficient(kappa, T, c);
    s.d_c = d_c_coefficient(kappa, T, c);
    return s;
}

// ---------------------------------------------------------------------------
// General bound on |psi_K(x) - x + sum_{|gamma|<T} x^rho/rho| for x >= 3,
// T >= 5, 0 < kappa <= 2.  Coefficients here are the statement values
// (4.3282); the proof-display set above keeps 4.3281.

struct GeneralBoundInput {
    FieldProfile profile;
    double x = 3;
    double T = 5;
    double kappa = 1;
};

namespace detail {

// statement W/n/c bracket groups, shared by the general bound and the
// assembled route of the gap bound
inline double stmt_w_bracket(double k, double T, const BoundConstants& c) {
    return 2.0 / k + k / 2.0
           + (c.gw_t_k2 * k * k + c.gw_t_k1 * k + c.gw_t_k0) / (2.0 * k * T)
           + (c.gw_t2_k1 * k + c.gw_t2_k0) / (T * T);
}
inline double stmt_n_bracket(double k, double T, const BoundConstants& c) {
    return 2.0 / k - k / 2.0
           + (c.gn_t_k2 * k * k + c.gn_t_k1 * k + c.gn_t_k0) / (2.0 * k * T)
           + (c.gn_t2_k1 * k + c.gn_t2_k0) / (T * T);
}
inline double stmt_c_bracket(double k, double T, const BoundConstants& c) {
    return (c.gc_t_k2 * k * k + c.gc_t_k0) * c.pi / (k * T)
           + (c.gc_t2_k1 * k + c.gc_t2_k0) * c.pi / (T * T);
}

} // namespace detail

inline BoundResult general_gap_bound(const GeneralBoundInput& in,
                                     const BoundConstants& c = bound_constants()) {
    detail::require_x3(in.x);
    detail::require_T5(in.T);
    detail::require_kappa(in.kappa);
    const auto& p = in.profile;
    const double x = in.x, T = in.T, k = in.kappa;
    const double sx = std::sqrt(x) / c.pi;
    const double W = zero_density_weight(p, T);

    BoundResult r;
    r.x = x; r.T = T; r.kappa = k;
    r.disc_term = sx * detail::stmt_w_bracket(k, T, c) * W;
    r.degree_term = sx * detail::stmt_n_bracket(k, T, c) * p.degree;
    r.const_term = k * x / (2.0 * T) + sx * detail::stmt_c_bracket(k, T, c)
                   + laurent_constant_bound(p, c);
    r.epsilon_term = epsilon_tilde_term(p, x, T, c);
    r.value = r.disc_term + r.degree_term + r.const_term + r.epsilon_term;
    return r;
}

// ---------------------------------------------------------------------------
// The assembled |psi_K(x) - x| bound at explicit (T, kappa):
//   (sqrt(x)/pi F(T) + 1.0155) log|disc| + (sqrt(x)/pi G(T) - 2.1042) n_K + H(x,T).

inline double f_coefficient(double kappa, double T,
                            const BoundConstants& c = bound_constants()) {
    detail::require_T5(T);
    detail::require_kappa(kappa);
    return std::log(T / (2.0 * c.pi)) + detail::stmt_w_bracket(kappa, T, c) + c.alpha;
}

inline double g_coefficient(double kappa, double T,
                            const BoundConstants& c = bound_constants()) {
    detail::require_T5(T);
    detail::require_kappa(kappa);
    double lt = std::log(T / (2.0 * c.pi));
    return 0.5 * lt * lt + detail::stmt_w_bracket(kappa, T, c) * lt + c.beta
           + detail::stmt_n_bracket(kappa, T, c);
}

inline double h_coefficient(const FieldProfile& p, double x, double kappa, double T,
                            const BoundConstants& c = bound_constants()) {
    detail::require_x3(x);
    detail::require_T5(T);
    detail::require_kappa(kappa);
    return kappa * x / (2.0 * T)
           + std::sqrt(x) / c.pi * (c.gamma + detail::stmt_c_bracket(kappa, T, c))
           + c.rk_const + epsilon_term(p, x, T, c);
}

inline BoundResult gap_bound_at(const FieldProfile& p, double x, double T, double kappa,
                                const BoundConstants& c = bound_constants()) {
    const double sx = std::sqrt(x) / c.pi;
    BoundResult r;
    r.x = x; r.T = T; r.kappa = kappa;
    r.disc_term = (sx * f_coefficient(kappa, T, c) + c.rk_disc) * p.log_disc;
    r.degree_term = (sx * g_coefficient(kappa, T, c) - c.rk_deg) * p.degree;
    double h = h_coefficient(p, x, kappa, T, c);
    r.epsilon_term = epsilon_term(p, x, T, c);
    r.const_term = h - r.epsilon_term;
    r.value = r.disc_term + r.degree_term + r.const_term + r.epsilon_term;
    return r;
}

// Same bound assembled from the general gap bound groups plus the truncated
// zero power sum and the Laurent-constant coefficients.  Identical algebra
// in a different evaluation order; tests pin the two routes together to
// catch transcription slips in F, G, H.
inline double gap_bound_assembled(const FieldProfile& p, double x, double T, double kappa,
                                  const BoundConstants& c = bound_constants()) {
    detail::require_x3(x);
    detail::require_T5(T);
    detail::require_kappa(kappa);
    const double sx = std::sqrt(x) / c.pi;
    const double W = zero_density_weight(p, T);
    double groups = sx * (detail::stmt_w_bracket(kappa, T, c) * W
                          + detail::stmt_n_bracket(kappa, T, c) * p.degree
                          + detail::stmt_c_bracket(kappa, T, c))
                    + kappa * x / (2.0 * T);
    return groups + zero_power_sum_bound(p, x, T, c)
           + c.rk_disc * p.log_disc - c.rk_deg * p.degree + c.rk_const
           + epsilon_term(p, x, T, c);
}

} // namespace psik
