#pragma once

// Numeric constants of the bound formulas, each stored once as the exact
// decimal string it is published with and parsed at startup.  Formula code
// always reads members of BoundConstants; no constant is retyped at a call
// site.  The X-macro keeps the member list, the parse step and the by-name
// registry (used by the selftest corruption hook) in sync.

#include <charconv>
#include <cmath>
#include <cstdlib>
#include <map>
#include <numbers>
#include <string>
#include <string_view>

#include "psik/errors.hpp"

namespace psik {

// name, decimal string
#define PSIK_CONSTANT_TABLE(X)                                                 \
    /* Laurent-constant bound |r_K| and its signature offsets */               \
    X(rk_disc, "1.0155")                                                       \
    X(rk_deg, "2.1042")                                                        \
    X(rk_const, "8.3423")                                                      \
    X(e_term_single_real, "4.4002") /* (r1,r2) = (1,0) */                      \
    X(e_term_single_imag, "0.6931") /* (r1,r2) = (0,1) */                      \
    /* low-zero inverse sum, |gamma| <= 5 */                                   \
    X(lowzero_disc, "1.0111")                                                  \
    X(lowzero_deg, "1.6550")                                                   \
    X(lowzero_const, "7.0320")                                                 \
    /* zero count up to T */                                                   \
    X(count_w_t, "1.4427")                                                     \
    X(count_n_t, "8.9250")                                                     \
    X(count_const, "8.6542")                                                   \
    /* tail sum of 1/|rho|^2 above T */                                        \
    X(tail_w_t, "2.8854")                                                      \
    X(tail_n_t, "18.6019")                                                     \
    X(tail_const, "17.3084")                                                   \
    /* inverse-sum bound <=T; also the truncated zero power sum */             \
    X(alpha, "3.9792")                                                         \
    X(beta, "-1.4969")                                                         \
    X(gamma, "25.5362")                                                        \
    /* general gap bound, statement coefficients */                            \
    X(gw_t_k2, "1.4427")                                                       \
    X(gw_t_k1, "3")                                                            \
    X(gw_t_k0, "11.5416")                                                      \
    X(gw_t2_k1, "0.5915")                                                      \
    X(gw_t2_k0, "4.3282")                                                      \
    X(gn_t_k2, "8.9250")                                                       \
    X(gn_t_k1, "3")                                                            \
    X(gn_t_k0, "74.4076")                                                      \
    X(gn_t2_k1, "1.7702")                                                      \
    X(gn_t2_k0, "27.9029")                                                     \
    X(gc_t_k2, "1.3774")                                                       \
    X(gc_t_k0, "11.0190")                                                      \
    X(gc_t2_k1, "0.4133")                                                      \
    X(gc_t2_k0, "8.2643")                                                      \
    X(eps_coef, "3.6133")                                                      \
    /* smoothing coefficient functions, +/- displays (1-ulp-of-print          \
       variants of the statement values: 4.3281 vs 4.3282, 27.9028) */         \
    X(pw_t2_k0, "4.3281")                                                      \
    X(pw_m_t2_k2, "0.2405")                                                    \
    X(pw_m_t2_k1, "0.7886")                                                    \
    X(pn_m_t2_k2, "1.4875")                                                    \
    X(pn_m_t2_k1, "2.3602")                                                    \
    X(pn_m_t2_k0, "27.9028")                                                   \
    X(pc_t_k2, "4.3271")                                                       \
    X(pc_t_k0, "34.6168")                                                      \
    X(pc_p_t2_k1, "1.2982")                                                    \
    X(pc_t2_k0, "25.9626")                                                     \
    X(pc_m_t2_k2, "1.4424")                                                    \
    X(pc_m_t2_k1, "1.7309")                                                    \
    /* coefficient differences D_W, D_n, D_c (1/T^2 numerators) */             \
    X(dw_k0, "8.6562")                                                         \
    X(dw_k1, "0.1971")                                                         \
    X(dn_k0, "55.8057")                                                        \
    X(dn_k1, "0.5900")                                                         \
    X(dc_k0, "51.9252")                                                        \
    X(dc_k1, "0.4327")                                                         \
    /* truncation-parameter machinery */                                       \
    X(tf_lin, "7.0604")                                                        \
    X(tf_const, "10.1186")                                                     \
    X(f_t2, "5.0593")                                                          \
    X(cost_t2, "5.0594")                                                       \
    X(g_const, "2.9969")                                                       \
    X(g_t, "37.1145")                                                          \
    X(g_t2, "30.0910")                                                         \
    X(s_const, "21.3270")                                                      \
    X(a_n, "33.3542")                                                          \
    X(t0_n, "33.5251")                                                         \
    X(cost_t2_n0, "18.7781")                                                   \
    X(cost_t2_n1, "27.5673")                                                   \
    X(tmin_const, "14.2666")                                                   \
    X(tmin_t, "32.4969")                                                       \
    X(tmin_n_t, "55.1346")                                                     \
    X(t_shift, "8.2822")                                                       \
    X(t_f_reference, "8.282137")                                               \
    X(envelope_c, "0.5167")                                                    \
    /* bound 1.1 */                                                            \
    X(b11_n_const, "3.4969")                                                   \
    X(b11_const, "8.8590")                                                     \
    /* bound 1.2 (kappa = 2, T = 10) */                                        \
    X(b12_disc, "2.2543")                                                      \
    X(b12_deg, "0.9722")                                                       \
    X(b12_x_denom, "10")                                                       \
    X(b12_sqrt, "9.0458")                                                      \
    X(b12_T, "10")                                                             \
    /* reference bounds 1.3, 1.4, 1.5 */                                       \
    X(b13_disc_c, "2")                                                         \
    X(b13_deg_c, "2")                                                          \
    X(b14_scale, "18.8")                                                       \
    X(b14_disc_c, "2.3")                                                       \
    X(b14_deg_c, "1.3")                                                        \
    X(b14_log_c, "0.3")                                                        \
    X(b14_const, "14.6")                                                       \
    X(b15_disc_c, "1.8")                                                       \
    X(b15_deg_c, "1.1")                                                        \
    X(b15_log_c, "1.2")                                                        \
    X(b15_const, "10.2")                                                       \
    /* asymptotic expansion, expanded and reorganized forms */                 \
    X(asym_d_shift, "7.9584")                                                  \
    X(asym_const, "5.9938")                                                    \
    X(asym_r_d, "5.9584")                                                      \
    X(asym_r_n, "19.9752")

struct BoundConstants {
#define PSIK_DECLARE_MEMBER(name, value) double name;
    PSIK_CONSTANT_TABLE(PSIK_DECLARE_MEMBER)
#undef PSIK_DECLARE_MEMBER

    // derived, not parsed
    double pi;
    double sqrt5;
    double kappa;      // sqrt(5) - 1, the default smoothing parameter
    double e_sqrt5;    // exp(sqrt(5))
    double nu;         // ((sqrt(5)-1)/2) e^{sqrt(5)}
    double r_rational; // exact Laurent constant of zeta'/zeta at 0: log(2 pi)
};

namespace detail {

inline double parse_decimal(std::string_view s) {
    double v = 0.0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size())
        throw Error("bad constant literal: " + std::string(s));
    return v;
}

} // namespace detail

inline BoundConstants make_bound_constants() {
    BoundConstants c{};
#define PSIK_PARSE_MEMBER(name, value) c.name = detail::parse_decimal(value);
    PSIK_CONSTANT_TABLE(PSIK_PARSE_MEMBER)
#undef PSIK_PARSE_MEMBER
    c.pi = std::numbers::pi;
    c.sqrt5 = std::sqrt(5.0);
    c.kappa = c.sqrt5 - 1.0;
    c.e_sqrt5 = std::exp(c.sqrt5);
    c.nu = 0.5 * c.kappa * c.e_sqrt5;
    c.r_rational = std::log(2.0 * c.pi);
    return c;
}

inline const BoundConstants& bound_constants() {
    static const BoundConstants c = make_bound_constants();
    return c;
}

inline const std::map<std::string, double BoundConstants::*>& constant_registry() {
    static const std::map<std::string, double BoundConstants::*> reg = [] {
        std::map<std::string, double BoundConstants::*> m;
#define PSIK_REGISTER_MEMBER(name, value) m[#name] = &BoundConstants::name;
        PSIK_CONSTANT_TABLE(PSIK_REGISTER_MEMBER)
#undef PSIK_REGISTER_MEMBER
        return m;
    }();
    return reg;
}

// Returns a copy with one named constant scaled by `factor`; selftest uses
// this to prove the invariant suite actually trips.
inline BoundConstants corrupted_constants(const std::string& name, double factor) {
    const auto& reg = constant_registry();
    auto it = reg.find(name);
    if (it == reg.end())
        throw DomainError("unknown constant: " + name);
    BoundConstants c = bound_constants();
    c.*(it->second) *= factor;
    return c;
}

} // namespace psik
