#pragma once

// Exact psi_K for the rational field and for quadratic fields, used to
// validate the bounds empirically.  Two independent routes:
//   DIRECT_IDEALS    enumerate prime-ideal powers through the splitting of
//                    rational primes (split / inert / ramified),
//   CHARACTER_DECOMP psi(x) + sum_{n<=x} Lambda(n) (D/n), evaluating the
//                    Kronecker symbol at every n.
// Sums accumulate compensated so the two routes agree to 1e-9 at 1e8.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

#include "psik/bounds.hpp"
#include "psik/errors.hpp"
#include "psik/field.hpp"

namespace psik {

constexpr std::int64_t kSieveLimit = 100'000'000; // memory guard

namespace detail {

struct KahanSum {
    double sum = 0.0;
    double carry = 0.0;
    void add(double v) {
        double t = sum + v;
        if (std::abs(sum) >= std::abs(v))
            carry += (sum - t) + v;
        else
            carry += (v - t) + sum;
        sum = t;
    }
    double value() const { return sum + carry; }
};

inline std::vector<bool> composite_flags(std::int64_t limit) {
    if (limit > kSieveLimit)
        throw LimitExceededError("sieve limit above 1e8");
    std::vector<bool> comp(static_cast<std::size_t>(std::max<std::int64_t>(limit, 1)) + 1, false);
    if (limit >= 0) comp[0] = true;
    if (limit >= 1) comp[1] = true;
    for (std::int64_t p = 2; p * p <= limit; ++p) {
        if (comp[static_cast<std::size_t>(p)]) continue;
        for (std::int64_t q = p * p; q <= limit; q += p)
            comp[static_cast<std::size_t>(q)] = true;
    }
    return comp;
}

} // namespace detail

// Lambda(n) for n <= limit: log p at prime powers p^k, 0 elsewhere.
inline std::vector<double> von_mangoldt_sieve(std::int64_t limit) {
    if (limit < 0)
        throw DomainError("von_mangoldt_sieve: limit >= 0 required");
    if (limit > kSieveLimit)
        throw LimitExceededError("von_mangoldt_sieve: limit above 1e8");
    auto comp = detail::composite_flags(limit);
    std::vector<double> lam(static_cast<std::size_t>(limit) + 1, 0.0);
    for (std::int64_t p = 2; p <= limit; ++p) {
        if (comp[static_cast<std::size_t>(p)]) continue;
        double lp = std::log(static_cast<double>(p));
        for (std::int64_t q = p; q <= limit; ) {
            lam[static_cast<std::size_t>(q)] = lp;
            if (q > limit / p) break;
            q *= p;
        }
    }
    return lam;
}

// Kronecker symbol (a/n) for n >= 1, completely multiplicative in n.
inline int kronecker_symbol(std::int64_t a, std::int64_t n) {
    if (n < 1)
        throw DomainError("kronecker_symbol: n >= 1 required");
    int k = 1;
    int twos = 0;
    while (n % 2 == 0) { n /= 2; ++twos; }
    if (twos > 0) {
        if (a % 2 == 0) return 0;
        int am8 = static_cast<int>(((a % 8) + 8) % 8);
        if (twos % 2 == 1 && (am8 == 3 || am8 == 5)) k = -k;
    }
    // Jacobi (a/n) with n odd
    a %= n;
    if (a < 0) a += n;
    while (a != 0) {
        while (a % 2 == 0) {
            a /= 2;
            int nm8 = static_cast<int>(n % 8);
            if (nm8 == 3 || nm8 == 5) k = -k;
        }
        std::swap(a, n);
        if (a % 4 == 3 && n % 4 == 3) k = -k;
        a %= n;
    }
    return (n == 1) ? k : 0;
}

// Fundamental discriminant: D = 1 mod 4 squarefree, or D = 4m with
// m = 2, 3 mod 4 squarefree.  D = 1 (the rational field) is excluded.
inline bool is_fundamental_discriminant(std::int64_t D) {
    if (D == 0 || D == 1) return false;
    auto squarefree = [](std::int64_t m) {
        m = std::abs(m);
        for (std::int64_t p = 2; p * p <= m; ++p)
            if (m % (p * p) == 0) return false;
        return true;
    };
    std::int64_t mod4 = ((D % 4) + 4) % 4;
    if (mod4 == 1) return squarefree(D);
    if (mod4 == 0) {
        std::int64_t m = D / 4;
        std::int64_t mm4 = ((m % 4) + 4) % 4;
        return (mm4 == 2 || mm4 == 3) && squarefree(m);
    }
    return false;
}

struct QuadraticField {
    std::int64_t disc = 0; // fundamental discriminant D

    static QuadraticField make(std::int64_t D) {
        if (!is_fundamental_discriminant(D))
            throw DomainError("not a fundamental discriminant: " + std::to_string(D));
        return QuadraticField{D};
    }

    FieldProfile profile() const {
        return disc > 0 ? make_profile(2, static_cast<double>(disc), 2, 0)
                        : make_profile(2, static_cast<double>(-disc), 0, 1);
    }

    std::string label() const { return "D=" + std::to_string(disc); }
};

enum class PsiMethod { DirectIdeals, CharacterDecomp, Rational };

struct PsiValue {
    double x = 0;
    double value = 0;
    PsiMethod method = PsiMethod::Rational;
    std::int64_t prime_power_count = 0;
};

// One jump of psi_K: at norm `pos`, total weight `weight` over `count`
// prime-ideal powers.
struct PsiEvent {
    std::int64_t pos = 0;
    double weight = 0;
    int count = 0;
};

namespace detail {

// Jump list of psi for the rational field up to limit.
inline std::vector<PsiEvent> psi_events_rational(std::int64_t limit) {
    auto comp = composite_flags(limit);
    std::vector<PsiEvent> ev;
    for (std::int64_t p = 2; p <= limit; ++p) {
        if (comp[static_cast<std::size_t>(p)]) continue;
        double lp = std::log(static_cast<double>(p));
        for (std::int64_t q = p; q <= limit; ) {
            ev.push_back({q, lp, 1});
            if (q > limit / p) break;
            q *= p;
        }
    }
    std::sort(ev.begin(), ev.end(),
              [](const PsiEvent& a, const PsiEvent& b) { return a.pos < b.pos; });
    return ev;
}

// Jump list of psi_K for a quadratic field: split primes give two ideals of
// norm p (weight 2 log p per power), inert primes one ideal of norm p^2
// (weight log p^2 = 2 log p per power), ramified primes one ideal of norm p.
inline std::vector<PsiEvent> psi_events_quadratic(const QuadraticField& f,
                                                  std::int64_t limit) {
    auto comp = composite_flags(limit);
    std::vector<PsiEvent> ev;
    for (std::int64_t p = 2; p <= limit; ++p) {
        if (comp[static_cast<std::size_t>(p)]) continue;
        double lp = std::log(static_cast<double>(p));
        int chi = kronecker_symbol(f.disc, p);
        if (chi == 1) {
            for (std::int64_t q = p; q <= limit; ) {
                ev.push_back({q, 2.0 * lp, 2});
                if (q > limit / p) break;
                q *= p;
            }
        } else if (chi == -1) {
            if (p <= limit / p) {
                for (std::int64_t q = p * p; q <= limit; ) {
                    ev.push_back({q, 2.0 * lp, 1});
                    if (q > limit / (p * p)) break;
                    q *= p * p;
                }
            }
        } else { // ramified
            for (std::int64_t q = p; q <= limit; ) {
                ev.push_back({q, lp, 1});
                if (q > limit / p) break;
                q *= p;
            }
        }
    }
    std::sort(ev.begin(), ev.end(),
              [](const PsiEvent& a, const PsiEvent& b) { return a.pos < b.pos; });
    return ev;
}

inline std::int64_t psi_floor_limit(double x) {
    if (!(x >= 0) || !std::isfinite(x))
        throw DomainError("psi: x >= 0 required");
    if (x > static_cast<double>(kSieveLimit))
        throw LimitExceededError("psi: x above 1e8");
    return static_cast<std::int64_t>(std::floor(x));
}

} // namespace detail

inline PsiValue psi_rational(double x) {
    std::int64_t limit = detail::psi_floor_limit(x);
    PsiValue out{x, 0.0, PsiMethod::Rational, 0};
    if (limit < 2) return out;
    detail::KahanSum s;
    for (const auto& e : detail::psi_events_rational(limit)) {
        s.add(e.weight);
        out.prime_power_count += e.count;
    }
    out.value = s.value();
    return out;
}

inline PsiValue psi_quadratic(const QuadraticField& f, double x,
                              PsiMethod method = PsiMethod::DirectIdeals) {
    std::int64_t limit = detail::psi_floor_limit(x);
    PsiValue out{x, 0.0, method, 0};
    if (limit < 2) return out;
    detail::KahanSum s;
    if (method == PsiMethod::DirectIdeals) {
        for (const auto& e : detail::psi_events_quadratic(f, limit)) {
            s.add(e.weight);
            out.prime_power_count += e.count;
        }
    } else if (method == PsiMethod::CharacterDecomp) {
        auto lam = von_mangoldt_sieve(limit);
        detail::KahanSum twisted;
        for (std::int64_t n = 2; n <= limit; ++n) {
            double l = lam[static_cast<std::size_t>(n)];
            if (l == 0.0) continue;
            s.add(l);
            twisted.add(l * kronecker_symbol(f.disc, n));
        }
        s.add(twisted.value());
        out.prime_power_count = -1; // not tracked on this route
    } else {
        throw DomainError("psi_quadratic: method must be DirectIdeals or CharacterDecomp");
    }
    out.value = s.value();
    return out;
}

// ---------------------------------------------------------------------------
// Empirical validation: sup over x in [validity, x_max] of |psi_K(x) - x|
// divided by the bound.  psi_K is a step function and every bound is
// nondecreasing, so on each segment between jumps the ratio peaks at one of
// the two ends; sampling jump positions from both sides is exhaustive.

struct VerifyReport {
    std::string field;
    BoundFormula formula = BoundFormula::Eq11;
    double x_max = 0;
    double max_ratio = 0;
    double argmax_x = 0;
    bool pass = false;
    std::int64_t samples = 0;
};

namespace detail {

inline VerifyReport verify_events(const FieldProfile& profile, const std::string& label,
                                  const std::vector<PsiEvent>& events, BoundFormula f,
                                  double x_max, const BoundConstants& c) {
    VerifyReport rep;
    rep.field = label;
    rep.formula = f;
    rep.x_max = x_max;
    const double lo = validity_min_x(f);
    if (!(x_max > lo))
        throw DomainError("verify: x_max must exceed the formula's validity minimum");

    KahanSum psi;
    auto consider = [&](double gap, double x) {
        double ratio = gap / evaluate_bound(f, profile, x, c).value;
        ++rep.samples;
        if (ratio > rep.max_ratio) {
            rep.max_ratio = ratio;
            rep.argmax_x = x;
        }
    };

    std::size_t i = 0;
    while (i < events.size() && static_cast<double>(events[i].pos) <= lo) {
        psi.add(events[i].weight);
        ++i;
    }
    consider(std::abs(psi.value() - lo), lo);
    for (; i < events.size() && static_cast<double>(events[i].pos) <= x_max; ++i) {
        double e = static_cast<double>(events[i].pos);
        consider(std::abs(psi.value() - e), e); // left limit at the jump
        psi.add(events[i].weight);
        consider(std::abs(psi.value() - e), e);
    }
    consider(std::abs(psi.value() - x_max), x_max);
    rep.pass = rep.max_ratio < 1.0;
    return rep;
}

} // namespace detail

inline VerifyReport verify_bound_rational(BoundFormula f, double x_max,
                                          const BoundConstants& c = bound_constants()) {
    std::int64_t limit = detail::psi_floor_limit(x_max);
    return detail::verify_events(rational_profile(), "Q",
                                 detail::psi_events_rational(limit), f, x_max, c);
}

inline VerifyReport verify_bound_quadratic(const QuadraticField& field, BoundFormula f,
                                           double x_max,
                                           const BoundConstants& c = bound_constants()) {
    std::int64_t limit = detail::psi_floor_limit(x_max);
    return detail::verify_events(field.profile(), field.label(),
                                 detail::psi_events_quadratic(field, limit), f, x_max, c);
}

} // namespace psik
