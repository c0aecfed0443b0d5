#pragma once

// Golden-table engine: recompute the reference crossover and remainder-
// envelope tables and diff them against the shipped values.  Rows fan out
// over a thread pool; output order is fixed by (table, degree).

#include <cstdint>
#include <cstdio>
#include <future>
#include <string>
#include <vector>

#include "psik/bounds.hpp"
#include "psik/refdata.hpp"
#include "psik/tselect.hpp"

namespace psik {

struct TableRow {
    std::string table;
    std::string inputs;
    std::string computed;
    std::string expected;
    double delta = 0;
    bool match = false;
};

namespace detail {

inline std::string fmt_disc(double mantissa, int exp10) {
    char buf[64];
    if (exp10 == 0)
        std::snprintf(buf, sizeof(buf), "%.4f", mantissa);
    else
        std::snprintf(buf, sizeof(buf), "%.4fe%d", mantissa, exp10);
    return buf;
}

// All six crossovers of one reference profile from two cached grid passes.
// no_crossover marks a search that was still losing at x_cap; the row
// surfaces it instead of aborting the table.
struct ProfileCrossovers {
    std::int64_t plain[3];   // vs eq1.3, eq1.4, eq1.5
    bool plain_clamped[3];
    bool plain_none[3];
    std::int64_t best[3];
    bool best_clamped[3];
    bool best_none[3];
};

inline ProfileCrossovers profile_crossovers(const FieldProfile& p, std::int64_t x_cap,
                                            const BoundConstants& c) {
    auto xs = detail::crossover_grid(3.0, static_cast<double>(x_cap));
    const std::size_t m = xs.size();
    std::vector<double> ours(m), ours_best(m);
    for (std::size_t i = 0; i < m; ++i) {
        double e11 = bound_1_1(p, xs[i], c).value;
        ours[i] = e11;
        ours_best[i] = std::min(e11, bound_1_2(p, xs[i], c).value);
    }

    const BoundFormula rivals[3] = {BoundFormula::Eq13, BoundFormula::Eq14,
                                    BoundFormula::Eq15};
    ProfileCrossovers out{};
    for (int r = 0; r < 3; ++r) {
        const double vmin = validity_min_x(rivals[r]);
        std::ptrdiff_t last_plain = -1, last_best = -1;
        for (std::size_t i = 0; i < m; ++i) {
            if (xs[i] < vmin) continue;
            double rv = evaluate_bound(rivals[r], p, xs[i], c).value;
            if (ours[i] > rv) last_plain = static_cast<std::ptrdiff_t>(i);
            if (ours_best[i] > rv) last_best = static_cast<std::ptrdiff_t>(i);
        }
        auto finish = [&](std::ptrdiff_t last, std::int64_t& x0, bool& clamped, bool& none) {
            none = false;
            if (last < 0) {
                x0 = static_cast<std::int64_t>(vmin);
                clamped = true;
            } else if (last + 1 >= static_cast<std::ptrdiff_t>(m)) {
                x0 = 0;
                clamped = false;
                none = true;
            } else {
                x0 = std::llround(xs[last + 1]);
                clamped = false;
            }
        };
        finish(last_plain, out.plain[r], out.plain_clamped[r], out.plain_none[r]);
        finish(last_best, out.best[r], out.best_clamped[r], out.best_none[r]);
    }
    return out;
}

} // namespace detail

// Recompute both published crossover tables for the 28 reference profiles.
// best_of selects the "best of 1.1 and 1.2" variant.
inline std::vector<TableRow> crossover_table(bool best_of,
                                             std::int64_t x_cap = 10'000'000,
                                             const BoundConstants& c = bound_constants()) {
    const auto& refs = refdata::crossover_reference();
    std::vector<std::future<detail::ProfileCrossovers>> jobs;
    jobs.reserve(refs.size());
    for (const auto& ref : refs)
        jobs.push_back(std::async(std::launch::async, [&ref, x_cap, &c] {
            return detail::profile_crossovers(refdata::profile_of(ref), x_cap, c);
        }));

    std::vector<TableRow> rows;
    const char* rival_names[3] = {"eq1.3", "eq1.4", "eq1.5"};
    for (std::size_t i = 0; i < refs.size(); ++i) {
        const auto& ref = refs[i];
        auto cr = jobs[i].get();
        const std::int64_t expected[3] = {
            best_of ? ref.best_eq13 : ref.eq13,
            best_of ? ref.best_eq14 : ref.eq14,
            best_of ? ref.best_eq15 : ref.eq15,
        };
        for (int r = 0; r < 3; ++r) {
            std::int64_t got = best_of ? cr.best[r] : cr.plain[r];
            bool clamped = best_of ? cr.best_clamped[r] : cr.plain_clamped[r];
            bool none = best_of ? cr.best_none[r] : cr.plain_none[r];
            TableRow row;
            row.table = ref.table;
            row.inputs = "n=" + std::to_string(ref.degree) + " disc=" +
                         detail::fmt_disc(ref.mantissa, ref.exp10) + " vs " + rival_names[r];
            row.computed = none ? "no crossover by cap"
                                : std::to_string(got) + (clamped ? " (clamped)" : "");
            row.expected = std::to_string(expected[r]);
            row.delta = none ? 0.0 : static_cast<double>(got - expected[r]);
            row.match = !none && refdata::crossover_matches(got, expected[r], clamped);
            rows.push_back(std::move(row));
        }
    }
    return rows;
}

// Recompute the remainder-envelope table with the given minimal-|disc|
// inputs (index d-1 holds degree d; nine entries).
inline std::vector<TableRow> cmax_table(const std::vector<double>& min_disc =
                                            refdata::min_disc_defaults(),
                                        const BoundConstants& c = bound_constants()) {
    if (min_disc.size() < 9)
        throw DomainError("cmax_table: minimal-disc table needs degrees 1..9");
    const auto& refs = refdata::cmax_reference();
    std::vector<std::future<CmaxResult>> jobs;
    for (const auto& ref : refs) {
        double disc = min_disc[static_cast<std::size_t>(ref.degree - 1)];
        jobs.push_back(std::async(std::launch::async, [&ref, disc, &c] {
            return ref.aggregate ? scan_remainder_envelope_aggregate(disc, c)
                                 : scan_remainder_envelope(ref.degree, disc, c);
        }));
    }

    std::vector<TableRow> rows;
    for (std::size_t i = 0; i < refs.size(); ++i) {
        const auto& ref = refs[i];
        CmaxResult got = jobs[i].get();
        char comp[128], exp[128];
        std::snprintf(comp, sizeof(comp), "c_max=%.4f x=%lld points=%lld", got.c_max,
                      static_cast<long long>(got.x_at_max),
                      static_cast<long long>(got.n_points));
        if (ref.negative)
            std::snprintf(exp, sizeof(exp), "c_max<0 x=%lld points=%lld",
                          static_cast<long long>(ref.x_at_max),
                          static_cast<long long>(ref.n_points));
        else
            std::snprintf(exp, sizeof(exp), "c_max=%.4f x=%lld points=%lld", ref.c_max,
                          static_cast<long long>(ref.x_at_max),
                          static_cast<long long>(ref.n_points));
        TableRow row;
        row.table = "cmax";
        row.inputs = (ref.aggregate ? std::string("n>=9 (via 9)")
                                    : "n=" + std::to_string(ref.degree)) +
                     " disc=" + std::to_string(got.disc_used);
        row.computed = comp;
        row.expected = exp;
        bool value_ok = ref.negative ? (got.c_max < 0)
                                     : std::abs(got.c_max - ref.c_max) <= refdata::kCmaxTol;
        row.delta = ref.negative ? 0.0 : got.c_max - ref.c_max;
        row.match = value_ok && got.x_at_max == ref.x_at_max && got.n_points == ref.n_points;
        rows.push_back(std::move(row));
    }
    return rows;
}

} // namespace psik
