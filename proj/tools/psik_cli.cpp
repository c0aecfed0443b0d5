// psik: evaluate explicit GRH-conditional bounds on |psi_K(x) - x|,
// reproduce the golden reference tables, and validate the bounds against
// the exact psi_K of the rational and quadratic fields.
//
// Exit codes: 0 ok, 1 selftest failure, 2 usage/domain error,
//             3 table mismatch, 4 bound violation.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "psik/psik.hpp"

namespace {

using psik::Json;

struct RunConfig {
    std::string format = "human"; // human, csv, json
    int precision = 6;
    long long x_cap = 10'000'000;
    std::string min_disc_path;
    bool strict = false;
};

void apply_config_file(RunConfig& cfg, const std::string& path) {
    std::ifstream in(path);
    if (!in) throw psik::DomainError("cannot open config file: " + path);
    Json j = Json::parse(in);
    if (j.contains("format")) cfg.format = j["format"].get<std::string>();
    if (j.contains("precision")) cfg.precision = j["precision"].get<int>();
    if (j.contains("x_cap")) cfg.x_cap = j["x_cap"].get<long long>();
    if (j.contains("min_disc_table")) cfg.min_disc_path = j["min_disc_table"].get<std::string>();
    if (j.contains("strict")) cfg.strict = j["strict"].get<bool>();
}

void validate_config(const RunConfig& cfg) {
    if (cfg.precision < 1 || cfg.precision > 17)
        throw psik::DomainError("precision must be in [1, 17]");
    if (cfg.format != "human" && cfg.format != "csv" && cfg.format != "json")
        throw psik::DomainError("format must be human, csv or json");
}

// --field n,disc,r1,r2 with disc in mEe scientific notation; --logdisc
// replaces the disc slot for profiles beyond double range.
psik::FieldProfile parse_field(const std::string& spec, std::optional<double> logdisc) {
    std::vector<std::string> parts;
    std::stringstream ss(spec);
    std::string item;
    while (std::getline(ss, item, ',')) parts.push_back(item);
    if (parts.size() != 4)
        throw psik::DomainError("--field expects n,disc,r1,r2");
    int n = std::stoi(parts[0]);
    int r1 = std::stoi(parts[2]);
    int r2 = std::stoi(parts[3]);
    if (logdisc)
        return psik::make_profile_log_disc(n, *logdisc, r1, r2);
    return psik::make_profile(n, std::stod(parts[1]), r1, r2);
}

std::vector<double> load_min_disc(const std::string& path) {
    if (path.empty()) return psik::refdata::min_disc_defaults();
    std::ifstream in(path);
    if (!in) throw psik::DomainError("cannot open minimal-disc table: " + path);
    Json j = Json::parse(in);
    std::vector<double> v = psik::refdata::min_disc_defaults();
    for (auto& [key, val] : j.items()) {
        int deg = std::stoi(key);
        if (deg < 1 || deg > static_cast<int>(v.size()))
            throw psik::DomainError("minimal-disc table: degree out of range: " + key);
        v[static_cast<std::size_t>(deg - 1)] = val.get<double>();
    }
    return v;
}

int cmd_eval(const RunConfig& cfg, const std::string& field_spec,
             std::optional<double> logdisc, double x, const std::string& formula,
             std::optional<double> T, std::optional<double> kappa) {
    auto profile = parse_field(field_spec, logdisc);
    auto diags = psik::validate(profile, cfg.strict);
    for (const auto& d : diags)
        std::cerr << "warning: " << d.message << "\n";

    psik::BoundFormula f = psik::parse_formula(formula);
    psik::BoundResult r;
    if (f == psik::BoundFormula::General) {
        if (!T || !kappa)
            throw psik::DomainError("thm2.5 requires explicit --T and --kappa");
        r = psik::general_gap_bound({profile, x, *T, *kappa});
    } else {
        if (T || kappa)
            throw psik::DomainError("--T/--kappa apply to thm2.5 only");
        r = psik::evaluate_bound(f, profile, x);
    }

    if (cfg.format == "json") {
        std::cout << psik::to_json(r).dump(2) << "\n";
    } else if (cfg.format == "csv") {
        std::cout << psik::csv_line({"formula", "x", "value", "disc_term", "degree_term",
                                     "const_term", "epsilon_term"});
        std::cout << psik::csv_line({formula, psik::format_double(x, cfg.precision),
                                     psik::format_double(r.value, cfg.precision),
                                     psik::format_double(r.disc_term, cfg.precision),
                                     psik::format_double(r.degree_term, cfg.precision),
                                     psik::format_double(r.const_term, cfg.precision),
                                     psik::format_double(r.epsilon_term, cfg.precision)});
    } else {
        std::printf("%s at x = %s: %s\n", formula.c_str(),
                    psik::format_double(x, cfg.precision).c_str(),
                    psik::format_double(r.value, cfg.precision).c_str());
        std::printf("  disc term    %s\n", psik::format_double(r.disc_term, cfg.precision).c_str());
        std::printf("  degree term  %s\n", psik::format_double(r.degree_term, cfg.precision).c_str());
        std::printf("  const term   %s\n", psik::format_double(r.const_term, cfg.precision).c_str());
        std::printf("  epsilon term %s\n", psik::format_double(r.epsilon_term, cfg.precision).c_str());
        if (!std::isnan(r.T))
            std::printf("  T = %s, kappa = %s\n", psik::format_double(r.T, cfg.precision).c_str(),
                        psik::format_double(r.kappa, cfg.precision).c_str());
    }
    return 0;
}

int emit_table(const RunConfig& cfg, const std::vector<psik::TableRow>& rows) {
    std::size_t matched = 0;
    for (const auto& r : rows) matched += r.match ? 1 : 0;
    if (cfg.format == "json") {
        Json j = psik::table_rows_json(rows);
        j["matched"] = matched;
        j["total"] = rows.size();
        std::cout << j.dump(2) << "\n";
    } else if (cfg.format == "csv") {
        std::cout << psik::table_rows_csv(rows);
    } else {
        for (const auto& r : rows)
            std::printf("%-13s %-44s computed %-22s expected %-28s %s\n", r.table.c_str(),
                        r.inputs.c_str(), r.computed.c_str(), r.expected.c_str(),
                        r.match ? "ok" : "MISMATCH");
        std::printf("%zu/%zu rows match\n", matched, rows.size());
    }
    return matched == rows.size() ? 0 : 3;
}

int cmd_tables(const RunConfig& cfg, const std::string& which, bool raw) {
    if (which == "cmax") {
        auto min_disc = load_min_disc(cfg.min_disc_path);
        if (raw) { // plain scan results, no reference diff
            std::vector<psik::CmaxResult> rows;
            for (const auto& ref : psik::refdata::cmax_reference()) {
                double disc = min_disc[static_cast<std::size_t>(ref.degree - 1)];
                rows.push_back(ref.aggregate
                                   ? psik::scan_remainder_envelope_aggregate(disc)
                                   : psik::scan_remainder_envelope(ref.degree, disc));
            }
            std::cout << psik::cmax_results_csv(rows);
            return 0;
        }
        return emit_table(cfg, psik::cmax_table(min_disc));
    }
    if (raw)
        throw psik::DomainError("--raw applies to --which cmax only");
    if (which == "crossover")
        return emit_table(cfg, psik::crossover_table(false, cfg.x_cap));
    if (which == "crossover-best")
        return emit_table(cfg, psik::crossover_table(true, cfg.x_cap));
    throw psik::DomainError("--which must be crossover, crossover-best or cmax");
}

int cmd_verify(const RunConfig& cfg, bool rational, std::optional<long long> disc,
               double x_max, const std::string& formula) {
    if (rational == disc.has_value())
        throw psik::DomainError("verify needs exactly one of --rational / --disc");
    psik::BoundFormula f = psik::parse_formula(formula);
    psik::VerifyReport rep;
    if (rational) {
        rep = psik::verify_bound_rational(f, x_max);
    } else {
        auto field = psik::QuadraticField::make(*disc);
        rep = psik::verify_bound_quadratic(field, f, x_max);
    }
    if (cfg.format == "json") {
        std::cout << psik::to_json(rep).dump(2) << "\n";
    } else {
        std::printf("%s vs %s up to x = %s: max |psi-x|/bound = %s at x = %s -> %s\n",
                    rep.field.c_str(), formula.c_str(),
                    psik::format_double(rep.x_max, cfg.precision).c_str(),
                    psik::format_double(rep.max_ratio, cfg.precision).c_str(),
                    psik::format_double(rep.argmax_x, cfg.precision).c_str(),
                    rep.pass ? "PASS" : "FAIL");
    }
    return rep.pass ? 0 : 4;
}

int cmd_selftest(const std::string& corrupt_name) {
    psik::BoundConstants consts =
        corrupt_name.empty() ? psik::bound_constants()
                             : psik::corrupted_constants(corrupt_name, 1.001);
    auto results = psik::selfcheck::run_all(consts);
    int failures = 0;
    for (const auto& r : results) {
        std::printf("[%s] %s%s%s\n", r.pass ? "PASS" : "FAIL", r.name.c_str(),
                    r.detail.empty() ? "" : ": ", r.detail.c_str());
        failures += r.pass ? 0 : 1;
    }
    return failures == 0 ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"explicit GRH-conditional bounds for |psi_K(x) - x|"};
    app.require_subcommand(1);
    app.fallthrough();

    RunConfig cfg;
    std::string config_path;
    app.add_option("--format", cfg.format, "output format: human, csv, json");
    app.add_option("--precision", cfg.precision, "printed significant digits (1..17)");
    app.add_option("--config", config_path, "JSON config file");

    auto* eval = app.add_subcommand("eval", "evaluate one bound formula");
    std::string field_spec = "1,1,1,0";
    std::optional<double> logdisc, Topt, kappaopt;
    double eval_x = 3;
    std::string eval_formula = "eq1.1";
    eval->add_option("--field", field_spec, "profile as n,disc,r1,r2");
    eval->add_option("--logdisc", logdisc, "log|disc| (replaces the disc slot)");
    eval->add_option("--x", eval_x, "evaluation point")->required();
    eval->add_option("--formula", eval_formula,
                     "eq1.1, eq1.2, eq1.3, eq1.4, eq1.5 or thm2.5");
    eval->add_option("--T", Topt, "cutoff height (thm2.5 only)");
    eval->add_option("--kappa", kappaopt, "smoothing parameter (thm2.5 only)");
    eval->add_flag("--strict", cfg.strict, "treat profile warnings as errors");

    auto* tables = app.add_subcommand("tables", "recompute golden tables and diff");
    std::string which = "crossover";
    bool raw = false;
    tables->add_option("--which", which, "crossover, crossover-best or cmax");
    tables->add_flag("--raw", raw, "emit plain scan rows as CSV (cmax only)");
    tables->add_option("--xcap", cfg.x_cap, "crossover search cap");
    tables->add_option("--min-disc-table", cfg.min_disc_path,
                       "JSON {degree: disc} overriding the shipped minima");

    auto* verify = app.add_subcommand("verify", "check a bound against exact psi_K");
    bool rational = false;
    std::optional<long long> disc;
    double xmax = 1e6;
    std::string verify_formula = "eq1.1";
    verify->add_flag("--rational", rational, "use the rational field");
    verify->add_option("--disc", disc, "fundamental discriminant of a quadratic field");
    verify->add_option("--xmax", xmax, "upper end of the tested range");
    verify->add_option("--formula", verify_formula, "bound to test");

    auto* selftest = app.add_subcommand("selftest", "run the invariant suite");
    std::string corrupt_name;
    selftest->add_option("--corrupt", corrupt_name,
                         "testing hook: perturb one named constant");

    CLI11_PARSE(app, argc, argv);

    try {
        if (!config_path.empty()) apply_config_file(cfg, config_path);
        validate_config(cfg);
        if (*eval)
            return cmd_eval(cfg, field_spec, logdisc, eval_x, eval_formula, Topt, kappaopt);
        if (*tables)
            return cmd_tables(cfg, which, raw);
        if (*verify)
            return cmd_verify(cfg, rational, disc, xmax, verify_formula);
        if (*selftest)
            return cmd_selftest(corrupt_name);
    } catch (const psik::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
