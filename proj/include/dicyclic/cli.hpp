#pragma once
// Command-line front end. Exit codes: 0 all checked claims pass, 1 some claim fails,
// 2 usage error, 3 search exhausted.

#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <regex>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "dicyclic/report.hpp"

namespace dicyclic::cli {

enum ExitCode : int { kPass = 0, kClaimFailure = 1, kUsageError = 2, kSearchExhausted = 3 };

struct UsageError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

namespace detail {

inline void require(bool ok, const std::string& message)
{
    if (!ok)
        throw UsageError(message);
}

inline void write_file(const std::filesystem::path& path, const std::string& text)
{
    if (path.has_parent_path())
        std::filesystem::create_directories(path.parent_path());
    std::ofstream f(path, std::ios::binary);
    if (!f)
        throw UsageError("cannot write " + path.string());
    f << text;
}

inline std::pair<int, int> parse_range(const std::string& s)
{
    static const std::regex re(R"((\d+)\.\.(\d+))");
    std::smatch m;
    require(std::regex_match(s, m, re), "--n-range expects <a>..<b>, got " + s);
    const int a = std::stoi(m[1]);
    const int b = std::stoi(m[2]);
    require(a >= 2, "--n-range must start at 2 or above");
    require(a <= b, "--n-range " + s + " is empty");
    return {a, b};
}

inline double elapsed_ms(std::chrono::steady_clock::time_point start)
{
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
}

inline std::string markdown_summary(const std::vector<report::Report>& reports)
{
    std::string md = "# Claim summary\n\n| n | claim | status |\n|---|---|---|\n";
    std::size_t failed = 0;
    std::size_t assumed = 0;
    for (const auto& r : reports) {
        const int n = r.params.at("n").get<int>();
        for (const auto& c : r.claims) {
            md += "| " + std::to_string(n) + " | `" + c.id + "` " + c.anchor + " | " + report::to_string(c.status) +
                  " |\n";
            failed += c.status == report::Status::Fail;
            assumed += c.status == report::Status::Assumed;
        }
    }
    md += "\n" + std::to_string(failed) + " failed, " + std::to_string(assumed) + " assumed (not checked).\n";
    return md;
}

} // namespace detail

/// Runs one invocation; args excludes the program name.
inline int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Verification toolkit for dicyclic group actions on Riemann surfaces", "dicyclic"};
    app.require_subcommand(1);

    int n = 0;
    std::string which_case, model_name, mode = "strong", n_range, out_dir, json_path, dot_path;
    int gamma_max = 1, r_max = 3, q = 0;
    long long g_max = 0;
    report::CurveSettings curve;

    auto* census = app.add_subcommand("census", "classify triangular actions of G_n");
    census->add_option("--n", n)->required();
    census->add_option("--json", json_path, "also write the JSON envelope here");

    auto* mono = app.add_subcommand("monodromy", "check the permutation pair and its dessin");
    mono->add_option("--n", n)->required();
    mono->add_option("--case", which_case)->required()->check(CLI::IsMember({"I", "II"}));
    mono->add_option("--dot", dot_path, "write the underlying bipartite graph as DOT");

    auto* hyper = app.add_subcommand("hyper", "least genus with anticonformal elements");
    hyper->add_option("--n", n)->required();
    hyper->add_option("--gamma-max", gamma_max);
    hyper->add_option("--r-max", r_max);

    auto* pseudo = app.add_subcommand("pseudo-real", "pseudo-real surface certificate");
    pseudo->add_option("--n", n)->required();
    pseudo->add_option("--q", q)->required();

    auto* curves_cmd = app.add_subcommand("curves", "numeric checks on a curve model");
    curves_cmd->add_option("--n", n)->required();
    curves_cmd->add_option("--model", model_name)->required();
    curves_cmd->add_option("--seed", curve.seed);
    curves_cmd->add_option("--trials", curve.trials);
    curves_cmd->add_option("--tol", curve.tolerance);

    auto* genus = app.add_subcommand("genus", "strong or pure symmetric genus");
    genus->add_option("--n", n)->required();
    genus->add_option("--mode", mode)->check(CLI::IsMember({"strong", "pure"}));
    genus->add_option("--g-max", g_max);

    auto* full = app.add_subcommand("paper-report", "run every check for each n in a range");
    full->add_option("--n-range", n_range)->required();
    full->add_option("--out", out_dir)->required();
    full->add_option("--seed", curve.seed);
    full->add_option("--trials", curve.trials);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kPass;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kPass;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n" << app.help();
        return kUsageError;
    }

    const auto start = std::chrono::steady_clock::now();
    auto emit = [&](const report::Report& r) {
        const auto env = report::envelope(r, detail::elapsed_ms(start));
        out << env.dump(2) << "\n";
        return r.passed() ? kPass : kClaimFailure;
    };

    try {
        if (full->parsed()) {
            const auto [a, b] = detail::parse_range(n_range);
            const std::filesystem::path dir(out_dir);
            std::vector<report::Report> reports;
            bool all_pass = true;
            for (int k = a; k <= b; ++k) {
                const auto t0 = std::chrono::steady_clock::now();
                report::Report r{"paper-report", {{"n", k}, {"seed", curve.seed}, {"trials", curve.trials}}, {}};
                r.claims = report::all_claims(k, curve);
                detail::write_file(dir / ("n" + std::to_string(k) + ".json"),
                                   report::envelope(r, detail::elapsed_ms(t0)).dump(2) + "\n");
                all_pass = all_pass && r.passed();
                reports.push_back(std::move(r));
            }
            detail::write_file(dir / "summary.md", detail::markdown_summary(reports));
            out << "wrote " << (b - a + 1) << " reports and summary.md to " << dir.string() << "\n"
                << (all_pass ? "all checked claims pass" : "some claims FAIL") << "\n";
            return all_pass ? kPass : kClaimFailure;
        }

        detail::require(n >= 2, "--n must be at least 2");

        if (census->parsed()) {
            report::Report r{"census", {{"n", n}}, {report::census_claim(n)}};
            if (!json_path.empty())
                detail::write_file(json_path, report::envelope(r, detail::elapsed_ms(start)).dump(2) + "\n");
            return emit(r);
        }
        if (mono->parsed()) {
            const ActionCase c = which_case == "I" ? ActionCase::I : ActionCase::II;
            detail::require(c == ActionCase::I || n % 2 == 1, "case II requires odd n");
            report::Report r{"monodromy", {{"n", n}, {"case", which_case}},
                             {report::monodromy_claim(n), report::dessin_claim(n, c)}};
            if (!dot_path.empty())
                detail::write_file(dot_path, export_dot(explicit_dessin(n, c)));
            return emit(r);
        }
        if (hyper->parsed()) {
            detail::require(gamma_max >= 0 && r_max >= 0, "--gamma-max and --r-max must be non-negative");
            report::Report r{"hyper",
                             {{"n", n}, {"gamma_max", gamma_max}, {"r_max", r_max}},
                             {report::sigma_hyp_claim(n, gamma_max, r_max)}};
            if (n % 2 == 0)
                r.claims.push_back(report::even_witness_claim(n));
            return emit(r);
        }
        if (pseudo->parsed()) {
            detail::require(q >= 2, "--q must be at least 2");
            report::Report r{"pseudo-real",
                             {{"n", n}, {"q", q}},
                             {report::pseudo_real_claim(n, q), report::pseudo_real_maximality_claim(n, q)}};
            return emit(r);
        }
        if (curves_cmd->parsed()) {
            const auto model = curves::parse_model_name(model_name);
            detail::require(model.has_value(), "unknown model " + model_name +
                                                   " (expected Sn_hyperelliptic, Rn_hyperelliptic, Sn_cyclic "
                                                   "or Rn_cyclic)");
            detail::require(curves::model_applies(*model, n), model_name + " is not defined for n=" + std::to_string(n));
            detail::require(curve.trials >= 1, "--trials must be at least 1");
            report::Report r{"curves",
                             {{"n", n}, {"model", model_name}, {"seed", curve.seed}, {"trials", curve.trials},
                              {"tol", curve.tolerance}},
                             {report::curve_claim(*model, n, curve)}};
            return emit(r);
        }
        if (genus->parsed()) {
            const long long bound = g_max > 0 ? g_max : 4LL * n;
            report::Report r{"genus", {{"n", n}, {"mode", mode}, {"g_max", bound}}, {}};
            r.claims.push_back(mode == "strong" ? report::strong_genus_claim(n, bound)
                                                : report::pure_genus_claim(n, bound));
            return emit(r);
        }
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << "\n";
        return kUsageError;
    } catch (const ParameterError& e) {
        err << "usage error: " << e.what() << "\n";
        return kUsageError;
    } catch (const DomainError& e) {
        err << "usage error: " << e.what() << "\n";
        return kUsageError;
    } catch (const SearchExhausted& e) {
        err << "search exhausted: " << e.what() << "\n";
        return kSearchExhausted;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kClaimFailure;
    }
    return kUsageError;
}

} // namespace dicyclic::cli
