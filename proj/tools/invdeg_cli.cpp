// invdeg: command-line front end over the invdeg C API.
//
// Exit codes: 0 success, 1 usage error, 2 verification failure,
// 3 internal invariant violation.

#include "invdeg/invdeg.h"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdint>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

namespace {

using Json = nlohmann::ordered_json;

enum ExitCode { kOk = 0, kUsage = 1, kVerification = 2, kInternal = 3 };

struct Failure {
    int code;
    std::string message;
};

int exit_for(invdeg_status s)
{
    switch (s) {
    case INVDEG_OK:
        return kOk;
    case INVDEG_ERR_ARGUMENT:
        return kUsage;
    case INVDEG_ERR_VERIFICATION:
        return kVerification;
    default:
        return kInternal;
    }
}

void check(invdeg_status s)
{
    if (s != INVDEG_OK)
        throw Failure{exit_for(s), invdeg_last_error()};
}

template <class T, void (*Destroy)(T*)>
struct Deleter {
    void operator()(T* p) const { Destroy(p); }
};

template <class T, void (*Destroy)(T*)>
using Handle = std::unique_ptr<T, Deleter<T, Destroy>>;

using PsiHandle = Handle<invdeg_psi_table, invdeg_psi_table_destroy>;
using MultidegreeHandle = Handle<invdeg_multidegree, invdeg_multidegree_destroy>;
using MlTableHandle = Handle<invdeg_ml_table, invdeg_ml_table_destroy>;
using MlPolyHandle = Handle<invdeg_ml_polynomial, invdeg_ml_polynomial_destroy>;
using FdHandle = Handle<invdeg_fd_report, invdeg_fd_report_destroy>;
using ReportHandle = Handle<invdeg_report, invdeg_report_destroy>;

struct RunConfig {
    std::string format = "csv";
    unsigned threads = 0;
    int n = 0;
    int n_max = 0;
    long d = 0;
    bool poly = false;
    int window = 0;
    std::string mode = "symbolic";
    int trials = 20;
    std::uint64_t seed = 0;
    int symbolic_cap = 4;
};

struct CheckRow {
    std::string name;
    bool pass;
    std::string detail;
};

std::string csv_field(const std::string& s)
{
    if (s.find_first_of(",\"\n") == std::string::npos)
        return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"')
            out += '"';
        out += c;
    }
    return out + '"';
}

std::string join(const std::vector<std::string>& parts, const std::string& sep)
{
    std::string out;
    for (std::size_t k = 0; k < parts.size(); ++k) {
        if (k)
            out += sep;
        out += parts[k];
    }
    return out;
}

std::string latex_escape(const std::string& s)
{
    std::string out;
    for (char c : s) {
        if (c == '_' || c == '&' || c == '%' || c == '#')
            out += '\\';
        out += c;
    }
    return out;
}

/// sum_k coeffs[k] t1^(total-k) t2^k with decimal-string coefficients.
std::string latex_bivariate(const std::vector<std::string>& coeffs, long total)
{
    auto power = [](const char* var, long e) -> std::string {
        if (e == 0)
            return "";
        if (e == 1)
            return var;
        return std::string(var) + "^{" + std::to_string(e) + "}";
    };
    std::string out;
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
        std::string c = coeffs[k];
        if (c == "0")
            continue;
        const bool negative = c.front() == '-';
        if (negative)
            c.erase(0, 1);
        const std::string mono = power("t_1", total - static_cast<long>(k)) + power("t_2", static_cast<long>(k));
        if (out.empty())
            out += negative ? "-" : "";
        else
            out += negative ? " - " : " + ";
        if (c != "1" || mono.empty())
            out += c;
        out += mono;
    }
    return out.empty() ? "0" : out;
}

Json checks_json(const std::vector<CheckRow>& rows)
{
    Json arr = Json::array();
    for (const auto& r : rows)
        arr.push_back(Json{{"name", r.name}, {"pass", r.pass}, {"detail", r.detail}});
    return arr;
}

Json document(const std::string& command, Json params, Json results, const std::vector<CheckRow>& checks)
{
    return Json{{"command", command}, {"params", std::move(params)}, {"results", std::move(results)},
                {"checks", checks_json(checks)}};
}

void emit_json(std::ostream& out, const Json& doc) { out << doc.dump(2) << '\n'; }

bool all_pass(const std::vector<CheckRow>& rows)
{
    for (const auto& r : rows)
        if (!r.pass)
            return false;
    return true;
}

// ---------------------------------------------------------------------------

int cmd_psi(const RunConfig& cfg, std::ostream& out)
{
    invdeg_psi_table* raw = nullptr;
    check(invdeg_psi_table_create(cfg.n, &raw));
    PsiHandle table(raw);
    const int n = cfg.n;

    std::vector<std::string> singles;
    for (int i = 1; i <= n; ++i)
        singles.push_back(invdeg_psi_single(table.get(), i));
    struct PairRow {
        int i, j;
        std::string v;
    };
    std::vector<PairRow> pairs;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            pairs.push_back({i, j, invdeg_psi_pair(table.get(), i, j)});

    if (cfg.format == "json") {
        Json jp = Json::array();
        for (const auto& p : pairs)
            jp.push_back(Json{{"i", p.i}, {"j", p.j}, {"value", p.v}});
        emit_json(out, document("psi", Json{{"n", n}}, Json{{"singles", singles}, {"pairs", jp}}, {}));
    } else if (cfg.format == "latex") {
        out << "% psi values, n = " << n << "\n";
        out << "\\begin{tabular}{rrr}\n$i$ & $j$ & $\\psi$ \\\\\n\\hline\n";
        for (int i = 1; i <= n; ++i)
            out << i << " & & " << singles[i - 1] << " \\\\\n";
        for (const auto& p : pairs)
            out << p.i << " & " << p.j << " & " << p.v << " \\\\\n";
        out << "\\end{tabular}\n";
    } else {
        out << "kind,i,j,value\n";
        for (int i = 1; i <= n; ++i)
            out << "single," << i << ",," << singles[i - 1] << '\n';
        for (const auto& p : pairs)
            out << "pair," << p.i << ',' << p.j << ',' << p.v << '\n';
    }
    return kOk;
}

int cmd_multidegree(const RunConfig& cfg, std::ostream& out)
{
    if (cfg.n > 22)
        std::cerr << "warning: n = " << cfg.n << " enumerates 2^" << cfg.n
                  << " subsets; expect long run times\n";
    invdeg_multidegree* raw = nullptr;
    check(invdeg_multidegree_create(cfg.n, cfg.threads, &raw));
    MultidegreeHandle table(raw);
    const long m = invdeg_multidegree_m(table.get());

    std::vector<std::string> beta, gamma, sigma, lhs;
    for (long d = 0; d <= m; ++d) {
        beta.push_back(invdeg_multidegree_beta(table.get(), d));
        lhs.push_back(invdeg_multidegree_identity_lhs(table.get(), d));
    }
    for (long d = 0; d < m; ++d)
        gamma.push_back(invdeg_multidegree_gamma(table.get(), d));
    for (long d = 1; d < m; ++d)
        sigma.push_back(invdeg_multidegree_sigma(table.get(), d));
    const bool ok = invdeg_multidegree_identity_ok(table.get()) == 1;

    long matched = 0;
    for (long d = 0; d <= m; ++d)
        matched += invdeg_multidegree_identity_match(table.get(), d) == 1;
    const std::vector<CheckRow> checks{
        {"multidegree_identity", ok,
         std::to_string(matched) + "/" + std::to_string(m + 1) +
             " coefficients of (t1+t2) C(Gamma) match t1^m + t2^m + C(Sigma)"}};

    if (cfg.format == "json") {
        Json results{{"n", cfg.n},          {"m", m},         {"beta", beta},
                     {"sigma", sigma},      {"gamma", gamma}, {"identity_lhs", lhs},
                     {"identity", ok ? "pass" : "fail"}};
        emit_json(out, document("multidegree", Json{{"n", cfg.n}}, std::move(results), checks));
    } else if (cfg.format == "latex") {
        out << "% multidegrees, n = " << cfg.n << ", m = " << m << "\n";
        out << "\\begin{tabular}{rrrr}\n"
            << "$d$ & $\\beta(n,d)$ & $[\\mathcal{C}(\\Sigma)]_d$ & $\\deg^{m-1-d,d}(\\Gamma)$ \\\\\n\\hline\n";
        for (long d = 0; d <= m; ++d) {
            out << d << " & " << beta[d] << " & " << (d >= 1 && d < m ? sigma[d - 1] : "") << " & "
                << (d < m ? gamma[d] : "") << " \\\\\n";
        }
        out << "\\end{tabular}\n\n";
        out << "\\[\n(t_1+t_2)\\,\\mathcal{C}(\\Gamma;t_1,t_2) = " << latex_bivariate(lhs, m) << "\n\\]\n";
        std::vector<std::string> gamma_poly(gamma.rbegin(), gamma.rend());
        out << "\\[\n\\mathcal{C}(\\Gamma;t_1,t_2) = " << latex_bivariate(gamma_poly, m - 1) << "\n\\]\n";
        out << "\\[\nt_1^{" << m << "} + t_2^{" << m << "} + \\mathcal{C}(\\Sigma;t_1,t_2) = "
            << latex_bivariate(beta, m) << "\n\\]\n";
        out << "% identity: " << (ok ? "pass" : "fail") << "\n";
    } else {
        out << "d,beta,sigma,gamma,identity_lhs,identity\n";
        for (long d = 0; d <= m; ++d) {
            out << d << ',' << beta[d] << ',' << (d >= 1 && d < m ? sigma[d - 1] : "") << ','
                << (d < m ? gamma[d] : "") << ',' << lhs[d] << ','
                << (invdeg_multidegree_identity_match(table.get(), d) == 1 ? "pass" : "fail") << '\n';
        }
    }
    return ok ? kOk : kVerification;
}

int cmd_mldeg_table(const RunConfig& cfg, std::ostream& out)
{
    invdeg_ml_table* raw = nullptr;
    check(invdeg_ml_table_create(cfg.n_max, cfg.threads, &raw));
    MlTableHandle table(raw);

    std::vector<std::vector<std::string>> rows;
    for (int n = 1; n <= cfg.n_max; ++n) {
        std::vector<std::string> row;
        for (long d = 1; d <= invdeg_ml_table_row_length(table.get(), n); ++d)
            row.push_back(invdeg_ml_table_value(table.get(), n, d));
        rows.push_back(std::move(row));
    }

    if (cfg.format == "json") {
        Json jr = Json::array();
        for (int n = 1; n <= cfg.n_max; ++n)
            jr.push_back(Json{{"n", n}, {"phi", rows[n - 1]}});
        emit_json(out, document("mldeg", Json{{"n_max", cfg.n_max}}, Json{{"rows", jr}}, {}));
    } else if (cfg.format == "latex") {
        out << "% ML-degrees phi(n,d), n = 1.." << cfg.n_max << "\n";
        out << "\\begin{tabular}{rl}\n$n$ & $\\phi(n,1), \\ldots, \\phi(n,m)$ \\\\\n\\hline\n";
        for (int n = 1; n <= cfg.n_max; ++n)
            out << n << " & " << join(rows[n - 1], ", ") << " \\\\\n";
        out << "\\end{tabular}\n";
    } else {
        out << "n,d,phi\n";
        for (int n = 1; n <= cfg.n_max; ++n)
            for (std::size_t d = 0; d < rows[n - 1].size(); ++d)
                out << n << ',' << d + 1 << ',' << rows[n - 1][d] << '\n';
    }
    return kOk;
}

int cmd_mldeg_d(const RunConfig& cfg, std::ostream& out)
{
    const int window = cfg.window > 0 ? cfg.window : static_cast<int>(cfg.d) + 10;
    invdeg_fd_report* fd_raw = nullptr;
    check(invdeg_fd_report_create(cfg.d, window, cfg.threads, &fd_raw));
    FdHandle fd(fd_raw);

    std::vector<std::string> values, diffs;
    for (std::size_t k = 0; k < invdeg_fd_report_value_count(fd.get()); ++k)
        values.push_back(invdeg_fd_report_value(fd.get(), k));
    for (std::size_t k = 0; k < invdeg_fd_report_difference_count(fd.get()); ++k)
        diffs.push_back(invdeg_fd_report_difference(fd.get(), k));
    const int first_n = invdeg_fd_report_first_n(fd.get());
    const bool fd_ok = invdeg_fd_report_all_vanish(fd.get()) == 1;

    std::vector<CheckRow> checks{{"finite_differences", fd_ok,
                                  std::to_string(diffs.size()) + " forward differences of order " +
                                      std::to_string(cfg.d) + " over n = " + std::to_string(first_n) + ".." +
                                      std::to_string(first_n + window - 1)}};

    MlPolyHandle poly;
    std::vector<std::string> coeffs;
    std::vector<int> validated;
    std::string poly_text;
    if (cfg.poly) {
        invdeg_ml_polynomial* raw = nullptr;
        const invdeg_status s = invdeg_ml_polynomial_create(cfg.d, cfg.threads, &raw);
        if (s == INVDEG_ERR_VERIFICATION) {
            checks.push_back({"polynomial_validation", false, invdeg_last_error()});
        } else {
            check(s);
            poly.reset(raw);
            for (std::size_t k = 0; k < invdeg_ml_polynomial_coeff_count(poly.get()); ++k)
                coeffs.push_back(invdeg_ml_polynomial_coeff(poly.get(), k));
            for (std::size_t k = 0; k < invdeg_ml_polynomial_validated_count(poly.get()); ++k)
                validated.push_back(invdeg_ml_polynomial_validated_at(poly.get(), k));
            poly_text = invdeg_ml_polynomial_string(poly.get());
            std::vector<std::string> at;
            for (int v : validated)
                at.push_back(std::to_string(v));
            checks.push_back({"polynomial_validation", true,
                              "fit on n = " + std::to_string(invdeg_ml_polynomial_sample_first(poly.get())) + ".." +
                                  std::to_string(invdeg_ml_polynomial_sample_last(poly.get())) +
                                  ", reproduced at n = " + join(at, ", ")});
        }
    }

    if (cfg.format == "json") {
        Json results{{"d", cfg.d}, {"first_n", first_n}, {"phi", values}, {"differences", diffs}};
        if (poly) {
            results["polynomial"] = Json{{"coefficients", coeffs},
                                         {"text", poly_text},
                                         {"sample_first", invdeg_ml_polynomial_sample_first(poly.get())},
                                         {"sample_last", invdeg_ml_polynomial_sample_last(poly.get())},
                                         {"validated_at", validated}};
        }
        emit_json(out, document("mldeg", Json{{"d", cfg.d}, {"window", window}, {"poly", cfg.poly}},
                                std::move(results), checks));
    } else if (cfg.format == "latex") {
        out << "% ML-degree phi(n," << cfg.d << ")\n";
        out << "\\begin{tabular}{rr}\n$n$ & $\\phi(n," << cfg.d << ")$ \\\\\n\\hline\n";
        for (std::size_t k = 0; k < values.size(); ++k)
            out << first_n + static_cast<int>(k) << " & " << values[k] << " \\\\\n";
        out << "\\end{tabular}\n";
        if (poly)
            out << "\\[\n\\phi(n," << cfg.d << ") = " << poly_text << "\n\\]\n";
        for (const auto& c : checks)
            out << "% " << c.name << ": " << (c.pass ? "pass" : "fail") << "\n";
    } else {
        out << "n,phi\n";
        for (std::size_t k = 0; k < values.size(); ++k)
            out << first_n + static_cast<int>(k) << ',' << values[k] << '\n';
        if (poly) {
            out << "polynomial,coefficients\n";
            out << csv_field(poly_text) << ',' << join(coeffs, ";") << '\n';
        }
        out << "check,pass,detail\n";
        for (const auto& c : checks)
            out << c.name << ',' << (c.pass ? "pass" : "fail") << ',' << csv_field(c.detail) << '\n';
    }
    return all_pass(checks) ? kOk : kVerification;
}

int cmd_verify(const RunConfig& cfg, std::ostream& out)
{
    invdeg_verify_mode mode;
    if (cfg.mode == "symbolic")
        mode = INVDEG_VERIFY_SYMBOLIC;
    else if (cfg.mode == "numeric")
        mode = INVDEG_VERIFY_NUMERIC;
    else
        throw Failure{kUsage, "mode must be symbolic or numeric"};

    invdeg_report* raw = nullptr;
    check(invdeg_verify(cfg.n, mode, cfg.trials, cfg.seed, cfg.symbolic_cap, &raw));
    ReportHandle report(raw);
    std::vector<CheckRow> checks;
    for (std::size_t k = 0; k < invdeg_report_count(report.get()); ++k)
        checks.push_back({invdeg_report_name(report.get(), k), invdeg_report_pass(report.get(), k) == 1,
                          invdeg_report_detail(report.get(), k)});
    const bool ok = all_pass(checks);

    if (cfg.format == "json") {
        Json params{{"n", cfg.n},
                    {"mode", cfg.mode},
                    {"trials", cfg.trials},
                    {"seed", std::to_string(cfg.seed)},
                    {"symbolic_cap", cfg.symbolic_cap}};
        emit_json(out, document("verify", std::move(params), Json{{"all_pass", ok}}, checks));
    } else if (cfg.format == "latex") {
        out << "% verification, n = " << cfg.n << ", mode = " << cfg.mode << ", trials = " << cfg.trials
            << ", seed = " << cfg.seed << "\n";
        out << "\\begin{tabular}{lll}\ncheck & result & detail \\\\\n\\hline\n";
        for (const auto& c : checks)
            out << latex_escape(c.name) << " & " << (c.pass ? "pass" : "fail") << " & " << latex_escape(c.detail)
                << " \\\\\n";
        out << "\\end{tabular}\n";
    } else {
        out << "# verify n=" << cfg.n << " mode=" << cfg.mode << " trials=" << cfg.trials << " seed=" << cfg.seed
            << '\n';
        out << "check,pass,detail\n";
        for (const auto& c : checks)
            out << c.name << ',' << (c.pass ? "pass" : "fail") << ',' << csv_field(c.detail) << '\n';
    }
    return ok ? kOk : kVerification;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Multidegrees of inverse symmetric matrix pairs, SDP algebraic degrees and ML-degrees"};
    app.require_subcommand(1);
    RunConfig cfg;
    app.add_option("--threads", cfg.threads, "worker threads (0 = all cores)");

    const auto formats = CLI::IsMember({"csv", "json", "latex"});

    auto* psi = app.add_subcommand("psi", "tabulate psi_i and psi_{i,j}");
    psi->add_option("--n", cfg.n, "matrix size")->required()->check(CLI::PositiveNumber);
    psi->add_option("--format", cfg.format)->check(formats);

    auto* multideg = app.add_subcommand("multidegree", "beta, C(Sigma), C(Gamma) and their identity");
    multideg->add_option("--n", cfg.n, "matrix size")->required()->check(CLI::PositiveNumber);
    multideg->add_option("--format", cfg.format)->check(formats);

    auto* mldeg = app.add_subcommand("mldeg", "ML-degrees of the linear concentration model");
    auto* n_max_opt = mldeg->add_option("--n-max", cfg.n_max, "tabulate phi(n, d) for n <= N")
                          ->check(CLI::PositiveNumber);
    auto* d_opt = mldeg->add_option("--d", cfg.d, "study phi(., D) as a function of n")->check(CLI::PositiveNumber);
    n_max_opt->excludes(d_opt);
    mldeg->add_flag("--poly", cfg.poly, "interpolate and validate the polynomial in n")->needs(d_opt);
    mldeg->add_option("--window", cfg.window, "values of n in the finite-difference check (default d + 10)")
        ->needs(d_opt);
    mldeg->add_option("--format", cfg.format)->check(formats);

    auto* verify = app.add_subcommand("verify", "check the defining equations and witness points");
    verify->add_option("--n", cfg.n, "matrix size")->required()->check(CLI::PositiveNumber);
    verify->add_option("--mode", cfg.mode)->check(CLI::IsMember({"symbolic", "numeric"}));
    verify->add_option("--trials", cfg.trials, "random points per check")->check(CLI::PositiveNumber);
    verify->add_option("--seed", cfg.seed);
    verify->add_option("--symbolic-cap", cfg.symbolic_cap, "largest n allowed in symbolic mode")
        ->check(CLI::PositiveNumber);
    verify->add_option("--format", cfg.format)->check(formats);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kOk : kUsage;
    }

    try {
        if (psi->parsed())
            return cmd_psi(cfg, std::cout);
        if (multideg->parsed())
            return cmd_multidegree(cfg, std::cout);
        if (mldeg->parsed()) {
            if (*n_max_opt)
                return cmd_mldeg_table(cfg, std::cout);
            if (*d_opt)
                return cmd_mldeg_d(cfg, std::cout);
            std::cerr << "mldeg: one of --n-max or --d is required\n";
            return kUsage;
        }
        if (verify->parsed())
            return cmd_verify(cfg, std::cout);
    } catch (const Failure& f) {
        std::cerr << "error: " << f.message << '\n';
        return f.code;
    }
    return kUsage;
}
