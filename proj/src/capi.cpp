#include "invdeg/invdeg.h"

#include "invdeg/error.hpp"
#include "invdeg/mldegree.hpp"
#include "invdeg/multidegree.hpp"
#include "invdeg/psi.hpp"
#include "invdeg/symbolic.hpp"

#include <cstring>
#include <memory>
#include <new>
#include <string>
#include <vector>

using namespace invdeg;

struct invdeg_psi_table {
    PsiTable table;
    std::vector<std::string> singles;
    std::vector<std::string> pairs; // n x n
};

struct invdeg_multidegree {
    MultidegreeTable table;
    std::vector<std::string> beta;
    std::vector<std::string> gamma;
    std::vector<std::string> sigma;
    std::vector<std::string> lhs;
    std::vector<bool> match;
    bool ok = false;
};

struct invdeg_ml_table {
    std::vector<std::vector<std::string>> rows;
};

struct invdeg_ml_polynomial {
    MLPolynomial poly;
    std::vector<std::string> coeffs;
    std::string text;
};

struct invdeg_fd_report {
    FiniteDifferenceReport report;
    std::vector<std::string> values;
    std::vector<std::string> differences;
};

struct invdeg_report {
    std::vector<Check> checks;
};

namespace {

thread_local std::string last_error;

template <class F>
invdeg_status guarded(F&& body)
{
    try {
        last_error.clear();
        body();
        return INVDEG_OK;
    } catch (const ArgumentError& e) {
        last_error = e.what();
        return INVDEG_ERR_ARGUMENT;
    } catch (const VerificationError& e) {
        last_error = e.what();
        return INVDEG_ERR_VERIFICATION;
    } catch (const std::exception& e) {
        last_error = e.what();
        return INVDEG_ERR_INTERNAL;
    } catch (...) {
        last_error = "unknown error";
        return INVDEG_ERR_INTERNAL;
    }
}

std::vector<std::string> render(const std::vector<BigInteger>& values)
{
    std::vector<std::string> out;
    out.reserve(values.size());
    for (const auto& v : values)
        out.push_back(v.get_str());
    return out;
}

char* dup_string(const std::string& s)
{
    char* out = new char[s.size() + 1];
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

template <class T>
invdeg_status null_out(T** out)
{
    if (!out) {
        last_error = "output pointer is null";
        return INVDEG_ERR_ARGUMENT;
    }
    *out = nullptr;
    return INVDEG_OK;
}

const char* at(const std::vector<std::string>& v, long k)
{
    if (k < 0 || static_cast<std::size_t>(k) >= v.size())
        return nullptr;
    return v[k].c_str();
}

} // namespace

extern "C" {

const char* invdeg_last_error(void) { return last_error.c_str(); }

const char* invdeg_version(void) { return "1.0.0"; }

void invdeg_string_free(char* s) { delete[] s; }

// ---- psi -----------------------------------------------------------------

invdeg_status invdeg_psi_table_create(int n, invdeg_psi_table** out)
{
    if (auto s = null_out(out))
        return s;
    return guarded([&] {
        if (n < 1)
            throw ArgumentError("n must be >= 1");
        auto h = std::make_unique<invdeg_psi_table>(invdeg_psi_table{PsiTable(n), {}, {}});
        h->pairs.resize(static_cast<std::size_t>(n) * n);
        for (int i = 1; i <= n; ++i) {
            h->singles.push_back(h->table.single(i).get_str());
            for (int j = i + 1; j <= n; ++j)
                h->pairs[(i - 1) * n + (j - 1)] = h->table.pair(i, j).get_str();
        }
        *out = h.release();
    });
}

void invdeg_psi_table_destroy(invdeg_psi_table* table) { delete table; }

int invdeg_psi_table_n(const invdeg_psi_table* table) { return table ? table->table.n() : 0; }

const char* invdeg_psi_single(const invdeg_psi_table* table, int i)
{
    return table ? at(table->singles, i - 1) : nullptr;
}

const char* invdeg_psi_pair(const invdeg_psi_table* table, int i, int j)
{
    const int n = table ? table->table.n() : 0;
    if (i < 1 || j <= i || j > n)
        return nullptr;
    return table->pairs[(i - 1) * n + (j - 1)].c_str();
}

invdeg_status invdeg_psi_seq(const invdeg_psi_table* table, const int* entries, size_t length, char** out)
{
    if (auto s = null_out(out))
        return s;
    return guarded([&] {
        if (!table || (length > 0 && !entries))
            throw ArgumentError("null argument");
        Subsequence alpha(std::vector<int>(entries, entries + length), table->table.n());
        *out = dup_string(psi_seq(alpha, table->table).get_str());
    });
}

// ---- multidegrees ----------------------------------------------------------

invdeg_status invdeg_multidegree_create(int n, unsigned threads, invdeg_multidegree** out)
{
    if (auto s = null_out(out))
        return s;
    return guarded([&] {
        auto h = std::make_unique<invdeg_multidegree>();
        h->table = multidegree_table(n, threads);
        const IdentityReport id = verify_identity(h->table);
        h->beta = render(h->table.beta);
        h->gamma = render(h->table.gamma_degs);
        h->sigma = render(h->table.sigma_coeffs);
        h->lhs = render(id.lhs);
        h->match = id.match;
        h->ok = id.all_match();
        *out = h.release();
    });
}

void invdeg_multidegree_destroy(invdeg_multidegree* table) { delete table; }

int invdeg_multidegree_n(const invdeg_multidegree* table) { return table ? table->table.n : 0; }

long invdeg_multidegree_m(const invdeg_multidegree* table) { return table ? table->table.m : 0; }

const char* invdeg_multidegree_beta(const invdeg_multidegree* table, long d)
{
    return table ? at(table->beta, d) : nullptr;
}

const char* invdeg_multidegree_gamma(const invdeg_multidegree* table, long d)
{
    return table ? at(table->gamma, d) : nullptr;
}

const char* invdeg_multidegree_sigma(const invdeg_multidegree* table, long d)
{
    return table ? at(table->sigma, d - 1) : nullptr;
}

const char* invdeg_multidegree_identity_lhs(const invdeg_multidegree* table, long d)
{
    return table ? at(table->lhs, d) : nullptr;
}

int invdeg_multidegree_identity_match(const invdeg_multidegree* table, long d)
{
    if (!table || d < 0 || static_cast<std::size_t>(d) >= table->match.size())
        return -1;
    return table->match[d] ? 1 : 0;
}

int invdeg_multidegree_identity_ok(const invdeg_multidegree* table) { return table && table->ok ? 1 : 0; }

invdeg_status invdeg_delta(long d, int n, int r, char** out)
{
    if (auto s = null_out(out))
        return s;
    return guarded([&] { *out = dup_string(delta(d, n, r).get_str()); });
}

// ---- ML-degrees ------------------------------------------------------------

invdeg_status invdeg_ml_degree(int n, long d, unsigned threads, char** out)
{
    if (auto s = null_out(out))
        return s;
    return guarded([&] { *out = dup_string(ml_degree(n, d, threads).get_str()); });
}

invdeg_status invdeg_ml_table_create(int n_max, unsigned threads, invdeg_ml_table** out)
{
    if (auto s = null_out(out))
        return s;
    return guarded([&] {
        auto h = std::make_unique<invdeg_ml_table>();
        for (const auto& row : ml_table(n_max, threads))
            h->rows.push_back(render(row));
        *out = h.release();
    });
}

void invdeg_ml_table_destroy(invdeg_ml_table* table) { delete table; }

int invdeg_ml_table_n_max(const invdeg_ml_table* table) { return table ? static_cast<int>(table->rows.size()) : 0; }

long invdeg_ml_table_row_length(const invdeg_ml_table* table, int n)
{
    if (!table || n < 1 || static_cast<std::size_t>(n) > table->rows.size())
        return 0;
    return static_cast<long>(table->rows[n - 1].size());
}

const char* invdeg_ml_table_value(const invdeg_ml_table* table, int n, long d)
{
    if (!table || n < 1 || static_cast<std::size_t>(n) > table->rows.size())
        return nullptr;
    return at(table->rows[n - 1], d - 1);
}

invdeg_status invdeg_ml_polynomial_create(long d, unsigned threads, invdeg_ml_polynomial** out)
{
    if (auto s = null_out(out))
        return s;
    return guarded([&] {
        auto h = std::make_unique<invdeg_ml_polynomial>();
        h->poly = ml_polynomial(d, threads);
        for (const auto& c : h->poly.coeffs)
            h->coeffs.push_back(c.get_str());
        h->text = h->poly.to_string();
        *out = h.release();
    });
}

void invdeg_ml_polynomial_destroy(invdeg_ml_polynomial* poly) { delete poly; }

long invdeg_ml_polynomial_d(const invdeg_ml_polynomial* poly) { return poly ? poly->poly.d : 0; }

size_t invdeg_ml_polynomial_coeff_count(const invdeg_ml_polynomial* poly) { return poly ? poly->coeffs.size() : 0; }

const char* invdeg_ml_polynomial_coeff(const invdeg_ml_polynomial* poly, size_t k)
{
    return poly ? at(poly->coeffs, static_cast<long>(k)) : nullptr;
}

int invdeg_ml_polynomial_sample_first(const invdeg_ml_polynomial* poly) { return poly ? poly->poly.sample_first : 0; }

int invdeg_ml_polynomial_sample_last(const invdeg_ml_polynomial* poly) { return poly ? poly->poly.sample_last : 0; }

size_t invdeg_ml_polynomial_validated_count(const invdeg_ml_polynomial* poly)
{
    return poly ? poly->poly.validated_at.size() : 0;
}

int invdeg_ml_polynomial_validated_at(const invdeg_ml_polynomial* poly, size_t k)
{
    if (!poly || k >= poly->poly.validated_at.size())
        return 0;
    return poly->poly.validated_at[k];
}

const char* invdeg_ml_polynomial_string(const invdeg_ml_polynomial* poly) { return poly ? poly->text.c_str() : nullptr; }

invdeg_status invdeg_fd_report_create(long d, int window, unsigned threads, invdeg_fd_report** out)
{
    if (auto s = null_out(out))
        return s;
    return guarded([&] {
        auto h = std::make_unique<invdeg_fd_report>();
        h->report = finite_difference_check(d, window, threads);
        h->values = render(h->report.values);
        h->differences = render(h->report.differences);
        *out = h.release();
    });
}

void invdeg_fd_report_destroy(invdeg_fd_report* report) { delete report; }

int invdeg_fd_report_first_n(const invdeg_fd_report* report) { return report ? report->report.first_n : 0; }

size_t invdeg_fd_report_value_count(const invdeg_fd_report* report) { return report ? report->values.size() : 0; }

const char* invdeg_fd_report_value(const invdeg_fd_report* report, size_t k)
{
    return report ? at(report->values, static_cast<long>(k)) : nullptr;
}

size_t invdeg_fd_report_difference_count(const invdeg_fd_report* report)
{
    return report ? report->differences.size() : 0;
}

const char* invdeg_fd_report_difference(const invdeg_fd_report* report, size_t k)
{
    return report ? at(report->differences, static_cast<long>(k)) : nullptr;
}

int invdeg_fd_report_all_vanish(const invdeg_fd_report* report)
{
    return report && report->report.all_vanish() ? 1 : 0;
}

// ---- verification ------------------------------------------------------------

invdeg_status invdeg_verify(int n, invdeg_verify_mode mode, int trials, uint64_t seed, int symbolic_cap,
                            invdeg_report** out)
{
    if (auto s = null_out(out))
        return s;
    return guarded([&] {
        if (mode != INVDEG_VERIFY_SYMBOLIC && mode != INVDEG_VERIFY_NUMERIC)
            throw ArgumentError("unknown verification mode");
        VerifyOptions o;
        o.n = n;
        o.mode = mode == INVDEG_VERIFY_SYMBOLIC ? VerifyMode::Symbolic : VerifyMode::Numeric;
        o.trials = trials;
        o.seed = seed;
        o.symbolic_cap = symbolic_cap;
        auto h = std::make_unique<invdeg_report>();
        h->checks = run_verification(o);
        *out = h.release();
    });
}

void invdeg_report_destroy(invdeg_report* report) { delete report; }

size_t invdeg_report_count(const invdeg_report* report) { return report ? report->checks.size() : 0; }

const char* invdeg_report_name(const invdeg_report* report, size_t k)
{
    if (!report || k >= report->checks.size())
        return nullptr;
    return report->checks[k].name.c_str();
}

int invdeg_report_pass(const invdeg_report* report, size_t k)
{
    if (!report || k >= report->checks.size())
        return 0;
    return report->checks[k].pass ? 1 : 0;
}

const char* invdeg_report_detail(const invdeg_report* report, size_t k)
{
    if (!report || k >= report->checks.size())
        return nullptr;
    return report->checks[k].detail.c_str();
}

int invdeg_report_all_pass(const invdeg_report* report)
{
    if (!report)
        return 0;
    for (const auto& c : report->checks)
        if (!c.pass)
            return 0;
    return 1;
}

} // extern "C"
