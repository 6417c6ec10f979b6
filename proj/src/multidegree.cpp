#include "invdeg/multidegree.hpp"

#include "invdeg/error.hpp"
#include "invdeg/parallel.hpp"
#include "invdeg/psi.hpp"

#include <bit>
#include <sstream>

namespace invdeg {

namespace {

void require_n(int n)
{
    if (n < 1)
        throw ArgumentError("n must be >= 1");
}

} // namespace

WeightGrid weight_grid(int n, unsigned threads)
{
    require_n(n);
    const PsiTable table(n);
    const std::vector<BigInteger> psi = psi_all_subsets(table, threads);

    WeightGrid grid;
    grid.n = n;
    grid.m = ambient_dim(n);
    const auto rows = static_cast<std::size_t>(n) + 1;
    const auto cols = static_cast<std::size_t>(grid.m) + 1;
    grid.by_length.assign(rows, std::vector<BigInteger>(cols));

    // Fixed chunk boundaries, partials reduced in chunk order.
    const std::size_t count = psi.size();
    const std::size_t full = count - 1;
    const std::size_t chunks = std::min<std::size_t>(count, 64);
    std::vector<std::vector<std::vector<BigInteger>>> partial(
        chunks, std::vector<std::vector<BigInteger>>(rows, std::vector<BigInteger>(cols)));

    parallel_chunks(0, count, chunks, threads, [&](std::size_t c, std::size_t lo, std::size_t hi) {
        auto& local = partial[c];
        for (std::size_t mask = lo; mask < hi; ++mask) {
            long weight = 0;
            for (std::size_t rest = mask; rest; rest &= rest - 1)
                weight += std::countr_zero(rest) + 1;
            local[std::popcount(mask)][weight] += psi[mask] * psi[full ^ mask];
        }
    });
    for (const auto& local : partial)
        for (std::size_t r = 0; r < rows; ++r)
            for (std::size_t d = 0; d < cols; ++d)
                grid.by_length[r][d] += local[r][d];
    return grid;
}

BigInteger delta(long d, int n, int r)
{
    require_n(n);
    if (r <= 0 || r >= n || d < 0 || d > ambient_dim(n))
        return 0;
    return weight_grid(n).by_length[n - r][d];
}

BigInteger beta(int n, long d)
{
    require_n(n);
    if (d < 0 || d > ambient_dim(n))
        return 0;
    return beta_vector(n)[d];
}

std::vector<BigInteger> beta_vector(int n, unsigned threads)
{
    const WeightGrid grid = weight_grid(n, threads);
    std::vector<BigInteger> out(grid.m + 1);
    for (const auto& row : grid.by_length)
        for (std::size_t d = 0; d < row.size(); ++d)
            out[d] += row[d];
    return out;
}

std::vector<BigInteger> c_sigma(int n, unsigned threads)
{
    const auto b = beta_vector(n, threads);
    return {b.begin() + 1, b.end() - 1};
}

std::vector<BigInteger> gamma_from_beta(const std::vector<BigInteger>& beta)
{
    if (beta.size() < 2)
        throw ArgumentError("beta vector needs at least two entries");
    std::vector<BigInteger> out(beta.size() - 1);
    BigInteger running = 0;
    for (std::size_t d = 0; d < out.size(); ++d) {
        // sum_{j=0}^{d} (-1)^j beta[d-j] = beta[d] - (previous sum)
        running = beta[d] - running;
        if (running <= 0)
            throw InvariantError("multidegree positivity violated at d = " + std::to_string(d));
        out[d] = running;
    }
    return out;
}

std::vector<BigInteger> c_gamma(int n, unsigned threads)
{
    return gamma_from_beta(beta_vector(n, threads));
}

MultidegreeTable multidegree_table(int n, unsigned threads)
{
    MultidegreeTable t;
    t.n = n;
    t.m = ambient_dim(n);
    t.beta = beta_vector(n, threads);
    t.gamma_degs = gamma_from_beta(t.beta);
    t.sigma_coeffs.assign(t.beta.begin() + 1, t.beta.end() - 1);
    return t;
}

bool IdentityReport::all_match() const
{
    for (bool b : match)
        if (!b)
            return false;
    return lhs.size() == rhs.size();
}

IdentityReport verify_identity(const MultidegreeTable& table)
{
    const long m = table.m;
    if (static_cast<long>(table.gamma_degs.size()) != m || static_cast<long>(table.beta.size()) != m + 1)
        throw ArgumentError("malformed multidegree table");

    // C(Gamma) = sum_{i+j=m-1} deg^{i,j} t1^(m-1-i) t2^(m-1-j). Indexed by the
    // t2 power e = m-1-j = i, the coefficient is deg^{e,m-1-e}, which is
    // gamma_degs[m-1-e].
    std::vector<BigInteger> c_gamma_poly(m);
    for (long e = 0; e < m; ++e)
        c_gamma_poly[e] = table.gamma_degs[m - 1 - e];

    IdentityReport report;
    report.n = table.n;
    report.m = m;
    report.lhs.assign(m + 1, 0);
    for (long e = 0; e < m; ++e) {
        report.lhs[e] += c_gamma_poly[e];     // t1 * t1^(m-1-e) t2^e
        report.lhs[e + 1] += c_gamma_poly[e]; // t2 * t1^(m-1-e) t2^e
    }
    // t1^m + t2^m + C(Sigma), assembled from its parts.
    report.rhs.assign(m + 1, 0);
    report.rhs[0] += 1;
    report.rhs[m] += 1;
    for (long d = 1; d < m; ++d)
        report.rhs[d] += table.sigma_coeffs[d - 1];
    report.match.resize(m + 1);
    for (long d = 0; d <= m; ++d)
        report.match[d] = report.lhs[d] == report.rhs[d];
    return report;
}

IdentityReport verify_identity(int n, unsigned threads)
{
    return verify_identity(multidegree_table(n, threads));
}

std::string latex_bivariate(const std::vector<BigInteger>& coeffs, long total_degree, long first_power)
{
    std::ostringstream out;
    bool first = true;
    auto power = [](const char* var, long e) {
        if (e == 0)
            return std::string();
        if (e == 1)
            return std::string(var);
        return std::string(var) + "^{" + std::to_string(e) + "}";
    };
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
        const BigInteger& c = coeffs[k];
        if (c == 0)
            continue;
        const long e2 = first_power + static_cast<long>(k);
        const long e1 = total_degree - e2;
        const std::string mono = power("t_1", e1) + power("t_2", e2);
        BigInteger mag = abs(c);
        if (first)
            out << (c < 0 ? "-" : "");
        else
            out << (c < 0 ? " - " : " + ");
        if (mag != 1 || mono.empty())
            out << mag.get_str();
        out << mono;
        first = false;
    }
    if (first)
        out << "0";
    return out.str();
}

} // namespace invdeg
