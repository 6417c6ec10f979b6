#include "invdeg/mldegree.hpp"

#include "invdeg/error.hpp"
#include "invdeg/multidegree.hpp"

#include <sstream>

namespace invdeg {

namespace {

void require_d(long d)
{
    if (d < 1)
        throw ArgumentError("dimension d must be >= 1");
}

} // namespace

BigInteger ml_degree(int n, long d, unsigned threads)
{
    if (n < 1)
        throw ArgumentError("n must be >= 1");
    if (d < 1 || d > ambient_dim(n))
        throw ArgumentError("dimension d out of range for n");
    return c_gamma(n, threads)[d - 1];
}

std::vector<std::vector<BigInteger>> ml_table(int n_max, unsigned threads)
{
    if (n_max < 1)
        throw ArgumentError("n_max must be >= 1");
    std::vector<std::vector<BigInteger>> rows;
    rows.reserve(n_max);
    for (int n = 1; n <= n_max; ++n)
        rows.push_back(c_gamma(n, threads));
    return rows;
}

int anchor_n(long d)
{
    require_d(d);
    int n = 1;
    while (ambient_dim(n) < d)
        ++n;
    return n;
}

std::vector<BigRational> interpolate(const std::vector<BigRational>& xs, const std::vector<BigRational>& ys)
{
    if (xs.size() != ys.size() || xs.empty())
        throw ArgumentError("interpolate needs matching, non-empty samples");
    const std::size_t k = xs.size();
    std::vector<BigRational> out(k);
    for (std::size_t i = 0; i < k; ++i) {
        // Basis polynomial prod_{j != i} (x - x_j) / (x_i - x_j).
        std::vector<BigRational> basis{1};
        BigRational denom = 1;
        for (std::size_t j = 0; j < k; ++j) {
            if (j == i)
                continue;
            if (xs[i] == xs[j])
                throw ArgumentError("interpolation nodes must be distinct");
            std::vector<BigRational> next(basis.size() + 1);
            for (std::size_t p = 0; p < basis.size(); ++p) {
                next[p + 1] += basis[p];
                next[p] -= basis[p] * xs[j];
            }
            basis = std::move(next);
            denom *= xs[i] - xs[j];
        }
        const BigRational scale = ys[i] / denom;
        for (std::size_t p = 0; p < k; ++p)
            out[p] += basis[p] * scale;
    }
    return out;
}

std::vector<BigInteger> forward_differences(std::vector<BigInteger> values, long order)
{
    for (long o = 0; o < order && !values.empty(); ++o) {
        for (std::size_t i = 0; i + 1 < values.size(); ++i)
            values[i] = values[i + 1] - values[i];
        values.pop_back();
    }
    return values;
}

long MLPolynomial::degree() const
{
    for (long k = static_cast<long>(coeffs.size()) - 1; k >= 0; --k)
        if (sgn(coeffs[k]) != 0)
            return k;
    return -1;
}

BigRational MLPolynomial::evaluate(const BigRational& n) const
{
    BigRational acc = 0;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it)
        acc = acc * n + *it;
    return acc;
}

std::string MLPolynomial::to_string() const
{
    std::ostringstream out;
    bool first = true;
    for (long k = static_cast<long>(coeffs.size()) - 1; k >= 0; --k) {
        const BigRational& c = coeffs[k];
        if (sgn(c) == 0)
            continue;
        if (first)
            out << (sgn(c) < 0 ? "-" : "");
        else
            out << (sgn(c) < 0 ? " - " : " + ");
        const BigRational mag = abs(c);
        if (mag != 1 || k == 0) {
            out << mag.get_str();
            if (k > 0)
                out << ' ';
        }
        if (k == 1)
            out << 'n';
        else if (k > 1)
            out << "n^" << k;
        first = false;
    }
    if (first)
        out << '0';
    return out.str();
}

MLPolynomial ml_polynomial(long d, unsigned threads, int extra)
{
    require_d(d);
    MLPolynomial poly;
    poly.d = d;
    poly.sample_first = anchor_n(d);
    poly.sample_last = poly.sample_first + static_cast<int>(d) - 1;

    std::vector<BigRational> xs;
    std::vector<BigRational> ys;
    for (int n = poly.sample_first; n <= poly.sample_last; ++n) {
        xs.emplace_back(n);
        ys.emplace_back(ml_degree(n, d, threads));
    }
    poly.coeffs = interpolate(xs, ys);

    for (int k = 1; k <= extra; ++k) {
        const int n = poly.sample_last + k;
        const BigInteger expected = ml_degree(n, d, threads);
        if (poly.evaluate(BigRational(n)) != BigRational(expected))
            throw VerificationError("polynomiality violated: phi(" + std::to_string(n) + ", " +
                                    std::to_string(d) + ") = " + expected.get_str() +
                                    " but the fitted polynomial gives " +
                                    poly.evaluate(BigRational(n)).get_str());
        poly.validated_at.push_back(n);
    }
    if (poly.degree() != d - 1)
        throw VerificationError("polynomiality violated: fitted degree " + std::to_string(poly.degree()) +
                                " differs from " + std::to_string(d - 1));
    return poly;
}

bool FiniteDifferenceReport::all_vanish() const
{
    if (differences.empty())
        return false;
    for (const auto& v : differences)
        if (v != 0)
            return false;
    return true;
}

FiniteDifferenceReport finite_difference_check(long d, int window, unsigned threads)
{
    require_d(d);
    if (window < d + 1)
        throw ArgumentError("window must be at least d + 1");
    FiniteDifferenceReport report;
    report.d = d;
    report.first_n = anchor_n(d);
    for (int k = 0; k < window; ++k)
        report.values.push_back(ml_degree(report.first_n + k, d, threads));
    report.differences = forward_differences(report.values, d);
    return report;
}

} // namespace invdeg
