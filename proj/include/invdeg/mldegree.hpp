#pragma once

// ML-degree phi(n, d) of the general linear concentration model, read off
// as the multidegree deg^{m-d,d-1} of the inverse-pair variety, and its
// polynomial dependence on n for fixed d.

#include "invdeg/exact.hpp"

#include <string>
#include <vector>

namespace invdeg {

/// phi(n, d) for 1 <= d <= m(n); ArgumentError otherwise.
BigInteger ml_degree(int n, long d, unsigned threads = 1);

/// Row n - 1 holds phi(n, 1..m(n)) for n = 1..n_max.
std::vector<std::vector<BigInteger>> ml_table(int n_max, unsigned threads = 1);

/// Smallest n with n(n+1)/2 >= d.
int anchor_n(long d);

/// Unique polynomial of degree < points.size() through (x_k, y_k), in the
/// monomial basis, lowest degree first. Exact Lagrange interpolation.
std::vector<BigRational> interpolate(const std::vector<BigRational>& xs, const std::vector<BigRational>& ys);

/// k-th forward differences of a sequence.
std::vector<BigInteger> forward_differences(std::vector<BigInteger> values, long order);

struct MLPolynomial {
    long d = 0;
    std::vector<BigRational> coeffs; // in n, lowest degree first
    int sample_first = 0;            // fit used n = sample_first..sample_last
    int sample_last = 0;
    std::vector<int> validated_at;   // extra n values checked exactly

    long degree() const;
    BigRational evaluate(const BigRational& n) const;
    /// Human-readable form in the variable n, e.g. "n - 1" or "1/2 n^2 + 1".
    std::string to_string() const;
};

/// Fits phi(., d) through d samples starting at anchor_n(d) and checks
/// `extra` further samples. Throws VerificationError ("polynomiality
/// violated") on any mismatch or if the degree is not d - 1.
MLPolynomial ml_polynomial(long d, unsigned threads = 1, int extra = 3);

struct FiniteDifferenceReport {
    long d = 0;
    int first_n = 0;
    std::vector<BigInteger> values;      // phi(first_n + k, d)
    std::vector<BigInteger> differences; // d-th forward differences

    bool all_vanish() const;
};

/// d-th forward differences of n -> phi(n, d) over `window` consecutive n
/// starting at anchor_n(d). Requires window >= d + 1.
FiniteDifferenceReport finite_difference_check(long d, int window, unsigned threads = 1);

} // namespace invdeg
