#pragma once

// Multidegrees of the inverse-pair variety Gamma and the product-zero
// variety Sigma of symmetric n x n matrices, with m = n(n+1)/2.
//
//   beta(n, d)        = sum over alpha in {1..n}, |alpha|_1 = d, of psi_alpha psi_{alpha^c}
//   delta(d, n, r)    = same sum restricted to alpha of length n - r, 0 < r < n
//   deg^{m-1-d,d}     = sum_{j=0}^{d} (-1)^j beta(n, d - j)
//   t1^m + t2^m + C(Sigma) = sum_d beta(n, d) t1^(m-d) t2^d = (t1 + t2) C(Gamma)

#include "invdeg/exact.hpp"

#include <string>
#include <vector>

namespace invdeg {

constexpr long ambient_dim(int n) noexcept { return static_cast<long>(n) * (n + 1) / 2; }

/// For fixed n: grid[len][d] = sum of psi_alpha psi_{alpha^c} over alpha of
/// length `len` and weight d. Row sums over len give beta; row n - r gives
/// delta(., n, r).
struct WeightGrid {
    int n = 0;
    long m = 0;
    std::vector<std::vector<BigInteger>> by_length; // (n + 1) x (m + 1)
};

/// Fast route: shared subset Pfaffian recursion plus a chunked reduction.
WeightGrid weight_grid(int n, unsigned threads = 1);

BigInteger delta(long d, int n, int r);
BigInteger beta(int n, long d);

/// beta(n, 0..m).
std::vector<BigInteger> beta_vector(int n, unsigned threads = 1);

/// Interior coefficients of C(Sigma): beta(n, d) for d = 1..m-1.
std::vector<BigInteger> c_sigma(int n, unsigned threads = 1);

/// deg^{m-1-d,d}(Gamma) for d = 0..m-1. Throws InvariantError
/// ("multidegree positivity violated") on a nonpositive entry.
std::vector<BigInteger> c_gamma(int n, unsigned threads = 1);

/// Alternating partial sums of a beta vector, with the positivity check.
std::vector<BigInteger> gamma_from_beta(const std::vector<BigInteger>& beta);

struct MultidegreeTable {
    int n = 0;
    long m = 0;
    std::vector<BigInteger> beta;         // d = 0..m
    std::vector<BigInteger> gamma_degs;   // d = 0..m-1
    std::vector<BigInteger> sigma_coeffs; // d = 1..m-1
};

MultidegreeTable multidegree_table(int n, unsigned threads = 1);

/// Coefficientwise comparison of (t1 + t2) C(Gamma) with
/// t1^m + t2^m + C(Sigma), both indexed by the power d of t2.
struct IdentityReport {
    int n = 0;
    long m = 0;
    std::vector<BigInteger> lhs; // (t1 + t2) C(Gamma)
    std::vector<BigInteger> rhs; // beta
    std::vector<bool> match;

    bool all_match() const;
};

IdentityReport verify_identity(const MultidegreeTable& table);
IdentityReport verify_identity(int n, unsigned threads = 1);

/// Renders sum_d c[d] t1^(deg-d) t2^d in LaTeX, e.g.
/// "t_1^{3} + 2t_1^{2}t_2 + 2t_1t_2^{2} + t_2^{3}".
std::string latex_bivariate(const std::vector<BigInteger>& coeffs, long total_degree, long first_power = 0);

} // namespace invdeg
