#pragma once

// Exact integer/rational arithmetic and Pfaffians.
//
// BigInteger and BigRational are GMP's C++ classes; mpq_class keeps values
// canonical (lowest terms, positive denominator) as long as every mutation
// goes through its operators.

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <vector>

namespace invdeg {

using BigInteger = mpz_class;
using BigRational = mpq_class;

/// C(a, b) for a >= 0; zero when b < 0 or b > a.
BigInteger binomial(long a, long b);

/// Square antisymmetric matrix of BigIntegers. Only the strict upper
/// triangle is stored; the rest is implied by A[j][i] = -A[i][j].
class SkewMatrix {
public:
    SkewMatrix() = default;
    explicit SkewMatrix(std::size_t size);

    /// Builds from a full grid, rejecting anything that is not square and
    /// antisymmetric with zero diagonal.
    static SkewMatrix from_rows(const std::vector<std::vector<BigInteger>>& rows);

    std::size_t size() const noexcept { return size_; }

    BigInteger at(std::size_t i, std::size_t j) const;

    /// Sets A[i][j] = v and A[j][i] = -v. Requires i < j.
    void set(std::size_t i, std::size_t j, const BigInteger& v);

    /// Simultaneous swap of rows i, j and columns i, j.
    SkewMatrix swapped(std::size_t i, std::size_t j) const;

    /// Principal submatrix on the given (sorted, distinct) indices.
    SkewMatrix principal(const std::vector<std::size_t>& keep) const;

private:
    std::size_t index(std::size_t i, std::size_t j) const noexcept;

    std::size_t size_ = 0;
    std::vector<BigInteger> upper_;
};

/// Pfaffian by skew-symmetric elimination over the rationals. The result
/// of an integer matrix is integral; a fractional remainder is reported as
/// an InvariantError. Odd size throws ArgumentError.
BigInteger pfaffian(const SkewMatrix& a);

/// Pfaffian by recursive expansion along the first row. Exponential cost;
/// kept as an independent oracle for tests.
BigInteger pfaffian_reference(const SkewMatrix& a);

/// Dense square rational matrix in row-major order.
class RationalMatrix {
public:
    RationalMatrix() = default;
    RationalMatrix(std::size_t rows, std::size_t cols);

    static RationalMatrix identity(std::size_t n);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    BigRational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const BigRational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    RationalMatrix transposed() const;
    bool is_symmetric() const;
    bool is_zero() const;

    friend RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b);
    friend bool operator==(const RationalMatrix& a, const RationalMatrix& b);

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<BigRational> data_;
};

BigRational determinant(const RationalMatrix& a);
std::size_t rank(const RationalMatrix& a);

/// Inverse by Gauss-Jordan elimination; throws ArgumentError if singular.
RationalMatrix inverse(const RationalMatrix& a);

/// Classical adjugate: entry (i, j) is the signed minor of a with row j and
/// column i removed, so a * adjugate(a) = det(a) * Id.
RationalMatrix adjugate(const RationalMatrix& a);

std::string to_string(const BigInteger& v);
std::string to_string(const BigRational& v);

} // namespace invdeg
