#include "invdeg/exact.hpp"

#include "invdeg/error.hpp"

#include <utility>

namespace invdeg {

BigInteger binomial(long a, long b)
{
    if (a < 0)
        throw ArgumentError("binomial requires a >= 0");
    if (b < 0 || b > a)
        return 0;
    BigInteger out;
    mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(a), static_cast<unsigned long>(b));
    return out;
}

// ---------------------------------------------------------------------------
// SkewMatrix

SkewMatrix::SkewMatrix(std::size_t size)
    : size_(size), upper_(size * (size > 0 ? size - 1 : 0) / 2)
{
}

std::size_t SkewMatrix::index(std::size_t i, std::size_t j) const noexcept
{
    // Row i of the strict upper triangle starts after i*(2*size - i - 1)/2 entries.
    return i * (2 * size_ - i - 1) / 2 + (j - i - 1);
}

SkewMatrix SkewMatrix::from_rows(const std::vector<std::vector<BigInteger>>& rows)
{
    const std::size_t k = rows.size();
    SkewMatrix out(k);
    for (std::size_t i = 0; i < k; ++i) {
        if (rows[i].size() != k)
            throw ArgumentError("skew matrix must be square");
        if (rows[i][i] != 0)
            throw ArgumentError("skew matrix must have zero diagonal");
    }
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = i + 1; j < k; ++j) {
            if (rows[i][j] != -rows[j][i])
                throw ArgumentError("matrix is not antisymmetric");
            out.set(i, j, rows[i][j]);
        }
    return out;
}

BigInteger SkewMatrix::at(std::size_t i, std::size_t j) const
{
    if (i == j)
        return 0;
    if (i < j)
        return upper_[index(i, j)];
    return -upper_[index(j, i)];
}

void SkewMatrix::set(std::size_t i, std::size_t j, const BigInteger& v)
{
    if (!(i < j && j < size_))
        throw ArgumentError("SkewMatrix::set requires i < j < size");
    upper_[index(i, j)] = v;
}

SkewMatrix SkewMatrix::swapped(std::size_t i, std::size_t j) const
{
    std::vector<std::size_t> perm(size_);
    for (std::size_t k = 0; k < size_; ++k)
        perm[k] = k;
    std::swap(perm[i], perm[j]);
    SkewMatrix out(size_);
    for (std::size_t r = 0; r < size_; ++r)
        for (std::size_t c = r + 1; c < size_; ++c)
            out.set(r, c, at(perm[r], perm[c]));
    return out;
}

SkewMatrix SkewMatrix::principal(const std::vector<std::size_t>& keep) const
{
    SkewMatrix out(keep.size());
    for (std::size_t r = 0; r < keep.size(); ++r)
        for (std::size_t c = r + 1; c < keep.size(); ++c)
            out.set(r, c, at(keep[r], keep[c]));
    return out;
}

// ---------------------------------------------------------------------------
// Pfaffians

BigInteger pfaffian(const SkewMatrix& a)
{
    const std::size_t k = a.size();
    if (k % 2 != 0)
        throw ArgumentError("pfaffian requires even dimension");
    if (k == 0)
        return 1;

    // Full rational copy; elimination keeps it antisymmetric.
    std::vector<BigRational> m(k * k);
    auto at = [&](std::size_t i, std::size_t j) -> BigRational& { return m[i * k + j]; };
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j)
            at(i, j) = a.at(i, j);

    BigRational result = 1;
    for (std::size_t p = 0; p + 1 < k; p += 2) {
        std::size_t pivot = k;
        for (std::size_t j = p + 1; j < k; ++j)
            if (sgn(at(p, j)) != 0) {
                pivot = j;
                break;
            }
        if (pivot == k)
            return 0;
        if (pivot != p + 1) {
            for (std::size_t r = 0; r < k; ++r)
                std::swap(at(r, p + 1), at(r, pivot));
            for (std::size_t c = 0; c < k; ++c)
                std::swap(at(p + 1, c), at(pivot, c));
            result = -result;
        }
        const BigRational piv = at(p, p + 1);
        result *= piv;
        // Schur complement of the leading 2x2 block:
        //   A'[i][j] = A[i][j] + (A[p+1][i] A[p][j] - A[p][i] A[p+1][j]) / piv
        for (std::size_t i = p + 2; i < k; ++i) {
            for (std::size_t j = i + 1; j < k; ++j) {
                BigRational v = at(i, j) + (at(p + 1, i) * at(p, j) - at(p, i) * at(p + 1, j)) / piv;
                at(i, j) = v;
                at(j, i) = -v;
            }
        }
    }
    if (result.get_den() != 1)
        throw InvariantError("pfaffian of an integer matrix came out fractional");
    return result.get_num();
}

namespace {

BigInteger pfaffian_expand(const SkewMatrix& a, std::vector<std::size_t>& idx)
{
    if (idx.empty())
        return 1;
    const std::size_t first = idx.front();
    BigInteger total = 0;
    for (std::size_t p = 1; p < idx.size(); ++p) {
        const BigInteger entry = a.at(first, idx[p]);
        if (entry == 0)
            continue;
        std::vector<std::size_t> rest;
        rest.reserve(idx.size() - 2);
        for (std::size_t q = 1; q < idx.size(); ++q)
            if (q != p)
                rest.push_back(idx[q]);
        BigInteger term = entry * pfaffian_expand(a, rest);
        if (p % 2 == 1)
            total += term;
        else
            total -= term;
    }
    return total;
}

} // namespace

BigInteger pfaffian_reference(const SkewMatrix& a)
{
    if (a.size() % 2 != 0)
        throw ArgumentError("pfaffian requires even dimension");
    std::vector<std::size_t> idx(a.size());
    for (std::size_t i = 0; i < idx.size(); ++i)
        idx[i] = i;
    return pfaffian_expand(a, idx);
}

// ---------------------------------------------------------------------------
// RationalMatrix

RationalMatrix::RationalMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols)
{
}

RationalMatrix RationalMatrix::identity(std::size_t n)
{
    RationalMatrix out(n, n);
    for (std::size_t i = 0; i < n; ++i)
        out(i, i) = 1;
    return out;
}

RationalMatrix RationalMatrix::transposed() const
{
    RationalMatrix out(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            out(j, i) = (*this)(i, j);
    return out;
}

bool RationalMatrix::is_symmetric() const
{
    if (rows_ != cols_)
        return false;
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = i + 1; j < cols_; ++j)
            if ((*this)(i, j) != (*this)(j, i))
                return false;
    return true;
}

bool RationalMatrix::is_zero() const
{
    for (const auto& v : data_)
        if (sgn(v) != 0)
            return false;
    return true;
}

RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b)
{
    if (a.cols_ != b.rows_)
        throw ArgumentError("matrix product size mismatch");
    RationalMatrix out(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const BigRational& lhs = a(i, k);
            if (sgn(lhs) == 0)
                continue;
            for (std::size_t j = 0; j < b.cols_; ++j)
                out(i, j) += lhs * b(k, j);
        }
    return out;
}

bool operator==(const RationalMatrix& a, const RationalMatrix& b)
{
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

namespace {

// Row-echelon form in place; returns (rank, sign of the row permutation).
std::pair<std::size_t, int> echelon(RationalMatrix& m)
{
    std::size_t row = 0;
    int sign = 1;
    for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
        std::size_t pivot = row;
        while (pivot < m.rows() && sgn(m(pivot, col)) == 0)
            ++pivot;
        if (pivot == m.rows())
            continue;
        if (pivot != row) {
            for (std::size_t c = 0; c < m.cols(); ++c)
                std::swap(m(row, c), m(pivot, c));
            sign = -sign;
        }
        for (std::size_t r = row + 1; r < m.rows(); ++r) {
            if (sgn(m(r, col)) == 0)
                continue;
            const BigRational factor = m(r, col) / m(row, col);
            for (std::size_t c = col; c < m.cols(); ++c)
                m(r, c) -= factor * m(row, c);
        }
        ++row;
    }
    return {row, sign};
}

} // namespace

BigRational determinant(const RationalMatrix& a)
{
    if (a.rows() != a.cols())
        throw ArgumentError("determinant requires a square matrix");
    RationalMatrix m = a;
    const auto [r, sign] = echelon(m);
    if (r < m.rows())
        return 0;
    BigRational det = sign;
    for (std::size_t i = 0; i < m.rows(); ++i)
        det *= m(i, i);
    return det;
}

std::size_t rank(const RationalMatrix& a)
{
    RationalMatrix m = a;
    return echelon(m).first;
}

RationalMatrix inverse(const RationalMatrix& a)
{
    const std::size_t n = a.rows();
    if (n != a.cols())
        throw ArgumentError("inverse requires a square matrix");
    RationalMatrix m = a;
    RationalMatrix inv = RationalMatrix::identity(n);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && sgn(m(pivot, col)) == 0)
            ++pivot;
        if (pivot == n)
            throw ArgumentError("matrix is singular");
        if (pivot != col)
            for (std::size_t c = 0; c < n; ++c) {
                std::swap(m(col, c), m(pivot, c));
                std::swap(inv(col, c), inv(pivot, c));
            }
        const BigRational scale = 1 / m(col, col);
        for (std::size_t c = 0; c < n; ++c) {
            m(col, c) *= scale;
            inv(col, c) *= scale;
        }
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col || sgn(m(r, col)) == 0)
                continue;
            const BigRational factor = m(r, col);
            for (std::size_t c = 0; c < n; ++c) {
                m(r, c) -= factor * m(col, c);
                inv(r, c) -= factor * inv(col, c);
            }
        }
    }
    return inv;
}

RationalMatrix adjugate(const RationalMatrix& a)
{
    const std::size_t n = a.rows();
    if (n != a.cols())
        throw ArgumentError("adjugate requires a square matrix");
    RationalMatrix out(n, n);
    if (n == 1) {
        out(0, 0) = 1;
        return out;
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            RationalMatrix minor(n - 1, n - 1);
            for (std::size_t r = 0, mr = 0; r < n; ++r) {
                if (r == j)
                    continue;
                for (std::size_t c = 0, mc = 0; c < n; ++c) {
                    if (c == i)
                        continue;
                    minor(mr, mc++) = a(r, c);
                }
                ++mr;
            }
            BigRational v = determinant(minor);
            out(i, j) = ((i + j) % 2 == 0) ? v : BigRational(-v);
        }
    return out;
}

std::string to_string(const BigInteger& v) { return v.get_str(); }

std::string to_string(const BigRational& v) { return v.get_str(); }

} // namespace invdeg
