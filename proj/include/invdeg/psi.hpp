#pragma once

// psi_i = 2^(i-1), psi_{i,j} = sum_{k=i}^{j-1} C(i+j-2, k) for i < j, and
// psi_alpha for a strictly increasing alpha as a Pfaffian of those values.

#include "invdeg/exact.hpp"

#include <cstdint>
#include <vector>

namespace invdeg {

/// Strictly increasing subsequence of {1, ..., n}. May be empty.
class Subsequence {
public:
    Subsequence() = default;
    Subsequence(std::vector<int> entries, int n);

    /// Bit i of `mask` selects element i + 1. Requires n <= 63.
    static Subsequence from_mask(std::uint64_t mask, int n);
    static Subsequence full(int n);

    const std::vector<int>& entries() const noexcept { return entries_; }
    int ambient() const noexcept { return n_; }
    std::size_t length() const noexcept { return entries_.size(); }
    long weight() const noexcept;
    bool empty() const noexcept { return entries_.empty(); }
    int max_entry() const noexcept { return entries_.empty() ? 0 : entries_.back(); }

    /// {1, ..., n} minus this subsequence.
    Subsequence complement() const;
    std::uint64_t mask() const;

    friend bool operator==(const Subsequence&, const Subsequence&) = default;

private:
    std::vector<int> entries_;
    int n_ = 0;
};

/// psi_1..psi_n and psi_{i,j} for 1 <= i < j <= n, built once.
class PsiTable {
public:
    explicit PsiTable(int n);

    int n() const noexcept { return n_; }
    const BigInteger& single(int i) const;
    const BigInteger& pair(int i, int j) const;

private:
    int n_;
    std::vector<BigInteger> singles_;
    std::vector<BigInteger> pairs_; // n x n, row-major, upper triangle used
};

BigInteger psi_single(int i);
BigInteger psi_pair(int i, int j);

/// The skew matrix whose Pfaffian is psi_alpha: entries psi_{a_k, a_l} for
/// even length, bordered by a leading row of psi_{a_k} for odd length.
SkewMatrix psi_matrix(const Subsequence& alpha, const PsiTable& table);

/// psi_alpha, with psi of the empty sequence equal to 1.
BigInteger psi_seq(const Subsequence& alpha, const PsiTable& table);

/// P_alpha(n): psi of {1..n} minus alpha when alpha fits in {1..n}, else 0.
BigInteger p_alpha(const Subsequence& alpha, int n);

/// psi of every subset of {1, ..., table.n()}, indexed by bitmask.
///
/// Uses first-row Pfaffian expansion shared across subsets: for an even
/// subset S with least element s,
///   psi_S = sum_{t in S, t != s} (-1)^(pos(t)-1) psi_{s,t} psi_{S - {s,t}},
/// and for an odd subset (bordered matrix)
///   psi_S = sum_{t in S} (-1)^pos(t) psi_t psi_{S - {t}},
/// with pos counted from 0 within S. Layers of equal size are filled in
/// parallel; the result does not depend on the thread count.
std::vector<BigInteger> psi_all_subsets(const PsiTable& table, unsigned threads = 1);

} // namespace invdeg
