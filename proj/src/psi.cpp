#include "invdeg/psi.hpp"

#include "invdeg/error.hpp"
#include "invdeg/parallel.hpp"

#include <bit>
#include <numeric>
#include <string>

namespace invdeg {

Subsequence::Subsequence(std::vector<int> entries, int n)
    : entries_(std::move(entries)), n_(n)
{
    if (n < 0)
        throw ArgumentError("subsequence bound must be non-negative");
    for (std::size_t k = 0; k < entries_.size(); ++k) {
        if (entries_[k] < 1 || entries_[k] > n)
            throw ArgumentError("subsequence entry " + std::to_string(entries_[k]) + " outside 1.." +
                                std::to_string(n));
        if (k > 0 && entries_[k] <= entries_[k - 1])
            throw ArgumentError("subsequence must be strictly increasing");
    }
}

Subsequence Subsequence::from_mask(std::uint64_t mask, int n)
{
    if (n < 0 || n > 63)
        throw ArgumentError("mask subsequences support 0 <= n <= 63");
    if (n < 64 && (mask >> n) != 0)
        throw ArgumentError("mask has bits beyond n");
    std::vector<int> entries;
    for (int i = 0; i < n; ++i)
        if (mask >> i & 1u)
            entries.push_back(i + 1);
    return Subsequence(std::move(entries), n);
}

Subsequence Subsequence::full(int n)
{
    std::vector<int> entries(static_cast<std::size_t>(std::max(n, 0)));
    std::iota(entries.begin(), entries.end(), 1);
    return Subsequence(std::move(entries), n);
}

long Subsequence::weight() const noexcept
{
    return std::accumulate(entries_.begin(), entries_.end(), 0L);
}

Subsequence Subsequence::complement() const
{
    std::vector<int> rest;
    std::size_t k = 0;
    for (int i = 1; i <= n_; ++i) {
        if (k < entries_.size() && entries_[k] == i)
            ++k;
        else
            rest.push_back(i);
    }
    return Subsequence(std::move(rest), n_);
}

std::uint64_t Subsequence::mask() const
{
    if (n_ > 63)
        throw ArgumentError("mask requires n <= 63");
    std::uint64_t m = 0;
    for (int e : entries_)
        m |= std::uint64_t{1} << (e - 1);
    return m;
}

// ---------------------------------------------------------------------------

BigInteger psi_single(int i)
{
    if (i < 1)
        throw ArgumentError("psi_single requires i >= 1");
    BigInteger out;
    mpz_ui_pow_ui(out.get_mpz_t(), 2, static_cast<unsigned long>(i - 1));
    return out;
}

BigInteger psi_pair(int i, int j)
{
    if (i < 1)
        throw ArgumentError("psi_pair requires i >= 1");
    if (i >= j)
        throw ArgumentError("psi_pair requires i < j");
    BigInteger sum = 0;
    for (int k = i; k <= j - 1; ++k)
        sum += binomial(i + j - 2, k);
    return sum;
}

PsiTable::PsiTable(int n)
    : n_(n)
{
    if (n < 0)
        throw ArgumentError("PsiTable requires n >= 0");
    const auto size = static_cast<std::size_t>(n);
    singles_.resize(size);
    pairs_.resize(size * size);
    for (int i = 1; i <= n; ++i) {
        singles_[i - 1] = psi_single(i);
        for (int j = i + 1; j <= n; ++j)
            pairs_[(i - 1) * size + (j - 1)] = psi_pair(i, j);
    }
}

const BigInteger& PsiTable::single(int i) const
{
    if (i < 1 || i > n_)
        throw ArgumentError("psi index " + std::to_string(i) + " outside table");
    return singles_[i - 1];
}

const BigInteger& PsiTable::pair(int i, int j) const
{
    if (i < 1 || j > n_)
        throw ArgumentError("psi pair index outside table");
    if (i >= j)
        throw ArgumentError("psi_pair requires i < j");
    return pairs_[(i - 1) * static_cast<std::size_t>(n_) + (j - 1)];
}

SkewMatrix psi_matrix(const Subsequence& alpha, const PsiTable& table)
{
    if (alpha.max_entry() > table.n())
        throw ArgumentError("subsequence entry exceeds psi table bound");
    const auto& a = alpha.entries();
    const std::size_t r = a.size();
    const std::size_t border = r % 2;
    SkewMatrix m(r + border);
    for (std::size_t k = 0; k < r; ++k) {
        if (border)
            m.set(0, k + 1, table.single(a[k]));
        for (std::size_t l = k + 1; l < r; ++l)
            m.set(k + border, l + border, table.pair(a[k], a[l]));
    }
    return m;
}

BigInteger psi_seq(const Subsequence& alpha, const PsiTable& table)
{
    if (alpha.empty())
        return 1;
    return pfaffian(psi_matrix(alpha, table));
}

BigInteger p_alpha(const Subsequence& alpha, int n)
{
    if (n < 0)
        throw ArgumentError("p_alpha requires n >= 0");
    if (alpha.max_entry() > n)
        return 0;
    const Subsequence inside(alpha.entries(), n);
    return psi_seq(inside.complement(), PsiTable(n));
}

std::vector<BigInteger> psi_all_subsets(const PsiTable& table, unsigned threads)
{
    const int n = table.n();
    if (n > 30)
        throw ArgumentError("subset enumeration supports n <= 30");
    const std::size_t count = std::size_t{1} << n;
    std::vector<BigInteger> psi(count);
    psi[0] = 1;
    const std::size_t chunks = std::min<std::size_t>(count, 256);

    for (int layer = 1; layer <= n; ++layer) {
        parallel_chunks(0, count, chunks, threads, [&](std::size_t, std::size_t lo, std::size_t hi) {
            BigInteger acc;
            BigInteger term;
            for (std::size_t mask = lo; mask < hi; ++mask) {
                if (std::popcount(mask) != layer)
                    continue;
                acc = 0;
                if (layer % 2 == 0) {
                    const int s = std::countr_zero(mask);
                    const std::size_t without_s = mask & (mask - 1);
                    std::size_t rest = without_s;
                    int pos = 1;
                    while (rest) {
                        const int t = std::countr_zero(rest);
                        rest &= rest - 1;
                        const std::size_t sub = without_s & ~(std::size_t{1} << t);
                        term = table.pair(s + 1, t + 1) * psi[sub];
                        if (pos % 2 == 1)
                            acc += term;
                        else
                            acc -= term;
                        ++pos;
                    }
                } else {
                    std::size_t rest = mask;
                    int pos = 0;
                    while (rest) {
                        const int t = std::countr_zero(rest);
                        rest &= rest - 1;
                        const std::size_t sub = mask & ~(std::size_t{1} << t);
                        term = table.single(t + 1) * psi[sub];
                        if (pos % 2 == 0)
                            acc += term;
                        else
                            acc -= term;
                        ++pos;
                    }
                }
                psi[mask] = acc;
            }
        });
    }
    return psi;
}

} // namespace invdeg
