#pragma once

// Sparse polynomials over Z in the entries of two generic symmetric
// matrices X and Y, and the exact checks built on them: the generators of
// the ideal of the inverse-pair variety, their vanishing on (X, adj X), and
// witness points of the product-zero components.

#include "invdeg/exact.hpp"
#include "invdeg/random.hpp"

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace invdeg {

enum class Side : std::uint8_t { X = 0, Y = 1 };

/// Variable X_{i,j} or Y_{i,j}, 1-based, normalized to i <= j.
struct VarId {
    Side side = Side::X;
    int row = 1;
    int col = 1;

    static VarId make(Side side, int i, int j);

    std::string name() const;
    VarId swapped() const { return {side == Side::X ? Side::Y : Side::X, row, col}; }

    // Declaration order gives the X block before the Y block, row-major.
    friend auto operator<=>(const VarId&, const VarId&) = default;
};

/// Product of variable powers, stored sparsely in VarId order.
class Monomial {
public:
    Monomial() = default;
    explicit Monomial(VarId v);

    const std::vector<std::pair<VarId, unsigned>>& factors() const noexcept { return factors_; }
    unsigned degree() const noexcept;
    std::pair<unsigned, unsigned> bidegree() const noexcept;
    std::string to_string() const;
    Monomial swapped() const;

    friend Monomial operator*(const Monomial& a, const Monomial& b);
    friend bool operator==(const Monomial&, const Monomial&) = default;

private:
    std::vector<std::pair<VarId, unsigned>> factors_;
};

/// Graded lexicographic order: total degree first, then the exponent of
/// the earliest variable where the two differ.
struct GrlexLess {
    bool operator()(const Monomial& a, const Monomial& b) const;
};

class SparsePoly {
public:
    using Terms = std::map<Monomial, BigInteger, GrlexLess>;

    SparsePoly() = default;
    SparsePoly(long c);
    SparsePoly(const BigInteger& c);
    static SparsePoly variable(VarId v);

    const Terms& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    std::size_t size() const noexcept { return terms_.size(); }

    /// The single bidegree of all terms, or nullopt if the polynomial is
    /// zero or mixes bidegrees.
    std::optional<std::pair<unsigned, unsigned>> bidegree() const;

    /// X_{i,j} <-> Y_{i,j}.
    SparsePoly swapped() const;

    /// Multiplied by -1 if needed so the grlex-largest term is positive.
    SparsePoly sign_normalized() const;

    std::string to_string() const;

    SparsePoly& operator+=(const SparsePoly& o);
    SparsePoly& operator-=(const SparsePoly& o);
    SparsePoly& operator*=(const SparsePoly& o);

    friend SparsePoly operator+(SparsePoly a, const SparsePoly& b) { return a += b; }
    friend SparsePoly operator-(SparsePoly a, const SparsePoly& b) { return a -= b; }
    friend SparsePoly operator*(const SparsePoly& a, const SparsePoly& b);
    friend SparsePoly operator-(const SparsePoly& a);
    friend bool operator==(const SparsePoly&, const SparsePoly&) = default;

private:
    void add_term(const Monomial& m, const BigInteger& c);

    Terms terms_;
};

/// Replaces every variable by a polynomial. Missing variables throw.
SparsePoly substitute(const SparsePoly& p, const std::map<VarId, SparsePoly>& assignment);

/// Evaluates at rational values. Missing variables throw.
BigRational evaluate(const SparsePoly& p, const std::map<VarId, BigRational>& assignment);

/// Square matrix of polynomials.
class SymbolicMatrix {
public:
    SymbolicMatrix() = default;
    explicit SymbolicMatrix(int n);

    static SymbolicMatrix generic_symmetric(int n, Side side);
    static SymbolicMatrix identity(int n);

    int size() const noexcept { return n_; }
    SparsePoly& operator()(int i, int j) { return entries_[index(i, j)]; }
    const SparsePoly& operator()(int i, int j) const { return entries_[index(i, j)]; }

    bool is_symmetric() const;
    SymbolicMatrix scaled(const SparsePoly& s) const;

    friend bool operator==(const SymbolicMatrix&, const SymbolicMatrix&) = default;

private:
    std::size_t index(int i, int j) const { return static_cast<std::size_t>(i) * n_ + j; }

    int n_ = 0;
    std::vector<SparsePoly> entries_;
};

SymbolicMatrix generic_sym_matrix(int n, Side side);
SymbolicMatrix mat_mul(const SymbolicMatrix& a, const SymbolicMatrix& b);

/// Division-free determinant by dynamic programming over column subsets.
SparsePoly det_sym(const SymbolicMatrix& a);

/// Signed (n-1)-minors laid out so that a * adjugate_sym(a) = det(a) * Id.
SymbolicMatrix adjugate_sym(const SymbolicMatrix& a);

/// Off-diagonal entries (XY)_{i,j}, i != j, row-major, then consecutive
/// diagonal differences (XY)_{i,i} - (XY)_{i+1,i+1}.
std::vector<SparsePoly> generators_J(int n);

/// All n^2 entries of XY, row-major.
std::vector<SparsePoly> generators_I1XY(int n);

/// (XY)_{1,1}.
SparsePoly b_element(int n);

/// Rank of the span of bidegree-homogeneous polynomials, via exact
/// elimination on their coefficient vectors.
std::size_t span_rank(const std::vector<SparsePoly>& polys);

/// Symmetric rational matrix.
class RationalSymMatrix {
public:
    RationalSymMatrix() = default;
    explicit RationalSymMatrix(RationalMatrix m);

    int size() const noexcept { return static_cast<int>(m_.rows()); }
    const RationalMatrix& matrix() const noexcept { return m_; }
    const BigRational& operator()(int i, int j) const { return m_(i, j); }

private:
    RationalMatrix m_;
};

/// Assignment X -> m (and optionally Y -> y) for evaluate().
std::map<VarId, BigRational> point_assignment(const RationalSymMatrix& x, const RationalSymMatrix& y);

/// Random integer symmetric matrix with entries in [-10, 10] and nonzero
/// determinant.
RationalSymMatrix random_invertible_symmetric(int n, SeededRng& rng);

enum class VerifyMode { Symbolic, Numeric };

struct GraphVanishingReport {
    int n = 0;
    VerifyMode mode = VerifyMode::Symbolic;
    std::size_t generators = 0;
    int trials = 0;
};

/// Substitutes Y -> adj(X) into every generator of J, symbolically (n at
/// most `symbolic_cap`) or at `trials` random integer points. A nonzero
/// residual throws VerificationError naming the generator.
GraphVanishingReport verify_graph_vanishing(int n, VerifyMode mode, int trials, std::uint64_t seed,
                                            int symbolic_cap = 4);

struct WitnessPair {
    RationalSymMatrix m;
    RationalSymMatrix n;
};

/// Symmetric (M, N) with M N = 0, rank M = r, rank N = n - r:
/// M = A diag(d_1..d_r, 0..0) A^T and N = A^-T diag(0..0, e_1..e_{n-r}) A^-1.
WitnessPair witness_rank_pair(int n, int r, std::uint64_t seed);

struct WitnessCheck {
    bool generators_vanish = false;
    std::size_t rank_m = 0;
    std::size_t rank_n = 0;

    bool ok(int n, int r) const
    {
        return generators_vanish && rank_m == static_cast<std::size_t>(r) &&
               rank_n == static_cast<std::size_t>(n - r);
    }
};

WitnessCheck check_witness(const WitnessPair& w);

struct Check {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct VerifyOptions {
    int n = 1;
    VerifyMode mode = VerifyMode::Symbolic;
    int trials = 20;
    std::uint64_t seed = 0;
    int symbolic_cap = 4;
};

/// Graph vanishing, adjugate identity, generator bidegrees, swap symmetry,
/// the degree-(1,1) span identity J + (b) = I1(XY), and witness points for
/// every 0 <= r <= n. Runs sequentially in a fixed order.
std::vector<Check> run_verification(const VerifyOptions& options);

} // namespace invdeg
