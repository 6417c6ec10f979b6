#include "invdeg/symbolic.hpp"

#include "invdeg/error.hpp"

#include <bit>
#include <functional>
#include <set>
#include <sstream>

namespace invdeg {

// ---------------------------------------------------------------------------
// Variables and monomials

VarId VarId::make(Side side, int i, int j)
{
    if (i < 1 || j < 1)
        throw ArgumentError("variable indices are 1-based");
    if (i > j)
        std::swap(i, j);
    return {side, i, j};
}

std::string VarId::name() const
{
    const char* prefix = side == Side::X ? "X" : "Y";
    if (row < 10 && col < 10)
        return prefix + std::to_string(row) + std::to_string(col);
    return std::string(prefix) + "_{" + std::to_string(row) + "," + std::to_string(col) + "}";
}

Monomial::Monomial(VarId v)
    : factors_{{v, 1u}}
{
}

unsigned Monomial::degree() const noexcept
{
    unsigned d = 0;
    for (const auto& [v, e] : factors_)
        d += e;
    return d;
}

std::pair<unsigned, unsigned> Monomial::bidegree() const noexcept
{
    std::pair<unsigned, unsigned> out{0, 0};
    for (const auto& [v, e] : factors_)
        (v.side == Side::X ? out.first : out.second) += e;
    return out;
}

std::string Monomial::to_string() const
{
    std::string out;
    for (const auto& [v, e] : factors_) {
        if (!out.empty())
            out += '*';
        out += v.name();
        if (e > 1)
            out += '^' + std::to_string(e);
    }
    return out;
}

Monomial Monomial::swapped() const
{
    // Swapping sides reorders factors, so rebuild through the product.
    Monomial out;
    for (const auto& [v, e] : factors_)
        for (unsigned k = 0; k < e; ++k)
            out = out * Monomial(v.swapped());
    return out;
}

Monomial operator*(const Monomial& a, const Monomial& b)
{
    Monomial out;
    auto& f = out.factors_;
    f.reserve(a.factors_.size() + b.factors_.size());
    auto ia = a.factors_.begin();
    auto ib = b.factors_.begin();
    while (ia != a.factors_.end() || ib != b.factors_.end()) {
        if (ib == b.factors_.end() || (ia != a.factors_.end() && ia->first < ib->first)) {
            f.push_back(*ia++);
        } else if (ia == a.factors_.end() || ib->first < ia->first) {
            f.push_back(*ib++);
        } else {
            f.emplace_back(ia->first, ia->second + ib->second);
            ++ia;
            ++ib;
        }
    }
    return out;
}

bool GrlexLess::operator()(const Monomial& a, const Monomial& b) const
{
    const unsigned da = a.degree();
    const unsigned db = b.degree();
    if (da != db)
        return da < db;
    const auto& fa = a.factors();
    const auto& fb = b.factors();
    std::size_t i = 0;
    for (; i < fa.size() && i < fb.size(); ++i) {
        if (fa[i].first != fb[i].first)
            return fb[i].first < fa[i].first; // b has an earlier variable
        if (fa[i].second != fb[i].second)
            return fa[i].second < fb[i].second;
    }
    return i == fa.size() && i < fb.size();
}

// ---------------------------------------------------------------------------
// SparsePoly

SparsePoly::SparsePoly(long c)
    : SparsePoly(BigInteger(c))
{
}

SparsePoly::SparsePoly(const BigInteger& c)
{
    if (c != 0)
        terms_.emplace(Monomial{}, c);
}

SparsePoly SparsePoly::variable(VarId v)
{
    SparsePoly p;
    p.terms_.emplace(Monomial(v), 1);
    return p;
}

void SparsePoly::add_term(const Monomial& m, const BigInteger& c)
{
    if (c == 0)
        return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0)
            terms_.erase(it);
    }
}

std::optional<std::pair<unsigned, unsigned>> SparsePoly::bidegree() const
{
    if (terms_.empty())
        return std::nullopt;
    const auto first = terms_.begin()->first.bidegree();
    for (const auto& [m, c] : terms_)
        if (m.bidegree() != first)
            return std::nullopt;
    return first;
}

SparsePoly SparsePoly::swapped() const
{
    SparsePoly out;
    for (const auto& [m, c] : terms_)
        out.add_term(m.swapped(), c);
    return out;
}

SparsePoly SparsePoly::sign_normalized() const
{
    if (!terms_.empty() && terms_.rbegin()->second < 0)
        return -*this;
    return *this;
}

std::string SparsePoly::to_string() const
{
    if (terms_.empty())
        return "0";
    std::ostringstream out;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [m, c] = *it;
        if (first)
            out << (c < 0 ? "-" : "");
        else
            out << (c < 0 ? " - " : " + ");
        const BigInteger mag = abs(c);
        const std::string mono = m.to_string();
        if (mono.empty())
            out << mag.get_str();
        else if (mag == 1)
            out << mono;
        else
            out << mag.get_str() << '*' << mono;
        first = false;
    }
    return out.str();
}

SparsePoly& SparsePoly::operator+=(const SparsePoly& o)
{
    for (const auto& [m, c] : o.terms_)
        add_term(m, c);
    return *this;
}

SparsePoly& SparsePoly::operator-=(const SparsePoly& o)
{
    for (const auto& [m, c] : o.terms_)
        add_term(m, -c);
    return *this;
}

SparsePoly& SparsePoly::operator*=(const SparsePoly& o)
{
    *this = *this * o;
    return *this;
}

SparsePoly operator*(const SparsePoly& a, const SparsePoly& b)
{
    SparsePoly out;
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_)
            out.add_term(ma * mb, ca * cb);
    return out;
}

SparsePoly operator-(const SparsePoly& a)
{
    SparsePoly out;
    for (const auto& [m, c] : a.terms_)
        out.terms_.emplace(m, -c);
    return out;
}

SparsePoly substitute(const SparsePoly& p, const std::map<VarId, SparsePoly>& assignment)
{
    SparsePoly out;
    for (const auto& [m, c] : p.terms()) {
        SparsePoly term(c);
        for (const auto& [v, e] : m.factors()) {
            auto it = assignment.find(v);
            if (it == assignment.end())
                throw ArgumentError("no value assigned to variable " + v.name());
            for (unsigned k = 0; k < e; ++k)
                term *= it->second;
        }
        out += term;
    }
    return out;
}

BigRational evaluate(const SparsePoly& p, const std::map<VarId, BigRational>& assignment)
{
    BigRational out = 0;
    for (const auto& [m, c] : p.terms()) {
        BigRational term(c);
        for (const auto& [v, e] : m.factors()) {
            auto it = assignment.find(v);
            if (it == assignment.end())
                throw ArgumentError("no value assigned to variable " + v.name());
            for (unsigned k = 0; k < e; ++k)
                term *= it->second;
        }
        out += term;
    }
    return out;
}

// ---------------------------------------------------------------------------
// Symbolic matrices

SymbolicMatrix::SymbolicMatrix(int n)
    : n_(n), entries_(static_cast<std::size_t>(n) * n)
{
    if (n < 0)
        throw ArgumentError("matrix size must be non-negative");
}

SymbolicMatrix SymbolicMatrix::generic_symmetric(int n, Side side)
{
    if (n < 1)
        throw ArgumentError("n must be >= 1");
    SymbolicMatrix out(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            out(i, j) = SparsePoly::variable(VarId::make(side, i + 1, j + 1));
    return out;
}

SymbolicMatrix SymbolicMatrix::identity(int n)
{
    SymbolicMatrix out(n);
    for (int i = 0; i < n; ++i)
        out(i, i) = SparsePoly(1);
    return out;
}

bool SymbolicMatrix::is_symmetric() const
{
    for (int i = 0; i < n_; ++i)
        for (int j = i + 1; j < n_; ++j)
            if ((*this)(i, j) != (*this)(j, i))
                return false;
    return true;
}

SymbolicMatrix SymbolicMatrix::scaled(const SparsePoly& s) const
{
    SymbolicMatrix out(n_);
    for (std::size_t k = 0; k < entries_.size(); ++k)
        out.entries_[k] = entries_[k] * s;
    return out;
}

SymbolicMatrix generic_sym_matrix(int n, Side side) { return SymbolicMatrix::generic_symmetric(n, side); }

SymbolicMatrix mat_mul(const SymbolicMatrix& a, const SymbolicMatrix& b)
{
    if (a.size() != b.size())
        throw ArgumentError("matrix product size mismatch");
    const int n = a.size();
    SymbolicMatrix out(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                out(i, j) += a(i, k) * b(k, j);
    return out;
}

namespace {

// minors[S] = det of the submatrix on `rows` (first |S| of them) and the
// columns in S. Laplace expansion along the newest row, no division.
std::vector<SparsePoly> column_subset_minors(const SymbolicMatrix& a, const std::vector<int>& rows)
{
    const int n = a.size();
    if (n > 20)
        throw ArgumentError("symbolic determinant supports n <= 20");
    const std::size_t count = std::size_t{1} << n;
    std::vector<SparsePoly> minors(count);
    minors[0] = SparsePoly(1);
    for (std::size_t k = 0; k < rows.size(); ++k) {
        const int row = rows[k];
        for (std::size_t mask = 0; mask < count; ++mask) {
            if (static_cast<std::size_t>(std::popcount(mask)) != k + 1)
                continue;
            SparsePoly acc;
            int above = 0; // set columns greater than the current one
            for (int j = n - 1; j >= 0; --j) {
                if (!(mask >> j & 1u))
                    continue;
                const SparsePoly& entry = a(row, j);
                if (!entry.is_zero()) {
                    SparsePoly term = entry * minors[mask & ~(std::size_t{1} << j)];
                    if (above % 2 == 0)
                        acc += term;
                    else
                        acc -= term;
                }
                ++above;
            }
            minors[mask] = std::move(acc);
        }
    }
    return minors;
}

} // namespace

SparsePoly det_sym(const SymbolicMatrix& a)
{
    const int n = a.size();
    if (n == 0)
        return SparsePoly(1);
    std::vector<int> rows(n);
    for (int i = 0; i < n; ++i)
        rows[i] = i;
    return column_subset_minors(a, rows)[(std::size_t{1} << n) - 1];
}

SymbolicMatrix adjugate_sym(const SymbolicMatrix& a)
{
    const int n = a.size();
    if (n < 1)
        throw ArgumentError("adjugate requires n >= 1");
    SymbolicMatrix out(n);
    const std::size_t full = (std::size_t{1} << n) - 1;
    for (int r = 0; r < n; ++r) {
        std::vector<int> rows;
        for (int i = 0; i < n; ++i)
            if (i != r)
                rows.push_back(i);
        const auto minors = column_subset_minors(a, rows);
        for (int c = 0; c < n; ++c) {
            // Cofactor (r, c) lands at adj(c, r).
            const SparsePoly& minor = minors[full & ~(std::size_t{1} << c)];
            out(c, r) = (r + c) % 2 == 0 ? minor : -minor;
        }
    }
    return out;
}

namespace {

SymbolicMatrix xy_product(int n)
{
    return mat_mul(generic_sym_matrix(n, Side::X), generic_sym_matrix(n, Side::Y));
}

} // namespace

std::vector<SparsePoly> generators_J(int n)
{
    const SymbolicMatrix xy = xy_product(n);
    std::vector<SparsePoly> out;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j)
                out.push_back(xy(i, j));
    for (int i = 0; i + 1 < n; ++i)
        out.push_back(xy(i, i) - xy(i + 1, i + 1));
    return out;
}

std::vector<SparsePoly> generators_I1XY(int n)
{
    const SymbolicMatrix xy = xy_product(n);
    std::vector<SparsePoly> out;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            out.push_back(xy(i, j));
    return out;
}

SparsePoly b_element(int n) { return xy_product(n)(0, 0); }

std::size_t span_rank(const std::vector<SparsePoly>& polys)
{
    std::map<Monomial, std::size_t, GrlexLess> columns;
    for (const auto& p : polys)
        for (const auto& [m, c] : p.terms())
            columns.try_emplace(m, 0);
    std::size_t next = 0;
    for (auto& [m, idx] : columns)
        idx = next++;
    RationalMatrix mat(polys.size(), columns.size());
    for (std::size_t r = 0; r < polys.size(); ++r)
        for (const auto& [m, c] : polys[r].terms())
            mat(r, columns.at(m)) = c;
    return rank(mat);
}

// ---------------------------------------------------------------------------
// Numeric points

RationalSymMatrix::RationalSymMatrix(RationalMatrix m)
    : m_(std::move(m))
{
    if (!m_.is_symmetric())
        throw ArgumentError("matrix is not symmetric");
}

std::map<VarId, BigRational> point_assignment(const RationalSymMatrix& x, const RationalSymMatrix& y)
{
    std::map<VarId, BigRational> out;
    for (int i = 0; i < x.size(); ++i)
        for (int j = i; j < x.size(); ++j)
            out[VarId::make(Side::X, i + 1, j + 1)] = x(i, j);
    for (int i = 0; i < y.size(); ++i)
        for (int j = i; j < y.size(); ++j)
            out[VarId::make(Side::Y, i + 1, j + 1)] = y(i, j);
    return out;
}

RationalSymMatrix random_invertible_symmetric(int n, SeededRng& rng)
{
    for (;;) {
        RationalMatrix m(n, n);
        for (int i = 0; i < n; ++i)
            for (int j = i; j < n; ++j) {
                m(i, j) = rng.uniform(-10, 10);
                m(j, i) = m(i, j);
            }
        if (sgn(determinant(m)) != 0)
            return RationalSymMatrix(std::move(m));
    }
}

GraphVanishingReport verify_graph_vanishing(int n, VerifyMode mode, int trials, std::uint64_t seed,
                                            int symbolic_cap)
{
    if (n < 1)
        throw ArgumentError("n must be >= 1");
    GraphVanishingReport report;
    report.n = n;
    report.mode = mode;
    const auto gens = generators_J(n);
    report.generators = gens.size();

    if (mode == VerifyMode::Symbolic) {
        if (n > symbolic_cap)
            throw ArgumentError("symbolic mode is capped at n = " + std::to_string(symbolic_cap));
        const SymbolicMatrix x = generic_sym_matrix(n, Side::X);
        const SymbolicMatrix adj = adjugate_sym(x);
        std::map<VarId, SparsePoly> assignment;
        for (int i = 1; i <= n; ++i)
            for (int j = i; j <= n; ++j) {
                assignment[VarId::make(Side::X, i, j)] = SparsePoly::variable(VarId::make(Side::X, i, j));
                assignment[VarId::make(Side::Y, i, j)] = adj(i - 1, j - 1);
            }
        for (const auto& g : gens) {
            const SparsePoly residual = substitute(g, assignment);
            if (!residual.is_zero())
                throw VerificationError("generator " + g.to_string() + " does not vanish on the graph: residual " +
                                        residual.to_string());
        }
        return report;
    }

    if (trials < 1)
        throw ArgumentError("numeric mode needs trials >= 1");
    SeededRng rng(seed);
    for (int t = 0; t < trials; ++t) {
        const RationalSymMatrix m = random_invertible_symmetric(n, rng);
        const RationalSymMatrix adj(adjugate(m.matrix()));
        const auto point = point_assignment(m, adj);
        for (const auto& g : gens) {
            const BigRational v = evaluate(g, point);
            if (sgn(v) != 0)
                throw VerificationError("generator " + g.to_string() + " evaluates to " + v.get_str() +
                                        " at trial " + std::to_string(t));
        }
    }
    report.trials = trials;
    return report;
}

WitnessPair witness_rank_pair(int n, int r, std::uint64_t seed)
{
    if (n < 1)
        throw ArgumentError("n must be >= 1");
    if (r < 0 || r > n)
        throw ArgumentError("rank r must lie in [0, n]");
    SeededRng rng(seed);
    RationalMatrix a(n, n);
    do {
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                a(i, j) = rng.uniform(-5, 5);
    } while (sgn(determinant(a)) == 0);

    RationalMatrix dm(n, n);
    RationalMatrix en(n, n);
    for (int i = 0; i < r; ++i)
        dm(i, i) = rng.nonzero(-5, 5);
    for (int i = r; i < n; ++i)
        en(i, i) = rng.nonzero(-5, 5);

    const RationalMatrix a_inv = inverse(a);
    WitnessPair w;
    w.m = RationalSymMatrix(a * dm * a.transposed());
    w.n = RationalSymMatrix(a_inv.transposed() * en * a_inv);
    return w;
}

WitnessCheck check_witness(const WitnessPair& w)
{
    WitnessCheck out;
    const int n = w.m.size();
    const auto point = point_assignment(w.m, w.n);
    out.generators_vanish = true;
    for (const auto& g : generators_I1XY(n))
        if (sgn(evaluate(g, point)) != 0)
            out.generators_vanish = false;
    out.rank_m = rank(w.m.matrix());
    out.rank_n = rank(w.n.matrix());
    return out;
}

// ---------------------------------------------------------------------------
// Verification suite

namespace {

Check run_check(std::string name, const std::function<std::string()>& body)
{
    Check c;
    c.name = std::move(name);
    try {
        c.detail = body();
        c.pass = true;
    } catch (const ArgumentError&) {
        throw;
    } catch (const std::exception& e) {
        c.pass = false;
        c.detail = e.what();
    }
    return c;
}

void require(bool cond, const std::string& what)
{
    if (!cond)
        throw VerificationError(what);
}

} // namespace

std::vector<Check> run_verification(const VerifyOptions& o)
{
    if (o.n < 1)
        throw ArgumentError("n must be >= 1");
    if (o.trials < 1)
        throw ArgumentError("trials must be >= 1");
    if (o.mode == VerifyMode::Symbolic && o.n > o.symbolic_cap)
        throw ArgumentError("symbolic mode is capped at n = " + std::to_string(o.symbolic_cap) +
                            "; raise --symbolic-cap or use numeric mode");

    const int n = o.n;
    SeededRng master(o.seed);
    const std::uint64_t graph_seed = master.next();
    const std::uint64_t adjugate_seed = master.next();

    const auto gens = generators_J(n);
    const auto entries = generators_I1XY(n);
    const SparsePoly b = b_element(n);

    std::vector<Check> checks;

    checks.push_back(run_check("graph_vanishing", [&] {
        const auto rep = verify_graph_vanishing(n, o.mode, o.trials, graph_seed, o.symbolic_cap);
        if (o.mode == VerifyMode::Symbolic)
            return std::to_string(rep.generators) + " generators vanish identically under Y = adj(X)";
        return std::to_string(rep.generators) + " generators vanish at " + std::to_string(rep.trials) +
               " random points (M, adj M)";
    }));

    checks.push_back(run_check("adjugate_identity", [&] {
        if (o.mode == VerifyMode::Symbolic) {
            const auto x = generic_sym_matrix(n, Side::X);
            const auto adj = adjugate_sym(x);
            require(adj.is_symmetric(), "adj(X) is not symmetric");
            require(mat_mul(x, adj) == SymbolicMatrix::identity(n).scaled(det_sym(x)),
                    "X adj(X) differs from det(X) Id");
            return std::string("X adj(X) = det(X) Id holds symbolically");
        }
        SeededRng rng(adjugate_seed);
        for (int t = 0; t < o.trials; ++t) {
            const auto m = random_invertible_symmetric(n, rng);
            const RationalMatrix adj = adjugate(m.matrix());
            RationalMatrix scaled_id = RationalMatrix::identity(n);
            const BigRational det = determinant(m.matrix());
            for (int i = 0; i < n; ++i)
                scaled_id(i, i) = det;
            require(m.matrix() * adj == scaled_id, "M adj(M) differs from det(M) Id at trial " + std::to_string(t));
            require(adj.is_symmetric(), "adj(M) not symmetric at trial " + std::to_string(t));
        }
        return "M adj(M) = det(M) Id at " + std::to_string(o.trials) + " random points";
    }));

    checks.push_back(run_check("generator_bidegree", [&] {
        const std::size_t expected = static_cast<std::size_t>(n) * (n - 1) + (n - 1);
        require(gens.size() == expected, "unexpected generator count " + std::to_string(gens.size()));
        for (const auto& g : gens)
            require(g.bidegree() == std::make_pair(1u, 1u), "generator " + g.to_string() + " is not of bidegree (1,1)");
        return std::to_string(gens.size()) + " generators, all of bidegree (1,1)";
    }));

    checks.push_back(run_check("swap_symmetry", [&] {
        std::set<std::string> original;
        std::set<std::string> swapped;
        for (const auto& g : gens) {
            original.insert(g.sign_normalized().to_string());
            swapped.insert(g.swapped().sign_normalized().to_string());
        }
        require(original == swapped, "X <-> Y swap does not preserve the generator set");
        return std::string("generator set invariant under X <-> Y up to sign");
    }));

    checks.push_back(run_check("span_J_plus_b", [&] {
        std::vector<SparsePoly> j_b = gens;
        j_b.push_back(b);
        std::vector<SparsePoly> all = j_b;
        all.insert(all.end(), entries.begin(), entries.end());
        const std::size_t r_jb = span_rank(j_b);
        const std::size_t r_i1 = span_rank(entries);
        const std::size_t r_all = span_rank(all);
        require(r_jb == r_i1 && r_i1 == r_all,
                "ranks differ: J+(b) " + std::to_string(r_jb) + ", I1(XY) " + std::to_string(r_i1) + ", joint " +
                    std::to_string(r_all));
        return "J + (b) and I1(XY) share a bidegree-(1,1) span of rank " + std::to_string(r_all);
    }));

    checks.push_back(run_check("diagonal_basis", [&] {
        const SymbolicMatrix xy = mat_mul(generic_sym_matrix(n, Side::X), generic_sym_matrix(n, Side::Y));
        std::vector<SparsePoly> extended = gens;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (i != j)
                    extended.push_back(xy(i, i) - xy(j, j));
        const std::size_t r_gens = span_rank(gens);
        require(r_gens == span_rank(extended), "consecutive diagonal differences do not span all differences");
        return "consecutive diagonal differences span all pairwise differences (rank " + std::to_string(r_gens) + ")";
    }));

    for (int r = 0; r <= n; ++r) {
        std::vector<std::uint64_t> seeds(o.trials);
        for (auto& s : seeds)
            s = master.next();
        checks.push_back(run_check("witness_r" + std::to_string(r), [&] {
            for (std::size_t t = 0; t < seeds.size(); ++t) {
                const auto c = check_witness(witness_rank_pair(n, r, seeds[t]));
                require(c.generators_vanish, "I1(XY) does not vanish at witness " + std::to_string(t));
                require(c.ok(n, r), "witness " + std::to_string(t) + " has ranks (" + std::to_string(c.rank_m) + ", " +
                                        std::to_string(c.rank_n) + ")");
            }
            return std::to_string(seeds.size()) + " witnesses with MN = 0, rank M = " + std::to_string(r) +
                   ", rank N = " + std::to_string(n - r);
        }));
    }
    return checks;
}

} // namespace invdeg
