#include "invdeg/error.hpp"
#include "invdeg/symbolic.hpp"

#include <doctest.h>

#include <set>

using namespace invdeg;

namespace {

SparsePoly var(Side s, int i, int j) { return SparsePoly::variable(VarId::make(s, i, j)); }
SparsePoly X(int i, int j) { return var(Side::X, i, j); }
SparsePoly Y(int i, int j) { return var(Side::Y, i, j); }

std::map<VarId, SparsePoly> identity_on_x_adj_on_y(int n)
{
    const auto adj = adjugate_sym(generic_sym_matrix(n, Side::X));
    std::map<VarId, SparsePoly> a;
    for (int i = 1; i <= n; ++i)
        for (int j = i; j <= n; ++j) {
            a[VarId::make(Side::X, i, j)] = X(i, j);
            a[VarId::make(Side::Y, i, j)] = adj(i - 1, j - 1);
        }
    return a;
}

} // namespace

TEST_CASE("VarId normalization and ordering")
{
    CHECK(VarId::make(Side::X, 2, 1) == VarId::make(Side::X, 1, 2));
    CHECK(VarId::make(Side::X, 3, 3) < VarId::make(Side::Y, 1, 1));
    CHECK(VarId::make(Side::X, 1, 2) < VarId::make(Side::X, 2, 2));
    CHECK(VarId::make(Side::Y, 1, 2).name() == "Y12");
    CHECK(VarId::make(Side::X, 3, 11).name() == "X_{3,11}");
    CHECK_THROWS_AS(VarId::make(Side::X, 0, 1), ArgumentError);
}

TEST_CASE("SparsePoly arithmetic and canonical form")
{
    CHECK((X(1, 1) - X(1, 1)).is_zero());
    CHECK(X(1, 2) * Y(1, 1) == Y(1, 1) * X(2, 1));
    const SparsePoly p = X(1, 1) * X(2, 2) - X(1, 2) * X(1, 2);
    CHECK(p.to_string() == "X11*X22 - X12^2");
    CHECK((p + p).to_string() == "2*X11*X22 - 2*X12^2");
    CHECK(SparsePoly(0).is_zero());
    CHECK(SparsePoly(7).to_string() == "7");
    CHECK((X(1, 1) * Y(2, 2)).bidegree() == std::make_pair(1u, 1u));
    CHECK_FALSE((X(1, 1) + Y(1, 1)).bidegree().has_value());
    CHECK((X(1, 1) * Y(1, 2)).swapped() == Y(1, 1) * X(1, 2));
    CHECK((-(X(1, 1) * Y(1, 2))).sign_normalized() == X(1, 1) * Y(1, 2));
}

TEST_CASE("grlex order")
{
    GrlexLess less;
    const Monomial x11(VarId::make(Side::X, 1, 1));
    const Monomial x12(VarId::make(Side::X, 1, 2));
    CHECK(less(x12, x11)); // X11 is the earliest variable
    CHECK(less(x11, x12 * x12));
    CHECK_FALSE(less(x11, x11));
    CHECK(less(x11 * x12, x11 * x11));
}

TEST_CASE("substitute and evaluate")
{
    std::map<VarId, SparsePoly> a{{VarId::make(Side::X, 1, 1), X(1, 1)}, {VarId::make(Side::Y, 1, 1), X(2, 2)}};
    CHECK(substitute(X(1, 1) * Y(1, 1), a) == X(1, 1) * X(2, 2));
    CHECK(substitute(X(1, 1) - X(1, 1), {}).is_zero());
    CHECK_THROWS_AS(substitute(Y(1, 2), a), ArgumentError);

    std::map<VarId, BigRational> pt{{VarId::make(Side::X, 1, 1), BigRational(1, 2)},
                                    {VarId::make(Side::X, 1, 2), 3}};
    CHECK(evaluate(X(1, 1) * X(1, 2) * X(1, 2) + SparsePoly(1), pt) == BigRational(11, 2));
    CHECK_THROWS_AS(evaluate(X(2, 2), pt), ArgumentError);

    // (XY)_{12} at n = 2 under Y -> adj(X): X11 (-X12) + X12 X11 = 0
    const auto gens = generators_J(2);
    CHECK(gens[0] == X(1, 1) * Y(1, 2) + X(1, 2) * Y(2, 2));
    CHECK(substitute(gens[0], identity_on_x_adj_on_y(2)).is_zero());
}

TEST_CASE("generic symmetric matrices and products")
{
    const auto x1 = generic_sym_matrix(1, Side::X);
    CHECK(x1(0, 0) == X(1, 1));
    const auto x2 = generic_sym_matrix(2, Side::X);
    CHECK(x2(0, 1) == X(1, 2));
    CHECK(x2(1, 0) == X(1, 2));
    CHECK(x2.is_symmetric());

    std::set<std::string> vars;
    const auto x3 = generic_sym_matrix(3, Side::X);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            vars.insert(x3(i, j).to_string());
    CHECK(vars.size() == 6);

    CHECK(mat_mul(SymbolicMatrix::identity(3), x3) == x3);
    CHECK(mat_mul(x1, generic_sym_matrix(1, Side::Y))(0, 0) == X(1, 1) * Y(1, 1));
    CHECK(mat_mul(x2, generic_sym_matrix(2, Side::Y))(0, 1) == X(1, 1) * Y(1, 2) + X(1, 2) * Y(2, 2));
    CHECK_THROWS_AS(mat_mul(x2, x3), ArgumentError);
}

TEST_CASE("det_sym and adjugate_sym")
{
    CHECK(det_sym(generic_sym_matrix(1, Side::X)) == X(1, 1));
    CHECK(det_sym(generic_sym_matrix(2, Side::X)) == X(1, 1) * X(2, 2) - X(1, 2) * X(1, 2));

    const auto adj1 = adjugate_sym(generic_sym_matrix(1, Side::X));
    CHECK(adj1(0, 0) == SparsePoly(1));
    const auto adj2 = adjugate_sym(generic_sym_matrix(2, Side::X));
    CHECK(adj2(0, 0) == X(2, 2));
    CHECK(adj2(0, 1) == -X(1, 2));
    CHECK(adj2(1, 0) == -X(1, 2));
    CHECK(adj2(1, 1) == X(1, 1));

    for (int n = 1; n <= 4; ++n) {
        const auto x = generic_sym_matrix(n, Side::X);
        const auto adj = adjugate_sym(x);
        CHECK(adj.is_symmetric());
        CHECK(mat_mul(x, adj) == SymbolicMatrix::identity(n).scaled(det_sym(x)));
    }
    // X11 X22 X33 + 2 X12 X13 X23 - X11 X23^2 - X22 X13^2 - X33 X12^2
    CHECK(det_sym(generic_sym_matrix(3, Side::X)).size() == 5);
}

TEST_CASE("det_sym agrees with exact elimination at random points")
{
    SeededRng rng(99);
    for (int n = 1; n <= 5; ++n) {
        const auto det = det_sym(generic_sym_matrix(n, Side::X));
        for (int t = 0; t < 5; ++t) {
            RationalMatrix m(n, n);
            for (int i = 0; i < n; ++i)
                for (int j = i; j < n; ++j) {
                    m(i, j) = BigRational(rng.uniform(-9, 9), rng.uniform(1, 4));
                    m(i, j).canonicalize();
                    m(j, i) = m(i, j);
                }
            const RationalSymMatrix s(m);
            CHECK(evaluate(det, point_assignment(s, RationalSymMatrix(RationalMatrix(0, 0)))) == determinant(m));
        }
    }
}

TEST_CASE("generator lists")
{
    CHECK(generators_J(1).empty());
    CHECK(generators_J(2).size() == 3);
    CHECK(generators_J(3).size() == 8);
    CHECK(generators_I1XY(1) == std::vector<SparsePoly>{X(1, 1) * Y(1, 1)});
    CHECK(generators_I1XY(2).size() == 4);
    for (int n = 1; n <= 6; ++n)
        for (const auto& g : generators_J(n))
            CHECK(g.bidegree() == std::make_pair(1u, 1u));
}

TEST_CASE("J + (b) spans I1(XY) in bidegree (1,1)")
{
    for (int n = 1; n <= 5; ++n) {
        auto jb = generators_J(n);
        jb.push_back(b_element(n));
        const auto i1 = generators_I1XY(n);
        auto all = jb;
        all.insert(all.end(), i1.begin(), i1.end());
        const auto r = span_rank(i1);
        CHECK(r == static_cast<std::size_t>(n * n));
        CHECK(span_rank(jb) == r);
        CHECK(span_rank(all) == r);
        // Without b the span is one short.
        CHECK(span_rank(generators_J(n)) == r - 1);
    }
}

TEST_CASE("swap symmetry of the generator set")
{
    for (int n = 1; n <= 5; ++n) {
        std::set<std::string> a, b;
        for (const auto& g : generators_J(n)) {
            a.insert(g.sign_normalized().to_string());
            b.insert(g.swapped().sign_normalized().to_string());
        }
        CHECK(a == b);
    }
}

TEST_CASE("graph vanishing")
{
    for (int n = 1; n <= 4; ++n) {
        const auto r = verify_graph_vanishing(n, VerifyMode::Symbolic, 1, 0);
        CHECK(r.generators == static_cast<std::size_t>(n * (n - 1) + n - 1));
    }
    CHECK_THROWS_AS(verify_graph_vanishing(5, VerifyMode::Symbolic, 1, 0), ArgumentError);
    for (int n = 5; n <= 7; ++n)
        CHECK(verify_graph_vanishing(n, VerifyMode::Numeric, 100, 1234 + n).trials == 100);
    CHECK_THROWS_AS(verify_graph_vanishing(3, VerifyMode::Numeric, 0, 1), ArgumentError);
}

TEST_CASE("a wrong generator is caught with its name")
{
    // I1(XY) includes the diagonal entries, which do not vanish on the graph.
    const auto assignment = identity_on_x_adj_on_y(2);
    const auto diag = generators_I1XY(2)[0];
    CHECK_FALSE(substitute(diag, assignment).is_zero());
}

TEST_CASE("witness_rank_pair")
{
    for (int n = 1; n <= 5; ++n)
        for (int r = 0; r <= n; ++r)
            for (std::uint64_t seed = 0; seed < 3; ++seed) {
                const auto w = witness_rank_pair(n, r, seed);
                const auto c = check_witness(w);
                CHECK(c.generators_vanish);
                CHECK(c.ok(n, r));
                CHECK((w.m.matrix() * w.n.matrix()).is_zero());
            }
    CHECK(witness_rank_pair(3, 0, 5).m.matrix().is_zero());
    CHECK(witness_rank_pair(3, 3, 5).n.matrix().is_zero());
    CHECK(witness_rank_pair(4, 2, 77).m.matrix() == witness_rank_pair(4, 2, 77).m.matrix());
    CHECK_THROWS_AS(witness_rank_pair(3, 4, 0), ArgumentError);
}

TEST_CASE("witness for n = 3, r = 1: minors")
{
    const auto w = witness_rank_pair(3, 1, 11);
    const auto& m = w.m.matrix();
    for (int i0 = 0; i0 < 3; ++i0)
        for (int i1 = i0 + 1; i1 < 3; ++i1)
            for (int j0 = 0; j0 < 3; ++j0)
                for (int j1 = j0 + 1; j1 < 3; ++j1)
                    CHECK(m(i0, j0) * m(i1, j1) - m(i0, j1) * m(i1, j0) == 0);
    CHECK(determinant(w.n.matrix()) == 0);
}

TEST_CASE("run_verification")
{
    VerifyOptions o;
    o.n = 3;
    o.trials = 3;
    const auto checks = run_verification(o);
    CHECK(checks.size() == 6 + 4);
    for (const auto& c : checks)
        CHECK_MESSAGE(c.pass, c.name, ": ", c.detail);

    o.n = 1;
    for (const auto& c : run_verification(o))
        CHECK(c.pass);

    o.n = 5;
    CHECK_THROWS_AS(run_verification(o), ArgumentError);
    o.mode = VerifyMode::Numeric;
    o.trials = 4;
    o.seed = 42;
    const auto a = run_verification(o);
    const auto b = run_verification(o);
    REQUIRE(a.size() == b.size());
    for (std::size_t k = 0; k < a.size(); ++k) {
        CHECK(a[k].pass);
        CHECK(a[k].detail == b[k].detail);
    }
}
