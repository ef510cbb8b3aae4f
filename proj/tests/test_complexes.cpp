#include <doctest.h>

#include "banalg/complexes.hpp"
#include "banalg/division.hpp"

using namespace banalg;

namespace {
const RingDescriptor Z = RingDescriptor::integers();
const RingDescriptor Q = RingDescriptor::rationals();
const RingDescriptor Q2 = RingDescriptor::padic(2, 16);
}  // namespace

TEST_CASE("monomial bookkeeping") {
    CHECK(monomial_count(2, 4) == 15);
    CHECK(monomial_count(0, 3) == 1);
    CHECK(monomial_count(1, -1) == 0);
    for (int n : {1, 2, 3}) {
        std::vector<Exponents> basis = monomial_basis(n, 5);
        CHECK(static_cast<long>(basis.size()) == monomial_count(n, 5));
        for (size_t i = 0; i < basis.size(); ++i) CHECK(monomial_rank(basis[i]) == (long)i);
    }

    FreeModule mod{2, {3, 2}};
    CHECK(mod.dim() == monomial_count(2, 3) + monomial_count(2, 2));
    auto [s, e] = mod.label(monomial_count(2, 3) + 1);
    CHECK(s == 1);
    CHECK(mod.index_of(s, e) == monomial_count(2, 3) + 1);
    CHECK(mod.degrees().size() == static_cast<size_t>(mod.dim()));
}

TEST_CASE("multiplication matrices respect windows") {
    TruncatedAlgebra A{Q, AlgebraFlavor::polynomial(1), 6};
    MultiSeries x = A.coordinate(0);
    Matrix m = multiplication_matrix(x, 5, 6);
    CHECK(m.rows == 7);
    CHECK(m.cols == 6);
    CHECK(rank(m) == 6);  // injective, no truncation drop
    CHECK_THROWS_WITH_AS(multiplication_matrix(x, 6, 6), doctest::Contains("drop"),
                         std::invalid_argument);
}

TEST_CASE("koszul complex of a regular element") {
    TruncatedAlgebra A{Q, AlgebraFlavor::polynomial(1), 6};
    ChainComplex X = build_koszul({A, {A.coordinate(0)}});
    CHECK(X.lo == -1);
    CHECK(X.modules[0].dim() == 6);
    CHECK(X.modules[1].dim() == 7);
    HomologyReport h = homology(X);
    CHECK(h.rank_at(-1) == 0);
    CHECK(h.rank_at(0) == 1);
    CHECK(h.concentrated_at(0));
}

TEST_CASE("koszul complex of a regular pair") {
    TruncatedAlgebra A{Q, AlgebraFlavor::polynomial(2), 6};
    ChainComplex X = build_koszul({A, {A.coordinate(0), A.coordinate(1)}});
    HomologyReport h = homology(X);
    CHECK(h.rank_at(0) == 1);
    CHECK(h.rank_at(-1) == 0);
    CHECK(h.rank_at(-2) == 0);
}

TEST_CASE("koszul complex of the zero element") {
    TruncatedAlgebra A{Q, AlgebraFlavor::polynomial(1), 6};
    ChainComplex X = build_koszul({A, {MultiSeries(Q, 1, 6)}});
    HomologyReport h = homology(X);
    CHECK(h.rank_at(-1) == 7);  // kernel is the whole truncated algebra
    CHECK(h.rank_at(0) == 7);
}

TEST_CASE("koszul concentration for partial coordinate sequences") {
    TruncatedAlgebra A{Q, AlgebraFlavor::polynomial(2), 5};
    ChainComplex X = build_koszul({A, {A.coordinate(0)}});
    HomologyReport h = homology(X);
    CHECK(h.concentrated_at(0));
    CHECK(h.rank_at(0) == 6);  // rank of the truncated quotient Q[y]
}

TEST_CASE("degree overflow is rejected") {
    TruncatedAlgebra A{Q, AlgebraFlavor::polynomial(1), 4};
    MultiSeries big = parse_series("x^4", Q, 1, 6);
    CHECK_THROWS_AS(build_koszul({A, {big}}), std::invalid_argument);
}

TEST_CASE("diagonal koszul is exact for strict flavors") {
    for (const RingDescriptor& ring : {Q, Q2}) {
        for (FlavorKind kind :
             {FlavorKind::Polynomial, FlavorKind::Tate, FlavorKind::FormalPS}) {
            AlgebraFlavor fl = kind == FlavorKind::Polynomial
                                   ? AlgebraFlavor::polynomial(1)
                                   : (kind == FlavorKind::Tate ? AlgebraFlavor::tate({1})
                                                               : AlgebraFlavor::formal_ps(1));
            TruncatedAlgebra C{ring, fl, 4};
            ChainComplex aug = diagonal_koszul_augmented(C);
            HomologyReport h = homology(aug);
            CHECK(h.rank_at(-2) == 0);
            CHECK(h.rank_at(-1) == 0);
            CHECK(h.rank_at(0) == 0);  // quotient map onto the 1-variable window
        }
    }
}

TEST_CASE("diagonal koszul cokernel matches the one-variable window") {
    TruncatedAlgebra C{Q, AlgebraFlavor::polynomial(1), 5};
    ChainComplex X = diagonal_koszul(C);
    HomologyReport h = homology(X);
    CHECK(h.rank_at(-1) == 0);
    CHECK(h.rank_at(0) == C.dim());
}

TEST_CASE("base change along algebra maps") {
    TruncatedAlgebra A{Q, AlgebraFlavor::polynomial(1), 6};
    KoszulSpec spec{A, {A.coordinate(0)}, {}};

    // Identity gives the same boundary matrices.
    AlgebraMorphism id = AlgebraMorphism::canonical(A, A);
    ChainComplex X = build_koszul(spec);
    ChainComplex Y = build_koszul(tensor_over(spec, id));
    CHECK(X.boundaries[0] == Y.boundaries[0]);

    // Evaluation x -> 0 lands in the ground field: Q --0--> Q.
    TruncatedAlgebra ground{Q, AlgebraFlavor::polynomial(0), 6};
    AlgebraMorphism eval{A, ground, {MultiSeries(Q, 0, 6)}};
    ChainComplex E = build_koszul(tensor_over(spec, eval));
    CHECK(E.modules[0].dim() == 1);
    CHECK(E.modules[1].dim() == 1);
    CHECK(E.boundaries[0].is_zero());

    // The canonical inclusion into the Tate flavor preserves the diagonal
    // boundary entrywise.
    TruncatedAlgebra P2{Q2, AlgebraFlavor::polynomial(1), 4};
    TruncatedAlgebra T2{Q2, AlgebraFlavor::tate({1}), 4};
    ChainComplex D1 = diagonal_koszul(P2);
    ChainComplex D2 = diagonal_koszul(T2);
    CHECK(D1.boundaries[0] == D2.boundaries[0]);

    TruncatedAlgebra other{Q, AlgebraFlavor::polynomial(2), 6};
    CHECK_THROWS_AS(tensor_over(spec, AlgebraMorphism::canonical(other, other)),
                    std::invalid_argument);
}

TEST_CASE("homology of hand-built complexes") {
    // 0 -> Q -> Q -> 0 with the identity boundary.
    ChainComplex X;
    X.ring = Q;
    X.lo = -1;
    X.modules = {FreeModule{0, {0}}, FreeModule{0, {0}}};
    X.boundaries = {Matrix::identity(Q, 1)};
    HomologyReport h = homology(X);
    CHECK(h.rank_at(-1) == 0);
    CHECK(h.rank_at(0) == 0);

    // 0 -> Z --2--> Z -> 0.
    ChainComplex Y;
    Y.ring = Z;
    Y.lo = -1;
    Y.modules = {FreeModule{0, {0}}, FreeModule{0, {0}}};
    Matrix two(Z, 1, 1);
    two.at(0, 0) = Scalar(Z, 2);
    Y.boundaries = {two};
    HomologyReport hy = homology(Y);
    CHECK(hy.rank_at(0) == 0);
    CHECK(hy.entries[1].torsion == std::vector<Int>{Int(2)});
}

TEST_CASE("homology ranks are invariant under basis permutation") {
    TruncatedAlgebra C{Q, AlgebraFlavor::polynomial(1), 4};
    ChainComplex X = diagonal_koszul(C);
    HomologyReport before = homology(X);

    // Reverse the basis of the target module (rows of the boundary).
    Matrix& d = X.boundaries[0];
    for (long r = 0; r < d.rows / 2; ++r)
        for (long c = 0; c < d.cols; ++c) std::swap(d.at(r, c), d.at(d.rows - 1 - r, c));
    HomologyReport after = homology(X);
    CHECK(before.same_ranks(after));

    // And the source module (columns).
    for (long c = 0; c < d.cols / 2; ++c)
        for (long r = 0; r < d.rows; ++r) std::swap(d.at(r, c), d.at(r, d.cols - 1 - c));
    CHECK(before.same_ranks(homology(X)));
}

TEST_CASE("banded homology restricts to the requested degrees") {
    TruncatedAlgebra A{Q, AlgebraFlavor::polynomial(1), 6};
    // Zero boundary: banded homology counts monomials of degree <= band.
    ChainComplex X = build_koszul({A, {MultiSeries(Q, 1, 6)}});
    HomologyReport h = banded_homology(X, 3);
    CHECK(h.rank_at(-1) == 4);
    CHECK(h.rank_at(0) == 4);

    ChainComplex D = diagonal_koszul(A);
    HomologyReport hd = banded_homology(D, 5);
    CHECK(hd.rank_at(-1) == 0);
    CHECK(hd.rank_at(0) == 6);  // one class per degree 0..5
}

TEST_CASE("smith normal form over the integers") {
    Matrix m(Z, 2, 2);
    m.at(0, 0) = Scalar(Z, 2);
    m.at(1, 1) = Scalar(Z, 6);
    SmithResult s = smith_normal_form(m);
    CHECK(s.rank == 2);
    CHECK(s.invariant_factors == std::vector<Int>{Int(2), Int(6)});

    Matrix u(Z, 2, 3);
    u.at(0, 0) = Scalar(Z, 1);
    u.at(0, 1) = Scalar(Z, 1);
    u.at(1, 2) = Scalar(Z, 1);
    SmithResult su = smith_normal_form(u);
    CHECK(su.rank == 2);
    CHECK(su.invariant_factors.empty());
}

TEST_CASE("p-adic elimination picks maximal-norm pivots") {
    Matrix m(Q2, 2, 2);
    m.at(0, 0) = Scalar(Q2, 4);  // |4|_2 = 1/4
    m.at(0, 1) = Scalar(Q2, 1);
    m.at(1, 0) = Scalar(Q2, 1);  // |1|_2 = 1, preferred pivot
    m.at(1, 1) = Scalar(Q2, 2);
    CHECK(rank(m) == 2);
    Matrix k = kernel_basis(m);
    CHECK(k.cols == 0);

    Matrix singular(Q2, 2, 2);
    singular.at(0, 0) = Scalar(Q2, 2);
    singular.at(0, 1) = Scalar(Q2, 6);
    singular.at(1, 0) = Scalar(Q2, 1);
    singular.at(1, 1) = Scalar(Q2, 3);
    CHECK(rank(singular) == 1);
    CHECK(kernel_basis(singular).cols == 1);
}

TEST_CASE("precision demands beyond the descriptor fail loudly") {
    RingDescriptor shallow = RingDescriptor::padic(2, 2);
    Scalar tiny(shallow, 8);  // 2^3, below the resolution of two digits
    CHECK_THROWS_AS((void)parse_scalar("padic(2, 1, 5)", shallow), PrecisionExhausted);
    CHECK(tiny.norm() == Rat(1, 8));
}
