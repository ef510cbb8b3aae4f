#include <doctest.h>

#include "banalg/hochschild.hpp"

using namespace banalg;

namespace {
const RingDescriptor Z = RingDescriptor::integers();
const RingDescriptor Q = RingDescriptor::rationals();
const RingDescriptor Q2 = RingDescriptor::padic(2, 16);

TruncatedAlgebra alg(const RingDescriptor& ring, const char* flavor, int order) {
    return TruncatedAlgebra{ring, parse_flavor(flavor), order};
}

MultiSeries qs(const char* text, int order = 4) { return parse_series(text, Q, 1, order); }
}  // namespace

TEST_CASE("finite algebra models") {
    FiniteAlgebra dual = FiniteAlgebra::univariate_quotient(Q, qs("x^2"));
    CHECK(dual.dim() == 2);
    auto x = dual.basis_element(1);
    CHECK(dual.multiply(x, x) == dual.zero());

    FiniteAlgebra cube = FiniteAlgebra::univariate_quotient(Q, qs("x^3 - x"));
    auto x3 = cube.multiply(cube.basis_element(1), cube.multiply(cube.basis_element(1),
                                                                 cube.basis_element(1)));
    CHECK(x3 == cube.basis_element(1));  // x^3 = x in the quotient

    FiniteAlgebra split = FiniteAlgebra::split_pair(Q);
    CHECK(split.multiply(split.basis_element(0), split.basis_element(1)) == split.zero());
    CHECK(split.multiply(split.basis_element(0), split.basis_element(0)) ==
          split.basis_element(0));

    FiniteAlgebra trunc = FiniteAlgebra::truncated_flavor(Q, 1, 2);
    CHECK(trunc.dim() == 3);
    auto t = trunc.basis_element(1);
    CHECK(trunc.multiply(t, trunc.multiply(t, t)) == trunc.zero());  // x^3 = 0

    CHECK_THROWS_AS(FiniteAlgebra::univariate_quotient(Z, qs("x^2")), std::invalid_argument);
}

TEST_CASE("hochschild via the diagonal koszul windows") {
    HHReport one_var = hh_koszul(alg(Q, "poly", 6));
    CHECK(one_var.ranks == std::vector<long>{7, 6});

    HHReport two_var = hh_koszul(alg(Q, "poly:2", 4));
    CHECK(two_var.ranks == std::vector<long>{15, 20, 6});

    HHReport banded = hh_koszul_banded(alg(Q, "poly:2", 4));
    CHECK(banded.ranks == std::vector<long>{6, 12, 6});  // HKR: binomial(2,j) * 6

    HHReport ground = hh_koszul(alg(Q, "poly:0", 4));
    CHECK(ground.ranks == std::vector<long>{1});

    HHReport tate = hh_koszul(alg(Q2, "tate(1)", 6));
    CHECK(tate.ranks == std::vector<long>{7, 6});

    CHECK_THROWS_WITH_AS(hh_koszul(alg(Z, "disc(1)", 6)), doctest::Contains("unsupported"),
                         std::invalid_argument);
}

TEST_CASE("bar complex oracle") {
    HHReport dual = hh_bar(FiniteAlgebra::univariate_quotient(Q, qs("x^2")), 4);
    CHECK(dual.ranks == std::vector<long>{2, 1, 1, 1, 1});

    HHReport ground = hh_bar(FiniteAlgebra::truncated_flavor(Q, 0, 0), 4);
    CHECK(ground.ranks == std::vector<long>{1, 0, 0, 0, 0});

    HHReport split = hh_bar(FiniteAlgebra::split_pair(Q), 2);
    CHECK(split.ranks == std::vector<long>{2, 0, 0});

    CHECK_THROWS_WITH_AS(hh_bar(FiniteAlgebra::truncated_flavor(Q, 1, 12), 2),
                         doctest::Contains("guarded"), std::invalid_argument);
    CHECK_THROWS_AS(hh_bar(FiniteAlgebra::split_pair(Q), 5), std::invalid_argument);
}

TEST_CASE("bar and koszul models agree in the smooth range") {
    // Through homological degree 1 the windowed polynomial model and the
    // truncated-ring bar model compute the same ranks.
    for (int order : {1, 2, 3}) {
        HHReport koszul = hh_koszul(alg(Q, "poly", order));
        HHReport bar = hh_bar(FiniteAlgebra::truncated_flavor(Q, 1, order), 2);
        CHECK(koszul.ranks[0] == bar.ranks[0]);
        CHECK(koszul.ranks[1] == bar.ranks[1]);
    }
}

TEST_CASE("hypersurface model cross-checks the bar oracle") {
    HHReport hyper = hh_hypersurface(Q, qs("x^2"), 4);
    CHECK(hyper.ranks == std::vector<long>{2, 1, 1, 1, 1});

    HHReport hyper3 = hh_hypersurface(Q, qs("x^3"), 4);
    HHReport bar3 = hh_bar(FiniteAlgebra::univariate_quotient(Q, qs("x^3")), 4);
    CHECK(hyper3.ranks == bar3.ranks);
    CHECK(hyper3.ranks == std::vector<long>{3, 2, 2, 2, 2});

    // A separable relation has no higher homology.
    HHReport sep = hh_hypersurface(Q, qs("x^2 - x"), 4);
    HHReport barsep = hh_bar(FiniteAlgebra::univariate_quotient(Q, qs("x^2 - x")), 4);
    CHECK(sep.ranks == barsep.ranks);
    CHECK(sep.ranks == std::vector<long>{2, 0, 0, 0, 0});
}

TEST_CASE("base change along verified analytifications") {
    CHECK(hh_base_change(
        AlgebraMap::canonical(alg(Q2, "poly", 6), alg(Q2, "tate(1)", 6))));
    CHECK(hh_base_change(AlgebraMap::canonical(alg(Q, "poly", 6), alg(Q, "formal", 6))));
    CHECK(hh_base_change(AlgebraMap::canonical(alg(Q, "poly", 6), alg(Q, "poly", 6))));

    CHECK_THROWS_WITH_AS(
        hh_base_change(AlgebraMap::canonical(alg(Z, "disc(1)", 6), alg(Z, "disc(1/2)", 6))),
        doctest::Contains("verified"), std::invalid_argument);
}

TEST_CASE("complete intersection quotients") {
    TruncatedAlgebra P = alg(Q, "poly", 4);

    CompleteIntersectionHH plain = hh_complete_intersection(P, {qs("x^2")});
    HHReport bar = hh_bar(FiniteAlgebra::univariate_quotient(Q, qs("x^2")), 4);
    CHECK(plain.report.ranks == bar.ranks);
    CHECK(plain.base_change_ok);

    TruncatedAlgebra P2 = alg(Q2, "poly", 4);
    AlgebraFlavor tate = AlgebraFlavor::tate({1});
    CompleteIntersectionHH analytified =
        hh_complete_intersection(P2, {parse_series("x^2", Q2, 1, 4)}, &tate);
    CHECK(analytified.base_change_ok);

    CompleteIntersectionHH empty = hh_complete_intersection(P, {});
    CHECK(empty.report.ranks == hh_koszul(P).ranks);

    // The zero element is not regular on the truncation.
    CHECK_THROWS_WITH_AS(hh_complete_intersection(P, {MultiSeries(Q, 1, 4)}),
                         doctest::Contains("regular"), std::invalid_argument);
    // Proper multivariate quotients are out of the model's range.
    TruncatedAlgebra plane = alg(Q, "poly:2", 4);
    CHECK_THROWS_AS(hh_complete_intersection(plane, {parse_series("x1", Q, 2, 4)}),
                    std::invalid_argument);
}

TEST_CASE("hh_0 equals the rank of the truncated algebra") {
    for (const char* flavor : {"poly", "formal", "dagger(1)"}) {
        for (int order : {3, 5}) {
            TruncatedAlgebra A = alg(Q, flavor, order);
            CHECK(hh_koszul(A).ranks[0] == A.dim());
        }
    }
}
