#include <doctest.h>

#include "banalg/hepi.hpp"

using namespace banalg;

namespace {
const RingDescriptor Z = RingDescriptor::integers();
const RingDescriptor Q = RingDescriptor::rationals();
const RingDescriptor Q2 = RingDescriptor::padic(2, 16);

TruncatedAlgebra alg(const RingDescriptor& ring, const char* flavor, int order) {
    return TruncatedAlgebra{ring, parse_flavor(flavor), order};
}
}  // namespace

TEST_CASE("strictness condition per flavor") {
    TruncatedAlgebra poly = alg(Q, "poly", 6);
    CHECK(check_strictness_condition(poly, poly.coordinate(0)).ok());

    TruncatedAlgebra tate = alg(Q2, "tate(1)", 6);
    CHECK(check_strictness_condition(tate, tate.coordinate(0)).ok());

    TruncatedAlgebra formal = alg(Q, "formal", 6);
    CHECK(check_strictness_condition(formal, formal.coordinate(0)).ok());

    TruncatedAlgebra dagger = alg(Q, "dagger(1)", 6);
    CHECK(check_strictness_condition(dagger, dagger.coordinate(0)).ok());

    TruncatedAlgebra stein = alg(Q, "stein(1;1/2<3/4)", 6);
    CHECK(check_strictness_condition(stein, stein.coordinate(0)).ok());

    TruncatedAlgebra disc = alg(Z, "disc(1)", 6);
    StrictnessResult r = check_strictness_condition(disc, disc.coordinate(0));
    CHECK(r.ranks_ok);             // the rank side cannot see the norm failure
    CHECK_FALSE(r.certificates_ok);
    CHECK_FALSE(r.ok());
    CHECK_FALSE(r.worst_certificate.pass);
}

TEST_CASE("strictness rejects elements other than the coordinate") {
    TruncatedAlgebra poly = alg(Q, "poly", 6);
    MultiSeries xsq = poly.series("x^2");
    CHECK_THROWS_WITH_AS(check_strictness_condition(poly, xsq),
                         doctest::Contains("unsupported"), std::invalid_argument);
}

TEST_CASE("analytification maps verify as homotopy epimorphisms") {
    // Tate analytification over a non-archimedean field.
    HepiVerdict tate = verify_hepi(AlgebraMap::canonical(alg(Q2, "poly", 8), alg(Q2, "tate(1)", 8)));
    CHECK(tate.verdict);
    CHECK(tate.strictness_ok_source);
    CHECK(tate.strictness_ok_target);
    CHECK(tate.element_compat);
    CHECK(tate.derived_selfproduct_ranks.rank_at(0) == 9);
    CHECK(tate.derived_selfproduct_ranks.rank_at(-1) == 0);

    // Formal completion over the integers.
    CHECK(verify_hepi(AlgebraMap::canonical(alg(Z, "poly", 8), alg(Z, "formal", 8))).verdict);

    // Shrinking disc radii fail the strictness certificates on both sides.
    HepiVerdict disc =
        verify_hepi(AlgebraMap::canonical(alg(Z, "disc(1)", 8), alg(Z, "disc(1/2)", 8)));
    CHECK_FALSE(disc.verdict);
    CHECK_FALSE(disc.strictness_ok_source);
    CHECK(disc.selfproduct_ok);  // ranks alone would not detect the failure
}

TEST_CASE("identity maps are degenerate homotopy epimorphisms") {
    for (const char* flavor : {"poly", "formal", "dagger(1)", "stein(1;1/2<3/4)"}) {
        TruncatedAlgebra A = alg(Q, flavor, 6);
        HepiVerdict v = verify_hepi(AlgebraMap::canonical(A, A));
        CHECK(v.verdict);
        CHECK(v.identity_degenerate);
    }
    TruncatedAlgebra T = alg(Q2, "tate(1)", 6);
    CHECK(verify_hepi(AlgebraMap::canonical(T, T)).verdict);
    // Even the disc identity: B tensored with itself over itself is B.
    TruncatedAlgebra D = alg(Z, "disc(1)", 6);
    HepiVerdict v = verify_hepi(AlgebraMap::canonical(D, D));
    CHECK(v.verdict);
    CHECK_FALSE(v.strictness_ok_source);
}

TEST_CASE("verdicts are stable across truncation orders") {
    for (int N : {4, 6, 8}) {
        CHECK(verify_hepi(AlgebraMap::canonical(alg(Q2, "poly", N), alg(Q2, "tate(1)", N))).verdict);
        CHECK_FALSE(
            verify_hepi(AlgebraMap::canonical(alg(Z, "disc(1)", N), alg(Z, "disc(1/2)", N)))
                .verdict);
    }
}

TEST_CASE("two out of three") {
    // The corollary chain R[x] -> dagger -> formal over Z.
    AlgebraMap f = AlgebraMap::canonical(alg(Z, "poly", 6), alg(Z, "dagger(1)", 6));
    AlgebraMap g = AlgebraMap::canonical(alg(Z, "dagger(1)", 6), alg(Z, "formal", 6));
    CHECK(check_two_out_of_three(f, g));

    AlgebraMap id = AlgebraMap::canonical(alg(Q, "poly", 6), alg(Q, "poly", 6));
    CHECK(check_two_out_of_three(id, id));

    AlgebraMap h = AlgebraMap::canonical(alg(Q, "poly", 6), alg(Q, "formal", 6));
    AlgebraMap id_formal = AlgebraMap::canonical(alg(Q, "formal", 6), alg(Q, "formal", 6));
    CHECK(check_two_out_of_three(h, id_formal));

    CHECK_THROWS_AS(check_two_out_of_three(h, f), std::invalid_argument);  // not composable
}

TEST_CASE("tensor closure of verified maps") {
    AlgebraMap tx = AlgebraMap::canonical(alg(Q2, "poly", 4), alg(Q2, "tate(1)", 4));
    CHECK(check_tensor_closure(tx, tx));

    AlgebraMap idp = AlgebraMap::canonical(alg(Q, "poly", 4), alg(Q, "poly", 4));
    CHECK(check_tensor_closure(idp, idp));

    // Hybrid analytification: formal completion in one block, dagger in the
    // other.
    AlgebraMap fm = AlgebraMap::canonical(alg(Q, "poly", 4), alg(Q, "formal", 4));
    AlgebraMap dg = AlgebraMap::canonical(alg(Q, "poly", 4), alg(Q, "dagger(1)", 4));
    CHECK(check_tensor_closure(fm, dg));

    AlgebraMap zmap = AlgebraMap::canonical(alg(Z, "poly", 4), alg(Z, "formal", 4));
    CHECK_THROWS_AS(tensor_map(fm, zmap), std::invalid_argument);  // mixed ground rings
}

TEST_CASE("composition pushes generator images through") {
    AlgebraMap f = AlgebraMap::canonical(alg(Q, "poly", 6), alg(Q, "dagger(1)", 6));
    AlgebraMap g = AlgebraMap::canonical(alg(Q, "dagger(1)", 6), alg(Q, "formal", 6));
    AlgebraMap gf = f.then(g);
    CHECK(gf.source.flavor == f.source.flavor);
    CHECK(gf.target.flavor == g.target.flavor);
    CHECK(gf.images_are_coordinates());
    CHECK(verify_hepi(gf).verdict);
}
