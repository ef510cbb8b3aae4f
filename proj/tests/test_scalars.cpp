#include <doctest.h>

#include "banalg/scalar.hpp"

using namespace banalg;

namespace {
const RingDescriptor Z = RingDescriptor::integers();
const RingDescriptor Q = RingDescriptor::rationals();
const RingDescriptor Q2 = RingDescriptor::padic(2, 16);
const RingDescriptor TZ = RingDescriptor::trivial_integers();
}  // namespace

TEST_CASE("norms of the basic kinds") {
    CHECK(Scalar(Z, -3).norm() == Rat(3));
    CHECK(Scalar(Q2, 12).norm() == Rat(1, 4));  // v_2(12) = 2
    CHECK(Scalar(TZ, 7).norm() == Rat(1));
    CHECK(Scalar(TZ, 0).norm() == Rat(0));
    CHECK(Scalar(Q, Rat(-4, 6)).norm() == Rat(2, 3));
    CHECK(Scalar(Q2, Rat(1, 2)).norm() == Rat(2));
    CHECK(Scalar::zero(Q2).norm() == Rat(0));
}

TEST_CASE("ring arithmetic is exact") {
    CHECK(Scalar(Z, 2) + Scalar(Z, 3) == Scalar(Z, 5));
    CHECK(Scalar(Q, Rat(1, 2)) * Scalar(Q, Rat(2, 3)) == Scalar(Q, Rat(1, 3)));

    RingDescriptor Q2p4 = RingDescriptor::padic(2, 4);
    Scalar p = Scalar(Q2p4, 3) * Scalar(Q2p4, 5);
    CHECK(p.padic_residue() == 15);  // 15 mod 2^4
    CHECK(p.padic_precision() == 4);
}

TEST_CASE("descriptor mismatch is rejected") {
    CHECK_THROWS_AS(Scalar(Z, 1) + Scalar(Q, Rat(1)), std::invalid_argument);
    CHECK_THROWS_AS(Scalar(Q2, 1) * Scalar(RingDescriptor::padic(3), 1), std::invalid_argument);
    CHECK_THROWS_AS(Scalar(Z, 1) + Scalar(Z.rescaled(2), 1), std::invalid_argument);
}

TEST_CASE("p-adic precision follows the min rule and reports loudly") {
    RingDescriptor lo = RingDescriptor::padic(2, 4);
    Scalar a(lo, 3), b(lo, 7);
    CHECK((a + b).padic_precision() == 4);
    CHECK((a * b).padic_precision() == 4);
    CHECK_THROWS_AS(RingDescriptor::padic(4), std::invalid_argument);
    CHECK_THROWS_AS(RingDescriptor::padic(2, 0), std::invalid_argument);
    // A literal demanding more digits than the descriptor carries.
    CHECK_THROWS_AS(parse_scalar("padic(2, 3, 20)", RingDescriptor::padic(2, 16)),
                    PrecisionExhausted);
}

TEST_CASE("submultiplicativity and ultrametric properties") {
    std::vector<long> samples = {-37, -6, -1, 0, 1, 2, 12, 35, 99};
    for (long x : samples) {
        for (long y : samples) {
            for (const RingDescriptor& d : {Z, Q, Q2, TZ}) {
                Scalar a(d, x), b(d, y);
                CHECK((a * b).norm() <= a.norm() * b.norm());
                if (!d.archimedean()) {
                    CHECK((a + b).norm() <= std::max(a.norm(), b.norm()));
                } else {
                    CHECK((a + b).norm() <= a.norm() + b.norm());
                }
            }
        }
    }
}

TEST_CASE("rescaling multiplies the norm and keeps the values") {
    RingDescriptor Zr = Z.rescaled(Rat(3, 2));
    for (long x : {-5L, 0L, 1L, 7L}) {
        CHECK(Scalar(Zr, x).norm() == Rat(3, 2) * Scalar(Z, x).norm());
        // The identity map is a bijection on carriers.
        CHECK(Scalar(Zr, x).as_integer() == Scalar(Z, x).as_integer());
    }
    CHECK_THROWS_AS(Z.rescaled(0), std::invalid_argument);
}

TEST_CASE("scalar literal grammar") {
    CHECK(parse_scalar("-42", Z) == Scalar(Z, -42));
    CHECK(parse_scalar("7/3", Q) == Scalar(Q, Rat(7, 3)));
    Scalar p = parse_scalar("padic(2, 12, 8)", RingDescriptor::padic(2, 16));
    CHECK(p.norm() == Rat(1, 4));
    CHECK_THROWS_WITH_AS(parse_scalar("x+(", Z), doctest::Contains("position 0"),
                         std::invalid_argument);
    CHECK_THROWS_AS(parse_scalar("1/0", Q), std::invalid_argument);
    CHECK_THROWS_AS(parse_scalar("3 4", Z), std::invalid_argument);
}

TEST_CASE("ring literals") {
    CHECK(parse_ring("z") == Z);
    CHECK(parse_ring("q") == Q);
    CHECK(parse_ring("padic:2:16") == Q2);
    CHECK(parse_ring("padic:5") == RingDescriptor::padic(5, 16));
    CHECK(parse_ring("trivial-z") == TZ);
    CHECK_THROWS_AS(parse_ring("r"), std::invalid_argument);
}
