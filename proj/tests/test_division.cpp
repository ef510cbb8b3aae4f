#include <doctest.h>

#include "banalg/division.hpp"

using namespace banalg;

namespace {
const RingDescriptor Z = RingDescriptor::integers();
const RingDescriptor Q = RingDescriptor::rationals();
const RingDescriptor Q2 = RingDescriptor::padic(2, 16);

MultiSeries zs(const std::string& text, int order) { return parse_series(text, Z, 2, order); }

// Independent oracle: long division by (y - z) in the variable y, with
// coefficients that are exact polynomials in z. The divisor is monic in y,
// so plain schoolbook division is exact; the remainder must vanish for
// diagonal-vanishing input.
MultiSeries oracle_divide(const MultiSeries& f) {
    const int N = f.order();
    // rows[i] = coefficient of y^i, a polynomial in z.
    std::vector<std::vector<Rat>> rows(N + 1, std::vector<Rat>(N + 1, Rat(0)));
    for (const auto& [e, c] : f.coeffs()) rows[e[0]][e[1]] = c.as_rational();

    std::vector<std::vector<Rat>> quot(N + 1, std::vector<Rat>(N + 1, Rat(0)));
    for (int i = N; i >= 1; --i) {
        // quotient coefficient of y^{i-1} is rows[i]; then
        // rows[i-1] += z * rows[i] (from the -z part of the divisor).
        for (int j = 0; j <= N; ++j) quot[i - 1][j] = rows[i][j];
        for (int j = 0; j + 1 <= N; ++j) rows[i - 1][j + 1] += rows[i][j];
        for (int j = 0; j <= N; ++j) rows[i][j] = 0;
    }
    for (int j = 0; j <= N; ++j) REQUIRE(rows[0][j] == 0);  // remainder check

    MultiSeries g(f.ring(), 2, N);
    for (int i = 0; i <= N; ++i)
        for (int j = 0; j <= N; ++j) {
            if (quot[i][j] == 0 || i + j > N) continue;
            g.set_coeff({i, j}, Scalar(f.ring(), quot[i][j]));
        }
    return g;
}

MultiSeries y_minus_z(const RingDescriptor& ring, int order) {
    return MultiSeries::variable(ring, 2, order, 0) - MultiSeries::variable(ring, 2, order, 1);
}
}  // namespace

TEST_CASE("diagonal division on pinned inputs") {
    CHECK(diag_divide(zs("y^2 - z^2", 4)) == zs("y + z", 4));
    CHECK(diag_divide(zs("y - z", 4)) == zs("1", 4));
    // Oracle value frozen from univariate long division in y.
    MultiSeries f = zs("y^2*z - y*z^2", 6);
    CHECK(oracle_divide(f) == zs("y*z", 6));
    CHECK(diag_divide(f) == zs("y*z", 6));

    CHECK_THROWS_WITH_AS(diag_divide(zs("y^2", 4)), doctest::Contains("vanish"),
                         std::invalid_argument);
    CHECK_THROWS_AS(diag_divide(parse_series("x", Z, 1, 4)), std::invalid_argument);
}

TEST_CASE("diagonal division agrees with the long-division oracle") {
    TrialRng rng(101);
    for (int t = 0; t < 200; ++t) {
        MultiSeries f = random_diagonal_vanishing(rng, Z, 8, 8, -9, 9);
        CHECK(diag_divide(f) == oracle_divide(f));
    }
}

TEST_CASE("exact reconstruction (y - z) * g = f") {
    TrialRng rng(7);
    for (int t = 0; t < 200; ++t) {
        MultiSeries f = random_diagonal_vanishing(rng, Z, 8, 7, -9, 9);
        CHECK(y_minus_z(Z, 8) * diag_divide(f) == f);
    }
}

TEST_CASE("section identity through the embeddings") {
    TrialRng rng(23);
    for (int t = 0; t < 50; ++t) {
        MultiSeries u = random_series(rng, Z, 1, 8, 7, -9, 9);
        MultiSeries diff = tensor_embed_left(u) - tensor_embed_right(u);
        CHECK(y_minus_z(Z, 8) * diag_divide(diff) == diff);
    }
}

TEST_CASE("polynomial bound certificates") {
    BoundCertificate c1 = certify_poly_bound(zs("y^2 - z^2", 4));
    CHECK(c1.input_norm == 2);
    CHECK(c1.output_norm == 2);
    CHECK(c1.bound_constant == 8);
    CHECK(c1.pass);

    BoundCertificate c2 = certify_poly_bound(zs("y - z", 4));
    CHECK(c2.input_norm == 2);
    CHECK(c2.output_norm == 1);
    CHECK(c2.bound_constant == 1);
    CHECK(c2.pass);

    TrialRng rng(42);
    for (int t = 0; t < 1000; ++t) {
        int deg = static_cast<int>(rng.uniform(1, 10));
        MultiSeries f = random_diagonal_vanishing(rng, Z, 10, deg, -9, 9);
        CHECK(certify_poly_bound(f).pass);
    }
}

TEST_CASE("tate coefficientwise certificates") {
    AlgebraFlavor tate1 = AlgebraFlavor::tate({1, 1});

    BoundCertificate c1 = certify_tate_coefficientwise(zs("y - z", 4), tate1);
    CHECK(c1.pass);
    CHECK(c1.bound_constant == 1);  // argmax at (0,0), L = 0

    // Argmax tie-break: both coefficients of y + z have norm 1; the
    // graded-lex-smallest is (0,1), so L = 1 and the constant is 2.
    BoundCertificate c2 = certify_tate_coefficientwise(zs("y^2 - z^2", 4), tate1);
    CHECK(c2.output_norm == 1);
    CHECK(c2.bound_constant == 2);
    CHECK(c2.pass);

    TrialRng rng(2024);
    for (int t = 0; t < 300; ++t) {
        MultiSeries f = random_diagonal_vanishing(rng, Q2, 8, 8, -99, 99);
        BoundCertificate c = certify_tate_coefficientwise(f, tate1);
        CHECK(c.pass);
        // Ultrametric coefficients collapse the (L+1) factor entirely.
        CHECK(c.output_norm <= c.input_norm);
    }
}

TEST_CASE("coefficientwise triangle bound holds termwise") {
    TrialRng rng(5);
    for (int t = 0; t < 100; ++t) {
        MultiSeries f = random_diagonal_vanishing(rng, Z, 6, 6, -9, 9);
        MultiSeries g = diag_divide(f);
        for (const auto& [kl, c] : g.coeffs()) {
            Rat best = 0;
            for (int s = 0; s <= kl[1]; ++s)
                best = std::max(best, f.coeff({kl[0] + 1 + s, kl[1] - s}).norm());
            CHECK(c.norm() <= Rat(kl[1] + 1) * best);
        }
    }
}

TEST_CASE("formal weight transform certificates") {
    WeightTable ones;
    BoundCertificate c1 = certify_formal_weight_transform(zs("y - z", 4), ones);
    CHECK(c1.input_norm == 1);
    CHECK(c1.output_norm == 1);  // phi(0,0) = 1
    CHECK(c1.pass);

    WeightTable linear;
    for (int i = 0; i <= 4; ++i)
        for (int j = 0; i + j <= 4; ++j) linear.entries[{i, j}] = i + j + 1;
    CHECK(certify_formal_weight_transform(zs("y^2 - z^2", 4), linear).pass);

    TrialRng rng(77);
    for (int t = 0; t < 200; ++t) {
        MultiSeries f = random_diagonal_vanishing(rng, Z, 8, 8, -9, 9);
        WeightTable psi = random_weight_table(rng, 2, 8, 1, 5);
        CHECK(certify_formal_weight_transform(f, psi).pass);
    }
}

TEST_CASE("disc counterexample family") {
    BoundCertificate c2 = disc_counterexample(2, 8);
    CHECK(c2.ratio() == 1);
    CHECK(c2.pass);  // no violation of the hypothetical constant yet

    BoundCertificate c5 = disc_counterexample(5, 8);
    CHECK(c5.input_norm == 2);
    CHECK(c5.output_norm == 5);
    CHECK_FALSE(c5.pass);

    BoundCertificate cn = disc_counterexample(8, 8);
    CHECK(cn.ratio() == Rat(8, 2));
    CHECK_FALSE(cn.pass);

    CHECK_THROWS_AS(disc_counterexample(9, 8), std::invalid_argument);
    CHECK_THROWS_AS(disc_counterexample(1, 8), std::invalid_argument);
}

TEST_CASE("stein composed certificate") {
    AlgebraFlavor st = AlgebraFlavor::stein(1, {Rat(1, 2), Rat(3, 4)});
    TrialRng rng(3);
    for (int t = 0; t < 50; ++t) {
        MultiSeries f = random_diagonal_vanishing(rng, Q, 6, 6, -9, 9);
        BoundCertificate c = certify_stein_composed(f, st);
        CHECK(c.pass);
    }
    AlgebraFlavor single = AlgebraFlavor::stein(1, {Rat(1, 2)});
    CHECK_THROWS_WITH_AS(certify_stein_composed(zs("y-z", 4), single),
                         doctest::Contains("two listed radii"), std::invalid_argument);
}
