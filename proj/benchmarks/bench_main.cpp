#include <benchmark/benchmark.h>

#include "banalg/hochschild.hpp"
#include "banalg/localization.hpp"

using namespace banalg;

namespace {
const RingDescriptor Z = RingDescriptor::integers();
const RingDescriptor Q = RingDescriptor::rationals();
const RingDescriptor Q2 = RingDescriptor::padic(2, 16);
}  // namespace

static void BM_DiagDivide(benchmark::State& state) {
    const int degree = static_cast<int>(state.range(0));
    TrialRng rng(1);
    MultiSeries f = random_diagonal_vanishing(rng, Z, degree, degree, -99, 99);
    for (auto _ : state) benchmark::DoNotOptimize(diag_divide(f));
}
BENCHMARK(BM_DiagDivide)->Arg(6)->Arg(10)->Arg(16);

static void BM_PolyCertificate(benchmark::State& state) {
    TrialRng rng(2);
    MultiSeries f = random_diagonal_vanishing(rng, Z, 10, 10, -99, 99);
    for (auto _ : state) benchmark::DoNotOptimize(certify_poly_bound(f));
}
BENCHMARK(BM_PolyCertificate);

static void BM_TateCertificate(benchmark::State& state) {
    TrialRng rng(3);
    MultiSeries f = random_diagonal_vanishing(rng, Q2, 10, 10, -99, 99);
    AlgebraFlavor tate = AlgebraFlavor::tate({1, 1});
    for (auto _ : state) benchmark::DoNotOptimize(certify_tate_coefficientwise(f, tate));
}
BENCHMARK(BM_TateCertificate);

static void BM_DiagonalKoszulHomology(benchmark::State& state) {
    const int order = static_cast<int>(state.range(0));
    TruncatedAlgebra C{Q, AlgebraFlavor::polynomial(1), order};
    for (auto _ : state) {
        ChainComplex X = diagonal_koszul_augmented(C);
        benchmark::DoNotOptimize(homology(X));
    }
}
BENCHMARK(BM_DiagonalKoszulHomology)->Arg(4)->Arg(8)->Arg(12);

static void BM_VerifyHepi(benchmark::State& state) {
    const int order = static_cast<int>(state.range(0));
    TruncatedAlgebra src{Q2, AlgebraFlavor::polynomial(1), order};
    TruncatedAlgebra tgt{Q2, AlgebraFlavor::tate({1}), order};
    AlgebraMap map = AlgebraMap::canonical(src, tgt);
    for (auto _ : state) benchmark::DoNotOptimize(verify_hepi(map));
}
BENCHMARK(BM_VerifyHepi)->Arg(4)->Arg(8);

static void BM_LaurentSelfproduct(benchmark::State& state) {
    const int order = static_cast<int>(state.range(0));
    TruncatedAlgebra A{Q2, AlgebraFlavor::tate({1}), order};
    TruncatedAlgebra C{Q2, AlgebraFlavor::tate({1}), order};
    LocalizationResult L = laurent(A, C, A.coordinate(0));
    for (auto _ : state) benchmark::DoNotOptimize(localization_selfproduct(L));
}
BENCHMARK(BM_LaurentSelfproduct)->Arg(6)->Arg(8);

static void BM_BarComplex(benchmark::State& state) {
    const int dim = static_cast<int>(state.range(0));
    FiniteAlgebra A = FiniteAlgebra::truncated_flavor(Q, 1, dim - 1);
    for (auto _ : state) benchmark::DoNotOptimize(hh_bar(A, 4));
}
BENCHMARK(BM_BarComplex)->Arg(2)->Arg(3);

static void BM_SmithNormalForm(benchmark::State& state) {
    TruncatedAlgebra zbase{Z, AlgebraFlavor::polynomial(0), 8};
    TruncatedAlgebra dag{Z, AlgebraFlavor::dagger({Rat(1, 2)}, {Rat(1)}), 8};
    MultiSeries two = MultiSeries::constant(Z, 0, 8, Scalar(Z, 2));
    LocalizationResult L = weierstrass(zbase, dag, two);
    for (auto _ : state) benchmark::DoNotOptimize(smith_normal_form(L.complex.boundaries[0]));
}
BENCHMARK(BM_SmithNormalForm);

BENCHMARK_MAIN();
