#ifndef BANALG_DIVISION_HPP
#define BANALG_DIVISION_HPP

#include "banalg/series.hpp"

#include <cstdint>
#include <random>

namespace banalg {

enum class BoundKind { PolyCubed, TateCoefficientwise, FormalWeightTransform, DiscCounterexample };

/// A verified inequality record for one division instance.
struct BoundCertificate {
    AlgebraFlavor flavor;
    Rat input_norm = 0;
    Rat output_norm = 0;
    Rat bound_constant = 0;
    BoundKind bound_kind = BoundKind::PolyCubed;
    bool pass = false;

    /// output/input when the input norm is nonzero (counterexample ratio).
    Rat ratio() const { return input_norm == 0 ? Rat(0) : output_norm / input_norm; }
    std::string kind_name() const;
};

/// Divides a two-variable series vanishing on the diagonal by (y - z):
/// g_{k,l} = sum_{t=0..l} a_{k+1+t, l-t}. The result satisfies
/// (y - z) * g = f exactly in total degree <= order.
MultiSeries diag_divide(const MultiSeries& f);

/// Checks ||g||_fine <= d^3 ||f||_fine for a degree-d input.
BoundCertificate certify_poly_bound(const MultiSeries& f);

/// The per-coefficient inequality |g_{k,l}| <= (l+1) max_t |a_{k+1+t,l-t}|
/// for g the diagonal quotient of f.
bool diag_coefficientwise_ok(const MultiSeries& f, const MultiSeries& g);

/// Checks the coefficientwise inequality and the aggregate
/// ||g|| <= (L+1) max(1, 1/r) ||f|| in the Tate norm, where (K,L) is the
/// graded-lex-smallest argmax of |g_{k,l}| r^{k+l}. At radius one the
/// constant is exactly L+1.
BoundCertificate certify_tate_coefficientwise(const MultiSeries& f, const AlgebraFlavor& tate);

/// Checks sup |g|/phi <= sup |a|/psi with phi(k,l) = (l+1) prod_s psi(k+1+s, l-s).
BoundCertificate certify_formal_weight_transform(const MultiSeries& f, const WeightTable& psi);

/// The family f = y^n - z^n in Disc(1,1) over Z: quotient norm n against
/// input norm 2, violating every fixed bound constant as n grows.
BoundCertificate disc_counterexample(int n, int order);

/// Composed certificate for the Stein flavor: the Tate coefficientwise
/// bound at the top listed radius chained through the radius-shrinking
/// embedding into the next listed radius, whose operator norm on the
/// truncation is computed exactly.
BoundCertificate certify_stein_composed(const MultiSeries& f, const AlgebraFlavor& stein);

const char* bound_kind_name(BoundKind k);

/// Deterministic RNG for certificate campaigns; trial k of a campaign with
/// seed s uses TrialRng(s + k).
struct TrialRng {
    std::mt19937_64 eng;
    explicit TrialRng(std::uint64_t seed) : eng(seed) {}
    long uniform(long lo, long hi);  // inclusive bounds
};

/// Dense random series: every monomial of total degree <= max_degree gets
/// an integer coefficient drawn from [lo, hi].
MultiSeries random_series(TrialRng& rng, const RingDescriptor& ring, int nvars, int order,
                          int max_degree, long lo, long hi);

/// Random two-variable series vanishing on the diagonal, built by removing
/// the left embedding of the diagonal part of a random draw.
MultiSeries random_diagonal_vanishing(TrialRng& rng, const RingDescriptor& ring, int order,
                                      int max_degree, long lo, long hi);

/// Full weight table on monomials of total degree <= max_degree with values
/// drawn from [lo, hi] (all >= 1).
WeightTable random_weight_table(TrialRng& rng, int nvars, int max_degree, long lo, long hi);

}  // namespace banalg

#endif
