#ifndef BANALG_LOCALIZATION_HPP
#define BANALG_LOCALIZATION_HPP

#include "banalg/hochschild.hpp"

namespace banalg {

enum class LocalizationKind { Weierstrass, Laurent, Rational, Adic };

/// A presented derived localization: the Koszul datum over the joint
/// algebra (base variables first, one block per adjoined variable), the
/// materialized complex, its homology, and the inclusion of the base window
/// into the degree-0 module.
struct LocalizationResult {
    LocalizationKind kind = LocalizationKind::Weierstrass;
    KoszulSpec spec;
    ChainComplex complex;
    Matrix augmentation;
    HomologyReport homology_report;

    int base_vars = 0;  // leading variables belonging to the base algebra
};

/// Bezout witnesses for a rational localization: a*f + b*g = 1 on the
/// truncation.
struct RationalWitness {
    MultiSeries a;
    MultiSeries b;
};

/// Koszul complex on (y - a) over A (x) C, C one-dimensional.
LocalizationResult weierstrass(const TruncatedAlgebra& A, const TruncatedAlgebra& C,
                               const MultiSeries& a);

/// Koszul complex on (1 - a*y) over A (x) C.
LocalizationResult laurent(const TruncatedAlgebra& A, const TruncatedAlgebra& C,
                           const MultiSeries& a);

/// Iterated Koszul complex on (g*y_i - f_i) over A (x) C_1 (x) ... (x) C_n.
/// Witness identities are verified on the truncation, never solved for.
LocalizationResult rational(const TruncatedAlgebra& A, const std::vector<TruncatedAlgebra>& Cs,
                            const MultiSeries& g, const std::vector<MultiSeries>& fs,
                            const std::vector<RationalWitness>& witnesses);

/// Derived adic completion: Weierstrass against the formal power series
/// flavor, one adjoined variable per generator.
LocalizationResult adic_completion(const TruncatedAlgebra& A,
                                   const std::vector<MultiSeries>& generators);

/// Koszul complex on the elements over A itself (no adjoined variables).
ChainComplex derived_quotient(const TruncatedAlgebra& A, const std::vector<MultiSeries>& elements);

/// Koszul complex over a finite ring model, where the truncated
/// multiplication is the ring law; zero divisors show up in degree -1.
ChainComplex derived_quotient(const FiniteAlgebra& A,
                              const std::vector<FiniteAlgebra::Element>& elements);

/// Compares the banded homology of L (x)_A L against L itself, doubling the
/// adjoined variable block; the paper's selfproduct test at truncation
/// scale. The band is the deepest window of the doubled complex.
struct SelfproductVerdict {
    int band = 0;
    HomologyReport localization_banded;
    HomologyReport selfproduct_banded;
    bool torsion_match = true;
    bool pass = false;
};
SelfproductVerdict localization_selfproduct(const LocalizationResult& L);

}  // namespace banalg

#endif
