#ifndef BANALG_COMPLEXES_HPP
#define BANALG_COMPLEXES_HPP

#include "banalg/linalg.hpp"
#include "banalg/series.hpp"

#include <optional>

namespace banalg {

long binomial(long n, long k);
/// Size-`size` subsets of {0..k-1} in lexicographic order.
std::vector<std::vector<int>> index_combinations(int k, int size);
/// Number of monomials of total degree <= order in nvars variables.
long monomial_count(int nvars, int order);
/// Monomials of total degree <= order in graded-lex order, smallest first.
std::vector<Exponents> monomial_basis(int nvars, int order);
long monomial_rank(const Exponents& e);

/// Direct sum of monomial windows: one summand per listed order, each the
/// span of monomials of total degree <= that order. Order -1 marks an empty
/// summand (window pushed below zero).
struct FreeModule {
    int nvars = 0;
    std::vector<int> summand_orders;

    long summand_dim(size_t s) const;
    long dim() const;
    long index_of(size_t summand, const Exponents& e) const;
    std::pair<size_t, Exponents> label(long index) const;
    /// Total degree of each basis monomial, by index.
    std::vector<int> degrees() const;
};

struct HomologyEntry {
    long rank = 0;
    std::vector<Int> torsion;  // nontrivial invariant factors (integer rings)
};

struct HomologyReport {
    int lo = 0;
    std::vector<HomologyEntry> entries;

    long rank_at(int degree) const;
    /// True when every rank outside `degree` vanishes.
    bool concentrated_at(int degree) const;
    std::string str() const;
    bool same_ranks(const HomologyReport& o) const;
};

/// Finitely many free modules with boundaries running toward degree hi();
/// boundaries[i] maps modules[i] to modules[i+1] and consecutive boundaries
/// compose to zero.
struct ChainComplex {
    RingDescriptor ring = RingDescriptor::rationals();
    int lo = 0;
    std::vector<FreeModule> modules;
    std::vector<Matrix> boundaries;

    int hi() const { return lo + static_cast<int>(modules.size()) - 1; }
    long dim_at(int degree) const;
    void validate() const;
};

/// Truncated model of a flavored algebra: monomials of total degree <= order.
struct TruncatedAlgebra {
    RingDescriptor ring = RingDescriptor::rationals();
    AlgebraFlavor flavor = AlgebraFlavor::polynomial(1);
    int order = 8;

    int nvars() const { return flavor.nvars(); }
    long dim() const { return monomial_count(nvars(), order); }
    MultiSeries series(const std::string& text) const;
    MultiSeries coordinate(int var) const;
};

/// Matrix of multiplication by `s` from the degree<=src window into the
/// degree<=dst window; requires dst >= src + deg(s) so nothing is dropped.
Matrix multiplication_matrix(const MultiSeries& s, int src_order, int dst_order);

/// A Koszul datum: ambient truncated algebra and the chosen elements.
/// `forced_gen_degrees`, when nonempty, fixes the window bookkeeping degree
/// of each generator (used when a generator is the image of one with a
/// different degree, e.g. zero images of coordinates).
struct KoszulSpec {
    TruncatedAlgebra algebra;
    std::vector<MultiSeries> gens;
    std::vector<int> forced_gen_degrees;
};

/// Koszul complex in degrees -k..0. The summand for a subset S of the
/// generators is windowed at order - sum of the generator degrees over S,
/// so every boundary entry is exact.
ChainComplex build_koszul(const KoszulSpec& spec);

/// Two-term diagonal complex of a one-variable flavor: multiplication by
/// (y - z) on the doubled variables.
ChainComplex diagonal_koszul(const TruncatedAlgebra& one_var);
/// Same, augmented by the diagonal restriction onto the one-variable window.
ChainComplex diagonal_koszul_augmented(const TruncatedAlgebra& one_var);

/// An algebra map given by generator images: variable i of the source goes
/// to images[i], a series in the target's variables.
struct AlgebraMorphism {
    TruncatedAlgebra source;
    TruncatedAlgebra target;
    std::vector<MultiSeries> images;

    static AlgebraMorphism canonical(const TruncatedAlgebra& source,
                                     const TruncatedAlgebra& target);
    MultiSeries apply(const MultiSeries& f) const;
    bool is_identity_shape() const;  // same flavor and coordinate images
};

/// Base change of a Koszul datum along an algebra map: the generators are
/// pushed through the map and the complex is rebuilt over the target.
KoszulSpec tensor_over(const KoszulSpec& spec, const AlgebraMorphism& map);

/// Ranks by exact elimination; over integer rings additionally the
/// invariant factors of the incoming boundary (torsion of the homology).
HomologyReport homology(const ChainComplex& X);

/// Homology of the band: rank of (ker cap F)/(im cap F) where F is the span
/// of basis monomials of total degree <= band.
HomologyReport banded_homology(const ChainComplex& X, int band);

}  // namespace banalg

#endif
