#ifndef BANALG_HOCHSCHILD_HPP
#define BANALG_HOCHSCHILD_HPP

#include "banalg/hepi.hpp"

namespace banalg {

/// Commutative algebra of finite rank over a field, by structure constants.
/// This is the carrier for the bar-complex oracle and the hypersurface
/// models, where the truncated multiplication is the ring law.
class FiniteAlgebra {
  public:
    using Element = std::vector<Scalar>;

    FiniteAlgebra() = default;

    const RingDescriptor& ring() const { return ring_; }
    long dim() const { return static_cast<long>(names_.size()); }
    const std::string& name(long i) const { return names_[i]; }
    std::string describe() const { return description_; }

    Element zero() const { return Element(dim(), Scalar::zero(ring_)); }
    Element unit() const;
    Element basis_element(long i) const;
    Element multiply(const Element& x, const Element& y) const;
    /// Matrix of multiplication by x on the basis.
    Matrix multiplication_matrix(const Element& x) const;

    /// Product of two basis elements as a sparse combination.
    const std::vector<std::pair<long, Scalar>>& table(long i, long j) const {
        return table_[i][j];
    }

    /// Monomials of total degree <= order with the truncated ring law
    /// (products above the order vanish).
    static FiniteAlgebra truncated_flavor(const RingDescriptor& field, int nvars, int order);
    /// k[x]/(f) for a univariate f with invertible leading coefficient.
    static FiniteAlgebra univariate_quotient(const RingDescriptor& field, const MultiSeries& f);
    /// k x k with the two idempotents as basis.
    static FiniteAlgebra split_pair(const RingDescriptor& field);

  private:
    RingDescriptor ring_ = RingDescriptor::rationals();
    std::vector<std::string> names_;
    std::vector<std::vector<std::vector<std::pair<long, Scalar>>>> table_;
    std::string description_;
    long unit_ = 0;
};

enum class HHModel { DiagonalKoszul, Bar, Hypersurface };

struct HHReport {
    HHModel model = HHModel::DiagonalKoszul;
    std::string algebra;
    int truncation_order = 0;
    std::vector<long> ranks;  // HH_0, HH_1, ...
    std::string str() const;
};

/// HH of a truncated flavored algebra via the diagonal Koszul resolution:
/// zero differentials on windows shrinking one degree per homological step.
/// Requires every variable's flavor to pass the strictness condition.
HHReport hh_koszul(const TruncatedAlgebra& A, std::uint64_t seed = 0);
/// Same ranks evaluated on the stable band (order - nvars).
HHReport hh_koszul_banded(const TruncatedAlgebra& A, std::uint64_t seed = 0);

/// Homology of the cyclic bar complex A^{(x) q+1} through degree `cutoff`.
/// Guarded: dim(A) <= 12 and cutoff <= 4.
HHReport hh_bar(const FiniteAlgebra& A, int cutoff);

/// Periodic hypersurface model for k[x]/(f): differentials alternate 0 and
/// multiplication by f'.
HHReport hh_hypersurface(const RingDescriptor& field, const MultiSeries& f, int cutoff);

/// Rank equality of B (x)_A HH(A) against HH(B) on the windows; requires a
/// verified homotopy epimorphism.
bool hh_base_change(const AlgebraMap& f, std::uint64_t seed = 0);

/// HH of P_n // (f_1..f_k) via the quotient model, with a base-change check
/// against an analytified quotient when a flavor is supplied. The sequence
/// must be regular on the truncation (Koszul homology vanishing below 0).
struct CompleteIntersectionHH {
    HHReport report;
    bool base_change_ok = true;
};
CompleteIntersectionHH hh_complete_intersection(const TruncatedAlgebra& P,
                                                const std::vector<MultiSeries>& ideal,
                                                const AlgebraFlavor* analytification = nullptr,
                                                int cutoff = 4, std::uint64_t seed = 0);

}  // namespace banalg

#endif
