#ifndef BANALG_HEPI_HPP
#define BANALG_HEPI_HPP

#include "banalg/complexes.hpp"
#include "banalg/division.hpp"

#include <cstdint>

namespace banalg {

/// Map between truncated flavored algebras, given by generator images.
struct AlgebraMap {
    TruncatedAlgebra source;
    TruncatedAlgebra target;
    std::vector<MultiSeries> images;

    static AlgebraMap canonical(const TruncatedAlgebra& source, const TruncatedAlgebra& target);
    AlgebraMorphism morphism() const;
    /// this followed by g; requires target and g.source to agree.
    AlgebraMap then(const AlgebraMap& g) const;
    bool is_identity() const;
    bool images_are_coordinates() const;
};

/// Result of the strictness condition for a pair (C, coordinate): rank
/// exactness of the truncated diagonal complex plus the flavor's division
/// bound certificate.
struct StrictnessResult {
    bool ranks_ok = false;
    bool certificates_ok = false;
    BoundCertificate worst_certificate;
    HomologyReport diagonal_homology;

    bool ok() const { return ranks_ok && certificates_ok; }
};

/// The element must be the coordinate of the one-variable flavor; anything
/// else is rejected as unsupported.
StrictnessResult check_strictness_condition(const TruncatedAlgebra& C, const MultiSeries& c,
                                            std::uint64_t seed = 0, int trials = 16);

struct HepiVerdict {
    bool strictness_ok_source = false;
    bool strictness_ok_target = false;
    bool element_compat = false;
    bool identity_degenerate = false;
    HomologyReport derived_selfproduct_ranks;
    long expected_rank = 0;
    bool selfproduct_ok = false;
    bool verdict = false;
};

/// Diagonal-Koszul criterion: both flavors satisfy strictness per variable,
/// generator images are the coordinates, and the truncated model of
/// B (x)^L_A B is concentrated in degree 0 with the rank of truncated B.
/// Identity maps are degenerate and certified regardless of strictness.
HepiVerdict verify_hepi(const AlgebraMap& f, std::uint64_t seed = 0);

/// Verdicts of f, g and g after f are consistent with two-out-of-three:
/// never exactly one false.
bool check_two_out_of_three(const AlgebraMap& f, const AlgebraMap& g, std::uint64_t seed = 0);

/// Builds the map on the tensor of the (disjoint) variable blocks and
/// verifies it.
bool check_tensor_closure(const AlgebraMap& f, const AlgebraMap& g, std::uint64_t seed = 0);
AlgebraMap tensor_map(const AlgebraMap& f, const AlgebraMap& g);

}  // namespace banalg

#endif
