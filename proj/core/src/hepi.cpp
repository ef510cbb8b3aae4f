#include "banalg/hepi.hpp"

namespace banalg {

AlgebraMap AlgebraMap::canonical(const TruncatedAlgebra& source, const TruncatedAlgebra& target) {
    if (source.nvars() != target.nvars())
        throw std::invalid_argument("canonical map needs equal variable counts");
    if (source.order != target.order || source.ring != target.ring)
        throw std::invalid_argument("canonical map needs matching order and ring");
    AlgebraMap m{source, target, {}};
    for (int i = 0; i < target.nvars(); ++i) m.images.push_back(target.coordinate(i));
    return m;
}

AlgebraMorphism AlgebraMap::morphism() const { return AlgebraMorphism{source, target, images}; }

AlgebraMap AlgebraMap::then(const AlgebraMap& g) const {
    if (!(target.flavor == g.source.flavor) || target.order != g.source.order ||
        target.ring != g.source.ring)
        throw std::invalid_argument("maps are not composable");
    AlgebraMap out{source, g.target, {}};
    AlgebraMorphism gm = g.morphism();
    for (const MultiSeries& u : images) out.images.push_back(gm.apply(u));
    return out;
}

bool AlgebraMap::images_are_coordinates() const {
    if (static_cast<int>(images.size()) != source.nvars() || source.nvars() != target.nvars())
        return false;
    for (int i = 0; i < target.nvars(); ++i)
        if (images[i] != target.coordinate(i)) return false;
    return true;
}

bool AlgebraMap::is_identity() const {
    return source.flavor == target.flavor && source.ring == target.ring &&
           source.order == target.order && images_are_coordinates();
}

namespace {

// One flavor-specific division certificate on a concrete input.
BoundCertificate flavor_certificate(const AlgebraFlavor& flavor, const MultiSeries& f,
                                    TrialRng& rng) {
    switch (flavor.kind) {
        case FlavorKind::Polynomial:
            return certify_poly_bound(f);
        case FlavorKind::Tate:
            return certify_tate_coefficientwise(
                f, AlgebraFlavor::tate({flavor.radii[0], flavor.radii[0]}));
        case FlavorKind::Dagger:
            return certify_tate_coefficientwise(
                f, AlgebraFlavor::tate({flavor.rho[0], flavor.rho[0]}));
        case FlavorKind::FormalPS: {
            WeightTable psi = random_weight_table(rng, 2, f.order(), 1, 5);
            return certify_formal_weight_transform(f, psi);
        }
        case FlavorKind::Stein:
            return certify_stein_composed(f, flavor);
        case FlavorKind::Disc:
            return disc_counterexample(std::min(f.order(), 8), f.order());
        case FlavorKind::Hybrid:
            throw std::invalid_argument("hybrid flavors certify per component");
    }
    throw std::logic_error("unreachable");
}

}  // namespace

StrictnessResult check_strictness_condition(const TruncatedAlgebra& C, const MultiSeries& c,
                                            std::uint64_t seed, int trials) {
    if (C.nvars() != 1)
        throw std::invalid_argument("strictness condition runs on one-variable flavors");
    if (c != C.coordinate(0))
        throw std::invalid_argument(
            "unsupported strictness element: only the coordinate is supported");

    StrictnessResult out;

    // Rank side: the augmented diagonal complex is exact away from degree 0
    // and the quotient map is onto the one-variable window.
    ChainComplex aug = diagonal_koszul_augmented(C);
    out.diagonal_homology = homology(aug);
    long pi_rank = rank(aug.boundaries[1]);
    bool onto = pi_rank == aug.modules[2].dim();
    bool torsion_free = out.diagonal_homology.entries[1].torsion.empty() &&
                        out.diagonal_homology.entries[2].torsion.empty();
    out.ranks_ok = out.diagonal_homology.rank_at(-2) == 0 &&
                   out.diagonal_homology.rank_at(-1) == 0 && onto && torsion_free;

    // Norm side: the flavor's division bound on a deterministic sample.
    out.certificates_ok = true;
    bool have_worst = false;
    Rat worst_ratio = 0;
    for (int t = 0; t < trials; ++t) {
        TrialRng rng(seed + static_cast<std::uint64_t>(t));
        MultiSeries f = random_diagonal_vanishing(rng, C.ring, C.order, C.order, -9, 9);
        if (C.flavor.kind == FlavorKind::Disc) {
            // The counterexample family decides the disc flavor.
            f = MultiSeries(C.ring, 2, C.order);
        }
        BoundCertificate cert = flavor_certificate(C.flavor, f, rng);
        if (!cert.pass) out.certificates_ok = false;
        if (!have_worst || cert.ratio() > worst_ratio || !cert.pass) {
            out.worst_certificate = cert;
            worst_ratio = cert.ratio();
            have_worst = true;
        }
        if (!cert.pass) break;
        if (C.flavor.kind == FlavorKind::Disc) break;
    }
    return out;
}

HepiVerdict verify_hepi(const AlgebraMap& f, std::uint64_t seed) {
    const int n = f.source.nvars();
    if (n != f.target.nvars())
        throw std::invalid_argument("flavor pair unsupported: variable counts differ");
    if (static_cast<int>(f.images.size()) != n)
        throw std::invalid_argument("map lacks generator images");
    if (f.source.order != f.target.order || f.source.ring != f.target.ring)
        throw std::invalid_argument("flavor pair unsupported: order or ring mismatch");

    HepiVerdict v;
    v.element_compat = f.images_are_coordinates();
    v.identity_degenerate = f.is_identity();

    v.strictness_ok_source = true;
    v.strictness_ok_target = true;
    for (int i = 0; i < n; ++i) {
        TruncatedAlgebra src{f.source.ring, f.source.flavor.component(i), f.source.order};
        TruncatedAlgebra tgt{f.target.ring, f.target.flavor.component(i), f.target.order};
        if (!check_strictness_condition(src, src.coordinate(0), seed).ok())
            v.strictness_ok_source = false;
        if (!check_strictness_condition(tgt, tgt.coordinate(0), seed).ok())
            v.strictness_ok_target = false;
    }

    // Truncated model of B (x)_A K_A (x)_A B: Koszul on u_i(y) - u_i(z)
    // over the doubled target algebra.
    TruncatedAlgebra doubled{f.target.ring,
                             AlgebraFlavor::tensor(f.target.flavor, f.target.flavor),
                             f.target.order};
    std::vector<MultiSeries> gens;
    for (int i = 0; i < n; ++i) {
        MultiSeries left = f.images[i].embedded(2 * n, 0).truncated(f.target.order);
        MultiSeries right = f.images[i].embedded(2 * n, n).truncated(f.target.order);
        gens.push_back(left - right);
    }
    ChainComplex self = build_koszul({doubled, gens});
    v.derived_selfproduct_ranks = homology(self);
    v.expected_rank = f.target.dim();
    v.selfproduct_ok = v.derived_selfproduct_ranks.concentrated_at(0) &&
                       v.derived_selfproduct_ranks.rank_at(0) == v.expected_rank;

    bool strict = v.strictness_ok_source && v.strictness_ok_target;
    v.verdict = v.element_compat && v.selfproduct_ok && (strict || v.identity_degenerate);
    return v;
}

bool check_two_out_of_three(const AlgebraMap& f, const AlgebraMap& g, std::uint64_t seed) {
    AlgebraMap comp = f.then(g);
    int trues = 0;
    if (verify_hepi(f, seed).verdict) ++trues;
    if (verify_hepi(g, seed).verdict) ++trues;
    if (verify_hepi(comp, seed).verdict) ++trues;
    return trues != 2;
}

AlgebraMap tensor_map(const AlgebraMap& f, const AlgebraMap& g) {
    if (f.source.ring != g.source.ring || f.source.order != g.source.order)
        throw std::invalid_argument("tensor factors need one ring and order");
    TruncatedAlgebra source{f.source.ring,
                            AlgebraFlavor::tensor(f.source.flavor, g.source.flavor),
                            f.source.order};
    TruncatedAlgebra target{f.target.ring,
                            AlgebraFlavor::tensor(f.target.flavor, g.target.flavor),
                            f.target.order};
    const int nf = f.source.nvars(), ng = g.source.nvars();
    AlgebraMap out{source, target, {}};
    for (const MultiSeries& u : f.images)
        out.images.push_back(u.embedded(nf + ng, 0).truncated(target.order));
    for (const MultiSeries& u : g.images)
        out.images.push_back(u.embedded(nf + ng, nf).truncated(target.order));
    return out;
}

bool check_tensor_closure(const AlgebraMap& f, const AlgebraMap& g, std::uint64_t seed) {
    return verify_hepi(tensor_map(f, g), seed).verdict;
}

}  // namespace banalg
