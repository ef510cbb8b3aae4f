#include "banalg/localization.hpp"

namespace banalg {

namespace {

void check_joint_inputs(const TruncatedAlgebra& A, const TruncatedAlgebra& C,
                        const MultiSeries& a) {
    if (C.nvars() != 1) throw std::invalid_argument("localization flavor C must be one-dimensional");
    if (C.ring != A.ring || C.order != A.order)
        throw std::invalid_argument("base and flavor need one ring and truncation order");
    if (a.nvars() != A.nvars() || a.order() != A.order || a.ring() != A.ring)
        throw std::invalid_argument("element does not live in the base algebra");
}

TruncatedAlgebra joint_algebra(const TruncatedAlgebra& A, const std::vector<TruncatedAlgebra>& Cs) {
    AlgebraFlavor flavor = A.flavor;
    for (const TruncatedAlgebra& C : Cs) flavor = AlgebraFlavor::tensor(flavor, C.flavor);
    return TruncatedAlgebra{A.ring, flavor, A.order};
}

Matrix base_inclusion(const TruncatedAlgebra& A, const ChainComplex& X) {
    // Inclusion of the base window into the degree-0 module, f -> f (x) 1.
    const FreeModule& top = X.modules.back();
    Matrix inc(X.ring, top.dim(), monomial_count(A.nvars(), A.order));
    std::vector<Exponents> basis = monomial_basis(A.nvars(), A.order);
    for (long col = 0; col < inc.cols; ++col) {
        Exponents e(top.nvars, 0);
        for (int i = 0; i < A.nvars(); ++i) e[i] = basis[col][i];
        inc.at(top.index_of(top.summand_orders.size() - 1, e), col) = Scalar::one(X.ring);
    }
    return inc;
}

LocalizationResult finish(LocalizationKind kind, const TruncatedAlgebra& A, KoszulSpec spec) {
    LocalizationResult out;
    out.kind = kind;
    out.spec = std::move(spec);
    out.complex = build_koszul(out.spec);
    out.augmentation = base_inclusion(A, out.complex);
    out.homology_report = homology(out.complex);
    out.base_vars = A.nvars();
    return out;
}

}  // namespace

LocalizationResult weierstrass(const TruncatedAlgebra& A, const TruncatedAlgebra& C,
                               const MultiSeries& a) {
    check_joint_inputs(A, C, a);
    TruncatedAlgebra joint = joint_algebra(A, {C});
    int vars = joint.nvars();
    MultiSeries gen = joint.coordinate(vars - 1) - a.embedded(vars, 0);
    return finish(LocalizationKind::Weierstrass, A, {joint, {gen}});
}

LocalizationResult laurent(const TruncatedAlgebra& A, const TruncatedAlgebra& C,
                           const MultiSeries& a) {
    check_joint_inputs(A, C, a);
    TruncatedAlgebra joint = joint_algebra(A, {C});
    int vars = joint.nvars();
    MultiSeries one = MultiSeries::constant(joint.ring, vars, joint.order, Scalar::one(joint.ring));
    MultiSeries gen = one - a.embedded(vars, 0) * joint.coordinate(vars - 1);
    return finish(LocalizationKind::Laurent, A, {joint, {gen}});
}

LocalizationResult rational(const TruncatedAlgebra& A, const std::vector<TruncatedAlgebra>& Cs,
                            const MultiSeries& g, const std::vector<MultiSeries>& fs,
                            const std::vector<RationalWitness>& witnesses) {
    if (Cs.size() != fs.size() || witnesses.size() != fs.size())
        throw std::invalid_argument("rational localization needs one flavor and witness per f");
    if (fs.empty()) throw std::invalid_argument("rational localization needs at least one f");
    for (size_t i = 0; i < Cs.size(); ++i) check_joint_inputs(A, Cs[i], fs[i]);

    // Witness identities a*f + b*g = 1, exactly on the truncated base.
    MultiSeries one = MultiSeries::constant(A.ring, A.nvars(), A.order, Scalar::one(A.ring));
    for (size_t i = 0; i < fs.size(); ++i) {
        MultiSeries combo = witnesses[i].a * fs[i] + witnesses[i].b * g;
        if (combo != one)
            throw std::invalid_argument(
                "witness identity a*f + b*g = 1 fails on the truncation for element " +
                std::to_string(i + 1));
    }

    TruncatedAlgebra joint = joint_algebra(A, Cs);
    int vars = joint.nvars();
    std::vector<MultiSeries> gens;
    for (size_t i = 0; i < fs.size(); ++i) {
        MultiSeries y = joint.coordinate(A.nvars() + static_cast<int>(i));
        gens.push_back(g.embedded(vars, 0) * y - fs[i].embedded(vars, 0));
    }
    return finish(LocalizationKind::Rational, A, {joint, gens});
}

LocalizationResult adic_completion(const TruncatedAlgebra& A,
                                   const std::vector<MultiSeries>& generators) {
    if (generators.empty()) throw std::invalid_argument("adic completion needs generators");
    std::vector<TruncatedAlgebra> Cs;
    for (size_t i = 0; i < generators.size(); ++i)
        Cs.push_back(TruncatedAlgebra{A.ring, AlgebraFlavor::formal_ps(1), A.order});
    for (size_t i = 0; i < Cs.size(); ++i) check_joint_inputs(A, Cs[i], generators[i]);

    TruncatedAlgebra joint = joint_algebra(A, Cs);
    int vars = joint.nvars();
    std::vector<MultiSeries> gens;
    for (size_t i = 0; i < generators.size(); ++i) {
        MultiSeries y = joint.coordinate(A.nvars() + static_cast<int>(i));
        gens.push_back(y - generators[i].embedded(vars, 0));
    }
    LocalizationResult out = finish(LocalizationKind::Adic, A, {joint, gens});
    return out;
}

ChainComplex derived_quotient(const TruncatedAlgebra& A,
                              const std::vector<MultiSeries>& elements) {
    return build_koszul({A, elements});
}

ChainComplex derived_quotient(const FiniteAlgebra& A,
                              const std::vector<FiniteAlgebra::Element>& elements) {
    const int k = static_cast<int>(elements.size());
    const long d = A.dim();

    ChainComplex X;
    X.ring = A.ring();
    X.lo = -k;
    std::vector<std::vector<std::vector<int>>> subsets(k + 1);
    for (int j = 0; j <= k; ++j) subsets[j] = index_combinations(k, j);
    for (int pos = 0; pos <= k; ++pos) {
        FreeModule mod;
        mod.nvars = 0;
        mod.summand_orders.assign(subsets[k - pos].size() * static_cast<size_t>(d), 0);
        X.modules.push_back(mod);
    }

    std::vector<Matrix> mults;
    for (const auto& e : elements) mults.push_back(A.multiplication_matrix(e));

    for (int pos = 0; pos + 1 <= k; ++pos) {
        int depth = k - pos;
        const auto& src_subsets = subsets[depth];
        const auto& dst_subsets = subsets[depth - 1];
        std::map<std::vector<int>, size_t> dst_index;
        for (size_t i = 0; i < dst_subsets.size(); ++i) dst_index[dst_subsets[i]] = i;

        Matrix bd(X.ring, static_cast<long>(dst_subsets.size()) * d,
                  static_cast<long>(src_subsets.size()) * d);
        for (size_t si = 0; si < src_subsets.size(); ++si) {
            const std::vector<int>& S = src_subsets[si];
            for (size_t t = 0; t < S.size(); ++t) {
                std::vector<int> T = S;
                T.erase(T.begin() + static_cast<long>(t));
                long dst_off = static_cast<long>(dst_index.at(T)) * d;
                long src_off = static_cast<long>(si) * d;
                const Matrix& block = mults[S[t]];
                bool negative = t % 2 == 1;
                for (long r = 0; r < d; ++r)
                    for (long c = 0; c < d; ++c) {
                        if (block.at(r, c).is_zero()) continue;
                        Scalar v = negative ? -block.at(r, c) : block.at(r, c);
                        bd.at(dst_off + r, src_off + c) = bd.at(dst_off + r, src_off + c) + v;
                    }
            }
        }
        X.boundaries.push_back(std::move(bd));
    }
    X.validate();
    return X;
}

namespace {

// Relabels a series on (base | block) variables into (base | 2 blocks),
// placing the block at the given offset.
MultiSeries place_block(const MultiSeries& s, int base_vars, int block_vars, int target_vars,
                        int block_offset) {
    MultiSeries out(s.ring(), target_vars, s.order());
    for (const auto& [e, c] : s.coeffs()) {
        Exponents big(target_vars, 0);
        for (int i = 0; i < base_vars; ++i) big[i] = e[i];
        for (int i = 0; i < block_vars; ++i) big[block_offset + i] = e[base_vars + i];
        out.set_coeff(big, c);
    }
    return out;
}

}  // namespace

SelfproductVerdict localization_selfproduct(const LocalizationResult& L) {
    const TruncatedAlgebra& joint = L.spec.algebra;
    const int base = L.base_vars;
    const int block = joint.nvars() - base;
    const int N = joint.order;

    // Double the adjoined block: L (x)_A L lives on base + 2*block variables.
    AlgebraFlavor doubled_flavor = L.spec.algebra.flavor;
    for (int i = 0; i < block; ++i)
        doubled_flavor = AlgebraFlavor::tensor(doubled_flavor, joint.flavor.component(base + i));
    TruncatedAlgebra doubled{joint.ring, doubled_flavor, N};
    const int vars = doubled.nvars();

    std::vector<MultiSeries> gens;
    for (const MultiSeries& g : L.spec.gens) {
        gens.push_back(place_block(g, base, block, vars, base));
        gens.push_back(place_block(g, base, block, vars, base + block));
    }
    ChainComplex self = build_koszul({doubled, gens});

    int deepest_self = N;
    for (const MultiSeries& g : gens) deepest_self -= g.degree();
    SelfproductVerdict v;
    v.band = deepest_self;

    v.localization_banded = banded_homology(L.complex, v.band);
    v.selfproduct_banded = banded_homology(self, v.band);
    v.pass = v.localization_banded.same_ranks(v.selfproduct_banded);

    bool integral =
        joint.ring.kind == RingKind::Integer || joint.ring.kind == RingKind::TrivialInteger;
    if (integral) {
        HomologyReport a = L.homology_report;
        HomologyReport b = homology(self);
        v.torsion_match =
            a.entries.back().torsion == b.entries.back().torsion;  // degree-0 torsion
        v.pass = v.pass && v.torsion_match;
    }
    return v;
}

}  // namespace banalg
