#include "banalg/division.hpp"

namespace banalg {

const char* bound_kind_name(BoundKind k) {
    switch (k) {
        case BoundKind::PolyCubed: return "poly-cubed";
        case BoundKind::TateCoefficientwise: return "tate-coefficientwise";
        case BoundKind::FormalWeightTransform: return "formal-weight-transform";
        case BoundKind::DiscCounterexample: return "disc-counterexample";
    }
    return "?";
}

std::string BoundCertificate::kind_name() const { return bound_kind_name(bound_kind); }

MultiSeries diag_divide(const MultiSeries& f) {
    if (f.nvars() != 2) throw std::invalid_argument("diagonal division needs two variables");
    if (!diagonal_restrict(f).is_zero())
        throw std::invalid_argument("series does not vanish on the diagonal");
    const int N = f.order();
    MultiSeries g(f.ring(), 2, N);
    // g_{k,l} = sum_{t=0..l} a_{k+1+t, l-t}; only k+l <= N-1 can be hit.
    for (const auto& [e, c] : f.coeffs()) {
        int i = e[0], j = e[1];
        // a_{i,j} contributes to g_{k,l} with k+1+t = i, l-t = j, t = i-1-k.
        for (int t = 0; t <= i - 1; ++t) {
            Exponents kl{i - 1 - t, j + t};
            g.set_coeff(kl, g.coeff(kl) + c);
        }
    }
    return g;
}

BoundCertificate certify_poly_bound(const MultiSeries& f) {
    MultiSeries g = diag_divide(f);
    int d = f.degree();
    BoundCertificate cert;
    cert.flavor = AlgebraFlavor::polynomial(2);
    cert.bound_kind = BoundKind::PolyCubed;
    cert.input_norm = flavor_norm(f, cert.flavor);
    cert.output_norm = flavor_norm(g, cert.flavor);
    cert.bound_constant = Rat(Int(d) * d * d);
    cert.pass = cert.output_norm <= cert.bound_constant * cert.input_norm;
    return cert;
}

bool diag_coefficientwise_ok(const MultiSeries& f, const MultiSeries& g) {
    // |g_{k,l}| <= (l+1) max_{0<=t<=l} |a_{k+1+t,l-t}|.
    for (const auto& [kl, c] : g.coeffs()) {
        int k = kl[0], l = kl[1];
        Rat best = 0;
        for (int t = 0; t <= l; ++t) best = std::max(best, f.coeff({k + 1 + t, l - t}).norm());
        if (c.norm() > Rat(l + 1) * best) return false;
    }
    return true;
}

BoundCertificate certify_tate_coefficientwise(const MultiSeries& f, const AlgebraFlavor& tate) {
    if (tate.kind != FlavorKind::Tate || tate.nvars() != 2 || tate.radii[0] != tate.radii[1])
        throw std::invalid_argument("expected a two-variable tate flavor with equal radii");
    MultiSeries g = diag_divide(f);

    BoundCertificate cert;
    cert.flavor = tate;
    cert.bound_kind = BoundKind::TateCoefficientwise;
    cert.input_norm = flavor_norm(f, tate);
    cert.output_norm = flavor_norm(g, tate);

    // Aggregate: (K,L) is the graded-lex-smallest argmax of |g_{k,l}| r^{k+l}.
    int big_l = 0;
    Rat best_val = -1;
    const Rat& r = tate.radii[0];
    for (const auto& [kl, c] : g.coeffs()) {
        Rat term = c.norm();
        for (int t = 0; t < kl[0] + kl[1]; ++t) term *= r;
        if (term > best_val) {  // map order is graded-lex smallest first
            best_val = term;
            big_l = kl[1];
        }
    }
    // The quotient coefficient at (K,L) gathers inputs one degree higher, so
    // a radius below one contributes a further 1/r.
    cert.bound_constant = Rat(big_l + 1) * std::max(Rat(1), Rat(1) / r);
    cert.pass = diag_coefficientwise_ok(f, g) &&
                cert.output_norm <= cert.bound_constant * cert.input_norm;
    return cert;
}

namespace {

// phi(k,l) = (l+1) * prod_{s=0..l} psi(k+1+s, l-s)
Rat phi_weight(const WeightTable& psi, int k, int l) {
    Int eta = 1;
    for (int s = 0; s <= l; ++s) eta *= psi.at({k + 1 + s, l - s});
    return Rat(Int(l + 1) * eta);
}

}  // namespace

BoundCertificate certify_formal_weight_transform(const MultiSeries& f, const WeightTable& psi) {
    for (const auto& [e, w] : psi.entries)
        if (w < 1) throw std::invalid_argument("weight table values must be >= 1");
    MultiSeries g = diag_divide(f);

    BoundCertificate cert;
    cert.flavor = AlgebraFlavor::formal_ps(2, psi);
    cert.bound_kind = BoundKind::FormalWeightTransform;
    cert.input_norm = flavor_norm(f, cert.flavor);  // sup |a|/psi

    Rat out = 0;
    for (const auto& [kl, c] : g.coeffs())
        out = std::max(out, c.norm() / phi_weight(psi, kl[0], kl[1]));
    cert.output_norm = out;
    cert.bound_constant = 1;
    cert.pass = cert.output_norm <= cert.input_norm;
    return cert;
}

BoundCertificate disc_counterexample(int n, int order) {
    if (n < 2) throw std::invalid_argument("counterexample needs n >= 2");
    if (n > order) throw std::invalid_argument("counterexample degree exceeds truncation order");
    RingDescriptor z = RingDescriptor::integers();
    MultiSeries f(z, 2, order);
    f.set_coeff({n, 0}, Scalar::one(z));
    f.set_coeff({0, n}, -Scalar::one(z));
    MultiSeries g = diag_divide(f);

    BoundCertificate cert;
    cert.flavor = AlgebraFlavor::disc({1, 1});
    cert.bound_kind = BoundKind::DiscCounterexample;
    cert.input_norm = flavor_norm(f, cert.flavor);
    cert.output_norm = flavor_norm(g, cert.flavor);
    // pass records whether the hypothetical uniform bound (constant 1)
    // survives; it fails as soon as the quotient norm exceeds the input.
    cert.bound_constant = 1;
    cert.pass = cert.output_norm <= cert.bound_constant * cert.input_norm;
    return cert;
}

long TrialRng::uniform(long lo, long hi) {
    if (hi < lo) throw std::invalid_argument("empty sample range");
    std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<long>(eng() % span);
}

MultiSeries random_series(TrialRng& rng, const RingDescriptor& ring, int nvars, int order,
                          int max_degree, long lo, long hi) {
    MultiSeries f(ring, nvars, order);
    Exponents e(nvars, 0);
    // Walk all monomials of total degree <= max_degree.
    while (true) {
        long c = rng.uniform(lo, hi);
        if (c != 0) f.set_coeff(e, Scalar(ring, Int(c)));
        int i = nvars - 1;
        while (i >= 0) {
            ++e[i];
            if (total_degree(e) <= max_degree) break;
            e[i] = 0;
            --i;
        }
        if (i < 0) break;
    }
    return f;
}

MultiSeries random_diagonal_vanishing(TrialRng& rng, const RingDescriptor& ring, int order,
                                      int max_degree, long lo, long hi) {
    MultiSeries draw = random_series(rng, ring, 2, order, max_degree, lo, hi);
    return draw - tensor_embed_left(diagonal_restrict(draw));
}

WeightTable random_weight_table(TrialRng& rng, int nvars, int max_degree, long lo, long hi) {
    if (lo < 1) throw std::invalid_argument("weights must be >= 1");
    WeightTable t;
    Exponents e(nvars, 0);
    while (true) {
        t.entries[e] = Int(rng.uniform(lo, hi));
        int i = nvars - 1;
        while (i >= 0) {
            ++e[i];
            if (total_degree(e) <= max_degree) break;
            e[i] = 0;
            --i;
        }
        if (i < 0) break;
    }
    return t;
}

BoundCertificate certify_stein_composed(const MultiSeries& f, const AlgebraFlavor& stein) {
    if (stein.kind != FlavorKind::Stein)
        throw std::invalid_argument("expected a stein flavor");
    if (stein.stein_radii.size() < 2)
        throw std::invalid_argument("stein certification needs at least two listed radii");
    if (f.nvars() != 2) throw std::invalid_argument("stein certification runs on two variables");

    const Rat r_top = stein.stein_radii.back();
    const Rat r_prev = stein.stein_radii[stein.stein_radii.size() - 2];
    const int N = f.order();

    MultiSeries g = diag_divide(f);

    auto disc_norm = [&](const MultiSeries& h, const Rat& r) {
        std::vector<Rat> radii(2, r);
        return flavor_norm(h, AlgebraFlavor::disc(radii));
    };
    auto tate_norm = [&](const MultiSeries& h, const Rat& r) {
        std::vector<Rat> radii(2, r);
        return flavor_norm(h, AlgebraFlavor::tate(radii));
    };

    // Operator norm on the truncation of the shrinking embedding
    // Tate(r_top) -> Disc(r_prev): sum over monomials of (r_prev/r_top)^deg.
    Rat embed_norm = 0;
    Rat ratio = r_prev / r_top;
    for (int d = 0; d <= N; ++d) {
        Rat pw = 1;
        for (int t = 0; t < d; ++t) pw *= ratio;
        embed_norm += Rat(d + 1) * pw;
    }

    // Division stage bound at the top radius.
    BoundCertificate tate_cert =
        certify_tate_coefficientwise(f, AlgebraFlavor::tate({r_top, r_top}));

    BoundCertificate cert;
    cert.flavor = stein;
    cert.bound_kind = BoundKind::TateCoefficientwise;
    cert.input_norm = disc_norm(f, r_top);
    cert.output_norm = disc_norm(g, r_prev);
    cert.bound_constant = embed_norm * tate_cert.bound_constant;
    bool chain_ok = tate_cert.pass && tate_norm(f, r_top) <= cert.input_norm;
    cert.pass = chain_ok && cert.output_norm <= cert.bound_constant * cert.input_norm;
    return cert;
}

}  // namespace banalg
