#include "banalg/hochschild.hpp"

#include <sstream>

namespace banalg {

FiniteAlgebra::Element FiniteAlgebra::unit() const { return basis_element(unit_); }

FiniteAlgebra::Element FiniteAlgebra::basis_element(long i) const {
    Element e = zero();
    e[i] = Scalar::one(ring_);
    return e;
}

FiniteAlgebra::Element FiniteAlgebra::multiply(const Element& x, const Element& y) const {
    Element out = zero();
    for (long i = 0; i < dim(); ++i) {
        if (x[i].is_zero()) continue;
        for (long j = 0; j < dim(); ++j) {
            if (y[j].is_zero()) continue;
            Scalar c = x[i] * y[j];
            for (const auto& [k, s] : table_[i][j]) out[k] = out[k] + c * s;
        }
    }
    return out;
}

Matrix FiniteAlgebra::multiplication_matrix(const Element& x) const {
    Matrix m(ring_, dim(), dim());
    for (long j = 0; j < dim(); ++j) {
        Element col = multiply(x, basis_element(j));
        for (long i = 0; i < dim(); ++i) m.at(i, j) = col[i];
    }
    return m;
}

FiniteAlgebra FiniteAlgebra::truncated_flavor(const RingDescriptor& field, int nvars, int order) {
    if (!field.is_field()) throw std::invalid_argument("finite algebra needs field coefficients");
    FiniteAlgebra A;
    A.ring_ = field;
    std::vector<Exponents> basis = monomial_basis(nvars, order);
    const long d = static_cast<long>(basis.size());
    for (const Exponents& e : basis) {
        std::ostringstream os;
        if (total_degree(e) == 0) {
            os << "1";
        } else {
            for (int i = 0; i < nvars; ++i) {
                if (e[i] == 0) continue;
                os << "x" << i + 1;
                if (e[i] > 1) os << "^" << e[i];
            }
        }
        A.names_.push_back(os.str());
    }
    A.table_.assign(d, std::vector<std::vector<std::pair<long, Scalar>>>(d));
    for (long i = 0; i < d; ++i)
        for (long j = 0; j < d; ++j) {
            if (total_degree(basis[i]) + total_degree(basis[j]) > order) continue;
            Exponents sum(nvars);
            for (int v = 0; v < nvars; ++v) sum[v] = basis[i][v] + basis[j][v];
            A.table_[i][j].emplace_back(monomial_rank(sum), Scalar::one(field));
        }
    A.unit_ = 0;
    std::ostringstream os;
    os << "trunc[" << field.str() << "," << nvars << "vars,<=" << order << "]";
    A.description_ = os.str();
    return A;
}

FiniteAlgebra FiniteAlgebra::univariate_quotient(const RingDescriptor& field,
                                                 const MultiSeries& f) {
    if (!field.is_field()) throw std::invalid_argument("finite algebra needs field coefficients");
    if (f.nvars() != 1) throw std::invalid_argument("quotient relation must be univariate");
    const int d = f.degree();
    if (d < 1 || f.coeff({d}).is_zero())
        throw std::invalid_argument("quotient relation must have positive degree");

    // Reduction x^d = -(lower terms)/lead.
    Scalar lead = Scalar(field, f.coeff({d}).as_rational());
    std::vector<Scalar> reduce(d, Scalar::zero(field));
    for (int i = 0; i < d; ++i)
        reduce[i] = -Scalar(field, f.coeff({i}).as_rational()).divide(lead);

    // powers[k] = x^k reduced, for k <= 2d-2.
    std::vector<std::vector<Scalar>> powers(2 * d - 1,
                                            std::vector<Scalar>(d, Scalar::zero(field)));
    for (int k = 0; k < d; ++k) powers[k][k] = Scalar::one(field);
    for (int k = d; k <= 2 * d - 2; ++k) {
        // x^k = x * x^{k-1}
        std::vector<Scalar> shifted(d, Scalar::zero(field));
        for (int i = 0; i + 1 < d; ++i) shifted[i + 1] = powers[k - 1][i];
        Scalar top = powers[k - 1][d - 1];
        for (int i = 0; i < d; ++i) shifted[i] = shifted[i] + top * reduce[i];
        powers[k] = shifted;
    }

    FiniteAlgebra A;
    A.ring_ = field;
    for (int i = 0; i < d; ++i)
        A.names_.push_back(i == 0 ? "1" : (i == 1 ? "x" : "x^" + std::to_string(i)));
    A.table_.assign(d, std::vector<std::vector<std::pair<long, Scalar>>>(d));
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
            for (int k = 0; k < d; ++k)
                if (!powers[i + j][k].is_zero()) A.table_[i][j].emplace_back(k, powers[i + j][k]);
    A.unit_ = 0;
    A.description_ = field.str() + "[x]/(" + f.str() + ")";
    return A;
}

FiniteAlgebra FiniteAlgebra::split_pair(const RingDescriptor& field) {
    if (!field.is_field()) throw std::invalid_argument("finite algebra needs field coefficients");
    FiniteAlgebra A;
    A.ring_ = field;
    A.names_ = {"e1", "e2"};
    A.table_.assign(2, std::vector<std::vector<std::pair<long, Scalar>>>(2));
    A.table_[0][0].emplace_back(0, Scalar::one(field));
    A.table_[1][1].emplace_back(1, Scalar::one(field));
    A.description_ = field.str() + " x " + field.str();
    // The unit is e1 + e2, not a basis vector; multiply() handles it, and
    // the bar complex only needs the table.
    A.unit_ = -1;
    return A;
}

std::string HHReport::str() const {
    std::ostringstream os;
    switch (model) {
        case HHModel::DiagonalKoszul: os << "koszul"; break;
        case HHModel::Bar: os << "bar"; break;
        case HHModel::Hypersurface: os << "hypersurface"; break;
    }
    os << " " << algebra << " ranks";
    for (long r : ranks) os << " " << r;
    return os.str();
}

namespace {

KoszulSpec hh_koszul_spec(const TruncatedAlgebra& A) {
    // A (x)_{A(x)A} K_{A(x)A}: the boundary elements are the images of
    // y_i - z_i under the multiplication map, identically zero, while the
    // windows keep the original degree-1 bookkeeping.
    const int n = A.nvars();
    KoszulSpec spec;
    spec.algebra = A;
    for (int i = 0; i < n; ++i) spec.gens.push_back(MultiSeries(A.ring, n, A.order));
    spec.forced_gen_degrees.assign(n, 1);
    return spec;
}

void require_strict_flavors(const TruncatedAlgebra& A, std::uint64_t seed) {
    for (int i = 0; i < A.nvars(); ++i) {
        TruncatedAlgebra comp{A.ring, A.flavor.component(i), A.order};
        if (!check_strictness_condition(comp, comp.coordinate(0), seed).ok())
            throw std::invalid_argument("unsupported flavor: strictness fails for variable " +
                                        std::to_string(i + 1));
    }
}

std::vector<long> ranks_from_complex(const ChainComplex& X) {
    HomologyReport h = homology(X);
    std::vector<long> ranks;
    for (int j = 0; j >= X.lo; --j) ranks.push_back(h.rank_at(j));
    return ranks;
}

}  // namespace

HHReport hh_koszul(const TruncatedAlgebra& A, std::uint64_t seed) {
    require_strict_flavors(A, seed);
    ChainComplex X = build_koszul(hh_koszul_spec(A));
    HHReport r;
    r.model = HHModel::DiagonalKoszul;
    r.algebra = A.flavor.str() + "/" + A.ring.str();
    r.truncation_order = A.order;
    r.ranks = ranks_from_complex(X);
    return r;
}

HHReport hh_koszul_banded(const TruncatedAlgebra& A, std::uint64_t seed) {
    require_strict_flavors(A, seed);
    ChainComplex X = build_koszul(hh_koszul_spec(A));
    HomologyReport h = banded_homology(X, A.order - A.nvars());
    HHReport r;
    r.model = HHModel::DiagonalKoszul;
    r.algebra = A.flavor.str() + "/" + A.ring.str();
    r.truncation_order = A.order;
    for (int j = 0; j >= X.lo; --j) r.ranks.push_back(h.rank_at(j));
    return r;
}

HHReport hh_bar(const FiniteAlgebra& A, int cutoff) {
    if (A.dim() > 12) throw std::invalid_argument("bar complex guarded to rank <= 12");
    if (cutoff > 4 || cutoff < 0) throw std::invalid_argument("bar cutoff guarded to <= 4");
    const long d = A.dim();
    const RingDescriptor& field = A.ring();

    // C_q = A^{(x) q+1}; tuples indexed little-endian in base d.
    auto dim_of = [&](int q) {
        long out = 1;
        for (int t = 0; t <= q; ++t) out *= d;
        return out;
    };

    // b_q : C_q -> C_{q-1}.
    auto boundary = [&](int q) {
        Matrix b(field, dim_of(q - 1), dim_of(q));
        std::vector<long> tuple(q + 1, 0);
        long cols = dim_of(q);
        for (long col = 0; col < cols; ++col) {
            long code = col;
            for (int t = 0; t <= q; ++t) {
                tuple[t] = code % d;
                code /= d;
            }
            for (int j = 0; j <= q; ++j) {
                // Merge positions j, j+1 (cyclically for j = q).
                long x = j < q ? tuple[j] : tuple[q];
                long y = j < q ? tuple[j + 1] : tuple[0];
                bool negative = j % 2 == 1;
                for (const auto& [k, s] : A.table(x, y)) {
                    long row = 0, mult = 1;
                    if (j < q) {
                        for (int t = 0; t < q; ++t) {
                            long digit = t < j ? tuple[t] : (t == j ? k : tuple[t + 1]);
                            row += digit * mult;
                            mult *= d;
                        }
                    } else {
                        row = k;
                        mult = d;
                        for (int t = 1; t < q; ++t) {
                            row += tuple[t] * mult;
                            mult *= d;
                        }
                    }
                    Scalar v = negative ? -s : s;
                    b.at(row, col) = b.at(row, col) + v;
                }
            }
        }
        return b;
    };

    std::vector<long> bd_rank(cutoff + 2, 0);
    for (int q = 1; q <= cutoff + 1; ++q) bd_rank[q] = rank(boundary(q));

    HHReport r;
    r.model = HHModel::Bar;
    r.algebra = A.describe();
    r.truncation_order = cutoff;
    for (int q = 0; q <= cutoff; ++q) {
        long out_rank = bd_rank[q];        // b_q leaving C_q (0 for q = 0)
        long in_rank = bd_rank[q + 1];     // b_{q+1} arriving
        r.ranks.push_back(dim_of(q) - out_rank - in_rank);
    }
    return r;
}

HHReport hh_hypersurface(const RingDescriptor& field, const MultiSeries& f, int cutoff) {
    FiniteAlgebra A = FiniteAlgebra::univariate_quotient(field, f);

    // Derivative of the relation.
    MultiSeries fp(f.ring(), 1, f.order());
    for (const auto& [e, c] : f.coeffs()) {
        if (e[0] == 0) continue;
        Scalar v = c * Scalar(c.ring(), Int(e[0]));
        fp.set_coeff({e[0] - 1}, fp.coeff({e[0] - 1}) + v);
    }
    FiniteAlgebra::Element deriv = A.zero();
    for (const auto& [e, c] : fp.coeffs())
        if (e[0] < A.dim()) deriv[e[0]] = Scalar(field, c.as_rational());
    long rk = rank(A.multiplication_matrix(deriv));

    // Differentials alternate 0 and multiplication by f'; in degree q > 0
    // the incoming map is f' for odd q and 0 for even q.
    HHReport r;
    r.model = HHModel::Hypersurface;
    r.algebra = A.describe();
    r.truncation_order = cutoff;
    for (int q = 0; q <= cutoff; ++q) {
        long out_rank = (q >= 1 && q % 2 == 0) ? rk : 0;
        long in_rank = (q + 1 >= 1 && (q + 1) % 2 == 0) ? rk : 0;
        r.ranks.push_back(A.dim() - out_rank - in_rank);
    }
    return r;
}

bool hh_base_change(const AlgebraMap& f, std::uint64_t seed) {
    HepiVerdict v = verify_hepi(f, seed);
    if (!v.verdict)
        throw std::invalid_argument("base change requires a verified homotopy epimorphism");

    KoszulSpec source_hh = hh_koszul_spec(f.source);
    KoszulSpec pushed = tensor_over(source_hh, f.morphism());
    std::vector<long> lhs = ranks_from_complex(build_koszul(pushed));
    std::vector<long> rhs = ranks_from_complex(build_koszul(hh_koszul_spec(f.target)));
    return lhs == rhs;
}

CompleteIntersectionHH hh_complete_intersection(const TruncatedAlgebra& P,
                                                const std::vector<MultiSeries>& ideal,
                                                const AlgebraFlavor* analytification, int cutoff,
                                                std::uint64_t seed) {
    // Regularity on the truncation: Koszul homology vanishes below degree 0.
    if (!ideal.empty()) {
        ChainComplex K = build_koszul({P, ideal});
        HomologyReport h = homology(K);
        for (int deg = K.lo; deg < 0; ++deg)
            if (h.rank_at(deg) != 0)
                throw std::invalid_argument("ideal is not a regular sequence on the truncation");
    }

    CompleteIntersectionHH out;
    if (ideal.empty()) {
        out.report = hh_koszul(P, seed);
        out.base_change_ok = true;
        return out;
    }
    if (P.nvars() != 1 || ideal.size() != 1)
        throw std::invalid_argument(
            "complete intersection model implemented for univariate hypersurfaces");

    RingDescriptor field = P.ring.is_field() ? P.ring : RingDescriptor::rationals();
    out.report = hh_hypersurface(field, ideal[0], cutoff);

    if (analytification != nullptr) {
        TruncatedAlgebra target{P.ring, *analytification, P.order};
        AlgebraMap an = AlgebraMap::canonical(P, target);
        HepiVerdict v = verify_hepi(an, seed);
        MultiSeries pushed = an.morphism().apply(ideal[0]);
        HHReport analytified = hh_hypersurface(field, pushed, cutoff);
        out.base_change_ok = v.verdict && analytified.ranks == out.report.ranks;
    }
    return out;
}

}  // namespace banalg
