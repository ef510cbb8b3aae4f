#include "banalg/complexes.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace banalg {

long binomial(long n, long k) {
    if (k < 0 || k > n) return 0;
    Int r = 1;
    for (long i = 0; i < k; ++i) {
        r *= n - i;
        r /= i + 1;
    }
    return static_cast<long>(r);
}

long monomial_count(int nvars, int order) {
    if (order < 0) return 0;
    return binomial(order + nvars, nvars);
}

namespace {

void enumerate_compositions(int nvars, int degree, Exponents& current, size_t pos,
                            std::vector<Exponents>& out) {
    if (pos + 1 == current.size()) {
        current[pos] = degree;
        out.push_back(current);
        return;
    }
    for (int v = 0; v <= degree; ++v) {
        current[pos] = v;
        enumerate_compositions(nvars, degree - v, current, pos + 1, out);
    }
}

}  // namespace

std::vector<Exponents> monomial_basis(int nvars, int order) {
    std::vector<Exponents> out;
    if (order < 0) return out;
    if (nvars == 0) {
        out.push_back({});
        return out;
    }
    Exponents current(nvars, 0);
    for (int d = 0; d <= order; ++d) enumerate_compositions(nvars, d, current, 0, out);
    return out;
}

long monomial_rank(const Exponents& e) {
    int n = static_cast<int>(e.size());
    int d = total_degree(e);
    long below = monomial_count(n, d - 1);
    // Lex rank within the degree-d level.
    long within = 0;
    int rem = d;
    for (int i = 0; i + 1 < n; ++i) {
        for (int v = 0; v < e[i]; ++v)
            within += binomial(rem - v + n - i - 2, n - i - 2);
        rem -= e[i];
    }
    return below + within;
}

long FreeModule::summand_dim(size_t s) const { return monomial_count(nvars, summand_orders[s]); }

long FreeModule::dim() const {
    long d = 0;
    for (size_t s = 0; s < summand_orders.size(); ++s) d += summand_dim(s);
    return d;
}

long FreeModule::index_of(size_t summand, const Exponents& e) const {
    long off = 0;
    for (size_t s = 0; s < summand; ++s) off += summand_dim(s);
    return off + monomial_rank(e);
}

std::pair<size_t, Exponents> FreeModule::label(long index) const {
    for (size_t s = 0; s < summand_orders.size(); ++s) {
        long d = summand_dim(s);
        if (index < d) {
            std::vector<Exponents> basis = monomial_basis(nvars, summand_orders[s]);
            return {s, basis[index]};
        }
        index -= d;
    }
    throw std::out_of_range("basis index out of range");
}

std::vector<int> FreeModule::degrees() const {
    std::vector<int> out;
    for (int order : summand_orders)
        for (const Exponents& e : monomial_basis(nvars, order)) out.push_back(total_degree(e));
    return out;
}

long HomologyReport::rank_at(int degree) const {
    int i = degree - lo;
    if (i < 0 || i >= static_cast<int>(entries.size())) return 0;
    return entries[i].rank;
}

bool HomologyReport::concentrated_at(int degree) const {
    for (size_t i = 0; i < entries.size(); ++i)
        if (lo + static_cast<int>(i) != degree && entries[i].rank != 0) return false;
    return true;
}

bool HomologyReport::same_ranks(const HomologyReport& o) const {
    int a = std::min(lo, o.lo);
    int b = std::max(lo + static_cast<int>(entries.size()), o.lo + static_cast<int>(o.entries.size()));
    for (int d = a; d < b; ++d)
        if (rank_at(d) != o.rank_at(d)) return false;
    return true;
}

std::string HomologyReport::str() const {
    std::ostringstream os;
    for (size_t i = 0; i < entries.size(); ++i) {
        if (i) os << " ";
        os << "H(" << lo + static_cast<int>(i) << ")=" << entries[i].rank;
        if (!entries[i].torsion.empty()) {
            os << "+tors(";
            for (size_t t = 0; t < entries[i].torsion.size(); ++t)
                os << (t ? "," : "") << entries[i].torsion[t].str();
            os << ")";
        }
    }
    return os.str();
}

long ChainComplex::dim_at(int degree) const {
    int i = degree - lo;
    if (i < 0 || i >= static_cast<int>(modules.size())) return 0;
    return modules[i].dim();
}

void ChainComplex::validate() const {
    if (boundaries.size() + 1 != modules.size() && !(modules.empty() && boundaries.empty()))
        throw std::logic_error("boundary count mismatch");
    for (size_t i = 0; i < boundaries.size(); ++i) {
        if (boundaries[i].cols != modules[i].dim() || boundaries[i].rows != modules[i + 1].dim())
            throw std::logic_error("boundary shape mismatch at position " + std::to_string(i));
        if (i + 1 < boundaries.size() && !(boundaries[i + 1] * boundaries[i]).is_zero())
            throw std::logic_error("d^2 != 0 at position " + std::to_string(i));
    }
}

MultiSeries TruncatedAlgebra::series(const std::string& text) const {
    return parse_series(text, ring, nvars(), order);
}

MultiSeries TruncatedAlgebra::coordinate(int var) const {
    return MultiSeries::variable(ring, nvars(), order, var);
}

Matrix multiplication_matrix(const MultiSeries& s, int src_order, int dst_order) {
    int n = s.nvars();
    if (src_order >= 0 && dst_order < src_order + s.degree())
        throw std::invalid_argument("multiplication window would drop terms");
    Matrix m(s.ring(), monomial_count(n, dst_order), monomial_count(n, src_order));
    if (m.cols == 0 || m.rows == 0) return m;
    std::vector<Exponents> src = monomial_basis(n, src_order);
    for (long col = 0; col < m.cols; ++col) {
        for (const auto& [e, c] : s.coeffs()) {
            Exponents target(n);
            for (int i = 0; i < n; ++i) target[i] = src[col][i] + e[i];
            long row = monomial_rank(target);
            m.at(row, col) = m.at(row, col) + c;
        }
    }
    return m;
}

std::vector<std::vector<int>> index_combinations(int k, int size) {
    std::vector<std::vector<int>> out;
    if (size == 0) return {{}};
    std::vector<int> c(size);
    for (int i = 0; i < size; ++i) c[i] = i;
    if (size > k) return out;
    while (true) {
        out.push_back(c);
        int i = size - 1;
        while (i >= 0 && c[i] == k - size + i) --i;
        if (i < 0) break;
        ++c[i];
        for (int j = i + 1; j < size; ++j) c[j] = c[j - 1] + 1;
    }
    return out;
}

ChainComplex build_koszul(const KoszulSpec& spec) {
    const int k = static_cast<int>(spec.gens.size());
    const int n = spec.algebra.nvars();
    const int N = spec.algebra.order;
    for (const MultiSeries& g : spec.gens) {
        if (g.nvars() != n || g.order() != N || g.ring() != spec.algebra.ring)
            throw std::invalid_argument("koszul element incompatible with the ambient algebra");
        if (g.degree() > N) throw std::invalid_argument("koszul element degree overflow");
    }
    std::vector<int> gen_deg(k);
    if (!spec.forced_gen_degrees.empty()) {
        if (static_cast<int>(spec.forced_gen_degrees.size()) != k)
            throw std::invalid_argument("forced generator degree count mismatch");
        gen_deg = spec.forced_gen_degrees;
        for (int i = 0; i < k; ++i)
            if (spec.gens[i].degree() > gen_deg[i] && !spec.gens[i].is_zero())
                throw std::invalid_argument("forced generator degree below the actual degree");
    } else {
        for (int i = 0; i < k; ++i) gen_deg[i] = spec.gens[i].degree();
    }

    ChainComplex X;
    X.ring = spec.algebra.ring;
    X.lo = -k;

    std::vector<std::vector<std::vector<int>>> subsets(k + 1);
    for (int j = 0; j <= k; ++j) subsets[j] = index_combinations(k, j);

    auto window = [&](const std::vector<int>& subset) {
        int w = N;
        for (int i : subset) w -= gen_deg[i];
        return w;
    };

    for (int pos = 0; pos <= k; ++pos) {
        int depth = k - pos;
        FreeModule mod;
        mod.nvars = n;
        for (const auto& s : subsets[depth]) mod.summand_orders.push_back(window(s));
        X.modules.push_back(mod);
    }

    for (int pos = 0; pos + 1 <= k; ++pos) {
        int depth = k - pos;
        const auto& src_subsets = subsets[depth];
        const auto& dst_subsets = subsets[depth - 1];
        std::map<std::vector<int>, size_t> dst_index;
        for (size_t i = 0; i < dst_subsets.size(); ++i) dst_index[dst_subsets[i]] = i;

        const FreeModule& src = X.modules[pos];
        const FreeModule& dst = X.modules[pos + 1];
        Matrix d(X.ring, dst.dim(), src.dim());

        long src_off = 0;
        for (size_t si = 0; si < src_subsets.size(); ++si) {
            const std::vector<int>& S = src_subsets[si];
            int w_src = src.summand_orders[si];
            for (size_t t = 0; t < S.size(); ++t) {
                std::vector<int> T = S;
                T.erase(T.begin() + static_cast<long>(t));
                size_t ti = dst_index.at(T);
                int w_dst = dst.summand_orders[ti];
                Matrix block = multiplication_matrix(spec.gens[S[t]], w_src, w_dst);
                long dst_off = 0;
                for (size_t q = 0; q < ti; ++q) dst_off += dst.summand_dim(q);
                bool negative = t % 2 == 1;
                for (long r = 0; r < block.rows; ++r)
                    for (long c = 0; c < block.cols; ++c) {
                        if (block.at(r, c).is_zero()) continue;
                        Scalar v = negative ? -block.at(r, c) : block.at(r, c);
                        d.at(dst_off + r, src_off + c) = d.at(dst_off + r, src_off + c) + v;
                    }
            }
            src_off += src.summand_dim(si);
        }
        X.boundaries.push_back(std::move(d));
    }
    X.validate();
    return X;
}

ChainComplex diagonal_koszul(const TruncatedAlgebra& one_var) {
    if (one_var.nvars() != 1) throw std::invalid_argument("diagonal koszul needs a 1-variable flavor");
    TruncatedAlgebra doubled{one_var.ring, AlgebraFlavor::tensor(one_var.flavor, one_var.flavor),
                             one_var.order};
    MultiSeries diff = doubled.coordinate(0) - doubled.coordinate(1);
    return build_koszul({doubled, {diff}});
}

ChainComplex diagonal_koszul_augmented(const TruncatedAlgebra& one_var) {
    ChainComplex X = diagonal_koszul(one_var);
    X.lo = -2;
    const int N = one_var.order;

    FreeModule target;
    target.nvars = 1;
    target.summand_orders = {N};

    Matrix pi(X.ring, target.dim(), X.modules.back().dim());
    std::vector<Exponents> basis = monomial_basis(2, N);
    for (long col = 0; col < pi.cols; ++col) {
        Exponents e{basis[col][0] + basis[col][1]};
        long row = monomial_rank(e);
        pi.at(row, col) = pi.at(row, col) + Scalar::one(X.ring);
    }
    X.modules.push_back(target);
    X.boundaries.push_back(std::move(pi));
    X.validate();
    return X;
}

AlgebraMorphism AlgebraMorphism::canonical(const TruncatedAlgebra& source,
                                           const TruncatedAlgebra& target) {
    if (source.nvars() != target.nvars())
        throw std::invalid_argument("canonical map needs equal variable counts");
    AlgebraMorphism m{source, target, {}};
    for (int i = 0; i < target.nvars(); ++i) m.images.push_back(target.coordinate(i));
    return m;
}

MultiSeries AlgebraMorphism::apply(const MultiSeries& f) const {
    if (f.nvars() != source.nvars() || f.order() != source.order)
        throw std::invalid_argument("series does not live in the map source");
    if (static_cast<int>(images.size()) != source.nvars())
        throw std::invalid_argument("map lacks a generator image");
    MultiSeries out(target.ring, target.nvars(), target.order);
    for (const auto& [e, c] : f.coeffs()) {
        MultiSeries term = MultiSeries::constant(target.ring, target.nvars(), target.order,
                                                 Scalar(target.ring, c.as_rational()));
        for (int i = 0; i < source.nvars(); ++i)
            for (int t = 0; t < e[i]; ++t) term = term * images[i];
        out = out + term;
    }
    return out;
}

bool AlgebraMorphism::is_identity_shape() const {
    if (!(source.flavor == target.flavor) || source.order != target.order ||
        source.ring != target.ring)
        return false;
    for (int i = 0; i < target.nvars(); ++i)
        if (images[i] != target.coordinate(i)) return false;
    return true;
}

KoszulSpec tensor_over(const KoszulSpec& spec, const AlgebraMorphism& map) {
    if (map.source.nvars() != spec.algebra.nvars() || map.source.order != spec.algebra.order)
        throw std::invalid_argument("map source does not match the koszul ambient algebra");
    KoszulSpec out;
    out.algebra = map.target;
    for (const MultiSeries& g : spec.gens) out.gens.push_back(map.apply(g));
    out.forced_gen_degrees = spec.forced_gen_degrees;
    return out;
}

HomologyReport homology(const ChainComplex& X) {
    HomologyReport report;
    report.lo = X.lo;
    const size_t n = X.modules.size();
    std::vector<long> ranks(X.boundaries.size(), 0);
    for (size_t i = 0; i < X.boundaries.size(); ++i) ranks[i] = rank(X.boundaries[i]);

    bool integral = X.ring.kind == RingKind::Integer || X.ring.kind == RingKind::TrivialInteger;
    for (size_t i = 0; i < n; ++i) {
        HomologyEntry e;
        long out_rank = i < X.boundaries.size() ? ranks[i] : 0;
        long in_rank = i > 0 ? ranks[i - 1] : 0;
        e.rank = X.modules[i].dim() - out_rank - in_rank;
        if (integral && i > 0) {
            SmithResult snf = smith_normal_form(X.boundaries[i - 1]);
            e.torsion = snf.invariant_factors;
        }
        report.entries.push_back(std::move(e));
    }
    return report;
}

HomologyReport banded_homology(const ChainComplex& X, int band) {
    HomologyReport report;
    report.lo = X.lo;
    const size_t n = X.modules.size();
    for (size_t i = 0; i < n; ++i) {
        std::vector<int> degs = X.modules[i].degrees();
        std::vector<bool> keep(degs.size());
        long kept = 0;
        for (size_t r = 0; r < degs.size(); ++r) {
            keep[r] = degs[r] <= band;
            if (keep[r]) ++kept;
        }

        long ker_dim;
        if (i < X.boundaries.size()) {
            Matrix K = kernel_basis(X.boundaries[i]);
            ker_dim = dim_colspan_supported_on(K, keep);
        } else {
            ker_dim = kept;
        }

        long im_dim = 0;
        if (i > 0) {
            const Matrix& d = X.boundaries[i - 1];
            Matrix df = d.promoted_to_field();
            std::vector<long> cols = independent_columns(df);
            Matrix basis(df.ring, df.rows, static_cast<long>(cols.size()));
            for (size_t c = 0; c < cols.size(); ++c)
                for (long r = 0; r < df.rows; ++r) basis.at(r, static_cast<long>(c)) = df.at(r, cols[c]);
            im_dim = dim_colspan_supported_on(basis, keep);
        }

        HomologyEntry e;
        e.rank = ker_dim - im_dim;
        report.entries.push_back(e);
    }
    return report;
}

}  // namespace banalg
