#include "banalg/linalg.hpp"

#include <algorithm>

namespace banalg {

Matrix::Matrix(RingDescriptor ring_, long rows_, long cols_)
    : rows(rows_), cols(cols_), ring(ring_) {
    a.assign(static_cast<size_t>(rows) * cols, Scalar::zero(ring));
}

Matrix Matrix::operator*(const Matrix& o) const {
    if (cols != o.rows || ring != o.ring) throw std::invalid_argument("matrix product mismatch");
    Matrix r(ring, rows, o.cols);
    for (long i = 0; i < rows; ++i)
        for (long k = 0; k < cols; ++k) {
            const Scalar& x = at(i, k);
            if (x.is_zero()) continue;
            for (long j = 0; j < o.cols; ++j) {
                if (o.at(k, j).is_zero()) continue;
                r.at(i, j) = r.at(i, j) + x * o.at(k, j);
            }
        }
    return r;
}

bool Matrix::operator==(const Matrix& o) const {
    return rows == o.rows && cols == o.cols && ring == o.ring && a == o.a;
}

bool Matrix::is_zero() const {
    return std::all_of(a.begin(), a.end(), [](const Scalar& s) { return s.is_zero(); });
}

Matrix Matrix::promoted_to_field() const {
    if (ring.is_field()) return *this;
    RingDescriptor q = RingDescriptor::rationals();
    Matrix r(q, rows, cols);
    for (size_t i = 0; i < a.size(); ++i) r.a[i] = Scalar(q, a[i].as_rational());
    return r;
}

Matrix Matrix::identity(RingDescriptor ring, long n) {
    Matrix r(ring, n, n);
    for (long i = 0; i < n; ++i) r.at(i, i) = Scalar::one(ring);
    return r;
}

namespace {

// Elimination runs on raw rational carriers; every shipped coefficient ring
// embeds its values exactly in Q. The p-adic pivot rule picks the entry of
// maximal norm, i.e. minimal valuation of the carrier.
struct RatMatrix {
    long rows = 0;
    long cols = 0;
    std::vector<Rat> a;

    Rat& at(long r, long c) { return a[static_cast<size_t>(r) * cols + c]; }
    const Rat& at(long r, long c) const { return a[static_cast<size_t>(r) * cols + c]; }
};

RatMatrix extract(const Matrix& m) {
    RatMatrix w{m.rows, m.cols, {}};
    w.a.resize(m.a.size());
    for (size_t i = 0; i < m.a.size(); ++i) w.a[i] = m.a[i].as_rational();
    return w;
}

long padic_val(unsigned p, Rat x) {
    Int num = boost::multiprecision::numerator(x);
    Int den = boost::multiprecision::denominator(x);
    long v = 0;
    while (num % p == 0) {
        num /= p;
        ++v;
    }
    while (den % p == 0) {
        den /= p;
        --v;
    }
    return v;
}

std::vector<long> echelon(RatMatrix& m, unsigned padic_prime) {
    std::vector<long> pivot_cols;
    long row = 0;
    for (long col = 0; col < m.cols && row < m.rows; ++col) {
        long pick = -1;
        if (padic_prime != 0) {
            long best_val = 0;
            for (long r = row; r < m.rows; ++r) {
                if (m.at(r, col) == 0) continue;
                long v = padic_val(padic_prime, m.at(r, col));
                if (pick == -1 || v < best_val) {
                    best_val = v;
                    pick = r;
                }
            }
        } else {
            for (long r = row; r < m.rows; ++r)
                if (m.at(r, col) != 0) {
                    pick = r;
                    break;
                }
        }
        if (pick == -1) continue;
        if (pick != row)
            for (long c = 0; c < m.cols; ++c) std::swap(m.at(row, c), m.at(pick, c));
        Rat inv = Rat(1) / m.at(row, col);
        for (long c = col; c < m.cols; ++c)
            if (m.at(row, c) != 0) m.at(row, c) *= inv;
        for (long r = 0; r < m.rows; ++r) {
            if (r == row) continue;
            const Rat factor = m.at(r, col);
            if (factor == 0) continue;
            for (long c = col; c < m.cols; ++c) {
                if (m.at(row, c) == 0) continue;
                m.at(r, c) -= factor * m.at(row, c);
            }
        }
        pivot_cols.push_back(col);
        ++row;
    }
    return pivot_cols;
}

unsigned pivot_prime(const Matrix& m) {
    return m.ring.kind == RingKind::PAdic ? m.ring.prime : 0;
}

}  // namespace

long rank(const Matrix& m) {
    RatMatrix w = extract(m);
    return static_cast<long>(echelon(w, pivot_prime(m)).size());
}

Matrix kernel_basis(const Matrix& m) {
    RatMatrix w = extract(m);
    std::vector<long> pivots = echelon(w, pivot_prime(m));
    std::vector<bool> is_pivot(m.cols, false);
    for (long c : pivots) is_pivot[c] = true;

    std::vector<long> free_cols;
    for (long c = 0; c < m.cols; ++c)
        if (!is_pivot[c]) free_cols.push_back(c);

    RingDescriptor q = RingDescriptor::rationals();
    Matrix basis(q, m.cols, static_cast<long>(free_cols.size()));
    for (size_t k = 0; k < free_cols.size(); ++k) {
        long fc = free_cols[k];
        basis.at(fc, static_cast<long>(k)) = Scalar::one(q);
        for (size_t pr = 0; pr < pivots.size(); ++pr)
            basis.at(pivots[pr], static_cast<long>(k)) =
                Scalar(q, -w.at(static_cast<long>(pr), fc));
    }
    return basis;
}

std::vector<long> independent_columns(const Matrix& m) {
    RatMatrix w = extract(m);
    return echelon(w, pivot_prime(m));
}

long dim_colspan_supported_on(const Matrix& basis, const std::vector<bool>& keep) {
    if (static_cast<long>(keep.size()) != basis.rows)
        throw std::invalid_argument("support mask size mismatch");
    long dropped = 0;
    for (bool k : keep)
        if (!k) ++dropped;
    RatMatrix outside{dropped, basis.cols, {}};
    outside.a.assign(static_cast<size_t>(dropped) * basis.cols, Rat(0));
    long rr = 0;
    for (long r = 0; r < basis.rows; ++r) {
        if (keep[r]) continue;
        for (long c = 0; c < basis.cols; ++c) outside.at(rr, c) = basis.at(r, c).as_rational();
        ++rr;
    }
    return basis.cols - static_cast<long>(echelon(outside, 0).size());
}

SmithResult smith_normal_form(const Matrix& m) {
    long rows = m.rows, cols = m.cols;
    std::vector<std::vector<Int>> w(rows, std::vector<Int>(cols));
    for (long r = 0; r < rows; ++r)
        for (long c = 0; c < cols; ++c) w[r][c] = m.at(r, c).as_integer();

    auto abs_int = [](const Int& x) { return x < 0 ? Int(-x) : x; };
    std::vector<Int> diagonal;
    long t = 0;
    while (t < rows && t < cols) {
        long pr = -1, pc = -1;
        Int best = 0;
        for (long r = t; r < rows; ++r)
            for (long c = t; c < cols; ++c) {
                if (w[r][c] == 0) continue;
                Int v = abs_int(w[r][c]);
                if (pr == -1 || v < best) {
                    best = v;
                    pr = r;
                    pc = c;
                }
            }
        if (pr == -1) break;
        std::swap(w[t], w[pr]);
        for (long r = 0; r < rows; ++r) std::swap(w[r][t], w[r][pc]);

        bool clean = false;
        while (!clean) {
            clean = true;
            for (long r = t + 1; r < rows; ++r) {
                if (w[r][t] == 0) continue;
                Int q = w[r][t] / w[t][t];
                for (long c = t; c < cols; ++c) w[r][c] -= q * w[t][c];
                if (w[r][t] != 0) {
                    std::swap(w[t], w[r]);
                    clean = false;
                }
            }
            for (long c = t + 1; c < cols; ++c) {
                if (w[t][c] == 0) continue;
                Int q = w[t][c] / w[t][t];
                for (long r = t; r < rows; ++r) w[r][c] -= q * w[r][t];
                if (w[t][c] != 0) {
                    for (long r = t; r < rows; ++r) std::swap(w[r][t], w[r][c]);
                    clean = false;
                }
            }
            if (!clean) continue;
            for (long r = t + 1; r < rows && clean; ++r)
                for (long c = t + 1; c < cols && clean; ++c)
                    if (w[r][c] % w[t][t] != 0) {
                        for (long cc = t; cc < cols; ++cc) w[t][cc] += w[r][cc];
                        clean = false;
                    }
        }
        diagonal.push_back(abs_int(w[t][t]));
        ++t;
    }

    SmithResult out;
    out.rank = static_cast<long>(diagonal.size());
    for (const Int& d : diagonal)
        if (d != 1) out.invariant_factors.push_back(d);
    return out;
}

}  // namespace banalg
