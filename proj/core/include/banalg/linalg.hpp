#ifndef BANALG_LINALG_HPP
#define BANALG_LINALG_HPP

#include "banalg/scalar.hpp"

#include <vector>

namespace banalg {

/// Dense matrix with exact entries over one ring descriptor.
struct Matrix {
    long rows = 0;
    long cols = 0;
    RingDescriptor ring = RingDescriptor::rationals();
    std::vector<Scalar> a;

    Matrix() = default;
    Matrix(RingDescriptor ring_, long rows_, long cols_);

    Scalar& at(long r, long c) { return a[static_cast<size_t>(r) * cols + c]; }
    const Scalar& at(long r, long c) const { return a[static_cast<size_t>(r) * cols + c]; }

    Matrix operator*(const Matrix& o) const;
    bool operator==(const Matrix& o) const;
    bool is_zero() const;

    /// Same entries over Q (integral rings) for field elimination.
    Matrix promoted_to_field() const;
    static Matrix identity(RingDescriptor ring, long n);
};

/// Rank by exact Gaussian elimination. Over Q_p the pivot maximizes the
/// p-adic norm; elsewhere the first nonzero entry in row order is taken.
long rank(const Matrix& m);

/// Columns form a basis of the kernel.
Matrix kernel_basis(const Matrix& m);

/// Indices of a maximal independent set of columns (an image basis).
std::vector<long> independent_columns(const Matrix& m);

/// dim { v in colspan(basis) : v_r = 0 for all r with !keep[r] }.
/// `basis` must have independent columns.
long dim_colspan_supported_on(const Matrix& basis, const std::vector<bool>& keep);

/// Invariant factors of an integer matrix (Smith normal form); entries of
/// the returned vector are the diagonal values > 1, in divisibility order.
struct SmithResult {
    long rank = 0;
    std::vector<Int> invariant_factors;  // nontrivial ones only
};
SmithResult smith_normal_form(const Matrix& m);

}  // namespace banalg

#endif
