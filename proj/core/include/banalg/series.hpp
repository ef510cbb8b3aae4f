#ifndef BANALG_SERIES_HPP
#define BANALG_SERIES_HPP

#include "banalg/scalar.hpp"

#include <map>
#include <optional>
#include <vector>

namespace banalg {

using Exponents = std::vector<int>;

int total_degree(const Exponents& e);

/// Graded lexicographic order, smallest first: total degree, then the
/// exponent tuple itself. Fixes iteration order and argmax tie-breaks.
struct GradedLexLess {
    bool operator()(const Exponents& a, const Exponents& b) const;
};

enum class FlavorKind { Polynomial, Disc, Tate, Dagger, FormalPS, Stein, Hybrid };

/// Weight table N^nvars -> Z_{>=1} with default value 1 off-table.
struct WeightTable {
    std::map<Exponents, Int, GradedLexLess> entries;
    Int at(const Exponents& e) const;
    bool operator==(const WeightTable& o) const { return entries == o.entries; }
};

/// Which norm/completion a series lives in. Radii are exact rationals.
/// Hybrid holds one 1-variable flavor per variable, for tensor products of
/// different analytifications.
struct AlgebraFlavor {
    FlavorKind kind = FlavorKind::Polynomial;
    std::vector<Rat> radii;                // Disc, Tate, Dagger, Stein
    std::vector<Rat> rho;                  // Dagger representative, rho > radii
    WeightTable psi;                       // FormalPS weights; Stein outer weights (1-d keys)
    std::vector<Rat> stein_radii;          // increasing sequence below the Stein radius
    std::vector<AlgebraFlavor> parts;      // Hybrid components

    int nvars() const;
    bool operator==(const AlgebraFlavor& o) const;
    std::string str() const;

    /// 1-variable component for variable i (identity for 1-var flavors).
    AlgebraFlavor component(int i) const;
    /// n-fold tensor of this flavor's components with another's.
    static AlgebraFlavor tensor(const AlgebraFlavor& a, const AlgebraFlavor& b);

    static AlgebraFlavor polynomial(int nvars = 1);
    static AlgebraFlavor disc(std::vector<Rat> radii);
    static AlgebraFlavor tate(std::vector<Rat> radii);
    static AlgebraFlavor dagger(std::vector<Rat> radii, std::vector<Rat> rho = {});
    static AlgebraFlavor formal_ps(int nvars = 1, WeightTable psi = {});
    static AlgebraFlavor stein(Rat radius, std::vector<Rat> seq, WeightTable psi = {});
};

/// Sparse multivariate series with exact coefficients, truncated at total
/// degree `order`. Zero coefficients are never stored.
class MultiSeries {
  public:
    MultiSeries() = default;
    MultiSeries(RingDescriptor ring, int nvars, int order);

    const RingDescriptor& ring() const { return ring_; }
    int nvars() const { return nvars_; }
    int order() const { return order_; }
    bool is_zero() const { return coeffs_.empty(); }
    int degree() const;  // 0 for the zero series
    size_t term_count() const { return coeffs_.size(); }

    const std::map<Exponents, Scalar, GradedLexLess>& coeffs() const { return coeffs_; }
    Scalar coeff(const Exponents& e) const;
    void set_coeff(const Exponents& e, const Scalar& c);

    MultiSeries operator+(const MultiSeries& o) const;
    MultiSeries operator-(const MultiSeries& o) const;
    MultiSeries operator*(const MultiSeries& o) const;
    MultiSeries operator-() const;
    bool operator==(const MultiSeries& o) const;
    bool operator!=(const MultiSeries& o) const { return !(*this == o); }

    /// Same coefficients viewed at a different truncation order; lowering
    /// the order discards monomials above it.
    MultiSeries truncated(int order) const;
    /// Relabels variables into a larger set: variable i -> offset + i.
    MultiSeries embedded(int total_vars, int offset) const;
    /// Substitutes variable `var` by the series `value` (matching ring and
    /// order, value in the target variable set).
    MultiSeries substituted(int var, const MultiSeries& value) const;

    static MultiSeries monomial(RingDescriptor ring, int nvars, int order, const Exponents& e,
                                const Scalar& c);
    static MultiSeries constant(RingDescriptor ring, int nvars, int order, const Scalar& c);
    static MultiSeries variable(RingDescriptor ring, int nvars, int order, int var);

    std::string str() const;

  private:
    RingDescriptor ring_ = RingDescriptor::integers();
    int nvars_ = 1;
    int order_ = 1;
    std::map<Exponents, Scalar, GradedLexLess> coeffs_;

    void check_compatible(const MultiSeries& o) const;
};

/// Gauss-type norm of `f` in the given flavor, exact on the truncation.
Rat flavor_norm(const MultiSeries& f, const AlgebraFlavor& flavor);

/// f(x_1..x_n) -> f(y_1..y_n) in 2n variables (left block).
MultiSeries tensor_embed_left(const MultiSeries& f);
/// f(x_1..x_n) -> f(z_1..z_n) in 2n variables (right block).
MultiSeries tensor_embed_right(const MultiSeries& f);
/// f(y_1..y_n, z_1..z_n) -> f(x_1..x_n, x_1..x_n).
MultiSeries diagonal_restrict(const MultiSeries& f);

/// Series text grammar: terms `coeff '*' var ('^' exp)?` joined by +/-;
/// variables x1..xk, with letter aliases x (one variable), y,z (a diagonal
/// pair) and x,y,z (three variables).
MultiSeries parse_series(const std::string& text, const RingDescriptor& ring, int nvars,
                         int order);

/// Flavor literals: poly, disc(r1,..), tate(r1,..), dagger(r1,..;rho1,..),
/// formal(i.j=w,..), stein(r; r1<r2<..; n=w,..). A `kind:r1,r2` shorthand is
/// accepted for radius-only kinds.
AlgebraFlavor parse_flavor(const std::string& text);

Rat parse_rational(const std::string& text);

}  // namespace banalg

#endif
