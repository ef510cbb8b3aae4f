#ifndef BANALG_SCALAR_HPP
#define BANALG_SCALAR_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>
#include <variant>

namespace banalg {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

/// Thrown when a p-adic value cannot be represented or reported within the
/// precision fixed by its ring descriptor.
struct PrecisionExhausted : std::runtime_error {
    explicit PrecisionExhausted(const std::string& what) : std::runtime_error(what) {}
};

enum class RingKind {
    Integer,          // Z with the usual absolute value
    Rational,         // Q with the usual absolute value
    PAdic,            // Q_p at fixed relative precision
    TrivialInteger,   // Z with the trivial norm
    TrivialRational,  // Q with the trivial norm
};

/// A ground ring together with its norm semantics. `scale` models the
/// rescaled module R_r whose norm is r times the base norm; it does not
/// change the underlying arithmetic.
struct RingDescriptor {
    RingKind kind = RingKind::Integer;
    unsigned prime = 0;  // PAdic only
    int precision = 0;   // PAdic only, relative digits, >= 1
    Rat scale = 1;

    bool archimedean() const { return kind == RingKind::Integer || kind == RingKind::Rational; }
    bool is_field() const;
    int submult_constant() const { return 1; }

    bool operator==(const RingDescriptor& o) const {
        return kind == o.kind && prime == o.prime && precision == o.precision && scale == o.scale;
    }
    bool operator!=(const RingDescriptor& o) const { return !(*this == o); }

    RingDescriptor rescaled(const Rat& r) const;
    std::string str() const;

    static RingDescriptor integers() { return {RingKind::Integer, 0, 0, 1}; }
    static RingDescriptor rationals() { return {RingKind::Rational, 0, 0, 1}; }
    static RingDescriptor padic(unsigned p, int prec = 16);
    static RingDescriptor trivial_integers() { return {RingKind::TrivialInteger, 0, 0, 1}; }
    static RingDescriptor trivial_rationals() { return {RingKind::TrivialRational, 0, 0, 1}; }
};

/// Exact rational carrier for a Q_p element plus the number of relative
/// digits known for it. Arithmetic stays exact; `prec` follows the min rule
/// and gates residue extraction, which is where precision demands fail
/// loudly instead of rounding.
struct PadicValue {
    Rat value = 0;
    int prec = 0;
};

class Scalar {
  public:
    Scalar() = default;
    Scalar(RingDescriptor desc, const Int& value);
    Scalar(RingDescriptor desc, const Rat& value);
    Scalar(RingDescriptor desc, long value) : Scalar(desc, Int(value)) {}
    static Scalar zero(const RingDescriptor& desc) { return Scalar(desc, Int(0)); }
    static Scalar one(const RingDescriptor& desc) { return Scalar(desc, Int(1)); }

    const RingDescriptor& ring() const { return desc_; }
    bool is_zero() const;
    bool is_one() const;

    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator*(const Scalar& o) const;
    Scalar operator-() const;
    bool operator==(const Scalar& o) const;
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    /// Multiplicative inverse; fields only.
    Scalar inverse() const;
    Scalar divide(const Scalar& o) const { return *this * o.inverse(); }

    /// Exact norm value, including the descriptor scale.
    Rat norm() const;

    Rat as_rational() const;
    Int as_integer() const;

    long padic_valuation() const;
    int padic_precision() const;
    /// Residue of the unit part modulo p^prec (tracked precision).
    Int padic_residue() const;

    std::string str() const;

  private:
    RingDescriptor desc_ = RingDescriptor::integers();
    std::variant<Int, Rat, PadicValue> v_ = Int(0);

    void check_same(const Scalar& o) const;
};

/// Parses the scalar literal grammar: `-?[0-9]+`, `a/b`,
/// `padic(p, value, prec)`. `pos` is advanced past the literal; errors name
/// the offending token and position.
Scalar parse_scalar(const std::string& text, size_t& pos, const RingDescriptor& desc);
Scalar parse_scalar(const std::string& text, const RingDescriptor& desc);

/// Descriptor literals: `z`, `q`, `padic:p[:prec]`, `trivial-z`, `trivial-q`.
RingDescriptor parse_ring(const std::string& text);

}  // namespace banalg

#endif
