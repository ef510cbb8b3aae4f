#include "banalg/scalar.hpp"

#include <sstream>

namespace banalg {

namespace {

bool is_prime(unsigned n) {
    if (n < 2) return false;
    for (unsigned d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

Int pow_int(unsigned b, long e) {
    Int r = 1;
    for (long k = 0; k < e; ++k) r *= b;
    return r;
}

long rational_valuation(unsigned p, const Rat& x) {
    if (x == 0) throw std::logic_error("valuation of zero");
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

Int mod_inverse(const Int& a, const Int& m) {
    Int t = 0, new_t = 1, r = m, new_r = ((a % m) + m) % m;
    while (new_r != 0) {
        Int q = r / new_r;
        Int tmp = t - q * new_t;
        t = new_t;
        new_t = tmp;
        tmp = r - q * new_r;
        r = new_r;
        new_r = tmp;
    }
    if (r != 1) throw std::invalid_argument("element not invertible modulo m");
    return ((t % m) + m) % m;
}

}  // namespace

bool RingDescriptor::is_field() const {
    switch (kind) {
        case RingKind::Rational:
        case RingKind::PAdic:
        case RingKind::TrivialRational:
            return true;
        default:
            return false;
    }
}

RingDescriptor RingDescriptor::rescaled(const Rat& r) const {
    if (r <= 0) throw std::invalid_argument("rescale factor must be positive");
    RingDescriptor d = *this;
    d.scale = scale * r;
    return d;
}

RingDescriptor RingDescriptor::padic(unsigned p, int prec) {
    if (!is_prime(p)) throw std::invalid_argument("p-adic descriptor requires a prime");
    if (prec < 1) throw std::invalid_argument("p-adic precision must be >= 1");
    return {RingKind::PAdic, p, prec, 1};
}

std::string RingDescriptor::str() const {
    std::ostringstream os;
    switch (kind) {
        case RingKind::Integer: os << "z"; break;
        case RingKind::Rational: os << "q"; break;
        case RingKind::PAdic: os << "padic:" << prime << ":" << precision; break;
        case RingKind::TrivialInteger: os << "trivial-z"; break;
        case RingKind::TrivialRational: os << "trivial-q"; break;
    }
    if (scale != 1) os << "@scale=" << scale.str();
    return os.str();
}

Scalar::Scalar(RingDescriptor desc, const Int& value) : desc_(desc) {
    switch (desc_.kind) {
        case RingKind::Integer:
        case RingKind::TrivialInteger:
            v_ = value;
            break;
        case RingKind::Rational:
        case RingKind::TrivialRational:
            v_ = Rat(value);
            break;
        case RingKind::PAdic:
            v_ = PadicValue{Rat(value), desc_.precision};
            break;
    }
}

Scalar::Scalar(RingDescriptor desc, const Rat& value) : desc_(desc) {
    switch (desc_.kind) {
        case RingKind::Integer:
        case RingKind::TrivialInteger:
            if (boost::multiprecision::denominator(value) != 1)
                throw std::invalid_argument("integer ring cannot hold " + value.str());
            v_ = boost::multiprecision::numerator(value);
            break;
        case RingKind::Rational:
        case RingKind::TrivialRational:
            v_ = value;
            break;
        case RingKind::PAdic:
            v_ = PadicValue{value, desc_.precision};
            break;
    }
}

void Scalar::check_same(const Scalar& o) const {
    if (desc_ != o.desc_)
        throw std::invalid_argument("scalar descriptor mismatch: " + desc_.str() + " vs " +
                                    o.desc_.str());
}

bool Scalar::is_zero() const {
    if (auto p = std::get_if<Int>(&v_)) return *p == 0;
    if (auto p = std::get_if<Rat>(&v_)) return *p == 0;
    return std::get<PadicValue>(v_).value == 0;
}

bool Scalar::is_one() const {
    if (auto p = std::get_if<Int>(&v_)) return *p == 1;
    if (auto p = std::get_if<Rat>(&v_)) return *p == 1;
    return std::get<PadicValue>(v_).value == 1;
}

Scalar Scalar::operator+(const Scalar& o) const {
    check_same(o);
    Scalar r;
    r.desc_ = desc_;
    if (auto p = std::get_if<Int>(&v_)) {
        r.v_ = Int(*p + std::get<Int>(o.v_));
    } else if (auto p = std::get_if<Rat>(&v_)) {
        r.v_ = Rat(*p + std::get<Rat>(o.v_));
    } else {
        const auto& a = std::get<PadicValue>(v_);
        const auto& b = std::get<PadicValue>(o.v_);
        r.v_ = PadicValue{a.value + b.value, std::min(a.prec, b.prec)};
    }
    return r;
}

Scalar Scalar::operator-() const {
    Scalar r = *this;
    if (auto p = std::get_if<Int>(&r.v_)) {
        *p = -*p;
    } else if (auto p = std::get_if<Rat>(&r.v_)) {
        *p = -*p;
    } else {
        std::get<PadicValue>(r.v_).value *= -1;
    }
    return r;
}

Scalar Scalar::operator-(const Scalar& o) const { return *this + (-o); }

Scalar Scalar::operator*(const Scalar& o) const {
    check_same(o);
    Scalar r;
    r.desc_ = desc_;
    if (auto p = std::get_if<Int>(&v_)) {
        r.v_ = Int(*p * std::get<Int>(o.v_));
    } else if (auto p = std::get_if<Rat>(&v_)) {
        r.v_ = Rat(*p * std::get<Rat>(o.v_));
    } else {
        const auto& a = std::get<PadicValue>(v_);
        const auto& b = std::get<PadicValue>(o.v_);
        r.v_ = PadicValue{a.value * b.value, std::min(a.prec, b.prec)};
    }
    return r;
}

bool Scalar::operator==(const Scalar& o) const {
    if (desc_ != o.desc_) return false;
    if (auto p = std::get_if<Int>(&v_)) return *p == std::get<Int>(o.v_);
    if (auto p = std::get_if<Rat>(&v_)) return *p == std::get<Rat>(o.v_);
    return std::get<PadicValue>(v_).value == std::get<PadicValue>(o.v_).value;
}

Scalar Scalar::inverse() const {
    if (!desc_.is_field()) throw std::invalid_argument("inverse requires a field descriptor");
    if (is_zero()) throw std::invalid_argument("inverse of zero");
    Scalar r;
    r.desc_ = desc_;
    if (auto p = std::get_if<Rat>(&v_)) {
        r.v_ = Rat(1) / *p;
    } else {
        const auto& a = std::get<PadicValue>(v_);
        r.v_ = PadicValue{Rat(1) / a.value, a.prec};
    }
    return r;
}

Rat Scalar::norm() const {
    Rat base;
    switch (desc_.kind) {
        case RingKind::Integer: {
            const Int& n = std::get<Int>(v_);
            base = Rat(n < 0 ? Int(-n) : n);
            break;
        }
        case RingKind::Rational: {
            const Rat& x = std::get<Rat>(v_);
            base = x < 0 ? Rat(-x) : x;
            break;
        }
        case RingKind::TrivialInteger:
            base = std::get<Int>(v_) == 0 ? 0 : 1;
            break;
        case RingKind::TrivialRational:
            base = std::get<Rat>(v_) == 0 ? 0 : 1;
            break;
        case RingKind::PAdic: {
            const auto& a = std::get<PadicValue>(v_);
            if (a.value == 0) {
                base = 0;
            } else {
                long v = rational_valuation(desc_.prime, a.value);
                base = v >= 0 ? Rat(Int(1), pow_int(desc_.prime, v))
                              : Rat(pow_int(desc_.prime, -v));
            }
            break;
        }
    }
    return base * desc_.scale;
}

Rat Scalar::as_rational() const {
    if (auto p = std::get_if<Int>(&v_)) return Rat(*p);
    if (auto p = std::get_if<Rat>(&v_)) return *p;
    return std::get<PadicValue>(v_).value;
}

Int Scalar::as_integer() const {
    Rat x = as_rational();
    if (boost::multiprecision::denominator(x) != 1)
        throw std::invalid_argument("scalar " + x.str() + " is not an integer");
    return boost::multiprecision::numerator(x);
}

long Scalar::padic_valuation() const {
    const auto& a = std::get<PadicValue>(v_);
    if (a.value == 0) throw std::invalid_argument("valuation of zero");
    return rational_valuation(desc_.prime, a.value);
}

int Scalar::padic_precision() const { return std::get<PadicValue>(v_).prec; }

Int Scalar::padic_residue() const {
    const auto& a = std::get<PadicValue>(v_);
    if (a.prec < 1)
        throw PrecisionExhausted("p-adic precision exhausted: no digits left to report");
    if (a.value == 0) return 0;
    long v = rational_valuation(desc_.prime, a.value);
    Rat unit = a.value / (v >= 0 ? Rat(pow_int(desc_.prime, v))
                                 : Rat(Int(1), pow_int(desc_.prime, -v)));
    Int m = pow_int(desc_.prime, a.prec);
    Int num = boost::multiprecision::numerator(unit) % m;
    Int den = boost::multiprecision::denominator(unit);
    Int res = (num * mod_inverse(den, m)) % m;
    return ((res % m) + m) % m;
}

std::string Scalar::str() const {
    if (auto p = std::get_if<Int>(&v_)) return p->str();
    if (auto p = std::get_if<Rat>(&v_)) {
        if (boost::multiprecision::denominator(*p) == 1)
            return boost::multiprecision::numerator(*p).str();
        return p->str();
    }
    const auto& a = std::get<PadicValue>(v_);
    std::ostringstream os;
    if (a.value == 0) {
        os << "0";
    } else {
        long v = rational_valuation(desc_.prime, a.value);
        os << desc_.prime << "^" << v << "*" << padic_residue().str();
    }
    os << "+O(" << desc_.prime << "^" << a.prec << ")";
    return os.str();
}

namespace {

[[noreturn]] void parse_fail(const std::string& text, size_t pos, const std::string& expected) {
    std::string tok = pos < text.size() ? text.substr(pos, 12) : "<end>";
    throw std::invalid_argument("parse error at position " + std::to_string(pos) + ": expected " +
                                expected + ", got '" + tok + "'");
}

void skip_ws(const std::string& t, size_t& pos) {
    while (pos < t.size() && (t[pos] == ' ' || t[pos] == '\t')) ++pos;
}

Int parse_int(const std::string& t, size_t& pos) {
    skip_ws(t, pos);
    size_t start = pos;
    if (pos < t.size() && (t[pos] == '-' || t[pos] == '+')) ++pos;
    size_t digits = pos;
    while (pos < t.size() && std::isdigit(static_cast<unsigned char>(t[pos]))) ++pos;
    if (pos == digits) parse_fail(t, start, "integer");
    return Int(t.substr(start, pos - start));
}

void expect(const std::string& t, size_t& pos, char c) {
    skip_ws(t, pos);
    if (pos >= t.size() || t[pos] != c) parse_fail(t, pos, std::string("'") + c + "'");
    ++pos;
}

}  // namespace

Scalar parse_scalar(const std::string& text, size_t& pos, const RingDescriptor& desc) {
    skip_ws(text, pos);
    if (text.compare(pos, 6, "padic(") == 0) {
        pos += 6;
        Int p = parse_int(text, pos);
        expect(text, pos, ',');
        Int value = parse_int(text, pos);
        expect(text, pos, ',');
        Int prec = parse_int(text, pos);
        expect(text, pos, ')');
        RingDescriptor d = RingDescriptor::padic(static_cast<unsigned>(p), static_cast<int>(prec));
        if (desc.kind == RingKind::PAdic && d.prime == desc.prime) {
            if (d.precision > desc.precision)
                throw PrecisionExhausted("p-adic literal requests precision " +
                                         std::to_string(d.precision) + " beyond descriptor " +
                                         std::to_string(desc.precision));
            return Scalar(desc, value);
        }
        return Scalar(d, value);
    }
    Int num = parse_int(text, pos);
    skip_ws(text, pos);
    if (pos < text.size() && text[pos] == '/') {
        ++pos;
        Int den = parse_int(text, pos);
        if (den == 0) throw std::invalid_argument("zero denominator in rational literal");
        return Scalar(desc, Rat(num, den));
    }
    return Scalar(desc, num);
}

Scalar parse_scalar(const std::string& text, const RingDescriptor& desc) {
    size_t pos = 0;
    Scalar s = parse_scalar(text, pos, desc);
    skip_ws(text, pos);
    if (pos != text.size()) parse_fail(text, pos, "end of literal");
    return s;
}

RingDescriptor parse_ring(const std::string& text) {
    if (text == "z") return RingDescriptor::integers();
    if (text == "q") return RingDescriptor::rationals();
    if (text == "trivial-z") return RingDescriptor::trivial_integers();
    if (text == "trivial-q") return RingDescriptor::trivial_rationals();
    if (text.rfind("padic:", 0) == 0) {
        std::string rest = text.substr(6);
        size_t colon = rest.find(':');
        unsigned p = static_cast<unsigned>(std::stoul(rest.substr(0, colon)));
        int prec = colon == std::string::npos ? 16 : std::stoi(rest.substr(colon + 1));
        return RingDescriptor::padic(p, prec);
    }
    throw std::invalid_argument("unknown ring literal '" + text + "'");
}

}  // namespace banalg
