#include "banalg/series.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

namespace banalg {

int total_degree(const Exponents& e) { return std::accumulate(e.begin(), e.end(), 0); }

bool GradedLexLess::operator()(const Exponents& a, const Exponents& b) const {
    int da = total_degree(a), db = total_degree(b);
    if (da != db) return da < db;
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

Int WeightTable::at(const Exponents& e) const {
    auto it = entries.find(e);
    return it == entries.end() ? Int(1) : it->second;
}

namespace {

Rat rat_pow(const Rat& b, int e) {
    Rat r = 1;
    for (int k = 0; k < e; ++k) r *= b;
    return r;
}

Rat poly_radius_term(const std::vector<Rat>& radii, const Exponents& e) {
    Rat r = 1;
    for (size_t i = 0; i < e.size(); ++i) r *= rat_pow(radii[i], e[i]);
    return r;
}

}  // namespace

int AlgebraFlavor::nvars() const {
    return kind == FlavorKind::Hybrid ? static_cast<int>(parts.size())
                                      : static_cast<int>(radii.size());
}

bool AlgebraFlavor::operator==(const AlgebraFlavor& o) const {
    return kind == o.kind && radii == o.radii && rho == o.rho && psi == o.psi &&
           stein_radii == o.stein_radii && parts == o.parts;
}

AlgebraFlavor AlgebraFlavor::component(int i) const {
    if (i < 0 || i >= nvars()) throw std::invalid_argument("flavor component out of range");
    switch (kind) {
        case FlavorKind::Hybrid:
            return parts[i];
        case FlavorKind::Polynomial:
            return polynomial(1);
        case FlavorKind::Disc:
            return disc({radii[i]});
        case FlavorKind::Tate:
            return tate({radii[i]});
        case FlavorKind::Dagger:
            return dagger({radii[i]}, {rho[i]});
        case FlavorKind::FormalPS: {
            AlgebraFlavor f = formal_ps(1);
            if (nvars() == 1) f.psi = psi;
            return f;
        }
        case FlavorKind::Stein: {
            AlgebraFlavor f = *this;
            f.radii = {radii[i]};
            return f;
        }
    }
    throw std::logic_error("unreachable");
}

AlgebraFlavor AlgebraFlavor::tensor(const AlgebraFlavor& a, const AlgebraFlavor& b) {
    bool mergeable = a.kind == b.kind && a.kind != FlavorKind::Hybrid &&
                     a.kind != FlavorKind::Stein &&
                     (a.kind != FlavorKind::FormalPS ||
                      (a.psi.entries.empty() && b.psi.entries.empty()));
    if (mergeable) {
        AlgebraFlavor f;
        f.kind = a.kind;
        f.radii = a.radii;
        f.radii.insert(f.radii.end(), b.radii.begin(), b.radii.end());
        f.rho = a.rho;
        f.rho.insert(f.rho.end(), b.rho.begin(), b.rho.end());
        return f;
    }
    AlgebraFlavor f;
    f.kind = FlavorKind::Hybrid;
    for (int i = 0; i < a.nvars(); ++i) f.parts.push_back(a.component(i));
    for (int i = 0; i < b.nvars(); ++i) f.parts.push_back(b.component(i));
    return f;
}

AlgebraFlavor AlgebraFlavor::polynomial(int nvars) {
    AlgebraFlavor f;
    f.kind = FlavorKind::Polynomial;
    f.radii.assign(nvars, Rat(1));
    return f;
}

AlgebraFlavor AlgebraFlavor::disc(std::vector<Rat> radii) {
    for (const Rat& r : radii)
        if (r <= 0) throw std::invalid_argument("disc radii must be positive");
    AlgebraFlavor f;
    f.kind = FlavorKind::Disc;
    f.radii = std::move(radii);
    return f;
}

AlgebraFlavor AlgebraFlavor::tate(std::vector<Rat> radii) {
    for (const Rat& r : radii)
        if (r <= 0) throw std::invalid_argument("tate radii must be positive");
    AlgebraFlavor f;
    f.kind = FlavorKind::Tate;
    f.radii = std::move(radii);
    return f;
}

AlgebraFlavor AlgebraFlavor::dagger(std::vector<Rat> radii, std::vector<Rat> rho) {
    AlgebraFlavor f;
    f.kind = FlavorKind::Dagger;
    f.radii = std::move(radii);
    if (rho.empty())
        for (const Rat& r : f.radii) rho.push_back(r + 1);
    if (rho.size() != f.radii.size())
        throw std::invalid_argument("dagger needs one representative radius per variable");
    for (size_t i = 0; i < rho.size(); ++i) {
        if (f.radii[i] < 0) throw std::invalid_argument("dagger radii must be nonnegative");
        if (rho[i] <= f.radii[i])
            throw std::invalid_argument("dagger representative must exceed the base radius");
    }
    f.rho = std::move(rho);
    return f;
}

AlgebraFlavor AlgebraFlavor::formal_ps(int nvars, WeightTable psi) {
    for (const auto& [e, w] : psi.entries) {
        if (static_cast<int>(e.size()) != nvars)
            throw std::invalid_argument("weight table key arity mismatch");
        if (w < 1) throw std::invalid_argument("weight table values must be >= 1");
    }
    AlgebraFlavor f;
    f.kind = FlavorKind::FormalPS;
    f.radii.assign(nvars, Rat(1));
    f.psi = std::move(psi);
    return f;
}

AlgebraFlavor AlgebraFlavor::stein(Rat radius, std::vector<Rat> seq, WeightTable psi) {
    if (radius <= 0) throw std::invalid_argument("stein radius must be positive");
    if (seq.empty()) throw std::invalid_argument("stein requires a nonempty radius sequence");
    for (size_t i = 0; i < seq.size(); ++i) {
        if (seq[i] <= 0 || seq[i] >= radius)
            throw std::invalid_argument("stein sequence must increase strictly below the radius");
        if (i > 0 && seq[i] <= seq[i - 1])
            throw std::invalid_argument("stein sequence must be strictly increasing");
    }
    for (const auto& [e, w] : psi.entries) {
        if (e.size() != 1) throw std::invalid_argument("stein outer weights take one index");
        if (w < 1) throw std::invalid_argument("weight table values must be >= 1");
    }
    AlgebraFlavor f;
    f.kind = FlavorKind::Stein;
    f.radii = {radius};
    f.stein_radii = std::move(seq);
    f.psi = std::move(psi);
    return f;
}

std::string AlgebraFlavor::str() const {
    std::ostringstream os;
    auto join = [&](const std::vector<Rat>& v) {
        for (size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i].str();
    };
    switch (kind) {
        case FlavorKind::Polynomial:
            os << "poly";
            if (nvars() != 1) os << ":" << nvars();
            break;
        case FlavorKind::Disc:
            os << "disc(";
            join(radii);
            os << ")";
            break;
        case FlavorKind::Tate:
            os << "tate(";
            join(radii);
            os << ")";
            break;
        case FlavorKind::Dagger:
            os << "dagger(";
            join(radii);
            os << ";";
            join(rho);
            os << ")";
            break;
        case FlavorKind::FormalPS: {
            os << "formal";
            if (!psi.entries.empty()) {
                os << "(";
                bool first = true;
                for (const auto& [e, w] : psi.entries) {
                    if (!first) os << ",";
                    first = false;
                    for (size_t i = 0; i < e.size(); ++i) os << (i ? "." : "") << e[i];
                    os << "=" << w.str();
                }
                os << ")";
            } else if (nvars() != 1) {
                os << ":" << nvars();
            }
            break;
        }
        case FlavorKind::Stein: {
            os << "stein(" << radii[0].str() << ";";
            for (size_t i = 0; i < stein_radii.size(); ++i)
                os << (i ? "<" : "") << stein_radii[i].str();
            if (!psi.entries.empty()) {
                os << ";";
                bool first = true;
                for (const auto& [e, w] : psi.entries) {
                    if (!first) os << ",";
                    first = false;
                    os << e[0] << "=" << w.str();
                }
            }
            os << ")";
            break;
        }
        case FlavorKind::Hybrid: {
            for (size_t i = 0; i < parts.size(); ++i) os << (i ? "*" : "") << parts[i].str();
            break;
        }
    }
    return os.str();
}

MultiSeries::MultiSeries(RingDescriptor ring, int nvars, int order)
    : ring_(ring), nvars_(nvars), order_(order) {
    if (nvars < 0) throw std::invalid_argument("variable count must be nonnegative");
    if (order < 0) throw std::invalid_argument("truncation order must be nonnegative");
}

int MultiSeries::degree() const {
    return coeffs_.empty() ? 0 : total_degree(coeffs_.rbegin()->first);
}

Scalar MultiSeries::coeff(const Exponents& e) const {
    auto it = coeffs_.find(e);
    return it == coeffs_.end() ? Scalar::zero(ring_) : it->second;
}

void MultiSeries::set_coeff(const Exponents& e, const Scalar& c) {
    if (static_cast<int>(e.size()) != nvars_)
        throw std::invalid_argument("exponent arity mismatch");
    for (int x : e)
        if (x < 0) throw std::invalid_argument("negative exponent");
    if (total_degree(e) > order_) throw std::invalid_argument("monomial exceeds truncation order");
    if (c.ring() != ring_) throw std::invalid_argument("coefficient ring mismatch");
    if (c.is_zero())
        coeffs_.erase(e);
    else
        coeffs_[e] = c;
}

void MultiSeries::check_compatible(const MultiSeries& o) const {
    if (ring_ != o.ring_ || nvars_ != o.nvars_ || order_ != o.order_)
        throw std::invalid_argument("series are not compatible (ring/nvars/order)");
}

MultiSeries MultiSeries::operator+(const MultiSeries& o) const {
    check_compatible(o);
    MultiSeries r = *this;
    for (const auto& [e, c] : o.coeffs_) {
        auto it = r.coeffs_.find(e);
        if (it == r.coeffs_.end()) {
            r.coeffs_[e] = c;
        } else {
            Scalar s = it->second + c;
            if (s.is_zero())
                r.coeffs_.erase(it);
            else
                it->second = s;
        }
    }
    return r;
}

MultiSeries MultiSeries::operator-() const {
    MultiSeries r = *this;
    for (auto& [e, c] : r.coeffs_) c = -c;
    return r;
}

MultiSeries MultiSeries::operator-(const MultiSeries& o) const { return *this + (-o); }

MultiSeries MultiSeries::operator*(const MultiSeries& o) const {
    check_compatible(o);
    MultiSeries r(ring_, nvars_, order_);
    for (const auto& [e1, c1] : coeffs_) {
        int d1 = total_degree(e1);
        for (const auto& [e2, c2] : o.coeffs_) {
            if (d1 + total_degree(e2) > order_) continue;
            Exponents e(nvars_);
            for (int i = 0; i < nvars_; ++i) e[i] = e1[i] + e2[i];
            auto it = r.coeffs_.find(e);
            Scalar s = it == r.coeffs_.end() ? c1 * c2 : it->second + c1 * c2;
            if (s.is_zero()) {
                if (it != r.coeffs_.end()) r.coeffs_.erase(it);
            } else {
                r.coeffs_[e] = s;
            }
        }
    }
    return r;
}

bool MultiSeries::operator==(const MultiSeries& o) const {
    return ring_ == o.ring_ && nvars_ == o.nvars_ && order_ == o.order_ && coeffs_ == o.coeffs_;
}

MultiSeries MultiSeries::truncated(int order) const {
    MultiSeries r(ring_, nvars_, order);
    for (const auto& [e, c] : coeffs_)
        if (total_degree(e) <= order) r.coeffs_[e] = c;
    return r;
}

MultiSeries MultiSeries::embedded(int total_vars, int offset) const {
    if (offset < 0 || offset + nvars_ > total_vars)
        throw std::invalid_argument("embedding block out of range");
    MultiSeries r(ring_, total_vars, order_);
    for (const auto& [e, c] : coeffs_) {
        Exponents big(total_vars, 0);
        for (int i = 0; i < nvars_; ++i) big[offset + i] = e[i];
        r.coeffs_[big] = c;
    }
    return r;
}

MultiSeries MultiSeries::substituted(int var, const MultiSeries& value) const {
    if (var < 0 || var >= nvars_) throw std::invalid_argument("substitution variable out of range");
    if (value.ring_ != ring_ || value.nvars_ != nvars_ || value.order_ != order_)
        throw std::invalid_argument("substitution value incompatible");
    MultiSeries r(ring_, nvars_, order_);
    for (const auto& [e, c] : coeffs_) {
        Exponents rest = e;
        int k = rest[var];
        rest[var] = 0;
        MultiSeries term = MultiSeries::monomial(ring_, nvars_, order_, rest, c);
        for (int j = 0; j < k; ++j) term = term * value;
        r = r + term;
    }
    return r;
}

MultiSeries MultiSeries::monomial(RingDescriptor ring, int nvars, int order, const Exponents& e,
                                  const Scalar& c) {
    MultiSeries r(ring, nvars, order);
    r.set_coeff(e, c);
    return r;
}

MultiSeries MultiSeries::constant(RingDescriptor ring, int nvars, int order, const Scalar& c) {
    return monomial(ring, nvars, order, Exponents(nvars, 0), c);
}

MultiSeries MultiSeries::variable(RingDescriptor ring, int nvars, int order, int var) {
    Exponents e(nvars, 0);
    e.at(var) = 1;
    return monomial(ring, nvars, order, e, Scalar::one(ring));
}

std::string MultiSeries::str() const {
    if (coeffs_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : coeffs_) {
        if (!first) os << " + ";
        first = false;
        os << c.str();
        for (int i = 0; i < nvars_; ++i) {
            if (e[i] == 0) continue;
            os << "*x" << (i + 1);
            if (e[i] > 1) os << "^" << e[i];
        }
    }
    return os.str();
}

Rat flavor_norm(const MultiSeries& f, const AlgebraFlavor& flavor) {
    if (flavor.nvars() != f.nvars())
        throw std::invalid_argument("flavor has " + std::to_string(flavor.nvars()) +
                                    " variables, series has " + std::to_string(f.nvars()));
    switch (flavor.kind) {
        case FlavorKind::Polynomial: {
            Rat sum = 0;
            for (const auto& [e, c] : f.coeffs()) sum += c.norm();
            return sum;
        }
        case FlavorKind::Disc: {
            Rat sum = 0;
            for (const auto& [e, c] : f.coeffs()) sum += c.norm() * poly_radius_term(flavor.radii, e);
            return sum;
        }
        case FlavorKind::Tate: {
            Rat best = 0;
            for (const auto& [e, c] : f.coeffs())
                best = std::max(best, c.norm() * poly_radius_term(flavor.radii, e));
            return best;
        }
        case FlavorKind::Dagger: {
            Rat sum = 0;
            for (const auto& [e, c] : f.coeffs()) sum += c.norm() * poly_radius_term(flavor.rho, e);
            return sum;
        }
        case FlavorKind::FormalPS: {
            Rat best = 0;
            for (const auto& [e, c] : f.coeffs())
                best = std::max(best, c.norm() / Rat(flavor.psi.at(e)));
            return best;
        }
        case FlavorKind::Stein: {
            if (f.nvars() > 2) throw std::invalid_argument("stein norm supports at most 2 variables");
            if (flavor.stein_radii.empty())
                throw std::invalid_argument("stein norm requires a nonempty radius sequence");
            Rat best = 0;
            for (size_t n = 0; n < flavor.stein_radii.size(); ++n) {
                std::vector<Rat> radii(f.nvars(), flavor.stein_radii[n]);
                Rat sum = 0;
                for (const auto& [e, c] : f.coeffs()) sum += c.norm() * poly_radius_term(radii, e);
                best = std::max(best, sum / Rat(flavor.psi.at({static_cast<int>(n)})));
            }
            return best;
        }
        case FlavorKind::Hybrid:
            throw std::invalid_argument("hybrid flavors have no aggregate norm; use components");
    }
    throw std::logic_error("unreachable");
}

MultiSeries tensor_embed_left(const MultiSeries& f) {
    return f.embedded(2 * f.nvars(), 0);
}

MultiSeries tensor_embed_right(const MultiSeries& f) {
    return f.embedded(2 * f.nvars(), f.nvars());
}

MultiSeries diagonal_restrict(const MultiSeries& f) {
    if (f.nvars() % 2 != 0)
        throw std::invalid_argument("diagonal restriction needs an even variable count");
    int n = f.nvars() / 2;
    MultiSeries r(f.ring(), n, f.order());
    for (const auto& [e, c] : f.coeffs()) {
        Exponents half(n);
        for (int i = 0; i < n; ++i) half[i] = e[i] + e[n + i];
        Scalar s = r.coeff(half) + c;
        r.set_coeff(half, s);
    }
    return r;
}

namespace {

[[noreturn]] void parse_fail(const std::string& text, size_t pos, const std::string& expected) {
    std::string tok = pos < text.size() ? text.substr(pos, 12) : "<end>";
    throw std::invalid_argument("parse error at position " + std::to_string(pos) + ": expected " +
                                expected + ", got '" + tok + "'");
}

void skip_ws(const std::string& t, size_t& pos) {
    while (pos < t.size() && std::isspace(static_cast<unsigned char>(t[pos]))) ++pos;
}

int parse_plain_int(const std::string& t, size_t& pos) {
    skip_ws(t, pos);
    size_t start = pos;
    while (pos < t.size() && std::isdigit(static_cast<unsigned char>(t[pos]))) ++pos;
    if (pos == start) parse_fail(t, start, "integer");
    return std::stoi(t.substr(start, pos - start));
}

// Variable reference: x<k> (1-based) or letter aliases. One variable is x;
// a diagonal pair is (y, z); three variables are (x, y, z).
int parse_var(const std::string& t, size_t& pos, int nvars) {
    skip_ws(t, pos);
    if (pos >= t.size()) parse_fail(t, pos, "variable");
    char c = t[pos];
    if (c == 'x' && pos + 1 < t.size() && std::isdigit(static_cast<unsigned char>(t[pos + 1]))) {
        ++pos;
        int k = parse_plain_int(t, pos);
        if (k < 1 || k > nvars) parse_fail(t, pos, "variable index within range");
        return k - 1;
    }
    int idx = -1;
    if (nvars == 1 && c == 'x') idx = 0;
    if (nvars == 2 && c == 'y') idx = 0;
    if (nvars == 2 && c == 'z') idx = 1;
    if (nvars == 3 && c == 'x') idx = 0;
    if (nvars == 3 && c == 'y') idx = 1;
    if (nvars == 3 && c == 'z') idx = 2;
    if (idx < 0) parse_fail(t, pos, "variable valid for this arity");
    ++pos;
    return idx;
}

bool starts_scalar(const std::string& t, size_t pos) {
    if (pos >= t.size()) return false;
    char c = t[pos];
    return std::isdigit(static_cast<unsigned char>(c)) || t.compare(pos, 6, "padic(") == 0;
}

}  // namespace

MultiSeries parse_series(const std::string& text, const RingDescriptor& ring, int nvars,
                         int order) {
    MultiSeries result(ring, nvars, order);
    size_t pos = 0;
    skip_ws(text, pos);
    if (pos == text.size()) parse_fail(text, pos, "series");
    bool negate = false;
    if (text[pos] == '+' || text[pos] == '-') {
        negate = text[pos] == '-';
        ++pos;
    }
    while (true) {
        // One term: product of scalar and variable-power factors.
        Scalar coeff = Scalar::one(ring);
        Exponents e(nvars, 0);
        bool any = false;
        while (true) {
            skip_ws(text, pos);
            if (starts_scalar(text, pos)) {
                coeff = coeff * parse_scalar(text, pos, ring);
                any = true;
            } else if (pos < text.size() &&
                       (text[pos] == 'x' || text[pos] == 'y' || text[pos] == 'z')) {
                int var = parse_var(text, pos, nvars);
                int exp = 1;
                skip_ws(text, pos);
                if (pos < text.size() && text[pos] == '^') {
                    ++pos;
                    exp = parse_plain_int(text, pos);
                }
                e[var] += exp;
                any = true;
            } else {
                break;
            }
            skip_ws(text, pos);
            if (pos < text.size() && text[pos] == '*') {
                ++pos;
                continue;
            }
            // Juxtaposition of factors is accepted too.
            if (pos < text.size() &&
                (starts_scalar(text, pos) || text[pos] == 'x' || text[pos] == 'y' ||
                 text[pos] == 'z'))
                continue;
            break;
        }
        if (!any) parse_fail(text, pos, "term");
        if (total_degree(e) > order)
            throw std::invalid_argument("term at position " + std::to_string(pos) +
                                        " exceeds truncation order " + std::to_string(order));
        if (negate) coeff = -coeff;
        Scalar s = result.coeff(e) + coeff;
        result.set_coeff(e, s);

        skip_ws(text, pos);
        if (pos == text.size()) break;
        if (text[pos] == '+' || text[pos] == '-') {
            negate = text[pos] == '-';
            ++pos;
        } else {
            parse_fail(text, pos, "'+' or '-'");
        }
    }
    return result;
}

Rat parse_rational(const std::string& text) {
    size_t slash = text.find('/');
    if (slash == std::string::npos) return Rat(Int(text));
    Int num(text.substr(0, slash));
    Int den(text.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator in '" + text + "'");
    return Rat(num, den);
}

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    size_t start = 0;
    while (true) {
        size_t p = s.find(sep, start);
        if (p == std::string::npos) {
            out.push_back(s.substr(start));
            return out;
        }
        out.push_back(s.substr(start, p - start));
        start = p + 1;
    }
}

std::string strip(const std::string& s) {
    size_t a = s.find_first_not_of(" \t");
    if (a == std::string::npos) return "";
    size_t b = s.find_last_not_of(" \t");
    return s.substr(a, b - a + 1);
}

std::vector<Rat> parse_radii(const std::string& body) {
    std::vector<Rat> out;
    for (const std::string& item : split(body, ','))
        if (!strip(item).empty()) out.push_back(parse_rational(strip(item)));
    return out;
}

WeightTable parse_weight_entries(const std::string& body, int key_arity) {
    WeightTable table;
    if (strip(body).empty()) return table;
    for (const std::string& item : split(body, ',')) {
        std::string entry = strip(item);
        if (entry.empty()) continue;
        size_t eq = entry.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("weight entry '" + entry + "' lacks '='");
        Exponents key;
        for (const std::string& part : split(entry.substr(0, eq), '.'))
            key.push_back(std::stoi(strip(part)));
        if (key_arity > 0 && static_cast<int>(key.size()) != key_arity)
            throw std::invalid_argument("weight key arity mismatch in '" + entry + "'");
        Int w(strip(entry.substr(eq + 1)));
        if (w < 1) throw std::invalid_argument("weight values must be >= 1");
        table.entries[key] = w;
    }
    return table;
}

}  // namespace

AlgebraFlavor parse_flavor(const std::string& raw) {
    std::string text = strip(raw);
    std::string head = text, body;
    bool has_body = false;
    size_t paren = text.find('(');
    if (paren != std::string::npos) {
        if (text.back() != ')') throw std::invalid_argument("unbalanced flavor literal '" + raw + "'");
        head = text.substr(0, paren);
        body = text.substr(paren + 1, text.size() - paren - 2);
        has_body = true;
    } else {
        size_t colon = text.find(':');
        if (colon != std::string::npos) {
            head = text.substr(0, colon);
            body = text.substr(colon + 1);
            has_body = true;
        }
    }
    head = strip(head);
    if (head == "poly") {
        int n = has_body && !strip(body).empty() ? std::stoi(strip(body)) : 1;
        return AlgebraFlavor::polynomial(n);
    }
    if (head == "disc") return AlgebraFlavor::disc(parse_radii(body));
    if (head == "tate") return AlgebraFlavor::tate(parse_radii(body));
    if (head == "dagger") {
        auto fields = split(body, ';');
        std::vector<Rat> radii = parse_radii(fields[0]);
        std::vector<Rat> rho = fields.size() > 1 ? parse_radii(fields[1]) : std::vector<Rat>{};
        return AlgebraFlavor::dagger(radii, rho);
    }
    if (head == "formal") {
        if (!has_body || strip(body).empty()) return AlgebraFlavor::formal_ps(1);
        if (body.find('=') == std::string::npos) return AlgebraFlavor::formal_ps(std::stoi(strip(body)));
        WeightTable table = parse_weight_entries(body, 0);
        int arity = static_cast<int>(table.entries.begin()->first.size());
        return AlgebraFlavor::formal_ps(arity, table);
    }
    if (head == "stein") {
        auto fields = split(body, ';');
        if (fields.empty() || strip(fields[0]).empty())
            throw std::invalid_argument("stein literal needs a radius");
        Rat r = parse_rational(strip(fields[0]));
        std::vector<Rat> seq;
        if (fields.size() > 1) {
            std::string seq_body = fields[1];
            for (char& c : seq_body)
                if (c == '<') c = ',';
            seq = parse_radii(seq_body);
        } else {
            seq = {r / 2, r * Rat(3, 4)};
        }
        WeightTable psi = fields.size() > 2 ? parse_weight_entries(fields[2], 1) : WeightTable{};
        return AlgebraFlavor::stein(r, seq, psi);
    }
    throw std::invalid_argument("unknown flavor literal '" + raw + "'");
}

}  // namespace banalg
