#include "mfadams/poly.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace mfadams {

long weighted_degree_of(const RingSpec& ring, const Exponents& exps) {
    if (exps.size() != ring.var_count())
        throw DomainError("exponent vector length mismatch");
    long d = 0;
    for (size_t i = 0; i < exps.size(); ++i) d += static_cast<long>(exps[i]) * ring.weights[i];
    return d;
}

namespace {

// Canonical term order: weighted degree ascending, then descending
// lexicographic on exponents (so x^2 precedes x*y precedes y^2).
bool term_before(const RingSpec& ring, const Exponents& a, const Exponents& b) {
    long da = weighted_degree_of(ring, a);
    long db = weighted_degree_of(ring, b);
    if (da != db) return da < db;
    return a > b;  // descending lex
}

void enumerate_basis(const RingSpec& ring, size_t var, long remaining, Exponents& cur,
                     std::vector<Exponents>& out) {
    if (var + 1 == ring.var_count()) {
        long w = ring.weights[var];
        if (remaining % w == 0) {
            cur[var] = static_cast<int>(remaining / w);
            out.push_back(cur);
        }
        return;
    }
    long w = ring.weights[var];
    for (long e = remaining / w; e >= 0; --e) {
        cur[var] = static_cast<int>(e);
        enumerate_basis(ring, var + 1, remaining - e * w, cur, out);
    }
}

}  // namespace

std::vector<Exponents> monomial_basis(const RingSpec& ring, long degree) {
    std::vector<Exponents> out;
    if (degree < 0) return out;
    if (ring.var_count() == 0) {
        if (degree == 0) out.push_back({});
        return out;
    }
    Exponents cur(ring.var_count(), 0);
    enumerate_basis(ring, 0, degree, cur, out);
    return out;
}

GradedPoly GradedPoly::constant(RingPtr ring, const CycScalar& c) {
    if (!ring) throw DomainError("polynomial requires a ring");
    Exponents zero(ring->var_count(), 0);
    return monomial(std::move(ring), zero, c);
}

GradedPoly GradedPoly::monomial(RingPtr ring, const Exponents& exps, const CycScalar& c) {
    GradedPoly p(std::move(ring));
    if (!p.ring_) throw DomainError("polynomial requires a ring");
    if (exps.size() != p.ring_->var_count()) throw DomainError("exponent vector length mismatch");
    if (c.prime() != p.ring_->prime) throw DomainError("scalar prime does not match ring");
    for (int e : exps) {
        if (e < 0) throw DomainError("negative exponent in monomial");
    }
    if (!c.is_zero()) p.terms_.emplace_back(exps, c);
    return p;
}

GradedPoly GradedPoly::variable(RingPtr ring, size_t index) {
    if (!ring || index >= ring->var_count()) throw DomainError("variable index out of range");
    Exponents e(ring->var_count(), 0);
    e[index] = 1;
    CycScalar one = CycScalar::one(ring->prime);
    return monomial(std::move(ring), e, one);
}

void GradedPoly::check_same_ring(const GradedPoly& rhs) const {
    if (!same_ring(ring_, rhs.ring_)) throw DomainError("polynomial ring mismatch");
}

CycScalar GradedPoly::coefficient(const Exponents& exps) const {
    for (const auto& [e, c] : terms_) {
        if (e == exps) return c;
    }
    return CycScalar::zero(ring_->prime);
}

void GradedPoly::add_term(const Exponents& exps, const CycScalar& c) {
    if (c.is_zero()) return;
    auto it = std::lower_bound(
        terms_.begin(), terms_.end(), exps,
        [&](const Term& t, const Exponents& e) { return term_before(*ring_, t.first, e); });
    if (it != terms_.end() && it->first == exps) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    } else {
        terms_.insert(it, Term{exps, c});
    }
}

GradedPoly GradedPoly::operator-() const {
    GradedPoly out = *this;
    for (auto& [e, c] : out.terms_) c = -c;
    return out;
}

GradedPoly& GradedPoly::operator+=(const GradedPoly& rhs) {
    check_same_ring(rhs);
    if (this == &rhs) {
        for (auto& [e, c] : terms_) c += c;
        return *this;
    }
    for (const auto& [e, c] : rhs.terms_) add_term(e, c);
    return *this;
}

GradedPoly& GradedPoly::operator-=(const GradedPoly& rhs) {
    check_same_ring(rhs);
    if (this == &rhs) {
        terms_.clear();
        return *this;
    }
    for (const auto& [e, c] : rhs.terms_) add_term(e, -c);
    return *this;
}

GradedPoly& GradedPoly::operator*=(const GradedPoly& rhs) {
    check_same_ring(rhs);
    GradedPoly out(ring_);
    for (const auto& [ea, ca] : terms_) {
        for (const auto& [eb, cb] : rhs.terms_) {
            Exponents e(ea.size());
            for (size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            out.add_term(e, ca * cb);
        }
    }
    *this = std::move(out);
    return *this;
}

GradedPoly GradedPoly::scaled(const CycScalar& c) const {
    GradedPoly out(ring_);
    if (c.is_zero()) return out;
    out.terms_ = terms_;
    for (auto& [e, coeff] : out.terms_) coeff *= c;
    return out;
}

GradedPoly GradedPoly::pow(unsigned long e) const {
    GradedPoly out = constant(ring_, CycScalar::one(ring_->prime));
    GradedPoly base = *this;
    while (e > 0) {
        if (e & 1) out *= base;
        base *= base;
        e >>= 1;
    }
    return out;
}

bool GradedPoly::operator==(const GradedPoly& rhs) const {
    return same_ring(ring_, rhs.ring_) && terms_ == rhs.terms_;
}

std::optional<long> GradedPoly::weighted_degree() const {
    if (is_zero()) throw DomainError("degree of the zero polynomial is undefined");
    long d = weighted_degree_of(*ring_, terms_.front().first);
    for (const auto& [e, c] : terms_) {
        if (weighted_degree_of(*ring_, e) != d) return std::nullopt;
    }
    return d;
}

bool GradedPoly::is_homogeneous() const {
    if (is_zero()) return true;
    return weighted_degree().has_value();
}

GradedPoly GradedPoly::substituted(const std::vector<GradedPoly>& images) const {
    if (images.size() != ring_->var_count())
        throw DomainError("substitution needs one image per variable");
    for (size_t i = 0; i < images.size(); ++i) {
        const GradedPoly& im = images[i];
        if (!same_ring(im.ring(), ring_)) throw DomainError("substitution image ring mismatch");
        if (im.is_zero()) continue;
        auto d = im.weighted_degree();
        if (!d || *d != ring_->weights[i])
            throw DomainError("substitution image for '" + ring_->variables[i] +
                              "' is not homogeneous of weight " +
                              std::to_string(ring_->weights[i]));
    }
    GradedPoly out(ring_);
    for (const auto& [e, c] : terms_) {
        GradedPoly term = constant(ring_, c);
        for (size_t i = 0; i < e.size(); ++i) {
            if (e[i] > 0) term *= images[i].pow(static_cast<unsigned long>(e[i]));
        }
        out += term;
    }
    return out;
}

std::string GradedPoly::to_string() const {
    if (terms_.empty()) return "0";
    // Display order: degree descending, then descending lex.
    std::vector<Term> display = terms_;
    std::sort(display.begin(), display.end(), [&](const Term& a, const Term& b) {
        long da = weighted_degree_of(*ring_, a.first);
        long db = weighted_degree_of(*ring_, b.first);
        if (da != db) return da > db;
        return a.first > b.first;
    });
    std::ostringstream os;
    bool first = true;
    for (auto it = display.begin(); it != display.end(); ++it) {
        const auto& [exps, coeff] = *it;
        std::string mono;
        {
            std::ostringstream ms;
            bool any = false;
            for (size_t i = 0; i < exps.size(); ++i) {
                if (exps[i] == 0) continue;
                if (any) ms << "*";
                ms << ring_->variables[i];
                if (exps[i] > 1) ms << "^" << exps[i];
                any = true;
            }
            mono = ms.str();
        }
        // Split a leading rational sign out of single-basis-term scalars so
        // terms join with " + " / " - ".
        std::string cstr = coeff.to_string();
        bool negative = false;
        std::string body;
        size_t nonzero_coords = 0;
        for (const auto& q : coeff.coefficients())
            if (q != 0) ++nonzero_coords;
        if (nonzero_coords == 1 && !cstr.empty() && cstr[0] == '-') {
            negative = true;
            body = cstr.substr(1);
        } else {
            body = cstr;
        }
        std::string piece;
        if (mono.empty()) {
            piece = (nonzero_coords > 1) ? "(" + body + ")" : body;
        } else if (nonzero_coords > 1) {
            piece = "(" + body + ")*" + mono;
        } else if (body == "1") {
            piece = mono;
        } else {
            piece = body + "*" + mono;
        }
        if (first) {
            if (negative) os << "-";
            os << piece;
            first = false;
        } else {
            os << (negative ? " - " : " + ") << piece;
        }
    }
    return os.str();
}

// ---------------------------------------------------------------------------
// Parser: expr := term (('+'|'-') term)*, term := unary factor ('*' factor)*,
// factor := atom ['^' exponent], atom := number | 'z' | variable | '(' expr ')'

namespace {

class PolyParser {
  public:
    PolyParser(RingPtr ring, const std::string& text) : ring_(std::move(ring)), text_(text) {}

    GradedPoly run() {
        GradedPoly p = parse_expr();
        skip_ws();
        if (pos_ != text_.size())
            throw ParseError("unexpected trailing input at position " + std::to_string(pos_) +
                             " in '" + text_ + "'");
        return p;
    }

  private:
    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool eat(char c) {
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    char peek() {
        skip_ws();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    GradedPoly parse_expr() {
        GradedPoly acc = parse_term();
        while (true) {
            char c = peek();
            if (c == '+') {
                ++pos_;
                acc += parse_term();
            } else if (c == '-') {
                ++pos_;
                acc -= parse_term();
            } else {
                break;
            }
        }
        return acc;
    }

    GradedPoly parse_term() {
        bool negate = false;
        while (true) {
            char c = peek();
            if (c == '-') {
                negate = !negate;
                ++pos_;
            } else if (c == '+') {
                ++pos_;
            } else {
                break;
            }
        }
        GradedPoly acc = parse_factor();
        while (eat('*')) acc *= parse_factor();
        if (negate) acc = -acc;
        return acc;
    }

    GradedPoly parse_factor() {
        GradedPoly base = parse_atom();
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == '^') {
            ++pos_;
            long e = parse_int();
            if (e < 0) {
                // Negative powers only make sense for the root of unity; the
                // atom was already folded into a polynomial, so recover the
                // scalar case explicitly.
                if (base.terms().size() == 1 && base.terms()[0].first ==
                        Exponents(ring_->var_count(), 0)) {
                    CycScalar s = base.terms()[0].second;
                    CycScalar out = CycScalar::one(ring_->prime);
                    CycScalar inv = s.inverse();
                    for (long i = 0; i < -e; ++i) out *= inv;
                    return GradedPoly::constant(ring_, out);
                }
                throw ParseError("negative exponent on a non-scalar");
            }
            return base.pow(static_cast<unsigned long>(e));
        }
        return base;
    }

    long parse_int() {
        skip_ws();
        size_t start = pos_;
        if (pos_ < text_.size() && text_[pos_] == '-') ++pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (start == pos_) throw ParseError("expected integer exponent in '" + text_ + "'");
        long value = 0;
        try {
            value = std::stol(text_.substr(start, pos_ - start));
        } catch (const std::out_of_range&) {
            throw ParseError("exponent out of range in '" + text_ + "'");
        }
        if (value > 100000 || value < -100000)
            throw ParseError("exponent out of range in '" + text_ + "'");
        return value;
    }

    GradedPoly parse_atom() {
        skip_ws();
        if (pos_ >= text_.size()) throw ParseError("unexpected end of polynomial '" + text_ + "'");
        char c = text_[pos_];
        if (c == '(') {
            ++pos_;
            GradedPoly inner = parse_expr();
            if (!eat(')')) throw ParseError("missing ')' in '" + text_ + "'");
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            size_t start = pos_;
            while (pos_ < text_.size() &&
                   (std::isdigit(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '/'))
                ++pos_;
            mpq_class q = parse_rational(text_.substr(start, pos_ - start));
            return GradedPoly::constant(ring_, CycScalar::from_rational(ring_->prime, q));
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            size_t start = pos_;
            while (pos_ < text_.size() &&
                   (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
                ++pos_;
            std::string name = text_.substr(start, pos_ - start);
            if (name == "z")
                return GradedPoly::constant(ring_, CycScalar::zeta_power(ring_->prime, 1));
            int idx = ring_->var_index(name);
            if (idx < 0) throw ParseError("unknown variable '" + name + "'");
            return GradedPoly::variable(ring_, static_cast<size_t>(idx));
        }
        throw ParseError(std::string("unexpected character '") + c + "' in '" + text_ + "'");
    }

    RingPtr ring_;
    const std::string& text_;
    size_t pos_ = 0;
};

}  // namespace

GradedPoly GradedPoly::parse(RingPtr ring, const std::string& text) {
    if (!ring) throw DomainError("polynomial requires a ring");
    return PolyParser(std::move(ring), text).run();
}

}  // namespace mfadams
