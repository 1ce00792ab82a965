#include "mfadams/cyclotomic.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace mfadams {

namespace {

void check_prime(int p) {
    if (!is_prime(p)) throw DomainError("not a prime: " + std::to_string(p));
}

// Reduce a coefficient vector of length <= 2p-3 (exponents 0..2p-4) into the
// power basis of length p-1. First fold exponents >= p via zeta^p = 1, then
// substitute zeta^(p-1) = -(1 + zeta + ... + zeta^(p-2)).
std::vector<mpq_class> reduce(int p, std::vector<mpq_class> raw) {
    const size_t deg = static_cast<size_t>(p - 1);
    std::vector<mpq_class> out(deg, mpq_class(0));
    mpq_class top(0);
    for (size_t e = 0; e < raw.size(); ++e) {
        size_t r = e % static_cast<size_t>(p);
        if (r < deg) {
            out[r] += raw[e];
        } else {
            top += raw[e];
        }
    }
    if (top != 0) {
        for (size_t i = 0; i < deg; ++i) out[i] -= top;
    }
    return out;
}

// Polynomial helpers over Q for the extended Euclidean inversion mod Phi_p.
using QPoly = std::vector<mpq_class>;  // coefficient i of t^i; no trailing zeros

void trim(QPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

QPoly sub_scaled(const QPoly& a, const QPoly& b, const mpq_class& c, size_t shift) {
    QPoly out = a;
    if (out.size() < b.size() + shift) out.resize(b.size() + shift, mpq_class(0));
    for (size_t i = 0; i < b.size(); ++i) out[i + shift] -= c * b[i];
    trim(out);
    return out;
}

// Division with remainder: a = q*b + r.
void divmod(const QPoly& a, const QPoly& b, QPoly& q, QPoly& r) {
    r = a;
    trim(r);
    q.assign(a.size(), mpq_class(0));
    while (r.size() >= b.size() && !r.empty()) {
        mpq_class c = r.back() / b.back();
        size_t shift = r.size() - b.size();
        q[shift] = c;
        r = sub_scaled(r, b, c, shift);
    }
    trim(q);
}

}  // namespace

CycScalar CycScalar::zero(int p) {
    check_prime(p);
    return CycScalar(p, std::vector<mpq_class>(static_cast<size_t>(p - 1), mpq_class(0)));
}

CycScalar CycScalar::one(int p) {
    CycScalar s = zero(p);
    s.coeffs_[0] = 1;
    return s;
}

CycScalar CycScalar::from_rational(int p, const mpq_class& q) {
    CycScalar s = zero(p);
    s.coeffs_[0] = q;
    return s;
}

CycScalar CycScalar::from_integer(int p, long n) {
    return from_rational(p, mpq_class(n));
}

CycScalar CycScalar::zeta_power(int p, long k) {
    CycScalar s = zero(p);
    long r = k % p;
    if (r < 0) r += p;
    if (r < p - 1) {
        s.coeffs_[static_cast<size_t>(r)] = 1;
    } else {
        for (auto& c : s.coeffs_) c = -1;
    }
    return s;
}

bool CycScalar::is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(),
                       [](const mpq_class& c) { return c == 0; });
}

bool CycScalar::is_one() const {
    if (coeffs_[0] != 1) return false;
    return std::all_of(coeffs_.begin() + 1, coeffs_.end(),
                       [](const mpq_class& c) { return c == 0; });
}

bool CycScalar::is_rational() const {
    return std::all_of(coeffs_.begin() + 1, coeffs_.end(),
                       [](const mpq_class& c) { return c == 0; });
}

bool CycScalar::is_integer() const {
    return is_rational() && rational_is_integer(coeffs_[0]);
}

long CycScalar::to_integer() const {
    if (!is_integer()) throw DomainError("scalar is not a rational integer: " + to_string());
    if (!coeffs_[0].get_num().fits_slong_p())
        throw DomainError("integer overflow in scalar conversion");
    return coeffs_[0].get_num().get_si();
}

void CycScalar::check_same_field(const CycScalar& rhs) const {
    if (prime_ != rhs.prime_)
        throw DomainError("cyclotomic prime mismatch: " + std::to_string(prime_) +
                          " vs " + std::to_string(rhs.prime_));
}

CycScalar CycScalar::operator-() const {
    CycScalar out = *this;
    for (auto& c : out.coeffs_) c = -c;
    return out;
}

CycScalar& CycScalar::operator+=(const CycScalar& rhs) {
    check_same_field(rhs);
    for (size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
    return *this;
}

CycScalar& CycScalar::operator-=(const CycScalar& rhs) {
    check_same_field(rhs);
    for (size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
    return *this;
}

CycScalar& CycScalar::operator*=(const CycScalar& rhs) {
    check_same_field(rhs);
    const size_t n = coeffs_.size();
    std::vector<mpq_class> raw(2 * n - 1, mpq_class(0));
    for (size_t i = 0; i < n; ++i) {
        if (coeffs_[i] == 0) continue;
        for (size_t j = 0; j < n; ++j) {
            if (rhs.coeffs_[j] == 0) continue;
            raw[i + j] += coeffs_[i] * rhs.coeffs_[j];
        }
    }
    coeffs_ = reduce(prime_, std::move(raw));
    return *this;
}

CycScalar& CycScalar::operator/=(const CycScalar& rhs) {
    check_same_field(rhs);
    return *this *= rhs.inverse();
}

CycScalar CycScalar::inverse() const {
    if (is_zero()) throw DomainError("division by zero in Q(zeta_" +
                                     std::to_string(prime_) + ")");
    if (is_rational()) {
        CycScalar out = zero(prime_);
        out.coeffs_[0] = 1 / coeffs_[0];
        return out;
    }
    // Extended Euclid in Q[t] against Phi_p(t) = 1 + t + ... + t^(p-1).
    QPoly phi(static_cast<size_t>(prime_), mpq_class(1));
    QPoly a(coeffs_.begin(), coeffs_.end());
    trim(a);
    // Invariants: r0 = s0*a mod phi, r1 = s1*a mod phi.
    QPoly r0 = phi, r1 = a;
    QPoly s0 = {}, s1 = {mpq_class(1)};
    while (!r1.empty()) {
        QPoly q, r;
        divmod(r0, r1, q, r);
        QPoly s2 = s0;
        // s2 = s0 - q*s1
        for (size_t i = 0; i < q.size(); ++i) {
            if (q[i] == 0) continue;
            s2 = sub_scaled(s2, s1, q[i], i);
        }
        r0 = std::move(r1);
        s0 = std::move(s1);
        r1 = std::move(r);
        s1 = std::move(s2);
    }
    // r0 = gcd, a unit of Q since Phi_p is irreducible and a != 0 mod Phi_p.
    if (r0.size() != 1) throw DomainError("cyclotomic inversion failed");
    QPoly raw = s0;
    for (auto& c : raw) c /= r0[0];
    raw.resize(std::max(raw.size(), coeffs_.size()), mpq_class(0));
    return CycScalar(prime_, reduce(prime_, std::move(raw)));
}

bool CycScalar::operator==(const CycScalar& rhs) const {
    return prime_ == rhs.prime_ && coeffs_ == rhs.coeffs_;
}

std::string CycScalar::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (size_t k = 0; k < coeffs_.size(); ++k) {
        const mpq_class& c = coeffs_[k];
        if (c == 0) continue;
        bool negative = c < 0;
        mpq_class mag = negative ? mpq_class(-c) : c;
        if (first) {
            if (negative) os << "-";
            first = false;
        } else {
            os << (negative ? " - " : " + ");
        }
        if (k == 0) {
            os << mag.get_str();
        } else {
            if (mag != 1) os << mag.get_str() << "*";
            os << "z";
            if (k > 1) os << "^" << k;
        }
    }
    return os.str();
}

CycScalar CycScalar::parse(int p, const std::string& text) {
    check_prime(p);
    size_t pos = 0;
    auto skip_ws = [&] {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    };
    auto parse_term = [&]() -> CycScalar {
        CycScalar term = CycScalar::one(p);
        bool any = false;
        bool expect_factor = true;
        while (true) {
            skip_ws();
            if (pos >= text.size()) break;
            char c = text[pos];
            if (!expect_factor) {
                if (c == '*') {
                    ++pos;
                    expect_factor = true;
                    continue;
                }
                break;
            }
            if (std::isdigit(static_cast<unsigned char>(c))) {
                size_t start = pos;
                while (pos < text.size() &&
                       (std::isdigit(static_cast<unsigned char>(text[pos])) || text[pos] == '/'))
                    ++pos;
                term *= CycScalar::from_rational(p, parse_rational(text.substr(start, pos - start)));
                any = true;
                expect_factor = false;
            } else if (c == 'z') {
                ++pos;
                long k = 1;
                skip_ws();
                if (pos < text.size() && text[pos] == '^') {
                    ++pos;
                    skip_ws();
                    size_t start = pos;
                    if (pos < text.size() && text[pos] == '-') ++pos;
                    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
                        ++pos;
                    if (start == pos) throw ParseError("missing exponent after '^' in scalar");
                    try {
                        k = std::stol(text.substr(start, pos - start));
                    } catch (const std::out_of_range&) {
                        throw ParseError("exponent out of range in scalar '" + text + "'");
                    }
                }
                term *= CycScalar::zeta_power(p, k);
                any = true;
                expect_factor = false;
            } else {
                break;
            }
        }
        if (!any) throw ParseError("expected scalar term in '" + text + "'");
        return term;
    };

    CycScalar total = CycScalar::zero(p);
    skip_ws();
    bool expect_term = true;
    bool negate = false;
    while (pos < text.size()) {
        skip_ws();
        if (pos >= text.size()) break;
        char c = text[pos];
        if (c == '+' || c == '-') {
            if (expect_term && c == '-') {
                negate = !negate;
                ++pos;
                continue;
            }
            if (expect_term) {  // leading '+'
                ++pos;
                continue;
            }
            negate = (c == '-');
            expect_term = true;
            ++pos;
            continue;
        }
        if (!expect_term) throw ParseError("unexpected token in scalar '" + text + "'");
        CycScalar term = parse_term();
        if (negate) term = -term;
        total += term;
        negate = false;
        expect_term = false;
    }
    if (expect_term) throw ParseError("dangling operator in scalar '" + text + "'");
    return total;
}

}  // namespace mfadams
