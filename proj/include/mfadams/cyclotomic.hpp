#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "mfadams/common.hpp"

namespace mfadams {

// Element of the cyclotomic field Q(zeta_p), p prime, stored in the power
// basis 1, zeta, ..., zeta^(p-2) modulo 1 + zeta + ... + zeta^(p-1).
// For p = 2 this degenerates to Q with zeta = -1. The representation is
// canonical: two elements are equal iff their coefficient vectors agree.
class CycScalar {
  public:
    CycScalar() : prime_(2), coeffs_(1) {}

    static CycScalar zero(int p);
    static CycScalar one(int p);
    static CycScalar from_rational(int p, const mpq_class& q);
    static CycScalar from_integer(int p, long n);

    // zeta^k, exponent reduced mod p. zeta_power(p, 0) == one(p).
    static CycScalar zeta_power(int p, long k);

    // Accepts e.g. "3/2", "z", "-z^2", "1 - 2*z^3". z denotes zeta.
    static CycScalar parse(int p, const std::string& text);

    int prime() const { return prime_; }
    const std::vector<mpq_class>& coefficients() const { return coeffs_; }

    bool is_zero() const;
    bool is_one() const;
    bool is_rational() const;
    // Coefficient of the basis element 1; the full value when is_rational().
    const mpq_class& rational_part() const { return coeffs_[0]; }
    bool is_integer() const;
    long to_integer() const;

    CycScalar operator-() const;
    CycScalar& operator+=(const CycScalar& rhs);
    CycScalar& operator-=(const CycScalar& rhs);
    CycScalar& operator*=(const CycScalar& rhs);
    CycScalar& operator/=(const CycScalar& rhs);

    friend CycScalar operator+(CycScalar a, const CycScalar& b) { return a += b; }
    friend CycScalar operator-(CycScalar a, const CycScalar& b) { return a -= b; }
    friend CycScalar operator*(CycScalar a, const CycScalar& b) { return a *= b; }
    friend CycScalar operator/(CycScalar a, const CycScalar& b) { return a /= b; }

    CycScalar inverse() const;

    bool operator==(const CycScalar& rhs) const;
    bool operator!=(const CycScalar& rhs) const { return !(*this == rhs); }

    std::string to_string() const;

  private:
    CycScalar(int p, std::vector<mpq_class> coeffs)
        : prime_(p), coeffs_(std::move(coeffs)) {}

    void check_same_field(const CycScalar& rhs) const;

    int prime_;
    std::vector<mpq_class> coeffs_;  // length prime_ - 1
};

}  // namespace mfadams
