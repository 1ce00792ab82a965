#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace mfadams {

// Mathematical precondition violations (ring mismatch, division by zero, ...).
class DomainError : public std::runtime_error {
  public:
    explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

// Malformed textual or JSON input.
class ParseError : public std::runtime_error {
  public:
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

// Strict mode only: finite length could not be certified within the cutoff.
class TailUnverifiedError : public DomainError {
  public:
    explicit TailUnverifiedError(const std::string& what) : DomainError(what) {}
};

bool is_prime(long n);

// Canonicalized rational from a num/den pair.
mpq_class make_rational(long num, long den = 1);

// Accepts "7", "-7", "3/2", "-3/2". Whitespace is not tolerated.
mpq_class parse_rational(const std::string& text);

std::string rational_to_string(const mpq_class& q);

bool rational_is_integer(const mpq_class& q);

}  // namespace mfadams
