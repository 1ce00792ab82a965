#include "mfadams/common.hpp"

namespace mfadams {

bool is_prime(long n) {
    if (n < 2) return false;
    for (long d = 2; d * d <= n; ++d) {
        if (n % d == 0) return false;
    }
    return true;
}

mpq_class make_rational(long num, long den) {
    if (den == 0) throw DomainError("rational with zero denominator");
    mpq_class q(num, den);
    q.canonicalize();
    return q;
}

mpq_class parse_rational(const std::string& text) {
    if (text.empty()) throw ParseError("empty rational literal");
    size_t pos = 0;
    if (text[0] == '+' || text[0] == '-') pos = 1;
    bool seen_digit = false;
    bool seen_slash = false;
    for (size_t i = pos; i < text.size(); ++i) {
        char c = text[i];
        if (c >= '0' && c <= '9') {
            seen_digit = true;
        } else if (c == '/' && !seen_slash && seen_digit && i + 1 < text.size()) {
            seen_slash = true;
        } else {
            throw ParseError("bad rational literal: '" + text + "'");
        }
    }
    if (!seen_digit) throw ParseError("bad rational literal: '" + text + "'");
    mpq_class q;
    if (q.set_str(text, 10) != 0) throw ParseError("bad rational literal: '" + text + "'");
    if (q.get_den() == 0) throw ParseError("zero denominator in '" + text + "'");
    q.canonicalize();
    return q;
}

std::string rational_to_string(const mpq_class& q) {
    return q.get_str();
}

bool rational_is_integer(const mpq_class& q) {
    return q.get_den() == 1;
}

}  // namespace mfadams
