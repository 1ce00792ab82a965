#include "mfadams/adams.hpp"

namespace mfadams {

VirtualClass::VirtualClass(RingPtr ring, GradedPoly potential)
    : ring_(std::move(ring)), potential_(std::move(potential)) {
    if (!ring_) throw DomainError("virtual class requires a ring");
    if (!same_ring(potential_.ring(), ring_)) throw DomainError("potential ring mismatch");
}

VirtualClass VirtualClass::of(const LinearFactorization& x, long coefficient) {
    VirtualClass v(x.ring, x.potential);
    v.add_term(coefficient, x);
    return v;
}

void VirtualClass::add_term(long coefficient, const LinearFactorization& x) {
    if (coefficient == 0) return;
    if (!same_ring(x.ring, ring_)) throw DomainError("virtual class ring mismatch");
    if (x.potential != potential_)
        throw DomainError("virtual class terms must share one potential");
    for (size_t i = 0; i < terms_.size(); ++i) {
        if (terms_[i].second == x) {
            terms_[i].first += coefficient;
            if (terms_[i].first == 0) terms_.erase(terms_.begin() + static_cast<long>(i));
            return;
        }
    }
    terms_.emplace_back(coefficient, x);
}

VirtualClass VirtualClass::operator-() const {
    VirtualClass out(ring_, potential_);
    for (const auto& [c, x] : terms_) out.add_term(-c, x);
    return out;
}

VirtualClass& VirtualClass::operator+=(const VirtualClass& rhs) {
    if (!same_ring(ring_, rhs.ring_)) throw DomainError("virtual class ring mismatch");
    if (potential_ != rhs.potential_)
        throw DomainError("virtual class sum requires equal potentials");
    if (this == &rhs) {
        for (auto& [c, x] : terms_) c *= 2;
        return *this;
    }
    for (const auto& [c, x] : rhs.terms_) add_term(c, x);
    return *this;
}

VirtualClass VirtualClass::scaled(long c) const {
    VirtualClass out(ring_, potential_);
    if (c != 0) {
        for (const auto& [coeff, x] : terms_) out.add_term(c * coeff, x);
    }
    return out;
}

VirtualClass tensor_product(const VirtualClass& v, const VirtualClass& w) {
    if (!same_ring(v.ring(), w.ring())) throw DomainError("virtual class ring mismatch");
    VirtualClass out(v.ring(), v.potential() + w.potential());
    for (const auto& [cv, x] : v.terms()) {
        for (const auto& [cw, y] : w.terms()) {
            out.add_term(cv * cw, tensor_product(x, y));
        }
    }
    return out;
}

VirtualClass negate_potential(const VirtualClass& v) {
    VirtualClass out(v.ring(), -v.potential());
    for (const auto& [c, x] : v.terms()) out.add_term(c, negate_potential(x));
    return out;
}

VirtualClass adams_operation(const VirtualClass& v, int p) {
    if (p != v.ring()->prime)
        throw DomainError("adams prime " + std::to_string(p) +
                          " does not match coefficient field prime " +
                          std::to_string(v.ring()->prime));
    VirtualClass out(v.ring(), v.potential());
    for (const auto& [c, x] : v.terms()) {
        out.add_term(c, tensor_power_sector(x, p, 0));
        out.add_term(-c, tensor_power_sector(x, p, 1));
    }
    return out;
}

long euler_characteristic(const VirtualClass& v, const HomologyOptions& opts) {
    if (!v.potential().is_zero())
        throw DomainError("euler characteristic of a virtual class requires potential zero");
    long chi = 0;
    for (const auto& [c, x] : v.terms()) chi += c * euler_characteristic(x, opts);
    return chi;
}

long chi_pairing(const VirtualClass& v, const VirtualClass& w, const HomologyOptions& opts) {
    if (!same_ring(v.ring(), w.ring())) throw DomainError("pairing ring mismatch");
    if (v.potential() != w.potential())
        throw DomainError("pairing requires both classes over the same potential");
    long total = 0;
    for (const auto& [cv, x] : v.terms()) {
        for (const auto& [cw, y] : w.terms()) {
            LinearFactorization z = tensor_product(x, negate_potential(y));
            total += cv * cw * euler_characteristic(z, opts);
        }
    }
    return total;
}

VirtualClass stable_class(const RingPtr& ring, const std::vector<GradedPoly>& g,
                          const std::vector<GradedPoly>& a) {
    return VirtualClass::of(koszul_factorization(ring, g, a));
}

long theta_pairing(const VirtualClass& m, const VirtualClass& n, const HomologyOptions& opts) {
    return chi_pairing(m, n, opts);
}

}  // namespace mfadams
