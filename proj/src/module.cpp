#include "mfadams/module.hpp"

#include <sstream>

namespace mfadams {

GradedMap::GradedMap(RingPtr ring, FreeGradedModule source, FreeGradedModule target, long shift)
    : ring_(std::move(ring)),
      source_(std::move(source)),
      target_(std::move(target)),
      shift_(shift),
      entries_(source_.rank() * target_.rank(), GradedPoly(ring_)) {}

GradedMap GradedMap::zero(RingPtr ring, FreeGradedModule source, FreeGradedModule target,
                          long shift) {
    return GradedMap(std::move(ring), std::move(source), std::move(target), shift);
}

const GradedPoly& GradedMap::at(size_t row, size_t col) const {
    if (row >= rows() || col >= cols()) throw DomainError("graded map index out of range");
    return entries_[index(row, col)];
}

void GradedMap::set(size_t row, size_t col, GradedPoly value) {
    if (row >= rows() || col >= cols()) throw DomainError("graded map index out of range");
    if (!same_ring(value.ring(), ring_)) throw DomainError("entry ring mismatch");
    entries_[index(row, col)] = std::move(value);
}

bool GradedMap::is_zero() const {
    for (const auto& e : entries_) {
        if (!e.is_zero()) return false;
    }
    return true;
}

GradedMap GradedMap::composed_with(const GradedMap& inner) const {
    if (!same_ring(ring_, inner.ring_)) throw DomainError("composition ring mismatch");
    if (inner.target_ != source_)
        throw DomainError("composition rank mismatch");
    GradedMap out(ring_, inner.source_, target_, shift_ + inner.shift_);
    for (size_t i = 0; i < rows(); ++i) {
        for (size_t j = 0; j < inner.cols(); ++j) {
            GradedPoly acc(ring_);
            for (size_t k = 0; k < cols(); ++k) {
                const GradedPoly& a = at(i, k);
                const GradedPoly& b = inner.at(k, j);
                if (a.is_zero() || b.is_zero()) continue;
                acc += a * b;
            }
            out.set(i, j, std::move(acc));
        }
    }
    return out;
}

GradedMap GradedMap::scaled(const CycScalar& c) const {
    GradedMap out = *this;
    for (auto& e : out.entries_) e = e.scaled(c);
    return out;
}

GradedMap GradedMap::negated() const {
    GradedMap out = *this;
    for (auto& e : out.entries_) e = -e;
    return out;
}

std::vector<std::string> GradedMap::homogeneity_failures(const std::string& label) const {
    std::vector<std::string> failures;
    for (size_t i = 0; i < rows(); ++i) {
        for (size_t j = 0; j < cols(); ++j) {
            const GradedPoly& e = at(i, j);
            if (e.is_zero()) continue;
            long want = source_.degree_of(j) + shift_ - target_.degree_of(i);
            auto d = e.weighted_degree();
            if (!d) {
                std::ostringstream os;
                os << label << "[" << i << "," << j << "] = " << e.to_string()
                   << " is inhomogeneous";
                failures.push_back(os.str());
            } else if (*d != want) {
                std::ostringstream os;
                os << label << "[" << i << "," << j << "] = " << e.to_string() << " has degree "
                   << *d << ", expected " << want;
                failures.push_back(os.str());
            }
        }
    }
    return failures;
}

bool GradedMap::operator==(const GradedMap& rhs) const {
    return same_ring(ring_, rhs.ring_) && source_ == rhs.source_ && target_ == rhs.target_ &&
           shift_ == rhs.shift_ && entries_ == rhs.entries_;
}

}  // namespace mfadams
