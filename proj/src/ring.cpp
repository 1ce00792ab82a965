#include "mfadams/ring.hpp"

#include <set>
#include <sstream>

namespace mfadams {

int RingSpec::var_index(const std::string& name) const {
    for (size_t i = 0; i < variables.size(); ++i) {
        if (variables[i] == name) return static_cast<int>(i);
    }
    return -1;
}

void RingSpec::check() const {
    if (!is_prime(prime)) throw DomainError("ring prime must be prime, got " + std::to_string(prime));
    if (variables.size() != weights.size())
        throw DomainError("ring has " + std::to_string(variables.size()) + " variables but " +
                          std::to_string(weights.size()) + " weights");
    std::set<std::string> seen;
    for (const auto& v : variables) {
        if (v.empty()) throw DomainError("empty variable name");
        if (v == "z") throw DomainError("variable name 'z' is reserved for the root of unity");
        if (!seen.insert(v).second) throw DomainError("duplicate variable name '" + v + "'");
    }
    for (long w : weights) {
        if (w < 1) throw DomainError("variable weights must be >= 1");
        if (w > 1000000) throw DomainError("variable weights must be <= 1000000");
    }
}

std::string RingSpec::describe() const {
    std::ostringstream os;
    os << "Q(zeta_" << prime << ")[";
    for (size_t i = 0; i < variables.size(); ++i) {
        if (i) os << ",";
        os << variables[i];
    }
    os << "] weights (";
    for (size_t i = 0; i < weights.size(); ++i) {
        if (i) os << ",";
        os << weights[i];
    }
    os << ")";
    return os.str();
}

RingPtr make_ring(std::vector<std::string> variables, std::vector<long> weights, int prime) {
    RingSpec spec{std::move(variables), std::move(weights), prime};
    spec.check();
    return std::make_shared<const RingSpec>(std::move(spec));
}

}  // namespace mfadams
