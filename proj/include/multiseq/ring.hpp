#pragma once

#include <memory>
#include <string>
#include <vector>

#include "multiseq/errors.hpp"
#include "multiseq/field.hpp"
#include "multiseq/monomial.hpp"
#include "multiseq/order.hpp"

namespace multiseq {

/// Ambient polynomial ring: a coefficient field and an ordered variable list.
/// Quotient structure lives in RingPresentation; this is only the monomial
/// frame every Polynomial hangs off.
class Ring {
public:
    Ring(FieldSpec field, std::vector<std::string> variables)
        : field_(field), vars_(std::move(variables)) {
        validate_field(field_);
        if (static_cast<int>(vars_.size()) > Monomial::max_vars)
            throw precondition_error("too many variables (max " +
                                     std::to_string(Monomial::max_vars) + ")");
        for (std::size_t i = 0; i < vars_.size(); ++i)
            for (std::size_t j = i + 1; j < vars_.size(); ++j)
                if (vars_[i] == vars_[j])
                    throw precondition_error("duplicate variable name '" + vars_[i] + "'");
    }

    const FieldSpec& field() const { return field_; }
    int nvars() const { return static_cast<int>(vars_.size()); }
    const std::vector<std::string>& variable_names() const { return vars_; }

    int variable_index(const std::string& name) const {
        for (int i = 0; i < nvars(); ++i)
            if (vars_[i] == name) return i;
        return -1;
    }

    MonomialOrder canonical_order() const { return MonomialOrder::grevlex(nvars()); }

    bool same_as(const Ring& o) const { return field_ == o.field_ && vars_ == o.vars_; }

    std::string fingerprint() const {
        std::string s = std::to_string(field_.characteristic);
        for (const auto& v : vars_) s += "," + v;
        return s;
    }

private:
    FieldSpec field_;
    std::vector<std::string> vars_;
};

using RingPtr = std::shared_ptr<const Ring>;

inline RingPtr make_ring(FieldSpec field, std::vector<std::string> variables) {
    return std::make_shared<Ring>(field, std::move(variables));
}

}  // namespace multiseq
