#pragma once

#include <memory>
#include <string>
#include <vector>

#include "multiseq/hilbert.hpp"
#include "multiseq/ideal_ops.hpp"

namespace multiseq {

/// Graded ring R = k[vars]/A, treated as local at the irrelevant maximal
/// ideal (all variables): graded lengths compute the local lengths we need.
/// All quotient generators must be homogeneous. Dimension is computed once
/// and cached.
template <coefficient_field C>
class RingPresentation {
public:
    RingPresentation(RingPtr ring, PolyVec<C> quotient_gens, bool equidimensional_asserted = false)
        : ring_(std::move(ring)), equidim_(equidimensional_asserted) {
        for (auto& g : quotient_gens) {
            if (g.is_zero()) continue;
            if (!g.is_homogeneous())
                throw precondition_error("quotient generator '" + g.str() + "' is not homogeneous");
            quotient_.push_back(std::move(g));
        }
        quotient_gb_ = groebner_basis(quotient_, ring_->canonical_order());
        if (is_unit_basis(quotient_gb_))
            throw precondition_error("quotient ideal is the unit ideal (zero ring)");
        dim_ = quotient_gb_.empty() ? ring_->nvars()
                                    : krull_dimension(quotient_gb_, *ring_);
    }

    const RingPtr& ring() const { return ring_; }
    const PolyVec<C>& quotient() const { return quotient_; }
    const PolyVec<C>& quotient_basis() const { return quotient_gb_; }
    bool is_polynomial_ring() const { return quotient_.empty(); }
    bool equidimensional_asserted() const { return equidim_; }
    int nvars() const { return ring_->nvars(); }
    int dim() const { return dim_; }

    Polynomial<C> reduce(const Polynomial<C>& f) const {
        if (quotient_gb_.empty()) return f;
        return normal_form(f, quotient_gb_, ring_->canonical_order());
    }

private:
    RingPtr ring_;
    PolyVec<C> quotient_;
    PolyVec<C> quotient_gb_;
    bool equidim_;
    int dim_;
};

template <coefficient_field C>
using RingPresPtr = std::shared_ptr<const RingPresentation<C>>;

/// Homogeneous ideal inside a RingPresentation. Generators are reduced
/// modulo the quotient ideal on construction; the proper-ideal invariant is
/// verified (the unit ideal is rejected).
template <coefficient_field C>
class IdealPresentation {
public:
    IdealPresentation(RingPresPtr<C> ring, PolyVec<C> generators, std::string label = "")
        : ring_(std::move(ring)), label_(std::move(label)) {
        for (auto& g : generators) {
            if (!g.is_homogeneous())
                throw precondition_error("ideal generator '" + g.str() + "' is not homogeneous");
            Polynomial<C> r = ring_->reduce(g);
            if (!r.is_zero()) gens_.push_back(std::move(r));
        }
        basis_ = groebner_basis(with_quotient(), ring_->ring()->canonical_order());
        if (is_unit_basis(basis_))
            throw precondition_error("ideal" + (label_.empty() ? "" : " '" + label_ + "'") +
                                     " is the unit ideal");
    }

    const RingPresPtr<C>& ring_presentation() const { return ring_; }
    const PolyVec<C>& gens() const { return gens_; }
    const std::string& label() const { return label_; }
    bool is_zero() const { return gens_.empty(); }

    /// Generators together with the quotient ideal's (the engine convention
    /// for computing in R = k[x]/A without a second ring abstraction).
    PolyVec<C> with_quotient() const {
        return ideal_sum(gens_, ring_->quotient());
    }

    /// Reduced Groebner basis of (gens + A) under the canonical order.
    const PolyVec<C>& basis() const { return basis_; }

    bool contains(const Polynomial<C>& f) const {
        if (basis_.empty()) return f.is_zero();
        return normal_form(f, basis_, ring_->ring()->canonical_order()).is_zero();
    }

    std::vector<unsigned> generator_degrees() const {
        std::vector<unsigned> d;
        d.reserve(gens_.size());
        for (const auto& g : gens_) d.push_back(static_cast<unsigned>(g.degree()));
        return d;
    }

    bool equigenerated() const {
        auto d = generator_degrees();
        for (auto x : d)
            if (x != d.front()) return false;
        return true;
    }

private:
    RingPresPtr<C> ring_;
    PolyVec<C> gens_;
    PolyVec<C> basis_;
    std::string label_;
};

/// Univariate Hilbert numerator of R/(extra), computed through the
/// leading-term ideal of (extra + A).
template <coefficient_field C>
std::vector<long long> quotient_numerator(const RingPresentation<C>& R, const PolyVec<C>& extra) {
    const MonomialOrder ord = R.ring()->canonical_order();
    auto gb = groebner_basis(ideal_sum(extra, R.quotient()), ord);
    std::vector<Monomial> lead;
    lead.reserve(gb.size());
    for (const auto& g : gb) lead.push_back(g.leading_term(ord).mono);
    return univariate_numerator(lead, R.nvars());
}

/// dim of R/(extra) (Krull); -1 when (extra)+A is the unit ideal.
template <coefficient_field C>
int quotient_dimension(const RingPresentation<C>& R, const PolyVec<C>& extra) {
    return krull_dimension(ideal_sum(extra, R.quotient()), *R.ring());
}

/// Graded degree of R/(extra) in dimension j: 0 if dim < j, the normalized
/// leading Hilbert coefficient if dim == j; a dimension anomaly otherwise.
template <coefficient_field C>
long long graded_degree(const RingPresentation<C>& R, const PolyVec<C>& extra, int j) {
    auto num = quotient_numerator(R, extra);
    int dim = dimension_from_numerator(num, R.nvars());
    if (dim < j) return 0;
    if (dim > j)
        throw internal_error("dimension anomaly: quotient has dimension " + std::to_string(dim) +
                             ", expected at most " + std::to_string(j));
    return degree_from_numerator(num, R.nvars());
}

/// Height of (gens) in R, via dimensions (R equidimensional and catenary in
/// every supported configuration).
template <coefficient_field C>
int ideal_height(const RingPresentation<C>& R, const PolyVec<C>& gens) {
    int dq = krull_dimension(ideal_sum(gens, R.quotient()), *R.ring());
    return R.dim() - dq;
}

}  // namespace multiseq
