#pragma once

#include <optional>
#include <string>
#include <vector>

#include "multiseq/multseq.hpp"

namespace multiseq {

enum class OracleOutcome { not_run, inconclusive, confirmed_integral };

/// Result of the sequence-comparison criterion for integral dependence of
/// I inside J, with optional reduction-search corroboration.
struct IntegralVerdict {
    MultiplicitySequence seq_small;   // I
    MultiplicitySequence seq_large;   // J
    bool integral = false;
    int witness_index = -1;           // first index where the sequences differ
    OracleOutcome oracle = OracleOutcome::not_run;
    int oracle_steps = -1;            // n with J^{n+1} = I J^n when confirmed
    std::vector<std::string> warnings;
};

inline constexpr int kDefaultOracleCap = 6;

/// Search for the least n <= max_n with J^{n+1} = I * J^n (Groebner
/// equality). Sound when it confirms; never claims non-integrality.
template <coefficient_field C>
std::pair<OracleOutcome, int> reduction_oracle(const IdealPresentation<C>& I,
                                               const IdealPresentation<C>& J,
                                               int max_n = kDefaultOracleCap) {
    const auto& R = *I.ring_presentation();
    const MonomialOrder ord = R.ring()->canonical_order();
    for (const auto& g : I.gens())
        if (!J.contains(g))
            throw precondition_error("reduction oracle requires I contained in J");
    for (int n = 0; n <= max_n; ++n) {
        PolyVec<C> jn = ideal_power(J.gens(), n, R.ring());
        PolyVec<C> lhs = ideal_sum(ideal_power(J.gens(), n + 1, R.ring()), R.quotient());
        PolyVec<C> rhs = ideal_sum(ideal_product(I.gens(), jn), R.quotient());
        if (ideal_equal(lhs, rhs, ord)) return {OracleOutcome::confirmed_integral, n};
    }
    return {OracleOutcome::inconclusive, -1};
}

/// Integral-dependence decision: J is integral over I exactly when the two
/// multiplicity sequences agree. Both full sequences are always computed so
/// the report can show them. When `join` is set, J is replaced by I + J
/// instead of refusing non-nested input.
template <coefficient_field C>
IntegralVerdict check_integral(const RingPresentation<C>& R, const IdealPresentation<C>& I,
                               const IdealPresentation<C>& J_in, bool join = false,
                               bool run_oracle = true, int max_n = kDefaultOracleCap) {
    std::optional<IdealPresentation<C>> joined;
    const IdealPresentation<C>* J = &J_in;
    bool contained = true;
    for (const auto& g : I.gens())
        if (!J_in.contains(g)) {
            contained = false;
            break;
        }
    if (!contained) {
        if (!join)
            throw precondition_error("I is not contained in J (pass the join flag to compare "
                                     "I against I + J)");
        joined.emplace(I.ring_presentation(), ideal_sum(I.gens(), J_in.gens()), J_in.label());
        J = &*joined;
    }

    IntegralVerdict v;
    v.seq_small = multiplicity_sequence(R, I);
    v.seq_large = multiplicity_sequence(R, *J);
    v.integral = v.seq_small.c == v.seq_large.c;
    if (!v.integral) {
        for (int i = 0; i <= v.seq_small.d; ++i)
            if (v.seq_small.c[i] != v.seq_large.c[i]) {
                v.witness_index = i;
                break;
            }
    }

    if (run_oracle) {
        auto [outcome, steps] = reduction_oracle(I, *J, max_n);
        v.oracle = outcome;
        v.oracle_steps = steps;
        if (outcome == OracleOutcome::confirmed_integral && !v.integral)
            throw internal_error("reduction oracle confirmed integrality but the sequences "
                                 "differ");
    }

    if (!R.is_polynomial_ring())
        v.warnings.push_back("verdict is valid under the asserted equidimensional, universally "
                             "catenary hypotheses; R is a proper quotient (" +
                             std::string(R.equidimensional_asserted()
                                             ? "equidimensionality asserted by input"
                                             : "equidimensionality NOT asserted") +
                             ")");
    return v;
}

}  // namespace multiseq
