#pragma once

#include <algorithm>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "multiseq/groebner.hpp"

namespace multiseq {

template <coefficient_field C>
using PolyVec = std::vector<Polynomial<C>>;

/// Target ring of an extension plus the index map for embedding base-ring
/// polynomials.
struct RingExtension {
    RingPtr ring;
    std::vector<int> base_to_ext;  // base variable i -> extension index
};

inline RingExtension extend_ring(const Ring& base, const std::vector<std::string>& front,
                                 const std::vector<std::string>& back) {
    std::vector<std::string> vars = front;
    vars.insert(vars.end(), base.variable_names().begin(), base.variable_names().end());
    vars.insert(vars.end(), back.begin(), back.end());
    RingExtension ext;
    ext.ring = make_ring(base.field(), std::move(vars));
    ext.base_to_ext.resize(base.nvars());
    for (int i = 0; i < base.nvars(); ++i) ext.base_to_ext[i] = static_cast<int>(front.size()) + i;
    return ext;
}

template <coefficient_field C>
PolyVec<C> map_all(const PolyVec<C>& polys, RingPtr target, std::span<const int> index_map) {
    PolyVec<C> out;
    out.reserve(polys.size());
    for (const auto& f : polys) out.push_back(f.map_to(target, index_map));
    return out;
}

template <coefficient_field C>
bool is_unit_basis(const PolyVec<C>& gb) {
    return gb.size() == 1 && gb[0].is_constant() && !gb[0].is_zero();
}

/// Reduced-basis comparison; reduced bases are unique per order, so this is
/// exact ideal equality.
template <coefficient_field C>
bool ideal_equal(const PolyVec<C>& a, const PolyVec<C>& b, const MonomialOrder& ord) {
    auto ga = groebner_basis(a, ord);
    auto gb = groebner_basis(b, ord);
    if (ga.size() != gb.size()) return false;
    for (std::size_t i = 0; i < ga.size(); ++i)
        if (ga[i] != gb[i]) return false;
    return true;
}

/// Generators of (gens) intersected with the subring avoiding `front_vars`,
/// via a block elimination order.
template <coefficient_field C>
PolyVec<C> eliminate(const PolyVec<C>& gens, const std::vector<int>& front_vars) {
    if (gens.empty() || front_vars.empty()) return gens;
    const int n = gens.front().ring()->nvars();
    auto gb = groebner_basis(gens, MonomialOrder::block_elim(n, front_vars));
    PolyVec<C> out;
    for (const auto& g : gb) {
        bool clean = true;
        for (int v : front_vars)
            if (g.depends_on(v)) {
                clean = false;
                break;
            }
        if (clean) out.push_back(g);
    }
    return out;
}

/// A cap B through the single-tag-variable trick: eliminate t from
/// t*A + (1-t)*B.
template <coefficient_field C>
PolyVec<C> intersect(const PolyVec<C>& a, const PolyVec<C>& b) {
    if (a.empty() || b.empty()) return {};
    RingPtr base = a.front().ring();
    auto ext = extend_ring(*base, {"@t"}, {});
    auto t = Polynomial<C>::variable(ext.ring, 0);
    auto one = Polynomial<C>::from_int(ext.ring, 1);
    PolyVec<C> work;
    for (const auto& f : a) work.push_back(t * f.map_to(ext.ring, ext.base_to_ext));
    for (const auto& g : b) work.push_back((one - t) * g.map_to(ext.ring, ext.base_to_ext));
    auto elim = eliminate(work, {0});
    std::vector<int> back(ext.ring->nvars(), -1);
    for (int i = 0; i < base->nvars(); ++i) back[ext.base_to_ext[i]] = i;
    return map_all(elim, base, back);
}

/// A : f for a single nonzero f; gens of (A cap (f)) divided by f.
template <coefficient_field C>
PolyVec<C> colon_single(const PolyVec<C>& a, const Polynomial<C>& f) {
    PolyVec<C> meet = intersect(a, PolyVec<C>{f});
    PolyVec<C> out;
    out.reserve(meet.size());
    for (const auto& g : meet) out.push_back(divide_exact(g, f));
    return out;
}

/// Ideal quotient A : B. The colon by the zero ideal is the unit ideal.
template <coefficient_field C>
PolyVec<C> colon(const PolyVec<C>& a, const PolyVec<C>& b, RingPtr ring = nullptr) {
    if (!ring) ring = !a.empty() ? a.front().ring() : (!b.empty() ? b.front().ring() : nullptr);
    if (!ring) throw precondition_error("colon of ideals without a ring");
    PolyVec<C> divisors;
    for (const auto& f : b)
        if (!f.is_zero()) divisors.push_back(f);
    if (divisors.empty()) return {Polynomial<C>::from_int(ring, 1)};
    if (a.empty()) return {};

    PolyVec<C> acc = colon_single(a, divisors[0]);
    for (std::size_t i = 1; i < divisors.size(); ++i) {
        if (is_unit_basis(groebner_basis(acc, ring->canonical_order()))) break;
        acc = intersect(acc, colon_single(a, divisors[i]));
    }
    return acc;
}

inline constexpr int kSaturationCap = 64;

/// A : B^infinity by iterated colon; returns the stable ideal and the number
/// of colon steps taken. Errors past the stabilization cap.
template <coefficient_field C>
std::pair<PolyVec<C>, int> saturate(const PolyVec<C>& a, const PolyVec<C>& b,
                                    RingPtr ring = nullptr) {
    if (!ring) ring = !a.empty() ? a.front().ring() : (!b.empty() ? b.front().ring() : nullptr);
    if (!ring) throw precondition_error("saturation of ideals without a ring");
    const MonomialOrder ord = ring->canonical_order();
    PolyVec<C> current = a;
    for (int step = 0; step < kSaturationCap; ++step) {
        PolyVec<C> next = colon(current, b, ring);
        if (ideal_equal(next, current, ord)) return {groebner_basis(current, ord), step};
        current = std::move(next);
    }
    throw internal_error("saturation did not stabilize within " +
                         std::to_string(kSaturationCap) + " colon iterations");
}

namespace detail {

/// Largest variable subset meeting the support of no leading monomial;
/// its size is the dimension of the quotient by the monomial ideal.
inline int max_independent_set(const std::vector<Monomial>& lead, int nvars,
                               std::uint32_t allowed, std::map<std::uint32_t, int>& memo) {
    auto it = memo.find(allowed);
    if (it != memo.end()) return it->second;
    const Monomial* offender = nullptr;
    for (const auto& m : lead) {
        bool inside = true;
        for (int v = 0; v < nvars; ++v)
            if (m.exponent(v) && !(allowed >> v & 1)) {
                inside = false;
                break;
            }
        if (inside) {
            offender = &m;
            break;
        }
    }
    int best;
    if (!offender) {
        best = 0;
        for (int v = 0; v < nvars; ++v) best += (allowed >> v) & 1;
    } else {
        best = -1;
        for (int v = 0; v < nvars; ++v) {
            if (!offender->exponent(v)) continue;
            int r = max_independent_set(lead, nvars, allowed & ~(std::uint32_t{1} << v), memo);
            best = std::max(best, r);
        }
    }
    memo[allowed] = best;
    return best;
}

}  // namespace detail

/// Krull dimension of ring/(gens) via the leading-term ideal; -1 for the
/// unit ideal.
template <coefficient_field C>
int krull_dimension(const PolyVec<C>& gens, const Ring& ring,
                    const MonomialOrder* order = nullptr) {
    const MonomialOrder ord = order ? *order : ring.canonical_order();
    auto gb = groebner_basis(gens, ord);
    if (is_unit_basis(gb)) return -1;
    std::vector<Monomial> lead;
    lead.reserve(gb.size());
    for (const auto& g : gb) lead.push_back(g.leading_term(ord).mono);
    std::map<std::uint32_t, int> memo;
    std::uint32_t all = ring.nvars() == 32 ? ~std::uint32_t{0}
                                           : ((std::uint32_t{1} << ring.nvars()) - 1);
    return detail::max_independent_set(lead, ring.nvars(), all, memo);
}

/// Ideal of max-convention w-initial forms: initial forms of a Groebner
/// basis under a w-refined order generate in_w of the ideal.
template <coefficient_field C>
PolyVec<C> initial_ideal_weight(const PolyVec<C>& gens, std::vector<std::int64_t> w) {
    if (gens.empty()) return gens;
    RingPtr ring = gens.front().ring();
    auto ord = MonomialOrder::weighted(ring->nvars(), w, ring->canonical_order());
    auto gb = groebner_basis(gens, ord);
    PolyVec<C> out;
    out.reserve(gb.size());
    for (const auto& g : gb) out.push_back(g.weighted_initial_form(w));
    return out;
}

template <coefficient_field C>
PolyVec<C> ideal_sum(const PolyVec<C>& a, const PolyVec<C>& b) {
    PolyVec<C> out = a;
    out.insert(out.end(), b.begin(), b.end());
    return out;
}

template <coefficient_field C>
PolyVec<C> ideal_product(const PolyVec<C>& a, const PolyVec<C>& b) {
    PolyVec<C> out;
    out.reserve(a.size() * b.size());
    for (const auto& f : a)
        for (const auto& g : b) out.push_back(f * g);
    return out;
}

/// v-fold products of the generators (the standard generating set of I^v).
template <coefficient_field C>
PolyVec<C> ideal_power(const PolyVec<C>& gens, int v, RingPtr ring) {
    if (v == 0) return {Polynomial<C>::from_int(ring, 1)};
    PolyVec<C> out;
    std::vector<int> idx(v, 0);
    if (gens.empty()) return {};
    for (;;) {
        Polynomial<C> prod = gens[idx[0]];
        for (int k = 1; k < v; ++k) prod = prod * gens[idx[k]];
        out.push_back(std::move(prod));
        // next non-decreasing index tuple
        int k = v - 1;
        while (k >= 0 && idx[k] == static_cast<int>(gens.size()) - 1) --k;
        if (k < 0) break;
        int next = idx[k] + 1;
        for (int j = k; j < v; ++j) idx[j] = next;
    }
    return out;
}

/// All monomials of total degree d, as polynomials (generators of m^d).
template <coefficient_field C>
PolyVec<C> irrelevant_power(RingPtr ring, int d) {
    PolyVec<C> out;
    std::vector<unsigned> e(ring->nvars(), 0);
    auto emit = [&](auto&& self, int var, int rem) -> void {
        if (var == ring->nvars() - 1) {
            e[var] = rem;
            out.push_back(Polynomial<C>::monomial(ring, Monomial::from_exponents(e),
                                                  C(1, ring->field())));
            return;
        }
        for (int k = rem; k >= 0; --k) {
            e[var] = k;
            self(self, var + 1, rem - k);
        }
        e[var] = 0;
    };
    if (d == 0) return {Polynomial<C>::from_int(ring, 1)};
    emit(emit, 0, d);
    return out;
}

/// Full substitution x_i -> images[i]; used by specialization checks.
template <coefficient_field C>
Polynomial<C> substitute(const Polynomial<C>& f, const PolyVec<C>& images) {
    RingPtr target = images.empty() ? f.ring() : images.front().ring();
    Polynomial<C> acc(target);
    for (const auto& t : f.terms()) {
        Polynomial<C> prod = Polynomial<C>::constant(target, t.coeff);
        for (std::size_t i = 0; i < images.size(); ++i)
            for (unsigned k = 0; k < t.mono.exponent(static_cast<int>(i)); ++k)
                prod = prod * images[i];
        acc = acc + prod;
    }
    return acc;
}

}  // namespace multiseq
