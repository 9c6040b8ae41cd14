#pragma once

#include <algorithm>
#include <memory>
#include <mutex>
#include <shared_mutex>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "multiseq/polynomial.hpp"

namespace multiseq {

namespace detail {

/// Engine-internal polynomial: term vector sorted descending under the
/// engine's order (which need not be the canonical storage order).
template <coefficient_field C>
using TermVec = std::vector<Term<C>>;

template <coefficient_field C>
TermVec<C> engine_sort(const Polynomial<C>& f, const MonomialOrder& ord) {
    TermVec<C> t(f.terms().begin(), f.terms().end());
    std::sort(t.begin(), t.end(),
              [&](const Term<C>& a, const Term<C>& b) { return ord.greater(a.mono, b.mono); });
    return t;
}

/// a - c * (m * b); both inputs sorted descending under ord.
template <coefficient_field C>
TermVec<C> subtract_scaled(std::span<const Term<C>> a, const C& c, const Monomial& m,
                           std::span<const Term<C>> b, const MonomialOrder& ord) {
    TermVec<C> r;
    r.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        Monomial bm = b[j].mono * m;
        int cv = ord.cmp(a[i].mono, bm);
        if (cv > 0) {
            r.push_back(a[i++]);
        } else if (cv < 0) {
            r.push_back({std::move(bm), -(c * b[j].coeff)});
            ++j;
        } else {
            C v = a[i].coeff - c * b[j].coeff;
            if (!v.is_zero()) r.push_back({a[i].mono, std::move(v)});
            ++i;
            ++j;
        }
    }
    for (; i < a.size(); ++i) r.push_back(a[i]);
    for (; j < b.size(); ++j) r.push_back({b[j].mono * m, -(c * b[j].coeff)});
    return r;
}

template <coefficient_field C>
void make_monic(TermVec<C>& f) {
    if (f.empty() || f.front().coeff.is_one()) return;
    C inv = f.front().coeff.inverse();
    for (auto& t : f) t.coeff = t.coeff * inv;
}

template <coefficient_field C>
unsigned degree_of(const TermVec<C>& f) {
    unsigned d = 0;
    for (const auto& t : f) d = std::max(d, t.mono.degree());
    return d;
}

/// Full normal form; sugar (when tracked) follows the usual update rule.
template <coefficient_field C>
TermVec<C> reduce_full(TermVec<C> h, std::span<const TermVec<C>> basis,
                       const MonomialOrder& ord, const std::vector<unsigned>* sugar = nullptr,
                       unsigned* h_sugar = nullptr) {
    TermVec<C> rem;
    std::size_t pos = 0;
    while (pos < h.size()) {
        bool divided = false;
        for (std::size_t i = 0; i < basis.size(); ++i) {
            const auto& g = basis[i];
            if (!g.front().mono.divides(h[pos].mono)) continue;
            C c = h[pos].coeff * g.front().coeff.inverse();
            Monomial q = h[pos].mono / g.front().mono;
            if (sugar && h_sugar) *h_sugar = std::max(*h_sugar, (*sugar)[i] + q.degree());
            h = subtract_scaled(std::span<const Term<C>>(h).subspan(pos), c, q,
                                std::span<const Term<C>>(g), ord);
            pos = 0;
            divided = true;
            break;
        }
        if (!divided) {
            rem.push_back(std::move(h[pos]));
            ++pos;
        }
    }
    return rem;
}

/// Minimalize + tail-reduce + monic + sort ascending by leading term.
template <coefficient_field C>
void interreduce(std::vector<TermVec<C>>& gb, const MonomialOrder& ord) {
    std::size_t i = 0;
    while (i < gb.size()) {
        bool redundant = false;
        for (std::size_t j = 0; j < gb.size() && !redundant; ++j)
            if (j != i && gb[j].front().mono.divides(gb[i].front().mono) &&
                (gb[j].front().mono != gb[i].front().mono || j < i))
                redundant = true;
        if (redundant)
            gb.erase(gb.begin() + i);
        else
            ++i;
    }
    for (std::size_t k = 0; k < gb.size(); ++k) {
        std::vector<TermVec<C>> others;
        others.reserve(gb.size() - 1);
        for (std::size_t j = 0; j < gb.size(); ++j)
            if (j != k) others.push_back(gb[j]);
        gb[k] = reduce_full(std::move(gb[k]), std::span<const TermVec<C>>(others), ord);
        make_monic(gb[k]);
    }
    std::sort(gb.begin(), gb.end(), [&](const TermVec<C>& a, const TermVec<C>& b) {
        return ord.less(a.front().mono, b.front().mono);
    });
}

struct CritPair {
    std::size_t i, j;
    Monomial lcm;
    unsigned sugar;
};

/// Buchberger with Gebauer-Moeller pair pruning and sugar-first selection.
/// Deterministic: pair choice breaks ties by lcm order then indices. Returns
/// the reduced basis ({1} shortcut for the unit ideal).
template <coefficient_field C>
std::vector<TermVec<C>> buchberger(std::vector<TermVec<C>> input, const MonomialOrder& ord) {
    std::vector<TermVec<C>> gb;
    std::vector<unsigned> sugar;
    std::vector<CritPair> pairs;

    auto pair_before = [&](const CritPair& a, const CritPair& b) {
        if (a.sugar != b.sugar) return a.sugar < b.sugar;
        if (int c = ord.cmp(a.lcm, b.lcm)) return c < 0;
        if (a.i != b.i) return a.i < b.i;
        return a.j < b.j;
    };

    auto update = [&](TermVec<C> h, unsigned h_sugar) {
        const Monomial lt = h.front().mono;
        const std::size_t t = gb.size();

        std::vector<CritPair> kept;
        kept.reserve(pairs.size());
        for (auto& p : pairs) {
            if (lt.divides(p.lcm) && lcm(gb[p.i].front().mono, lt) != p.lcm &&
                lcm(gb[p.j].front().mono, lt) != p.lcm)
                continue;
            kept.push_back(std::move(p));
        }
        pairs = std::move(kept);

        std::vector<CritPair> cand;
        cand.reserve(gb.size());
        for (std::size_t i = 0; i < gb.size(); ++i) {
            Monomial l = lcm(gb[i].front().mono, lt);
            unsigned s = std::max(sugar[i] + l.degree() - gb[i].front().mono.degree(),
                                  h_sugar + l.degree() - lt.degree());
            cand.push_back({i, t, std::move(l), s});
        }
        for (std::size_t a = 0; a < cand.size(); ++a) {
            bool drop = false;
            for (std::size_t b = 0; b < cand.size() && !drop; ++b) {
                if (a == b) continue;
                if (cand[b].lcm.divides(cand[a].lcm) &&
                    (cand[b].lcm != cand[a].lcm || b < a))
                    drop = true;
            }
            if (!drop && !coprime(gb[cand[a].i].front().mono, lt))
                pairs.push_back(std::move(cand[a]));
        }

        gb.push_back(std::move(h));
        sugar.push_back(h_sugar);
    };

    for (auto& f : input) {
        if (f.front().mono.is_one())
            return {{{Monomial{}, f.front().coeff.one()}}};
        unsigned s = degree_of(f);
        update(std::move(f), s);
    }

    while (!pairs.empty()) {
        auto it = std::min_element(pairs.begin(), pairs.end(), pair_before);
        CritPair p = std::move(*it);
        pairs.erase(it);

        const auto& f = gb[p.i];
        const auto& g = gb[p.j];
        C cf = f.front().coeff.inverse();
        C cg = g.front().coeff.inverse();
        Monomial mf = p.lcm / f.front().mono;
        Monomial mg = p.lcm / g.front().mono;
        TermVec<C> s;
        s.reserve(f.size());
        for (const auto& t : f) s.push_back({t.mono * mf, t.coeff * cf});
        s = subtract_scaled(std::span<const Term<C>>(s), cg, mg,
                            std::span<const Term<C>>(g), ord);
        if (s.empty()) continue;

        unsigned s_sugar = p.sugar;
        TermVec<C> h = reduce_full(std::move(s), std::span<const TermVec<C>>(gb), ord,
                                   &sugar, &s_sugar);
        if (h.empty()) continue;
        make_monic(h);
        if (h.front().mono.is_one())
            return {{{Monomial{}, h.front().coeff.one()}}};
        update(std::move(h), s_sugar);
    }

    interreduce(gb, ord);
    return gb;
}

template <coefficient_field C>
std::string cache_key(std::span<const Polynomial<C>> gens, const MonomialOrder& ord) {
    std::string key = ord.fingerprint();
    if (!gens.empty() && gens.front().ring()) key += "@" + gens.front().ring()->fingerprint();
    for (const auto& g : gens) {
        key += "#";
        for (const auto& t : g.terms()) {
            for (int i = 0; i < (g.ring() ? g.ring()->nvars() : 0); ++i) {
                unsigned e = t.mono.exponent(i);
                key.push_back(static_cast<char>(e & 0xff));
                key.push_back(static_cast<char>((e >> 8) & 0xff));
            }
            key += t.coeff.str();
            key += ";";
        }
    }
    return key;
}

template <coefficient_field C>
class GroebnerCache {
public:
    using Value = std::shared_ptr<const std::vector<Polynomial<C>>>;

    static Value find(const std::string& key) {
        auto& self = instance();
        std::shared_lock lock(self.mutex_);
        auto it = self.map_.find(key);
        return it == self.map_.end() ? nullptr : it->second;
    }

    static void store(const std::string& key, Value value) {
        auto& self = instance();
        std::unique_lock lock(self.mutex_);
        self.map_.emplace(key, std::move(value));
    }

private:
    static GroebnerCache& instance() {
        static GroebnerCache cache;
        return cache;
    }
    std::shared_mutex mutex_;
    std::unordered_map<std::string, Value> map_;
};

}  // namespace detail

/// Reduced Groebner basis of (gens) under `order`: monic, self-reduced,
/// sorted ascending by leading term -- the unique reduced basis, so equal
/// ideals yield identical output. Results are cached per (generators, order).
template <coefficient_field C>
std::vector<Polynomial<C>> groebner_basis(std::span<const Polynomial<C>> gens,
                                          const MonomialOrder& order) {
    RingPtr ring;
    for (const auto& g : gens) {
        if (!g.ring()) continue;
        if (!ring)
            ring = g.ring();
        else
            g.check_ring(gens.front());
    }
    if (!ring) return {};

    std::vector<detail::TermVec<C>> input;
    for (const auto& g : gens) {
        if (g.is_zero()) continue;
        auto t = detail::engine_sort(g, order);
        detail::make_monic(t);
        input.push_back(std::move(t));
    }
    if (input.empty()) return {};
    std::sort(input.begin(), input.end(),
              [&](const detail::TermVec<C>& a, const detail::TermVec<C>& b) {
                  if (a.size() != b.size()) return a.size() < b.size();
                  for (std::size_t k = 0; k < a.size(); ++k)
                      if (int c = order.cmp(a[k].mono, b[k].mono)) return c < 0;
                  return false;
              });
    input.erase(std::unique(input.begin(), input.end(),
                            [](const detail::TermVec<C>& a, const detail::TermVec<C>& b) {
                                if (a.size() != b.size()) return false;
                                for (std::size_t k = 0; k < a.size(); ++k)
                                    if (a[k].mono != b[k].mono || !(a[k].coeff == b[k].coeff))
                                        return false;
                                return true;
                            }),
                input.end());

    std::vector<Polynomial<C>> normalized;
    normalized.reserve(input.size());
    for (const auto& t : input)
        normalized.emplace_back(ring, std::vector<Term<C>>(t.begin(), t.end()));
    const std::string key =
        detail::cache_key(std::span<const Polynomial<C>>(normalized), order);
    if (auto hit = detail::GroebnerCache<C>::find(key)) return *hit;

    auto gb = detail::buchberger(std::move(input), order);

    std::vector<Polynomial<C>> out;
    out.reserve(gb.size());
    for (auto& t : gb) out.emplace_back(ring, std::vector<Term<C>>(t.begin(), t.end()));
    detail::GroebnerCache<C>::store(
        key, std::make_shared<const std::vector<Polynomial<C>>>(out));
    return out;
}

template <coefficient_field C>
std::vector<Polynomial<C>> groebner_basis(const std::vector<Polynomial<C>>& gens,
                                          const MonomialOrder& order) {
    return groebner_basis(std::span<const Polynomial<C>>(gens), order);
}

/// Unique remainder of f modulo a Groebner basis; zero iff f is in the ideal.
template <coefficient_field C>
Polynomial<C> normal_form(const Polynomial<C>& f, std::span<const Polynomial<C>> basis,
                          const MonomialOrder& order) {
    if (f.is_zero() || basis.empty()) return f;
    std::vector<detail::TermVec<C>> b;
    b.reserve(basis.size());
    for (const auto& g : basis)
        if (!g.is_zero()) b.push_back(detail::engine_sort(g, order));
    auto r = detail::reduce_full(detail::engine_sort(f, order),
                                 std::span<const detail::TermVec<C>>(b), order);
    return Polynomial<C>(f.ring(), std::vector<Term<C>>(r.begin(), r.end()));
}

template <coefficient_field C>
Polynomial<C> normal_form(const Polynomial<C>& f, const std::vector<Polynomial<C>>& basis,
                          const MonomialOrder& order) {
    return normal_form(f, std::span<const Polynomial<C>>(basis), order);
}

/// Exact quotient f / g; errors unless the division terminates with zero
/// remainder.
template <coefficient_field C>
Polynomial<C> divide_exact(const Polynomial<C>& f, const Polynomial<C>& g) {
    if (g.is_zero()) throw precondition_error("division by the zero polynomial");
    const MonomialOrder ord = f.ring()->canonical_order();
    auto h = detail::engine_sort(f, ord);
    auto d = detail::engine_sort(g, ord);
    std::vector<Term<C>> quotient;
    while (!h.empty()) {
        if (!d.front().mono.divides(h.front().mono))
            throw internal_error("inexact polynomial division");
        C c = h.front().coeff * d.front().coeff.inverse();
        Monomial q = h.front().mono / d.front().mono;
        quotient.push_back({q, c});
        h = detail::subtract_scaled(std::span<const Term<C>>(h), c, q,
                                    std::span<const Term<C>>(d), ord);
    }
    return Polynomial<C>(f.ring(), std::move(quotient));
}

}  // namespace multiseq
