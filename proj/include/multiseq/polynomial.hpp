#pragma once

#include <algorithm>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "multiseq/field.hpp"
#include "multiseq/monomial.hpp"
#include "multiseq/order.hpp"
#include "multiseq/ring.hpp"

namespace multiseq {

template <coefficient_field C>
struct Term {
    Monomial mono;
    C coeff;
};

/// Sparse multivariate polynomial over an exact field. Immutable value type;
/// terms are kept in normal form: sorted descending under the ring's
/// canonical grevlex order, no zero coefficients, no duplicate monomials.
template <coefficient_field C>
class Polynomial {
public:
    Polynomial() = default;

    explicit Polynomial(RingPtr ring) : ring_(std::move(ring)) {}

    Polynomial(RingPtr ring, std::vector<Term<C>> terms) : ring_(std::move(ring)) {
        normalize_into(std::move(terms));
    }

    static Polynomial constant(RingPtr ring, C c) {
        Polynomial f(ring);
        if (!c.is_zero()) f.terms_.push_back({Monomial{}, std::move(c)});
        return f;
    }

    static Polynomial from_int(RingPtr ring, std::int64_t n) {
        return constant(ring, C(n, ring->field()));
    }

    static Polynomial variable(RingPtr ring, int index, unsigned exp = 1) {
        Polynomial f(ring);
        if (exp == 0) return from_int(ring, 1);
        f.terms_.push_back({Monomial::variable(index, exp), C(1, ring->field())});
        return f;
    }

    static Polynomial monomial(RingPtr ring, Monomial m, C c) {
        Polynomial f(ring);
        if (!c.is_zero()) f.terms_.push_back({std::move(m), std::move(c)});
        return f;
    }

    const RingPtr& ring() const { return ring_; }
    const std::vector<Term<C>>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    bool is_constant() const {
        return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one());
    }

    /// Total degree; -1 for the zero polynomial.
    int degree() const {
        int d = -1;
        for (const auto& t : terms_) d = std::max(d, static_cast<int>(t.mono.degree()));
        return d;
    }

    bool is_homogeneous() const {
        if (terms_.empty()) return true;
        unsigned d = terms_[0].mono.degree();
        for (const auto& t : terms_)
            if (t.mono.degree() != d) return false;
        return true;
    }

    bool depends_on(int var) const {
        for (const auto& t : terms_)
            if (t.mono.exponent(var)) return true;
        return false;
    }

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
        a.check_ring(b);
        return Polynomial(a.ring_, merged(a, b, false), normalized_t{});
    }
    friend Polynomial operator-(const Polynomial& a, const Polynomial& b) {
        a.check_ring(b);
        return Polynomial(a.ring_, merged(a, b, true), normalized_t{});
    }
    Polynomial operator-() const {
        Polynomial r(ring_);
        r.terms_.reserve(terms_.size());
        for (const auto& t : terms_) r.terms_.push_back({t.mono, -t.coeff});
        return r;
    }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        a.check_ring(b);
        Polynomial r(a.ring_);
        if (a.is_zero() || b.is_zero()) return r;
        std::unordered_map<Monomial, C, MonomialHash> acc;
        acc.reserve(a.terms_.size() * b.terms_.size());
        for (const auto& ta : a.terms_)
            for (const auto& tb : b.terms_) {
                Monomial m = ta.mono * tb.mono;
                C c = ta.coeff * tb.coeff;
                auto it = acc.find(m);
                if (it == acc.end())
                    acc.emplace(std::move(m), std::move(c));
                else
                    it->second = it->second + c;
            }
        std::vector<Term<C>> out;
        out.reserve(acc.size());
        for (auto& [m, c] : acc)
            if (!c.is_zero()) out.push_back({m, std::move(c)});
        r.normalize_into(std::move(out));
        return r;
    }

    Polynomial scaled(const C& c) const {
        Polynomial r(ring_);
        if (c.is_zero()) return r;
        r.terms_.reserve(terms_.size());
        for (const auto& t : terms_) r.terms_.push_back({t.mono, t.coeff * c});
        return r;
    }

    Polynomial times_monomial(const Monomial& m) const {
        Polynomial r(ring_);
        r.terms_.reserve(terms_.size());
        for (const auto& t : terms_) r.terms_.push_back({t.mono * m, t.coeff});
        return r;
    }

    Polynomial monic() const {
        if (is_zero()) return *this;
        return scaled(terms_.front().coeff.inverse());
    }

    bool operator==(const Polynomial& o) const {
        if (terms_.size() != o.terms_.size()) return false;
        for (std::size_t i = 0; i < terms_.size(); ++i)
            if (terms_[i].mono != o.terms_[i].mono || !(terms_[i].coeff == o.terms_[i].coeff))
                return false;
        return true;
    }
    bool operator!=(const Polynomial& o) const { return !(*this == o); }

    /// Order-maximal term under an arbitrary global order; errors on zero.
    const Term<C>& leading_term(const MonomialOrder& order) const {
        if (terms_.empty())
            throw precondition_error("leading term of the zero polynomial");
        const Term<C>* best = &terms_[0];
        for (const auto& t : terms_)
            if (order.greater(t.mono, best->mono)) best = &t;
        return *best;
    }

    /// Terms under the canonical storage order (front = canonical lead).
    const Term<C>& lead() const {
        if (terms_.empty())
            throw precondition_error("leading term of the zero polynomial");
        return terms_.front();
    }

    /// Sum of terms of maximal w-weight (max convention).
    Polynomial weighted_initial_form(std::span<const std::int64_t> w) const {
        if (terms_.empty())
            throw precondition_error("initial form of the zero polynomial");
        std::int64_t best = terms_[0].mono.weighted_degree(w);
        for (const auto& t : terms_) best = std::max(best, t.mono.weighted_degree(w));
        Polynomial r(ring_);
        for (const auto& t : terms_)
            if (t.mono.weighted_degree(w) == best) r.terms_.push_back(t);
        return r;
    }

    /// Move into another ring; old variable i becomes index_map[i] (or -1 to
    /// require the variable absent).
    Polynomial map_to(RingPtr target, std::span<const int> index_map) const {
        std::vector<Term<C>> out;
        out.reserve(terms_.size());
        for (const auto& t : terms_) {
            std::vector<unsigned> e(target->nvars(), 0);
            for (std::size_t i = 0; i < index_map.size(); ++i) {
                unsigned x = t.mono.exponent(static_cast<int>(i));
                if (!x) continue;
                if (index_map[i] < 0)
                    throw precondition_error("polynomial depends on a variable absent from the target ring");
                e[index_map[i]] += x;
            }
            out.push_back({Monomial::from_exponents(e), t.coeff});
        }
        return Polynomial(std::move(target), std::move(out));
    }

    std::string str() const {
        if (terms_.empty()) return "0";
        std::string s;
        const auto& names = ring_->variable_names();
        for (std::size_t i = 0; i < terms_.size(); ++i) {
            const auto& t = terms_[i];
            std::string c = t.coeff.str();
            bool neg = !c.empty() && c[0] == '-';
            if (i == 0)
                s += neg ? "-" : "";
            else
                s += neg ? " - " : " + ";
            if (neg) c = c.substr(1);
            if (t.mono.is_one())
                s += c;
            else if (c == "1")
                s += t.mono.str(names);
            else
                s += c + "*" + t.mono.str(names);
        }
        return s;
    }

    std::size_t hash() const {
        std::size_t h = 0xcbf29ce484222325ULL;
        for (const auto& t : terms_) h = (h ^ t.mono.hash()) * 0x100000001b3ULL;
        return h;
    }

    void check_ring(const Polynomial& o) const {
        if (ring_ != o.ring_ && !(ring_ && o.ring_ && ring_->same_as(*o.ring_)))
            throw precondition_error("polynomial ring mismatch");
    }

private:
    // Tag for term vectors already in normal form (sort is preserved by
    // merging, scaling, and multiplication by a fixed monomial).
    struct normalized_t {};
    Polynomial(RingPtr ring, std::vector<Term<C>> terms, normalized_t)
        : ring_(std::move(ring)), terms_(std::move(terms)) {}

    void normalize_into(std::vector<Term<C>> terms) {
        const MonomialOrder ord = ring_->canonical_order();
        std::sort(terms.begin(), terms.end(), [&](const Term<C>& a, const Term<C>& b) {
            return ord.greater(a.mono, b.mono);
        });
        terms_.clear();
        terms_.reserve(terms.size());
        for (auto& t : terms) {
            if (!terms_.empty() && terms_.back().mono == t.mono)
                terms_.back().coeff = terms_.back().coeff + t.coeff;
            else
                terms_.push_back(std::move(t));
            if (!terms_.empty() && terms_.back().coeff.is_zero()) terms_.pop_back();
        }
    }

    static std::vector<Term<C>> merged(const Polynomial& a, const Polynomial& b, bool subtract) {
        const MonomialOrder ord = a.ring_->canonical_order();
        std::vector<Term<C>> out;
        out.reserve(a.terms_.size() + b.terms_.size());
        std::size_t i = 0, j = 0;
        while (i < a.terms_.size() && j < b.terms_.size()) {
            int c = ord.cmp(a.terms_[i].mono, b.terms_[j].mono);
            if (c > 0) {
                out.push_back(a.terms_[i++]);
            } else if (c < 0) {
                const auto& t = b.terms_[j++];
                out.push_back({t.mono, subtract ? -t.coeff : t.coeff});
            } else {
                C v = subtract ? a.terms_[i].coeff - b.terms_[j].coeff
                               : a.terms_[i].coeff + b.terms_[j].coeff;
                if (!v.is_zero()) out.push_back({a.terms_[i].mono, std::move(v)});
                ++i;
                ++j;
            }
        }
        for (; i < a.terms_.size(); ++i) out.push_back(a.terms_[i]);
        for (; j < b.terms_.size(); ++j) {
            const auto& t = b.terms_[j];
            out.push_back({t.mono, subtract ? -t.coeff : t.coeff});
        }
        return out;
    }

    RingPtr ring_;
    std::vector<Term<C>> terms_;
};

using PolyFp = Polynomial<Fp>;
using PolyQ = Polynomial<Rational>;

}  // namespace multiseq
