#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "multiseq/monomial.hpp"

namespace multiseq {

/// Global monomial orders: total, multiplicative, with 1 minimal. The block
/// order eliminates a variable subset (any monomial touching the mask beats
/// any monomial that avoids it); the weight order refines a weight vector by
/// a tie-break order, with max convention on the weight.
class MonomialOrder {
public:
    enum class Kind { grevlex, lex, block_elim, weight };

    static MonomialOrder grevlex(int nvars) { return MonomialOrder(Kind::grevlex, nvars); }
    static MonomialOrder lex(int nvars) { return MonomialOrder(Kind::lex, nvars); }

    static MonomialOrder block_elim(int nvars, std::vector<int> front_vars) {
        MonomialOrder o(Kind::block_elim, nvars);
        for (int v : front_vars) o.mask_ |= (std::uint32_t{1} << v);
        return o;
    }

    static MonomialOrder weighted(int nvars, std::vector<std::int64_t> weights,
                                  MonomialOrder tie_break) {
        MonomialOrder o(Kind::weight, nvars);
        o.weights_ = std::move(weights);
        o.tie_ = std::make_shared<MonomialOrder>(std::move(tie_break));
        return o;
    }

    Kind kind() const { return kind_; }
    int nvars() const { return nvars_; }
    const std::vector<std::int64_t>& weights() const { return weights_; }

    bool in_front_block(const Monomial& m) const {
        for (int i = 0; i < nvars_; ++i)
            if ((mask_ >> i & 1) && m.exponent(i)) return true;
        return false;
    }

    /// Three-way compare: >0 when a comes later in the order (a > b).
    int cmp(const Monomial& a, const Monomial& b) const {
        switch (kind_) {
            case Kind::grevlex:
                return cmp_grevlex(a, b, ~std::uint32_t{0});
            case Kind::lex: {
                for (int i = 0; i < nvars_; ++i) {
                    if (a.exponent(i) != b.exponent(i))
                        return a.exponent(i) > b.exponent(i) ? 1 : -1;
                }
                return 0;
            }
            case Kind::block_elim: {
                if (int c = cmp_grevlex(a, b, mask_)) return c;
                return cmp_grevlex(a, b, ~mask_);
            }
            case Kind::weight: {
                std::int64_t wa = 0, wb = 0;
                for (int i = 0; i < nvars_; ++i) {
                    wa += weights_[i] * a.exponent(i);
                    wb += weights_[i] * b.exponent(i);
                }
                if (wa != wb) return wa > wb ? 1 : -1;
                return tie_->cmp(a, b);
            }
        }
        return 0;
    }

    bool greater(const Monomial& a, const Monomial& b) const { return cmp(a, b) > 0; }
    bool less(const Monomial& a, const Monomial& b) const { return cmp(a, b) < 0; }

    /// Stable fingerprint used by the Groebner cache key.
    std::string fingerprint() const {
        std::string s = std::to_string(static_cast<int>(kind_)) + ":" + std::to_string(nvars_) +
                        ":" + std::to_string(mask_);
        for (auto w : weights_) s += "," + std::to_string(w);
        if (tie_) s += "|" + tie_->fingerprint();
        return s;
    }

private:
    MonomialOrder(Kind k, int nvars) : kind_(k), nvars_(nvars) {}

    int cmp_grevlex(const Monomial& a, const Monomial& b, std::uint32_t mask) const {
        unsigned da = 0, db = 0;
        for (int i = 0; i < nvars_; ++i) {
            if (!(mask >> i & 1)) continue;
            da += a.exponent(i);
            db += b.exponent(i);
        }
        if (da != db) return da > db ? 1 : -1;
        for (int i = nvars_ - 1; i >= 0; --i) {
            if (!(mask >> i & 1)) continue;
            if (a.exponent(i) != b.exponent(i))
                return a.exponent(i) < b.exponent(i) ? 1 : -1;
        }
        return 0;
    }

    Kind kind_;
    int nvars_;
    std::uint32_t mask_ = 0;
    std::vector<std::int64_t> weights_;
    std::shared_ptr<const MonomialOrder> tie_;
};

}  // namespace multiseq
