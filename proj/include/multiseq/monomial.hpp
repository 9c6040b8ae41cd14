#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "multiseq/errors.hpp"

namespace multiseq {

/// Exponent vector with a fixed inline capacity. The variable count lives in
/// the ring; a monomial only guarantees that exponents beyond it are zero.
/// Total degree is cached (every order we use compares degree first).
class Monomial {
public:
    static constexpr int max_vars = 24;

    Monomial() = default;

    static Monomial variable(int index, unsigned exp = 1) {
        Monomial m;
        m.e_[index] = static_cast<std::uint16_t>(exp);
        m.deg_ = exp;
        return m;
    }

    static Monomial from_exponents(std::span<const unsigned> exps) {
        Monomial m;
        for (std::size_t i = 0; i < exps.size(); ++i) {
            m.e_[i] = static_cast<std::uint16_t>(exps[i]);
            m.deg_ += exps[i];
        }
        return m;
    }

    unsigned exponent(int i) const { return e_[i]; }
    unsigned degree() const { return deg_; }

    bool is_one() const { return deg_ == 0; }

    std::int64_t weighted_degree(std::span<const std::int64_t> w) const {
        std::int64_t s = 0;
        for (std::size_t i = 0; i < w.size(); ++i) s += w[i] * e_[i];
        return s;
    }

    Monomial operator*(const Monomial& o) const {
        if (deg_ + o.deg_ > 0xffffu)
            throw internal_error("monomial degree overflow");
        Monomial r;
        for (int i = 0; i < max_vars; ++i)
            r.e_[i] = static_cast<std::uint16_t>(e_[i] + o.e_[i]);
        r.deg_ = deg_ + o.deg_;
        return r;
    }

    bool divides(const Monomial& o) const {
        if (deg_ > o.deg_) return false;
        for (int i = 0; i < max_vars; ++i)
            if (e_[i] > o.e_[i]) return false;
        return true;
    }

    /// Quotient this / o; caller guarantees divisibility.
    Monomial operator/(const Monomial& o) const {
        Monomial r;
        for (int i = 0; i < max_vars; ++i)
            r.e_[i] = static_cast<std::uint16_t>(e_[i] - o.e_[i]);
        r.deg_ = deg_ - o.deg_;
        return r;
    }

    friend Monomial lcm(const Monomial& a, const Monomial& b) {
        Monomial r;
        unsigned d = 0;
        for (int i = 0; i < max_vars; ++i) {
            r.e_[i] = a.e_[i] > b.e_[i] ? a.e_[i] : b.e_[i];
            d += r.e_[i];
        }
        r.deg_ = d;
        return r;
    }

    friend Monomial gcd(const Monomial& a, const Monomial& b) {
        Monomial r;
        unsigned d = 0;
        for (int i = 0; i < max_vars; ++i) {
            r.e_[i] = a.e_[i] < b.e_[i] ? a.e_[i] : b.e_[i];
            d += r.e_[i];
        }
        r.deg_ = d;
        return r;
    }

    friend bool coprime(const Monomial& a, const Monomial& b) {
        for (int i = 0; i < max_vars; ++i)
            if (a.e_[i] && b.e_[i]) return false;
        return true;
    }

    bool operator==(const Monomial& o) const { return deg_ == o.deg_ && e_ == o.e_; }
    bool operator!=(const Monomial& o) const { return !(*this == o); }

    /// Degree counted over a subset of variables (bigraded component degrees).
    unsigned degree_over(std::span<const int> vars) const {
        unsigned d = 0;
        for (int i : vars) d += e_[i];
        return d;
    }

    std::size_t hash() const {
        std::size_t h = 0x9e3779b97f4a7c15ULL;
        for (int i = 0; i < max_vars; ++i) h = h * 0x100000001b3ULL + e_[i];
        return h;
    }

    std::string str(std::span<const std::string> names) const {
        if (is_one()) return "1";
        std::string s;
        for (std::size_t i = 0; i < names.size(); ++i) {
            if (!e_[i]) continue;
            if (!s.empty()) s += "*";
            s += names[i];
            if (e_[i] > 1) s += "^" + std::to_string(e_[i]);
        }
        return s;
    }

private:
    std::array<std::uint16_t, max_vars> e_{};
    unsigned deg_ = 0;
};

struct MonomialHash {
    std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

}  // namespace multiseq
