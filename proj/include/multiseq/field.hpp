#pragma once

#include <concepts>
#include <cstdint>
#include <string>

#include <gmpxx.h>

#include "multiseq/errors.hpp"

namespace multiseq {

/// Coefficient field descriptor. characteristic 0 means the rationals,
/// otherwise a prime p >= 2. The default working field is F_32003: general
/// elements need an effectively infinite residue field, and a large prime
/// field is the standard computational surrogate (small fields are refused
/// for randomized draws).
struct FieldSpec {
    unsigned long characteristic = 32003;

    bool is_rational() const { return characteristic == 0; }

    bool operator==(const FieldSpec&) const = default;
};

constexpr unsigned long kDefaultPrime = 32003;
// Smallest field accepted for general-element draws. The default prime is
// the floor: anything smaller is refused as too risky for random avoidance
// of the bad loci.
constexpr unsigned long kMinGeneralElementField = kDefaultPrime;

inline bool is_prime(unsigned long n) {
    if (n < 2) return false;
    for (unsigned long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

inline void validate_field(const FieldSpec& fs) {
    if (fs.characteristic != 0 && !is_prime(fs.characteristic))
        throw precondition_error("field characteristic " + std::to_string(fs.characteristic) +
                                 " is neither 0 nor a prime");
}

/// Prime-field element. Carries its modulus so values are self-contained and
/// freely shareable; all arithmetic is single-word with 64-bit intermediates.
class Fp {
public:
    Fp() : v_(0), p_(kDefaultPrime) {}
    Fp(std::int64_t value, const FieldSpec& fs) : Fp(value, fs.characteristic) {}
    Fp(std::int64_t value, unsigned long p) : p_(static_cast<std::uint32_t>(p)) {
        std::int64_t r = value % static_cast<std::int64_t>(p_);
        if (r < 0) r += static_cast<std::int64_t>(p_);
        v_ = static_cast<std::uint32_t>(r);
    }

    static Fp from_integer(const mpz_class& z, const FieldSpec& fs) {
        mpz_class m(static_cast<unsigned long>(fs.characteristic));
        mpz_class r = z % m;
        if (r < 0) r += m;
        return Fp(static_cast<std::int64_t>(r.get_ui()), fs.characteristic);
    }

    std::uint32_t value() const { return v_; }
    std::uint32_t modulus() const { return p_; }

    bool is_zero() const { return v_ == 0; }
    bool is_one() const { return v_ == 1; }

    Fp zero() const { return Fp(0, p_); }
    Fp one() const { return Fp(1, p_); }

    friend Fp operator+(Fp a, Fp b) {
        std::uint64_t s = std::uint64_t{a.v_} + b.v_;
        if (s >= a.p_) s -= a.p_;
        return Fp(a.p_, static_cast<std::uint32_t>(s), 0);
    }
    friend Fp operator-(Fp a, Fp b) {
        std::uint64_t s = std::uint64_t{a.v_} + a.p_ - b.v_;
        if (s >= a.p_) s -= a.p_;
        return Fp(a.p_, static_cast<std::uint32_t>(s), 0);
    }
    friend Fp operator*(Fp a, Fp b) {
        return Fp(a.p_, static_cast<std::uint32_t>((std::uint64_t{a.v_} * b.v_) % a.p_), 0);
    }
    Fp operator-() const { return Fp(p_, v_ == 0 ? 0 : p_ - v_, 0); }

    Fp inverse() const {
        if (v_ == 0) throw internal_error("division by zero in F_p");
        // extended Euclid on (v, p)
        std::int64_t t = 0, nt = 1;
        std::int64_t r = p_, nr = v_;
        while (nr != 0) {
            std::int64_t q = r / nr;
            std::int64_t tmp = t - q * nt;
            t = nt;
            nt = tmp;
            tmp = r - q * nr;
            r = nr;
            nr = tmp;
        }
        if (t < 0) t += p_;
        return Fp(p_, static_cast<std::uint32_t>(t), 0);
    }
    friend Fp operator/(Fp a, Fp b) { return a * b.inverse(); }

    bool operator==(const Fp& o) const { return v_ == o.v_ && p_ == o.p_; }
    bool operator!=(const Fp& o) const { return !(*this == o); }

    std::string str() const { return std::to_string(v_); }

private:
    Fp(std::uint32_t p, std::uint32_t v, int) : v_(v), p_(p) {}
    std::uint32_t v_;
    std::uint32_t p_;
};

/// Exact rational coefficient (GMP-backed). Characteristic-0 model of the
/// kernel; supported everywhere but slow on Groebner-heavy paths.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(std::int64_t value, const FieldSpec&) : v_(static_cast<long>(value)) {}
    explicit Rational(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }

    static Rational from_integer(const mpz_class& z, const FieldSpec&) {
        return Rational(mpq_class(z));
    }

    const mpq_class& value() const { return v_; }

    bool is_zero() const { return v_ == 0; }
    bool is_one() const { return v_ == 1; }

    Rational zero() const { return Rational(); }
    Rational one() const { return Rational(mpq_class(1)); }

    friend Rational operator+(const Rational& a, const Rational& b) { return Rational(mpq_class(a.v_ + b.v_)); }
    friend Rational operator-(const Rational& a, const Rational& b) { return Rational(mpq_class(a.v_ - b.v_)); }
    friend Rational operator*(const Rational& a, const Rational& b) { return Rational(mpq_class(a.v_ * b.v_)); }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.is_zero()) throw internal_error("division by zero in Q");
        return Rational(mpq_class(a.v_ / b.v_));
    }
    Rational operator-() const { return Rational(mpq_class(-v_)); }

    Rational inverse() const {
        if (is_zero()) throw internal_error("division by zero in Q");
        return Rational(mpq_class(1 / v_));
    }

    bool operator==(const Rational& o) const { return v_ == o.v_; }
    bool operator!=(const Rational& o) const { return v_ != o.v_; }

    std::string str() const { return v_.get_str(); }

private:
    mpq_class v_;
};

template <class C>
concept coefficient_field = requires(const C a, const C b, const mpz_class z, const FieldSpec fs) {
    { a + b } -> std::same_as<C>;
    { a - b } -> std::same_as<C>;
    { a * b } -> std::same_as<C>;
    { -a } -> std::same_as<C>;
    { a.inverse() } -> std::same_as<C>;
    { a.is_zero() } -> std::same_as<bool>;
    { a.is_one() } -> std::same_as<bool>;
    { a.zero() } -> std::same_as<C>;
    { a.one() } -> std::same_as<C>;
    { a == b } -> std::same_as<bool>;
    { a.str() } -> std::same_as<std::string>;
    { C::from_integer(z, fs) } -> std::same_as<C>;
};

static_assert(coefficient_field<Fp>);
static_assert(coefficient_field<Rational>);

}  // namespace multiseq
