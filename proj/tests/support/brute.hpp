#pragma once

// Brute-force graded linear algebra over F_p: the independent oracle for
// membership and dimension counts. Deliberately ignorant of Groebner bases
// and Hilbert series.

#include <cstdint>
#include <vector>

#include "multiseq/polynomial.hpp"

namespace multiseq::test {

inline std::vector<Monomial> monomials_of_degree(int nvars, int w) {
    std::vector<Monomial> out;
    std::vector<unsigned> e(nvars, 0);
    auto rec = [&](auto&& self, int var, int rem) -> void {
        if (var == nvars - 1) {
            e[var] = rem;
            out.push_back(Monomial::from_exponents(e));
            return;
        }
        for (int k = rem; k >= 0; --k) {
            e[var] = k;
            self(self, var + 1, rem - k);
        }
        e[var] = 0;
    };
    if (nvars == 0) {
        if (w == 0) out.push_back(Monomial{});
        return out;
    }
    rec(rec, 0, w);
    return out;
}

inline int fp_rank(std::vector<std::vector<std::uint32_t>> rows, std::uint32_t p) {
    int rank = 0;
    const std::size_t cols = rows.empty() ? 0 : rows[0].size();
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols && row < rows.size(); ++col) {
        std::size_t pivot = row;
        while (pivot < rows.size() && rows[pivot][col] == 0) ++pivot;
        if (pivot == rows.size()) continue;
        std::swap(rows[row], rows[pivot]);
        // scale pivot row to 1
        std::uint64_t inv = 1, base = rows[row][col], exp = p - 2;
        while (exp) {
            if (exp & 1) inv = inv * base % p;
            base = base * base % p;
            exp >>= 1;
        }
        for (auto& x : rows[row]) x = static_cast<std::uint32_t>(x * inv % p);
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (r == row || rows[r][col] == 0) continue;
            std::uint64_t f = p - rows[r][col];
            for (std::size_t cidx = col; cidx < cols; ++cidx)
                rows[r][cidx] =
                    static_cast<std::uint32_t>((rows[r][cidx] + f * rows[row][cidx]) % p);
        }
        ++row;
        ++rank;
    }
    return rank;
}

/// Coefficient row of a homogeneous polynomial over the degree-w monomial
/// basis.
inline std::vector<std::uint32_t> coeff_row(const Polynomial<Fp>& f,
                                            const std::vector<Monomial>& basis) {
    std::vector<std::uint32_t> row(basis.size(), 0);
    for (const auto& t : f.terms())
        for (std::size_t i = 0; i < basis.size(); ++i)
            if (basis[i] == t.mono) {
                row[i] = t.coeff.value();
                break;
            }
    return row;
}

/// dim_k of the degree-w piece of the ideal generated by homogeneous gens.
inline long long ideal_piece_dim(const std::vector<Polynomial<Fp>>& gens, const Ring& ring,
                                 int w) {
    auto basis = monomials_of_degree(ring.nvars(), w);
    std::uint32_t p = static_cast<std::uint32_t>(ring.field().characteristic);
    std::vector<std::vector<std::uint32_t>> rows;
    for (const auto& g : gens) {
        if (g.is_zero() || g.degree() > w) continue;
        for (const auto& m : monomials_of_degree(ring.nvars(), w - g.degree()))
            rows.push_back(coeff_row(g.times_monomial(m), basis));
    }
    return fp_rank(std::move(rows), p);
}

/// Membership of homogeneous f in the ideal of homogeneous gens, by rank
/// comparison in degree deg(f).
inline bool brute_membership(const Polynomial<Fp>& f, const std::vector<Polynomial<Fp>>& gens,
                             const Ring& ring) {
    if (f.is_zero()) return true;
    const int w = f.degree();
    auto basis = monomials_of_degree(ring.nvars(), w);
    std::uint32_t p = static_cast<std::uint32_t>(ring.field().characteristic);
    std::vector<std::vector<std::uint32_t>> rows;
    for (const auto& g : gens) {
        if (g.is_zero() || g.degree() > w) continue;
        for (const auto& m : monomials_of_degree(ring.nvars(), w - g.degree()))
            rows.push_back(coeff_row(g.times_monomial(m), basis));
    }
    int before = fp_rank(rows, p);
    rows.push_back(coeff_row(f, basis));
    int after = fp_rank(std::move(rows), p);
    return before == after;
}

/// Evaluate at a point (all variables replaced by field constants).
template <coefficient_field C>
C evaluate(const Polynomial<C>& f, const std::vector<C>& point) {
    C acc = C(0, f.ring()->field());
    for (const auto& t : f.terms()) {
        C v = t.coeff;
        for (int i = 0; i < f.ring()->nvars(); ++i)
            for (unsigned k = 0; k < t.mono.exponent(i); ++k) v = v * point[i];
        acc = acc + v;
    }
    return acc;
}

}  // namespace multiseq::test
