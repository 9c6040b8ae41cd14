#pragma once

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "multiseq/monomial.hpp"

namespace multiseq {

/// Overflow-checked 64-bit helpers; series bookkeeping must stay exact.
long long checked_add(long long a, long long b);
long long checked_mul(long long a, long long b);

/// C(n, k) as a checked 64-bit value.
long long binomial(long long n, long long k);

/// Rational generating function of a bigraded monomial quotient:
/// numerator / (1-t1)^den1 (1-t2)^den2, integer numerator coefficients
/// indexed by bidegree (a, b). Coefficient extraction is exact.
struct BivariateSeries {
    std::map<std::pair<int, int>, long long> numerator;
    int den1 = 0;
    int den2 = 0;

    /// Coefficient of t1^u t2^v in the expansion.
    long long coefficient(int u, int v) const;

    bool operator==(const BivariateSeries&) const = default;
};

/// Numerator of the bigraded Hilbert series of ring/(gens), where axis[i]
/// selects the bidegree (1,0) or (0,1) of variable i. Gens need not be
/// minimal. Pivot-splitting recursion with memoization.
BivariateSeries bigraded_series(const std::vector<Monomial>& gens,
                                const std::vector<int>& axis);

/// Univariate numerator over (1-t)^nvars (all variables of degree (1,0)),
/// as a dense coefficient vector.
std::vector<long long> univariate_numerator(const std::vector<Monomial>& gens, int nvars);

/// Krull dimension of the quotient from its univariate numerator: the unit
/// ideal (zero numerator) gives -1.
int dimension_from_numerator(const std::vector<long long>& numerator, int nvars);

/// Degree (normalized leading Hilbert coefficient) of the quotient: the
/// value h(1) after cancelling all (1-t) factors; 0 for the zero ring.
long long degree_from_numerator(const std::vector<long long>& numerator, int nvars);

/// Hilbert function value dim_k (quotient)_w from the univariate numerator.
long long hilbert_function(const std::vector<long long>& numerator, int nvars, int w);

/// Total k-dimension of a finite-length quotient (dimension must be <= 0).
long long total_length(const std::vector<long long>& numerator, int nvars);

/// Remove monomials divisible by another list element (minimal generators).
std::vector<Monomial> minimalize_monomials(std::vector<Monomial> gens);

/// Rewrite of a bivariate numerator in the basis (1-t1)^j (1-t2)^k; exact
/// integer coefficients.
std::map<std::pair<int, int>, mpz_class> binomial_basis_rewrite(const BivariateSeries& series);

}  // namespace multiseq
