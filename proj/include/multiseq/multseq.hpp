#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "multiseq/blowup.hpp"

namespace multiseq {

/// The integer vector (c_0, ..., c_d) with provenance: which route produced
/// it, the seeds involved, and any cross-checks that were run.
struct MultiplicitySequence {
    int d = 0;
    std::vector<long long> c;
    char route = 'B';
    std::vector<std::uint64_t> seeds;
    std::vector<std::string> crosschecks;

    bool same_values(const MultiplicitySequence& o) const { return d == o.d && c == o.c; }
};

/// (ht, ell) of a sequence: the min and max nonzero indices.
inline std::pair<int, int> sequence_endpoints(const MultiplicitySequence& seq) {
    int lo = -1, hi = -1;
    for (int i = 0; i <= seq.d; ++i)
        if (seq.c[i] != 0) {
            if (lo < 0) lo = i;
            hi = i;
        }
    if (lo < 0)
        throw internal_error("all-zero multiplicity sequence (cannot occur for a proper ideal)");
    return {lo, hi};
}

/// Numerator of the double-partial-sum generating function rewritten in the
/// basis (1-t1)^j (1-t2)^k. The polynomial part (j < den1, k < den2) is the
/// eventual bivariate polynomial of h(r,s); evaluation reproduces h exactly
/// once r and s clear the stabilization offsets.
struct BivariatePolynomialFit {
    std::map<std::pair<int, int>, mpz_class> table;  // binomial-basis coefficients
    int den1 = 0, den2 = 0;                          // denominator exponents (n+1, s+1)
    int total_degree = 0;
    int offset_r = 0, offset_s = 0;

    long long evaluate(int r, int s) const {
        mpz_class total = 0;
        for (const auto& [jk, c] : table) {
            const auto [j, k] = jk;
            if (j >= den1 || k >= den2) continue;
            mpz_class b1, b2;
            mpz_bin_uiui(b1.get_mpz_t(), r + den1 - j - 1, den1 - j - 1);
            mpz_bin_uiui(b2.get_mpz_t(), s + den2 - k - 1, den2 - k - 1);
            total += c * b1 * b2;
        }
        if (!total.fits_slong_p()) throw internal_error("fit value exceeds 64 bits");
        return total.get_si();
    }
};

/// Fit of h(r,s) from the bigraded numerator of the cone presentation.
/// Verifies the degree bound (at most d, exactly d for a proper ideal).
inline BivariatePolynomialFit fit_double_sum(const BivariateSeries& series, int d) {
    BivariatePolynomialFit fit;
    fit.den1 = series.den1 + 1;
    fit.den2 = series.den2 + 1;
    fit.table = binomial_basis_rewrite(series);
    int maxdeg = -1;
    for (const auto& [jk, v] : fit.table) {
        int deg = (fit.den1 - 1 - jk.first) + (fit.den2 - 1 - jk.second);
        if (deg > d)
            throw internal_error("degree check failed: numerator term above dimension " +
                                 std::to_string(d));
        maxdeg = std::max(maxdeg, deg);
        fit.offset_r = std::max(fit.offset_r, jk.first - fit.den1 + 1);
        fit.offset_s = std::max(fit.offset_s, jk.second - fit.den2 + 1);
    }
    if (maxdeg != d)
        throw internal_error("degree check failed: h-polynomial has degree " +
                             std::to_string(maxdeg) + ", expected " + std::to_string(d));
    fit.total_degree = maxdeg;
    return fit;
}

/// Bigraded series of the cone presentation (through its leading-term ideal).
template <coefficient_field C>
BivariateSeries cone_bigraded_series(const BigradedPresentation<C>& cone) {
    const MonomialOrder ord = cone.cone_ring->canonical_order();
    auto gb = groebner_basis(cone.defining, ord);
    std::vector<Monomial> lead;
    lead.reserve(gb.size());
    for (const auto& g : gb) lead.push_back(g.leading_term(ord).mono);
    return bigraded_series(lead, cone.axis);
}

/// Route B (default): bigraded Hilbert numerator of the cone presentation,
/// rewritten in the (1-t1)^j (1-t2)^k basis; c_i is the coefficient at
/// (n-d+i, s-i). Deterministic, no general elements.
template <coefficient_field C>
MultiplicitySequence multiplicity_sequence(const RingPresentation<C>& R,
                                           const IdealPresentation<C>& I) {
    auto cone = graded_cone_presentation(R, I);
    BivariateSeries series = cone_bigraded_series(cone);
    const int n = cone.nx, s = cone.ny, d = R.dim();
    BivariatePolynomialFit fit = fit_double_sum(series, d);

    MultiplicitySequence out;
    out.d = d;
    out.route = 'B';
    out.c.assign(d + 1, 0);
    for (int i = 0; i <= d; ++i) {
        int j = n - d + i, k = s - i;
        if (j < 0 || k < 0) continue;
        auto it = fit.table.find({j, k});
        if (it == fit.table.end()) continue;
        if (!it->second.fits_slong_p())
            throw internal_error("multiplicity value exceeds 64 bits");
        out.c[i] = it->second.get_si();
        if (out.c[i] < 0)
            throw internal_error("negative multiplicity extracted (index " + std::to_string(i) +
                                 ")");
    }
    return out;
}

struct GridOptions {
    int start = 6;
    int cap = 24;
    int stride = 0;  // 0: doubling enlargements; > 0: additive enlargements
};

namespace detail {

/// Iterated finite difference D_r^a D_s^b h at the top grid corner.
inline long long corner_difference(const std::vector<std::vector<long long>>& h, int a, int b) {
    const int r = static_cast<int>(h.size()) - 1;
    const int s = static_cast<int>(h[0].size()) - 1;
    long long total = 0;
    for (int i = 0; i <= a; ++i)
        for (int j = 0; j <= b; ++j) {
            long long term = checked_mul(binomial(a, i), binomial(b, j));
            term = checked_mul(term, h[r - i][s - j]);
            total = checked_add(total, ((i + j) & 1) ? -term : term);
        }
    return total;
}

/// Lengths of the bigraded components on [0,g]x[0,g], equigenerated case:
/// lambda(G_uv) = HF_{R/I^{v+1}}(u+vD) - HF_{R/I^v}(u+vD).
template <coefficient_field C>
std::vector<std::vector<long long>> lambda_grid_equigenerated(const RingPresentation<C>& R,
                                                              const IdealPresentation<C>& I,
                                                              int g, unsigned D) {
    std::vector<std::vector<long long>> lam(g + 1, std::vector<long long>(g + 1, 0));
    std::vector<std::vector<long long>> num(g + 2);
    for (int v = 0; v <= g + 1; ++v)
        num[v] = quotient_numerator(*I.ring_presentation(),
                                    ideal_power(I.gens(), v, R.ring()));
    const int n = R.nvars();
    for (int v = 0; v <= g; ++v)
        for (int u = 0; u <= g; ++u) {
            int w = u + v * static_cast<int>(D);
            lam[u][v] = hilbert_function(num[v + 1], n, w) - hilbert_function(num[v], n, w);
        }
    return lam;
}

/// Mixed-degree fallback: literal per-cell ideals m^u I^v + I^{v+1} built by
/// the iteration J_u = m J_{u-1} + I^{v+1}; lengths through numerator
/// differences.
template <coefficient_field C>
std::vector<std::vector<long long>> lambda_grid_mixed(const RingPresentation<C>& R,
                                                      const IdealPresentation<C>& I, int g) {
    const int n = R.nvars();
    const MonomialOrder ord = R.ring()->canonical_order();
    std::vector<std::vector<long long>> lam(g + 1, std::vector<long long>(g + 1, 0));
    for (int v = 0; v <= g; ++v) {
        PolyVec<C> pv = ideal_power(I.gens(), v, R.ring());
        PolyVec<C> pv1 = ideal_power(I.gens(), v + 1, R.ring());
        PolyVec<C> current = groebner_basis(
            ideal_sum(pv, R.quotient()), ord);
        std::vector<long long> num_prev = quotient_numerator(R, current);
        for (int u = 0; u <= g; ++u) {
            // J_{u+1} = m * J_u + I^{v+1}
            PolyVec<C> next_gens = pv1;
            for (const auto& f : current)
                for (int x = 0; x < n; ++x)
                    next_gens.push_back(f * Polynomial<C>::variable(R.ring(), x));
            PolyVec<C> next = groebner_basis(ideal_sum(next_gens, R.quotient()), ord);
            std::vector<long long> num_next = quotient_numerator(R, next);
            // lambda = total length of J_u / J_{u+1}
            std::vector<long long> diff(std::max(num_next.size(), num_prev.size()), 0);
            for (std::size_t k = 0; k < num_next.size(); ++k) diff[k] = num_next[k];
            for (std::size_t k = 0; k < num_prev.size(); ++k)
                diff[k] = checked_add(diff[k], -num_prev[k]);
            lam[u][v] = total_length(diff, n);
            current = std::move(next);
            num_prev = std::move(num_next);
        }
    }
    return lam;
}

}  // namespace detail

/// Route A oracle: exact graded dimension counts of the bigraded components
/// on a doubling grid, the double partial sum h(r,s), and iterated finite
/// differences for the normalized leading coefficients. Independent of the
/// Rees/cone/bivariate-series machinery of Route B.
template <coefficient_field C>
MultiplicitySequence multiplicity_sequence_oracle(const RingPresentation<C>& R,
                                                  const IdealPresentation<C>& I,
                                                  GridOptions opts = {}) {
    const int d = R.dim();
    unsigned D = 1;
    if (!I.is_zero()) {
        if (!I.equigenerated()) D = 0;  // sentinel: mixed
        else D = I.generator_degrees().front();
    }

    std::vector<long long> previous;
    int previous_g = -1;
    for (int g = opts.start; g <= opts.cap; g = opts.stride > 0 ? g + opts.stride : 2 * g) {
        if (g < d) continue;  // differences need d+1 grid points
        auto lam = D > 0 ? detail::lambda_grid_equigenerated(R, I, g, D)
                         : detail::lambda_grid_mixed(R, I, g);
        // h(r,s) = double partial sum
        std::vector<std::vector<long long>> h(g + 1, std::vector<long long>(g + 1, 0));
        for (int u = 0; u <= g; ++u)
            for (int v = 0; v <= g; ++v) {
                long long x = lam[u][v];
                if (u > 0) x = checked_add(x, h[u - 1][v]);
                if (v > 0) x = checked_add(x, h[u][v - 1]);
                if (u > 0 && v > 0) x = checked_add(x, -h[u - 1][v - 1]);
                h[u][v] = x;
            }
        std::vector<long long> fit(d + 1, 0);
        for (int i = 0; i <= d; ++i) fit[i] = detail::corner_difference(h, d - i, i);
        if (!previous.empty() && fit == previous) {
            MultiplicitySequence out;
            out.d = d;
            out.c = fit;
            out.route = 'A';
            out.crosschecks.push_back("grid " + std::to_string(previous_g) + " and grid " +
                                      std::to_string(g) + " fits agree");
            return out;
        }
        previous = std::move(fit);
        previous_g = g;
    }
    throw internal_error("route A did not stabilize within the grid cap " +
                         std::to_string(opts.cap));
}

/// Formula (1) evaluated through graded degrees:
/// c_0 = deg_d(R) - deg_d(R/(0 : I^infinity)).
template <coefficient_field C>
long long segre_c0(const RingPresentation<C>& R, const IdealPresentation<C>& I) {
    auto sat = saturate(R.quotient(), I.gens(), R.ring()).first;
    return graded_degree(R, {}, R.dim()) - graded_degree(R, sat, R.dim());
}

/// Route C: the length-formula computation with general elements.
/// c_i = deg_{d-i}(R/K_i) - deg_{d-i}(R/(K_i : I^infinity)) for
/// K_i = (x_1..x_{i-1}):I^infinity + (x_i). Runs under `nseeds` derived
/// seeds and requires exact agreement.
template <coefficient_field C>
MultiplicitySequence length_formula_sequence(const RingPresentation<C>& R,
                                             const IdealPresentation<C>& I, std::uint64_t seed,
                                             int nseeds = 3) {
    if (!I.is_zero() && !I.equigenerated())
        throw precondition_error("length-formula route requires equigenerated ideals "
                                 "(mixed generator degrees)");
    if (!R.is_polynomial_ring() && !R.equidimensional_asserted())
        throw precondition_error("length-formula route over a quotient ring requires the "
                                 "equidimensionality assertion");

    const int d = R.dim();
    auto run_one = [&](std::uint64_t s) -> std::vector<long long> {
        auto trans = general_elements(I, d, s);
        std::vector<long long> c(d + 1, 0);
        PolyVec<C> sat = saturate(R.quotient(), I.gens(), R.ring()).first;
        c[0] = graded_degree(R, {}, d) - graded_degree(R, sat, d);
        for (int i = 1; i <= d; ++i) {
            PolyVec<C> k = sat;
            k.push_back(trans.elements[i - 1]);
            PolyVec<C> satk = saturate(ideal_sum(k, R.quotient()), I.gens(), R.ring()).first;
            try {
                c[i] = graded_degree(R, k, d - i) - graded_degree(R, satk, d - i);
            } catch (const internal_error& e) {
                throw internal_error(std::string(e.what()) + " (length formula at index " +
                                     std::to_string(i) + "; re-randomize)");
            }
            sat = std::move(satk);
        }
        return c;
    };

    MultiplicitySequence out;
    out.d = d;
    out.route = 'C';
    for (int r = 0; r < nseeds; ++r) {
        std::uint64_t s = replica_seed(seed, static_cast<unsigned>(r));
        auto c = run_one(s);
        out.seeds.push_back(s);
        if (r == 0) {
            out.c = std::move(c);
        } else if (c != out.c) {
            throw internal_error("seed disagreement in the length-formula route; re-randomize");
        }
    }
    out.crosschecks.push_back(std::to_string(nseeds) + " seeds agree");
    return out;
}

/// j(I) = c_d of the multiplicity sequence.
template <coefficient_field C>
long long j_multiplicity(const RingPresentation<C>& R, const IdealPresentation<C>& I) {
    return multiplicity_sequence(R, I).c.back();
}

/// Hilbert-Samuel multiplicity e(I, R) for m-primary I, by exact colengths
/// of powers and iterated differences, independent of every sequence route.
template <coefficient_field C>
long long hs_multiplicity_oracle(const RingPresentation<C>& R, const IdealPresentation<C>& I,
                                 int cap = 16) {
    if (quotient_dimension(*I.ring_presentation(), I.gens()) != 0)
        throw precondition_error("Hilbert-Samuel multiplicity requires an m-primary ideal");
    const int d = R.dim();
    const int n = R.nvars();
    std::vector<long long> colength;  // colength[k] = lambda(R/I^{k+1})
    long long prev = 0;
    bool have_prev = false;
    for (int m = 1; m <= cap; ++m) {
        auto num = quotient_numerator(R, ideal_power(I.gens(), m, R.ring()));
        colength.push_back(total_length(num, n));
        if (static_cast<int>(colength.size()) >= d + 1) {
            long long e = 0;
            for (int k = 0; k <= d; ++k) {
                long long term = checked_mul(binomial(d, k), colength[colength.size() - 1 - k]);
                e = checked_add(e, (k & 1) ? -term : term);
            }
            if (have_prev && e == prev) return e;
            prev = e;
            have_prev = true;
        }
    }
    throw internal_error("Hilbert-Samuel colengths did not stabilize within n <= " +
                         std::to_string(cap));
}

/// One-variable extension: R' adds a fresh variable to the ring and the
/// ideal becomes (I, y). Exposes the index-shift law of the sequence to the
/// property suite.
template <coefficient_field C>
std::pair<RingPresPtr<C>, IdealPresentation<C>> adjoin_variable(const RingPresentation<C>& R,
                                                                const IdealPresentation<C>& I,
                                                                const std::string& name) {
    if (R.ring()->variable_index(name) >= 0)
        throw precondition_error("variable name '" + name + "' already in use");
    auto ext = extend_ring(*R.ring(), {}, {name});
    auto rp = std::make_shared<const RingPresentation<C>>(
        ext.ring, map_all(R.quotient(), ext.ring, ext.base_to_ext),
        R.equidimensional_asserted());
    PolyVec<C> gens = map_all(I.gens(), ext.ring, ext.base_to_ext);
    gens.push_back(Polynomial<C>::variable(ext.ring, ext.ring->nvars() - 1));
    return {rp, IdealPresentation<C>(rp, std::move(gens), I.label())};
}

}  // namespace multiseq
