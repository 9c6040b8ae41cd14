#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "multiseq/presentations.hpp"
#include "multiseq/splitmix.hpp"

namespace multiseq {

/// Presentation of the Rees algebra R[It]: the kernel P of
/// k[x, y] -> R[It], y_j -> f_j t, computed by eliminating t. P contains the
/// quotient ideal A.
template <coefficient_field C>
struct ReesPresentation {
    RingPtr rees_ring;               // base variables then one y per generator
    std::vector<int> base_to_rees;   // identity embedding of base indices
    int nx = 0;
    int ny = 0;
    PolyVec<C> kernel;
};

template <coefficient_field C>
ReesPresentation<C> rees_presentation(const RingPresentation<C>& R,
                                      const IdealPresentation<C>& I) {
    const auto& f = I.gens();
    const int n = R.nvars();
    const int s = static_cast<int>(f.size());

    std::vector<std::string> ynames;
    ynames.reserve(s);
    for (int j = 1; j <= s; ++j) ynames.push_back("@y" + std::to_string(j));

    ReesPresentation<C> out;
    auto rees = extend_ring(*R.ring(), {}, ynames);
    out.rees_ring = rees.ring;
    out.base_to_rees = rees.base_to_ext;
    out.nx = n;
    out.ny = s;

    // eliminate t from (y_j - t f_j) + A inside k[t, x, y]
    auto elim = extend_ring(*R.ring(), {"@t"}, ynames);
    auto t = Polynomial<C>::variable(elim.ring, 0);
    PolyVec<C> work;
    for (int j = 0; j < s; ++j) {
        auto yj = Polynomial<C>::variable(elim.ring, 1 + n + j);
        work.push_back(yj - t * f[j].map_to(elim.ring, elim.base_to_ext));
    }
    for (const auto& a : R.quotient()) work.push_back(a.map_to(elim.ring, elim.base_to_ext));
    auto kernel = eliminate(work, {0});

    std::vector<int> down(elim.ring->nvars(), -1);
    for (int i = 0; i < n; ++i) down[1 + i] = i;
    for (int j = 0; j < s; ++j) down[1 + n + j] = n + j;
    out.kernel = map_all(kernel, out.rees_ring, down);
    return out;
}

/// Generators-and-relations description of the doubly graded ring attached
/// to (R, I): x-variables carry bidegree (1,0), y-variables (0,1), and every
/// defining generator is bihomogeneous. For mixed generator degrees the
/// defining ideal is the weight-initial ideal of the cone ideal, with weight
/// D_j on y_j (max convention); for equigenerated input that step is the
/// identity.
template <coefficient_field C>
struct BigradedPresentation {
    RingPtr cone_ring;
    PolyVec<C> defining;
    std::vector<int> axis;  // 0: (1,0)-variable, 1: (0,1)-variable
    int nx = 0;
    int ny = 0;
    std::vector<unsigned> degrees;  // generator degrees D_1..D_s of I
};

template <coefficient_field C>
BigradedPresentation<C> graded_cone_presentation(const RingPresentation<C>& R,
                                                 const IdealPresentation<C>& I) {
    auto rees = rees_presentation(R, I);
    BigradedPresentation<C> out;
    out.cone_ring = rees.rees_ring;
    out.nx = rees.nx;
    out.ny = rees.ny;
    out.degrees = I.generator_degrees();
    out.axis.assign(out.nx, 0);
    out.axis.insert(out.axis.end(), out.ny, 1);

    PolyVec<C> cone = rees.kernel;
    for (const auto& fj : I.gens())
        cone.push_back(fj.map_to(rees.rees_ring, rees.base_to_rees));

    bool equigenerated = true;
    for (auto d : out.degrees)
        if (d != out.degrees.front()) equigenerated = false;

    if (equigenerated || out.ny == 0) {
        out.defining = std::move(cone);
    } else {
        std::vector<std::int64_t> w(out.nx, 0);
        for (auto d : out.degrees) w.push_back(static_cast<std::int64_t>(d));
        out.defining = initial_ideal_weight(cone, w);
    }

    for (const auto& g : out.defining) {
        if (g.is_zero()) continue;
        std::vector<int> xvars(out.nx), yvars(out.ny);
        for (int i = 0; i < out.nx; ++i) xvars[i] = i;
        for (int j = 0; j < out.ny; ++j) yvars[j] = out.nx + j;
        unsigned dx = g.terms().front().mono.degree_over(xvars);
        unsigned dy = g.terms().front().mono.degree_over(yvars);
        for (const auto& t : g.terms())
            if (t.mono.degree_over(xvars) != dx || t.mono.degree_over(yvars) != dy)
                throw internal_error("cone generator is not bihomogeneous: " + g.str());
    }
    return out;
}

/// dim F(I): Krull dimension of the special fiber presentation
/// P + m k[x,y], read off in the y-variables.
template <coefficient_field C>
int analytic_spread(const RingPresentation<C>& R, const IdealPresentation<C>& I) {
    auto rees = rees_presentation(R, I);
    PolyVec<C> fiber = rees.kernel;
    for (int i = 0; i < rees.nx; ++i)
        fiber.push_back(Polynomial<C>::variable(rees.rees_ring, i));
    return krull_dimension(fiber, *rees.rees_ring);
}

/// Seeded draw of scalar linear combinations of an ideal's generators; the
/// computational realization of general elements. Rows that come out
/// identically zero are redrawn (a zero combination is never general).
template <coefficient_field C>
struct GeneralElementTranscript {
    std::uint64_t seed = 0;
    std::vector<std::vector<C>> lambda;
    PolyVec<C> elements;
};

template <coefficient_field C>
GeneralElementTranscript<C> general_elements(const IdealPresentation<C>& I, int count,
                                             std::uint64_t seed) {
    const auto& field = I.ring_presentation()->ring()->field();
    if (!field.is_rational() && field.characteristic < kMinGeneralElementField)
        throw precondition_error(
            "field with " + std::to_string(field.characteristic) +
            " elements is too small for general elements (need at least " +
            std::to_string(kMinGeneralElementField) + ")");
    if (count < 0) throw precondition_error("negative general-element count");

    GeneralElementTranscript<C> out;
    out.seed = seed;
    SplitMix64 rng(seed);
    const auto& gens = I.gens();
    RingPtr ring = I.ring_presentation()->ring();
    for (int i = 0; i < count; ++i) {
        std::vector<C> row;
        bool nonzero = gens.empty();
        while (!nonzero) {
            row.clear();
            for (std::size_t j = 0; j < gens.size(); ++j) {
                std::uint64_t raw = field.is_rational() ? rng.below(std::uint64_t{1} << 31)
                                                        : rng.below(field.characteristic);
                row.emplace_back(static_cast<std::int64_t>(raw), field);
                if (!row.back().is_zero()) nonzero = true;
            }
        }
        Polynomial<C> x(ring);
        for (std::size_t j = 0; j < gens.size(); ++j) x = x + gens[j].scaled(row[j]);
        out.lambda.push_back(std::move(row));
        out.elements.push_back(std::move(x));
    }
    return out;
}

}  // namespace multiseq
