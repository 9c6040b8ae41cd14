#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <thread>

#include "multiseq/ideal_ops.hpp"
#include "support/brute.hpp"
#include "support/testutil.hpp"

using namespace multiseq;

namespace {

const FieldSpec kF{32003};

struct XY {
    RingPtr R = make_ring(kF, {"x", "y"});
    PolyFp x = PolyFp::variable(R, 0);
    PolyFp y = PolyFp::variable(R, 1);
    MonomialOrder ord = MonomialOrder::grevlex(2);
};

}  // namespace

TEST_CASE("groebner basis: already a basis") {
    XY v;
    PolyVec<Fp> gens = {v.x * v.x, v.x * v.y};
    auto gb = groebner_basis(gens, v.ord);
    REQUIRE(gb.size() == 2);
    CHECK(gb[0] == v.x * v.y);
    CHECK(gb[1] == v.x * v.x);
}

TEST_CASE("groebner basis: twisted cubic is self-reduced") {
    auto R = make_ring(kF, {"x", "y", "z", "w"});
    auto x = PolyFp::variable(R, 0), y = PolyFp::variable(R, 1);
    auto z = PolyFp::variable(R, 2), w = PolyFp::variable(R, 3);
    PolyVec<Fp> gens = {x * z - y * y, y * w - z * z, x * w - y * z};
    auto gb = groebner_basis(gens, MonomialOrder::grevlex(4));
    REQUIRE(gb.size() == 3);
    // the reduced basis is the same three quadrics, monic under grevlex
    PolyVec<Fp> expected = {y * y - x * z, y * z - x * w, z * z - y * w};
    for (const auto& e : expected) {
        bool found = false;
        for (const auto& g : gb) found = found || g == e;
        CHECK(found);
    }
}

TEST_CASE("groebner basis: monomial input loses redundant multiples") {
    XY v;
    PolyVec<Fp> gens = {v.x * v.x, v.x * v.x * v.x, v.x * v.y, v.x * v.x * v.y, v.y * v.y * v.y};
    auto gb = groebner_basis(gens, v.ord);
    REQUIRE(gb.size() == 3);
    CHECK(gb[0] == v.x * v.y);
    CHECK(gb[1] == v.x * v.x);
    CHECK(gb[2] == v.y * v.y * v.y);
}

TEST_CASE("groebner basis: unit ideal shortcut") {
    XY v;
    PolyVec<Fp> gens = {v.x + v.y, v.x + v.y + PolyFp::from_int(v.R, 1)};
    auto gb = groebner_basis(gens, v.ord);
    REQUIRE(gb.size() == 1);
    CHECK(gb[0] == PolyFp::from_int(v.R, 1));
}

TEST_CASE("groebner basis: determinism across generator shuffles") {
    auto R = make_ring(kF, {"x", "y", "z"});
    auto x = PolyFp::variable(R, 0), y = PolyFp::variable(R, 1), z = PolyFp::variable(R, 2);
    PolyVec<Fp> a = {x * x + y * z, y * y - x * z, x * y + z * z};
    PolyVec<Fp> b = {a[2], a[0], a[1]};
    auto ga = groebner_basis(a, MonomialOrder::grevlex(3));
    auto gb = groebner_basis(b, MonomialOrder::grevlex(3));
    REQUIRE(ga.size() == gb.size());
    for (std::size_t i = 0; i < ga.size(); ++i) CHECK(ga[i] == gb[i]);
}

TEST_CASE("normal form examples") {
    XY v;
    CHECK(normal_form(v.x * v.x * v.y, PolyVec<Fp>{v.x * v.x}, v.ord).is_zero());
    CHECK(normal_form(v.y * v.y, PolyVec<Fp>{v.x}, v.ord) == v.y * v.y);

    // one-step reduction under lex, where xz leads xz - y^2
    auto R3 = make_ring(kF, {"x", "y", "z"});
    auto x = PolyFp::variable(R3, 0), y = PolyFp::variable(R3, 1), z = PolyFp::variable(R3, 2);
    auto lex = MonomialOrder::lex(3);
    CHECK(normal_form(x * z, PolyVec<Fp>{x * z - y * y}, lex) == y * y);
}

TEST_CASE("normal form membership matches brute-force linear algebra") {
    auto R = make_ring(kF, {"x", "y", "z"});
    auto x = PolyFp::variable(R, 0), y = PolyFp::variable(R, 1), z = PolyFp::variable(R, 2);
    PolyVec<Fp> gens = {x * z - y * y, y * z - x * x};
    auto ord = MonomialOrder::grevlex(3);
    auto gb = groebner_basis(gens, ord);
    SplitMix64 rng(11);
    for (int round = 0; round < 25; ++round) {
        auto f = test::random_homogeneous<Fp>(R, rng, 2 + rng.below(3), 3);
        if (f.is_zero()) continue;
        bool gb_member = normal_form(f, gb, ord).is_zero();
        bool brute = test::brute_membership(f, gens, *R);
        CHECK(gb_member == brute);
    }
    // explicit members
    auto member = (x * z - y * y) * z + (y * z - x * x).times_monomial(Monomial::variable(1));
    CHECK(normal_form(member, gb, ord).is_zero());
}

TEST_CASE("eliminate: rees-style kernel") {
    // eliminate t from {y1 - t x^2, y2 - t x y}
    auto R = make_ring(kF, {"t", "x", "y", "y1", "y2"});
    auto t = PolyFp::variable(R, 0), x = PolyFp::variable(R, 1), y = PolyFp::variable(R, 2);
    auto y1 = PolyFp::variable(R, 3), y2 = PolyFp::variable(R, 4);
    auto out = eliminate(PolyVec<Fp>{y1 - t * x * x, y2 - t * x * y}, {0});
    REQUIRE(out.size() == 1);
    CHECK(out[0] == y * y1 - x * y2);
}

TEST_CASE("eliminate: principal ideal has no relations") {
    auto R = make_ring(kF, {"t", "x", "y1"});
    auto t = PolyFp::variable(R, 0), x = PolyFp::variable(R, 1), y1 = PolyFp::variable(R, 2);
    auto out = eliminate(PolyVec<Fp>{y1 - t * x}, {0});
    CHECK(out.empty());
}

TEST_CASE("eliminate: empty front set is the identity") {
    XY v;
    PolyVec<Fp> gens = {v.x * v.x + v.y};
    CHECK(eliminate(gens, {}) == gens);
}

TEST_CASE("eliminate respects specialization") {
    // eliminated generators vanish on every common zero of the input
    auto R = make_ring(kF, {"t", "x", "y", "y1", "y2"});
    auto t = PolyFp::variable(R, 0), x = PolyFp::variable(R, 1), y = PolyFp::variable(R, 2);
    auto y1 = PolyFp::variable(R, 3), y2 = PolyFp::variable(R, 4);
    PolyVec<Fp> input = {y1 - t * x * x, y2 - t * x * y};
    auto out = eliminate(input, {0});
    SplitMix64 rng(5);
    for (int round = 0; round < 20; ++round) {
        Fp tv(static_cast<std::int64_t>(rng.below(32003)), kF);
        Fp xv(static_cast<std::int64_t>(rng.below(32003)), kF);
        Fp yv(static_cast<std::int64_t>(rng.below(32003)), kF);
        std::vector<Fp> point = {tv, xv, yv, tv * xv * xv, tv * xv * yv};
        for (const auto& f : input) CHECK(test::evaluate(f, point).is_zero());
        for (const auto& g : out) CHECK(test::evaluate(g, point).is_zero());
    }
}

TEST_CASE("colon examples") {
    XY v;
    auto out = colon(PolyVec<Fp>{v.x * v.x}, PolyVec<Fp>{v.x});
    auto gb = groebner_basis(out, v.ord);
    REQUIRE(gb.size() == 1);
    CHECK(gb[0] == v.x);

    // colon by the zero ideal is the unit ideal
    auto unit = colon(PolyVec<Fp>{v.x * v.x}, PolyVec<Fp>{PolyFp(v.R)});
    CHECK(is_unit_basis(groebner_basis(unit, v.ord)));

    // (0) : f = (0) in a domain
    CHECK(colon(PolyVec<Fp>{}, PolyVec<Fp>{v.x}).empty());
}

TEST_CASE("saturation examples and properties") {
    XY v;
    auto [sat, steps] = saturate(PolyVec<Fp>{v.x * v.x + v.x * v.y},
                                 PolyVec<Fp>{v.x * v.x, v.x * v.y});
    REQUIRE(sat.size() == 1);
    CHECK(sat[0] == v.x + v.y);
    CHECK(steps >= 1);

    // stable under one more colon, and contains the input ideal
    auto again = colon(sat, PolyVec<Fp>{v.x * v.x, v.x * v.y});
    CHECK(ideal_equal(again, sat, v.ord));
    auto satgb = groebner_basis(sat, v.ord);
    CHECK(normal_form(v.x * v.x + v.x * v.y, satgb, v.ord).is_zero());

    // saturating by the unit ideal changes nothing: A : (1) = A
    auto [sat1, steps1] = saturate(PolyVec<Fp>{v.x * v.x + v.x * v.y},
                                   PolyVec<Fp>{PolyFp::from_int(v.R, 1)});
    CHECK(ideal_equal(sat1, PolyVec<Fp>{v.x * v.x + v.x * v.y}, v.ord));
    CHECK(steps1 == 0);

    // the unit ideal saturates to itself
    auto [satu, stepsu] =
        saturate(PolyVec<Fp>{PolyFp::from_int(v.R, 1)}, PolyVec<Fp>{PolyFp::from_int(v.R, 1)});
    CHECK(is_unit_basis(groebner_basis(satu, v.ord)));
}

TEST_CASE("krull dimension examples") {
    auto R3 = make_ring(kF, {"x", "y", "z"});
    auto x = PolyFp::variable(R3, 0), y = PolyFp::variable(R3, 1), z = PolyFp::variable(R3, 2);
    CHECK(krull_dimension(PolyVec<Fp>{x * y}, *R3) == 2);

    XY v;
    CHECK(krull_dimension(PolyVec<Fp>{}, *v.R) == 2);
    CHECK(krull_dimension(PolyVec<Fp>{v.x, v.y}, *v.R) == 0);
    CHECK(krull_dimension(PolyVec<Fp>{PolyFp::from_int(v.R, 1)}, *v.R) == -1);
    CHECK(krull_dimension(PolyVec<Fp>{x * y, y * z, x * z}, *R3) == 1);
}

TEST_CASE("krull dimension is order-independent") {
    auto R3 = make_ring(kF, {"x", "y", "z"});
    auto x = PolyFp::variable(R3, 0), y = PolyFp::variable(R3, 1), z = PolyFp::variable(R3, 2);
    std::vector<PolyVec<Fp>> ideals = {
        {x * y}, {x * z - y * y}, {x * y, y * z}, {x * x, x * y}, {x, y, z}};
    auto lex = MonomialOrder::lex(3);
    for (const auto& gens : ideals)
        CHECK(krull_dimension(gens, *R3) == krull_dimension(gens, *R3, &lex));
}

TEST_CASE("weight-initial ideal examples") {
    auto R = make_ring(kF, {"x", "y", "y1", "y2"});
    auto x = PolyFp::variable(R, 0), y = PolyFp::variable(R, 1);
    auto y1 = PolyFp::variable(R, 2), y2 = PolyFp::variable(R, 3);

    auto in1 = initial_ideal_weight(PolyVec<Fp>{y * y1 - x * y2}, {0, 0, 2, 2});
    REQUIRE(in1.size() == 1);
    CHECK(in1[0] == y * y1 - x * y2);  // generator already w-homogeneous

    auto in2 = initial_ideal_weight(PolyVec<Fp>{y1 * y1 - x * x * y2}, {0, 0, 1, 3});
    REQUIRE(in2.size() == 1);
    CHECK(in2[0].monic() == (x * x * y2).monic());

    auto in3 = initial_ideal_weight(PolyVec<Fp>{x * y1, y * y2}, {0, 0, 1, 1});
    auto gb3 = groebner_basis(in3, MonomialOrder::grevlex(4));
    CHECK(ideal_equal(in3, PolyVec<Fp>{x * y1, y * y2}, MonomialOrder::grevlex(4)));
}

TEST_CASE("ideal power and product") {
    XY v;
    auto p2 = ideal_power(PolyVec<Fp>{v.x * v.x, v.x * v.y}, 2, v.R);
    REQUIRE(p2.size() == 3);
    CHECK(ideal_equal(p2,
                      PolyVec<Fp>{v.x * v.x * v.x * v.x, v.x * v.x * v.x * v.y,
                                  v.x * v.x * v.y * v.y},
                      v.ord));
    auto p0 = ideal_power(PolyVec<Fp>{v.x}, 0, v.R);
    CHECK(is_unit_basis(groebner_basis(p0, v.ord)));
}

TEST_CASE("divide_exact") {
    XY v;
    auto f = (v.x + v.y) * (v.x * v.x - v.y);
    CHECK(divide_exact(f, v.x + v.y) == v.x * v.x - v.y);
    CHECK_THROWS_AS(divide_exact(v.x * v.x + v.y, v.x + v.y), internal_error);
}

TEST_CASE("groebner over the rationals") {
    auto R = make_ring(FieldSpec{0}, {"x", "y"});
    auto x = PolyQ::variable(R, 0), y = PolyQ::variable(R, 1);
    // I = (x^2 - y, x^3 - x) has reduced grevlex basis {y^2 - y, xy - x, x^2 - y}
    auto gb = groebner_basis(PolyVec<Rational>{x * x - y, x * x * x - x},
                             MonomialOrder::grevlex(2));
    REQUIRE(gb.size() == 3);
    CHECK(gb[0] == y * y - y);
    CHECK(gb[1] == x * y - x);
    CHECK(gb[2] == x * x - y);
}

TEST_CASE("concurrent basis computations share the cache safely") {
    auto R = make_ring(kF, {"x", "y", "z"});
    auto ord = MonomialOrder::grevlex(3);
    SplitMix64 rng(3141);
    std::vector<PolyVec<Fp>> jobs;
    for (int k = 0; k < 12; ++k) {
        PolyVec<Fp> gens;
        for (int j = 0; j < 3; ++j) gens.push_back(test::random_poly<Fp>(R, rng, 2, 3));
        jobs.push_back(std::move(gens));
    }
    std::vector<PolyVec<Fp>> sequential;
    for (const auto& gens : jobs) sequential.push_back(groebner_basis(gens, ord));

    std::vector<PolyVec<Fp>> parallel(jobs.size());
    std::vector<std::thread> workers;
    for (int t = 0; t < 4; ++t)
        workers.emplace_back([&, t] {
            for (std::size_t i = t; i < jobs.size(); i += 4)
                parallel[i] = groebner_basis(jobs[i], ord);
        });
    for (auto& w : workers) w.join();
    for (std::size_t i = 0; i < jobs.size(); ++i) {
        REQUIRE(parallel[i].size() == sequential[i].size());
        for (std::size_t k = 0; k < parallel[i].size(); ++k)
            CHECK(parallel[i][k] == sequential[i][k]);
    }
}

TEST_CASE("buchberger criterion holds on random ideals") {
    auto R = make_ring(kF, {"x", "y", "z"});
    auto ord = MonomialOrder::grevlex(3);
    SplitMix64 rng(99);
    for (int round = 0; round < 10; ++round) {
        PolyVec<Fp> gens;
        for (int k = 0; k < 3; ++k) gens.push_back(test::random_poly<Fp>(R, rng, 2, 3));
        auto gb = groebner_basis(gens, ord);
        if (gb.empty()) continue;
        for (const auto& f : gens) CHECK(normal_form(f, gb, ord).is_zero());
        for (std::size_t i = 0; i < gb.size(); ++i)
            for (std::size_t j = i + 1; j < gb.size(); ++j) {
                auto l = lcm(gb[i].leading_term(ord).mono, gb[j].leading_term(ord).mono);
                auto s = gb[i].times_monomial(l / gb[i].leading_term(ord).mono)
                             .scaled(gb[i].leading_term(ord).coeff.inverse()) -
                         gb[j].times_monomial(l / gb[j].leading_term(ord).mono)
                             .scaled(gb[j].leading_term(ord).coeff.inverse());
                CHECK(normal_form(s, gb, ord).is_zero());
            }
        // reduced basis invariants: monic, no leading term divides another
        for (const auto& g : gb) CHECK(g.leading_term(ord).coeff.is_one());
        for (std::size_t i = 0; i < gb.size(); ++i)
            for (std::size_t j = 0; j < gb.size(); ++j)
                if (i != j)
                    CHECK_FALSE(
                        gb[i].leading_term(ord).mono.divides(gb[j].leading_term(ord).mono));
    }
}
