#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "multiseq/dependence.hpp"

using namespace multiseq;

namespace {

const FieldSpec kF{32003};

struct Fixture {
    RingPtr R = make_ring(kF, {"x", "y"});
    PolyFp x = PolyFp::variable(R, 0);
    PolyFp y = PolyFp::variable(R, 1);
    RingPresPtr<Fp> rp = std::make_shared<const RingPresentation<Fp>>(R, PolyVec<Fp>{});

    IdealPresentation<Fp> ideal(PolyVec<Fp> gens, std::string label = "") {
        return IdealPresentation<Fp>(rp, std::move(gens), std::move(label));
    }
};

}  // namespace

TEST_CASE("reduction oracle examples") {
    Fixture f;
    auto I = f.ideal({f.x * f.x, f.y * f.y}, "I");
    auto J = f.ideal({f.x * f.x, f.x * f.y, f.y * f.y}, "J");

    auto [o1, n1] = reduction_oracle(I, J);
    CHECK(o1 == OracleOutcome::confirmed_integral);
    CHECK(n1 == 1);  // J^2 = I J = (x^4, x^3 y, x^2 y^2, x y^3, y^4)

    auto [o2, n2] = reduction_oracle(I, I);
    CHECK(o2 == OracleOutcome::confirmed_integral);
    CHECK(n2 == 0);

    auto M = f.ideal({f.x, f.y}, "m");
    auto [o3, n3] = reduction_oracle(I, M, 8);
    CHECK(o3 == OracleOutcome::inconclusive);  // x lies outside the closure (x^2, xy, y^2)
}

TEST_CASE("reduction oracle on a diagonal pair") {
    Fixture f;
    auto I = f.ideal({f.x * f.x * f.x * f.x, f.y * f.y * f.y * f.y}, "I");
    auto J = f.ideal({f.x * f.x * f.x * f.x, f.x * f.x * f.y * f.y,
                      f.y * f.y * f.y * f.y},
                     "J");
    auto [o, n] = reduction_oracle(I, J);
    CHECK(o == OracleOutcome::confirmed_integral);
    CHECK(n == 1);
}

TEST_CASE("check_integral: the three worked verdicts") {
    Fixture f;
    auto I = f.ideal({f.x * f.x, f.y * f.y}, "I");
    auto J = f.ideal({f.x * f.x, f.x * f.y, f.y * f.y}, "J");
    auto M = f.ideal({f.x, f.y}, "m");

    SUBCASE("integral pair with equal sequences (0,0,4)") {
        auto v = check_integral(*f.rp, I, J);
        CHECK(v.integral);
        CHECK(v.seq_small.c == std::vector<long long>{0, 0, 4});
        CHECK(v.seq_large.c == std::vector<long long>{0, 0, 4});
        CHECK(v.oracle == OracleOutcome::confirmed_integral);
        CHECK(v.oracle_steps == 1);
        CHECK(v.warnings.empty());
    }

    SUBCASE("non-integral pair with witness index 2") {
        auto v = check_integral(*f.rp, I, M);
        CHECK_FALSE(v.integral);
        CHECK(v.witness_index == 2);
        CHECK(v.seq_small.c == std::vector<long long>{0, 0, 4});
        CHECK(v.seq_large.c == std::vector<long long>{0, 0, 1});
        CHECK(v.oracle == OracleOutcome::inconclusive);
    }

    SUBCASE("I = J is integral by reflexivity") {
        auto v = check_integral(*f.rp, I, I);
        CHECK(v.integral);
        CHECK(v.oracle == OracleOutcome::confirmed_integral);
        CHECK(v.oracle_steps == 0);
    }
}

TEST_CASE("containment is enforced, join flag relaxes") {
    Fixture f;
    auto I = f.ideal({f.x * f.x}, "I");
    auto J = f.ideal({f.y}, "J");
    CHECK_THROWS_AS(check_integral(*f.rp, I, J), precondition_error);

    auto v = check_integral(*f.rp, I, J, /*join=*/true);
    // J is replaced by I + J = (x^2, y)
    CHECK(v.seq_large.c == multiplicity_sequence(
                               *f.rp, f.ideal({f.x * f.x, f.y})).c);
}

TEST_CASE("verdict is invariant under generator shuffles") {
    Fixture f;
    auto I1 = f.ideal({f.x * f.x, f.y * f.y});
    auto I2 = f.ideal({f.y * f.y, f.x * f.x});
    auto J1 = f.ideal({f.x * f.x, f.x * f.y, f.y * f.y});
    auto J2 = f.ideal({f.y * f.y, f.x * f.x, f.x * f.y});
    auto va = check_integral(*f.rp, I1, J1);
    auto vb = check_integral(*f.rp, I2, J2);
    CHECK(va.integral == vb.integral);
    CHECK(va.seq_small.c == vb.seq_small.c);
    CHECK(va.oracle_steps == vb.oracle_steps);
}

TEST_CASE("quotient rings carry the equidimensionality caveat") {
    auto R = make_ring(kF, {"x", "y", "z"});
    auto x = PolyFp::variable(R, 0), z = PolyFp::variable(R, 2);
    auto rp = std::make_shared<const RingPresentation<Fp>>(R, PolyVec<Fp>{x * z}, true);
    IdealPresentation<Fp> I(rp, {x});
    auto v = check_integral(*rp, I, I);
    REQUIRE(v.warnings.size() == 1);
    CHECK(v.warnings[0].find("equidimensional") != std::string::npos);
}

TEST_CASE("oracle-confirmed pairs always have equal sequences") {
    // the already-proved direction of the criterion, checked on every
    // confirmed corpus pair
    Fixture f;
    std::vector<std::pair<PolyVec<Fp>, PolyVec<Fp>>> pairs = {
        {{f.x * f.x, f.y * f.y}, {f.x * f.x, f.x * f.y, f.y * f.y}},
        {{f.x, f.y}, {f.x, f.y}},
        {{f.x * f.x * f.x * f.x, f.y * f.y * f.y * f.y},
         {f.x * f.x * f.x * f.x, f.x * f.x * f.y * f.y, f.y * f.y * f.y * f.y}},
    };
    for (auto& [gi, gj] : pairs) {
        auto I = f.ideal(gi), J = f.ideal(gj);
        auto [o, n] = reduction_oracle(I, J);
        REQUIRE(o == OracleOutcome::confirmed_integral);
        CHECK(multiplicity_sequence(*f.rp, I).c == multiplicity_sequence(*f.rp, J).c);
    }
}
