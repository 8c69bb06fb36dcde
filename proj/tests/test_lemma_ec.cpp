#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qbeta/ec.hpp"
#include "qbeta/identities.hpp"

using namespace qbeta;

TEST_CASE("lemma1 identities re-derive and match") {
    auto ids = lemma1_identities();
    REQUIRE(ids.size() == 4);
    for (const auto& id : ids) {
        INFO(id.name);
        CHECK(id.holds);
        // every single-term mutation of the expected polynomial breaks equality
        for (const auto& [e, coef] : id.rhs.terms()) {
            MPoly mutated = id.rhs + MPoly::monomial(Rat(1), e);
            CHECK(!(id.lhs == mutated));
        }
    }
}

TEST_CASE("lemma2 identities re-derive and match") {
    auto ids = lemma2_identities();
    REQUIRE(ids.size() == 5);
    for (const auto& id : ids) {
        INFO(id.name);
        CHECK(id.holds);
        for (const auto& [e, coef] : id.rhs.terms()) {
            MPoly mutated = id.rhs + MPoly::monomial(Rat(1), e);
            CHECK(!(id.lhs == mutated));
        }
    }
}

TEST_CASE("phi map identity and its mutation") {
    CHECK(phi_map_check());
    // mutating the curve coefficient 6 -> 7 must break the identity
    MPoly s1 = MPoly::variable(Var::s1);
    MPoly Xsub = Rat(-2) * (s1 - MPoly(Rat(1))) * (s1 - MPoly(Rat(1)));
    MPoly mutated = Xsub * Xsub * Xsub + Rat(7) * Xsub * Xsub - Rat(20) * Xsub + MPoly(Rat(8));
    MPoly rhs = Rat(-8) * MPoly::parse("s1^2 - 2*s1 + 2") *
                MPoly::parse("s1^4 - 4*s1^3 + 2*s1^2 + 4*s1 - 4");
    CHECK(!(mutated == rhs));
}

TEST_CASE("sextic-curve rational points") {
    auto rep = c_points_check();
    CHECK(rep.ok);
    CHECK(rep.details.find("U = ±8") != std::string::npos);
}

TEST_CASE("group law on U^2 = X^3 + 6X^2 - 20X + 8") {
    const EllipticCurve& e = lemma_curve();
    CHECK(e.disc_cubic == Rat(20480));
    ECPoint g = ECPoint::affine(Rat(-2), Rat(8));
    ECPoint t2 = ECPoint::affine(Rat(2), Rat(0));
    CHECK(on_curve(e, g));
    CHECK(on_curve(e, t2));
    CHECK(ec_mul(e, 2, g) == t2);                       // tangent slope -2
    CHECK(ec_add(e, t2, t2).is_infinity());             // vertical tangent
    CHECK(ec_add(e, g, ECPoint::infinity()) == g);      // identity
    CHECK(ec_mul(e, 3, g) == ECPoint::affine(Rat(-2), Rat(-8)));
    CHECK(ec_mul(e, 4, g).is_infinity());
    CHECK(point_order(e, g) == 4);
    CHECK(point_order(e, t2) == 2);
    CHECK_THROWS_AS(ec_add(e, ECPoint::affine(Rat(1), Rat(1)), g), error);

    // ec_mul agrees with repeated addition and results stay on the curve
    ECPoint acc = ECPoint::infinity();
    for (int n = 1; n <= 12; ++n) {
        acc = ec_add(e, acc, g);
        CHECK(on_curve(e, acc));
        CHECK(ec_mul(e, n, g) == acc);
    }
}

TEST_CASE("torsion points via candidate enumeration") {
    const EllipticCurve& e = lemma_curve();
    auto tor = torsion_points(e);
    REQUIRE(tor.size() == 4);
    std::vector<ECPoint> expect{ECPoint::infinity(), ECPoint::affine(Rat(-2), Rat(-8)),
                                ECPoint::affine(Rat(-2), Rat(8)),
                                ECPoint::affine(Rat(2), Rat(0))};
    std::sort(expect.begin(), expect.end());
    CHECK(tor == expect);

    auto primes = good_primes(e, 3);
    CHECK(primes == std::vector<long>{3, 7, 11});
    CHECK(count_points_mod_p(e, 3) == 4);
    CHECK(count_points_mod_p(e, 7) == 12);
    CHECK(count_points_mod_p(e, 11) == 8);
    for (long p : primes) CHECK(count_points_mod_p(e, p) % 4 == 0);

    EllipticCurve sanity(Rat(0), Rat(-1), Rat(0));
    auto tor2 = torsion_points(sanity);
    CHECK(tor2.size() == 4);  // O and the three 2-torsion points

    EllipticCurve frac(Rat(1, 2), Rat(0), Rat(1));
    CHECK_THROWS_AS(torsion_points(frac), error);
    CHECK_THROWS_AS(EllipticCurve(Rat(0), Rat(0), Rat(0)), error);  // singular
}
