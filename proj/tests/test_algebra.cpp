#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qbeta/mpoly.hpp"
#include "qbeta/upoly.hpp"
#include "qbeta/xpoly.hpp"

#include <random>

using namespace qbeta;

namespace {

std::mt19937_64 rng(0xbeef);

Rat rnd_rat(int lim = 9) {
    std::uniform_int_distribution<int> num(-lim, lim), den(1, 4);
    return Rat(num(rng), den(rng));
}

UPoly rnd_upoly(int maxdeg) {
    std::uniform_int_distribution<int> deg(0, maxdeg);
    std::vector<Rat> c(deg(rng) + 1);
    for (auto& v : c) v = rnd_rat();
    return UPoly(std::move(c));
}

MPoly rnd_mpoly(std::initializer_list<Var> vars, int terms, int maxexp = 2) {
    MPoly out;
    std::uniform_int_distribution<int> e(0, maxexp);
    for (int i = 0; i < terms; ++i) {
        Expo ex{};
        for (Var v : vars) ex[(int)v] = (int16_t)e(rng);
        out = out + MPoly::monomial(rnd_rat(), ex);
    }
    return out;
}

}  // namespace

TEST_CASE("Rat basics and parsing") {
    CHECK(Rat(2, 4) == Rat(1, 2));
    CHECK(Rat(-2, -4) == Rat(1, 2));
    CHECK(Rat(2, -4) == Rat(-1, 2));
    CHECK(Rat(0, 7).str() == "0");
    CHECK(Rat::parse("-3/4") == Rat(-3, 4));
    CHECK(Rat::parse("+6/4") == Rat(3, 2));
    CHECK(Rat::parse("17") == Rat(17));
    CHECK_THROWS_AS(Rat::parse("x"), error);
    CHECK_THROWS_AS(Rat::parse("1/0"), error);
    CHECK_THROWS_AS(Rat::parse("3.5"), error);
    CHECK(Rat(9, 4).is_square());
    CHECK(Rat(9, 4).sqrt_exact() == Rat(3, 2));
    CHECK(!Rat(-9, 4).is_square());
    CHECK(!Rat(2).is_square());
    CHECK(Rat(0).is_square());
    CHECK(Rat(7, 3).floor() == 2);
    CHECK(Rat(7, 3).ceil() == 3);
    CHECK(Rat(-7, 3).floor() == -3);
    CHECK(Rat(-1, 2) < Rat(1, 3));
}

TEST_CASE("upoly divrem: contract examples") {
    UPoly x4m1{Rat(-1), Rat(0), Rat(0), Rat(0), Rat(1)};
    UPoly xm1{Rat(-1), Rat(1)};
    auto [q, r] = upoly_divrem(x4m1, xm1);
    CHECK(q == UPoly{Rat(1), Rat(1), Rat(1), Rat(1)});
    CHECK(r.is_zero());

    UPoly f{Rat(3), Rat(2), Rat(4), Rat(2), Rat(1)};
    UPoly x2p1{Rat(1), Rat(0), Rat(1)};
    auto [q2, r2] = upoly_divrem(f, x2p1);
    CHECK(q2 == UPoly{Rat(3), Rat(2), Rat(1)});
    CHECK(r2.is_zero());

    auto [q3, r3] = upoly_divrem(x2p1, UPoly::x());
    CHECK(q3 == UPoly::x());
    CHECK(r3 == UPoly{Rat(1)});

    CHECK_THROWS_AS(upoly_divrem(f, UPoly()), error);
}

TEST_CASE("upoly divrem round-trip property") {
    for (int i = 0; i < 200; ++i) {
        UPoly f = rnd_upoly(6), g = rnd_upoly(4);
        if (g.is_zero()) continue;
        auto [q, r] = upoly_divrem(f, g);
        CHECK(q * g + r == f);
        CHECK(r.degree() < g.degree());
    }
}

TEST_CASE("rational_roots: contract examples and lattice property") {
    UPoly p{Rat(-7), Rat(2), Rat(2), Rat(2), Rat(1)};
    auto roots = rational_roots(p);
    REQUIRE(roots.size() == 1);
    CHECK(roots[0] == Rat(1));

    CHECK(rational_roots(UPoly{Rat(1), Rat(0), Rat(1)}).empty());

    auto r2 = rational_roots(UPoly{Rat(-3), Rat(2)});
    REQUIRE(r2.size() == 1);
    CHECK(r2[0] == Rat(3, 2));

    // lattice agreement on random products of linear factors
    for (int i = 0; i < 50; ++i) {
        UPoly prod{Rat(1)};
        std::vector<Rat> expected;
        std::uniform_int_distribution<int> n(1, 3);
        int k = n(rng);
        for (int j = 0; j < k; ++j) {
            Rat root = rnd_rat(5);
            expected.push_back(root);
            std::uniform_int_distribution<int> lead(1, 3);
            Rat l{lead(rng)};
            prod = prod * UPoly{-root * l, l};
        }
        std::sort(expected.begin(), expected.end());
        expected.erase(std::unique(expected.begin(), expected.end()), expected.end());
        auto got = rational_roots(prod);
        CHECK(got == expected);
        // every returned root is in the divisor lattice of the primitive form
        auto [content, ints] = prod.primitive_integer();
        for (const Rat& root : got) {
            if (root.is_zero()) continue;
            mpz_class a0 = ints.front();
            int k0 = 0;
            while (a0 == 0) a0 = ints[++k0];
            CHECK(a0 % root.num() == 0);
            CHECK(ints.back() % root.den() == 0);
        }
    }
}

TEST_CASE("integer_roots handles huge coefficients") {
    // (x - 12345678901234567) * (x + 3) * (x^2 + 1)
    mpz_class big("12345678901234567");
    UPoly p = UPoly{Rat(mpz_class(-big)), Rat(1)} * UPoly{Rat(3), Rat(1)} * UPoly{Rat(1), Rat(0), Rat(1)};
    auto roots = integer_roots(p);
    REQUIRE(roots.size() == 2);
    CHECK(roots[0] == -3);
    CHECK(roots[1] == big);
}

TEST_CASE("resultant over Rat: contract examples and sign convention") {
    // Res_x(x-u, x-v) = u - v with p's coefficients in the top rows
    UPoly xmu{Rat(-5), Rat(1)}, xmv{Rat(-7), Rat(1)};  // u=5, v=7
    CHECK(resultant(xmu, xmv) == Rat(-2));             // u - v = -2
    CHECK(resultant(UPoly{Rat(-1), Rat(0), Rat(1)}, UPoly{Rat(-1), Rat(1)}) == Rat(0));
    CHECK_THROWS_AS(resultant(UPoly{Rat(2)}, UPoly{Rat(3)}), error);
    CHECK(discriminant(UPoly{Rat(2), Rat(-4), Rat(1)}) == Rat(8));
}

TEST_CASE("resultant multiplicativity property") {
    for (int i = 0; i < 40; ++i) {
        UPoly f = rnd_upoly(3), g = rnd_upoly(3), h = rnd_upoly(3);
        if (f.is_zero() || g.is_zero() || h.is_zero()) continue;
        if (f.degree() + g.degree() == 0 || h.degree() == 0) continue;
        if ((f * g).degree() == 0 && h.degree() == 0) continue;
        CHECK(resultant(f * g, h) == resultant(f, h) * resultant(g, h));
    }
}

TEST_CASE("discriminant of split polynomials is the squared Vandermonde") {
    for (int i = 0; i < 30; ++i) {
        std::uniform_int_distribution<int> n(2, 4);
        int k = n(rng);
        std::vector<Rat> roots;
        UPoly prod{Rat(1)};
        bool distinct = true;
        for (int j = 0; j < k; ++j) {
            Rat root = rnd_rat(6);
            for (const Rat& o : roots) distinct = distinct && o != root;
            roots.push_back(root);
            prod = prod * UPoly{-root, Rat(1)};
        }
        if (!distinct) continue;
        Rat vdm(1);
        for (int a = 0; a < k; ++a)
            for (int b = a + 1; b < k; ++b) vdm *= (roots[a] - roots[b]) * (roots[a] - roots[b]);
        CHECK(discriminant(prod) == vdm);  // lc = 1
    }
}

TEST_CASE("mpoly parse/print canonical round-trip") {
    const char* text = "233*a^4 - 352*a^3*b + 108*a^3*c - 1/2*c + 3";
    MPoly m = MPoly::parse(text);
    CHECK(m.str() == text);
    CHECK(MPoly::parse("0").is_zero());
    CHECK(MPoly::parse("-q + q").is_zero());
    CHECK(MPoly::parse("s1^2").degree(Var::s1) == 2);
    CHECK(MPoly::parse("s1*s2") == MPoly::variable(Var::s1) * MPoly::variable(Var::s2));
    CHECK_THROWS_AS(MPoly::parse("z + 1"), error);
    CHECK_THROWS_AS(MPoly::parse(""), error);
    // descending-lex ordering in the fixed variable order d,p,q,a,b,c,...
    MPoly e2 = MPoly::parse("p - 5*d*p + 3*d*p*a");
    CHECK(e2.str() == "3*d*p*a - 5*d*p + p");
    // canonical text is a fixpoint of parse -> str on random polynomials
    for (int i = 0; i < 60; ++i) {
        MPoly m = rnd_mpoly({Var::d, Var::q, Var::s1, Var::X}, 5, 3);
        std::string text = m.str();
        CHECK(MPoly::parse(text) == m);
        CHECK(MPoly::parse(text).str() == text);
    }
}

TEST_CASE("mpoly ring axioms on random values") {
    for (int i = 0; i < 60; ++i) {
        MPoly f = rnd_mpoly({Var::a, Var::b}, 4);
        MPoly g = rnd_mpoly({Var::a, Var::b}, 4);
        MPoly h = rnd_mpoly({Var::a, Var::b}, 4);
        CHECK((f * g) * h == f * (g * h));
        CHECK(f * (g + h) == f * g + f * h);
        CHECK(f + g == g + f);
        if (!g.is_zero()) CHECK((f * g).exact_div(g) == f);
    }
}

TEST_CASE("mpoly substitute and eval commute") {
    MPoly f = MPoly::parse("a^2*b - 3*a*c + 5");
    MPoly sub = MPoly::parse("b + 1");
    MPoly g = f.substitute(Var::a, sub);
    std::map<Var, Rat> point{{Var::b, Rat(2, 3)}, {Var::c, Rat(-1, 2)}};
    std::map<Var, Rat> point_a = point;
    point_a[Var::a] = sub.eval(point);
    CHECK(g.eval(point) == f.eval(point_a));
    CHECK(f.substitute(Var::a, MPoly::variable(Var::a)) == f);
    CHECK_THROWS_AS(f.eval({{Var::a, Rat(1)}}), error);
}

TEST_CASE("xpoly divrem_monic: contract examples") {
    // X^2 / (X - a) -> remainder a^2
    XPoly x2(Var::X, {MPoly(), MPoly(), MPoly(Rat(1))});
    XPoly xma(Var::X, {-MPoly::variable(Var::a), MPoly(Rat(1))});
    auto [q, r] = xpoly_divrem_monic(x2, xma);
    CHECK(r.degree() == 0);
    CHECK(r.coeff(0) == MPoly::variable(Var::a) * MPoly::variable(Var::a));

    XPoly xmb(Var::X, {-MPoly::variable(Var::b), MPoly(Rat(1))});
    auto [q2, r2] = xpoly_divrem_monic(xma * xmb, xma);
    CHECK(r2.is_zero());
    CHECK(q2 == xmb);

    XPoly notmonic(Var::X, {MPoly(Rat(1)), MPoly::variable(Var::a)});
    CHECK_THROWS_AS(xpoly_divrem_monic(x2, notmonic), error);
}

TEST_CASE("mpoly resultant and discriminant") {
    // disc(x^2 + p*x + q) = p^2 - 4q
    MPoly quad = MPoly::parse("x^2") + MPoly::parse("p*x") + MPoly::variable(Var::q);
    CHECK(discriminant(quad, Var::x) == MPoly::parse("p^2 - 4*q"));
    // Res_x(x-u, x-v) = u - v
    MPoly l1 = MPoly::parse("x - u"), l2 = MPoly::parse("x") - MPoly::variable(Var::s);
    CHECK(resultant(l1, l2, Var::x) == MPoly::parse("u") - MPoly::parse("s"));
    // multiplicativity with symbolic entries
    MPoly f = MPoly::parse("x^2 - u"), g = MPoly::parse("x + s"), h = MPoly::parse("x^2 + u*x + 1");
    CHECK(resultant(f * g, h, Var::x) ==
          resultant(f, h, Var::x) * resultant(g, h, Var::x));
    // Bareiss with a zero leading pivot (after building Sylvester of these)
    MPoly z1 = MPoly::parse("x^2 + 1");
    MPoly z2 = MPoly::parse("x^2 - 1");
    CHECK(resultant(z1, z2, Var::x) == MPoly(Rat(4)));
    // both inputs constant in the eliminated variable
    CHECK_THROWS_AS(resultant(MPoly::parse("u + 1"), MPoly::parse("s"), Var::x), error);
    CHECK_THROWS_AS(discriminant(MPoly::parse("u"), Var::x), error);
    // a shared symbolic factor collapses the resultant to zero
    CHECK(resultant(MPoly::parse("x^2 - u"), MPoly::parse("x^2 - u"), Var::x).is_zero());
}

namespace {

MPoly laplace_det(const std::vector<std::vector<MPoly>>& m) {
    size_t n = m.size();
    if (n == 1) return m[0][0];
    MPoly det;
    int sign = 1;
    for (size_t j = 0; j < n; ++j) {
        std::vector<std::vector<MPoly>> minor;
        for (size_t i = 1; i < n; ++i) {
            std::vector<MPoly> row;
            for (size_t k = 0; k < n; ++k)
                if (k != j) row.push_back(m[i][k]);
            minor.push_back(std::move(row));
        }
        MPoly term = m[0][j] * laplace_det(minor);
        det = sign > 0 ? det + term : det - term;
        sign = -sign;
    }
    return det;
}

}  // namespace

TEST_CASE("bareiss determinant agrees with Laplace expansion") {
    for (int trial = 0; trial < 30; ++trial) {
        std::uniform_int_distribution<int> size(2, 4), zero(0, 3);
        size_t n = size(rng);
        std::vector<std::vector<MPoly>> m(n, std::vector<MPoly>(n));
        for (auto& row : m)
            for (auto& cell : row)
                cell = zero(rng) == 0 ? MPoly() : rnd_mpoly({Var::a, Var::t}, 2, 1);
        CHECK(bareiss_det(m) == laplace_det(m));
    }
}

TEST_CASE("(f*g) mod g == 0 over the symbolic quartic ring") {
    for (int i = 0; i < 25; ++i) {
        std::vector<MPoly> fc(4), gc{MPoly(), MPoly(), MPoly(Rat(1))};
        for (auto& c : fc) c = rnd_mpoly({Var::a, Var::b}, 2, 1);
        gc[0] = rnd_mpoly({Var::a, Var::b}, 2, 1);
        gc[1] = rnd_mpoly({Var::a, Var::b}, 2, 1);
        XPoly f(Var::X, std::move(fc)), g(Var::X, std::move(gc));
        CHECK(xpoly_divrem_monic(f * g, g).second.is_zero());
    }
}
