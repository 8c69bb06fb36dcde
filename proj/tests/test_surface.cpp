#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qbeta/param.hpp"
#include "qbeta/region.hpp"
#include "qbeta/surface.hpp"
#include "qbeta/verify.hpp"

#include <fstream>
#include <random>
#include <sstream>

using namespace qbeta;

namespace {

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

std::string golden_dir() {
    return std::string(QBETA_GOLDEN_DIR);
}

}  // namespace

TEST_CASE("F transcription guards") {
    // independent transcription: term-by-term coefficient list
    struct Term { long coef; int ea, eb, ec; };
    static const Term terms[] = {
        {233, 4, 0, 0}, {-352, 3, 1, 0}, {108, 3, 0, 1}, {168, 3, 0, 0}, {368, 2, 2, 0},
        {-264, 2, 1, 1}, {-624, 2, 1, 0}, {46, 2, 0, 2}, {-184, 2, 0, 1}, {-544, 2, 0, 0},
        {-160, 1, 3, 0}, {128, 1, 2, 1}, {352, 1, 2, 0}, {-16, 1, 1, 2}, {64, 1, 1, 1},
        {128, 1, 1, 0}, {-4, 1, 0, 3}, {-8, 1, 0, 2}, {768, 1, 0, 1}, {640, 1, 0, 0},
        {48, 0, 4, 0}, {-64, 0, 3, 1}, {-256, 0, 3, 0}, {32, 0, 2, 2}, {288, 0, 2, 1},
        {384, 0, 2, 0}, {-8, 0, 1, 3}, {-144, 0, 1, 2}, {-512, 0, 1, 1}, {1, 0, 0, 4},
        {24, 0, 0, 3}, {96, 0, 0, 2}, {-640, 0, 0, 1}, {-256, 0, 0, 0}};
    MPoly rebuilt;
    for (const auto& t : terms) {
        Expo e{};
        e[(int)Var::a] = (int16_t)t.ea;
        e[(int)Var::b] = (int16_t)t.eb;
        e[(int)Var::c] = (int16_t)t.ec;
        rebuilt = rebuilt + MPoly::monomial(Rat(t.coef), e);
    }
    CHECK(surface_F() == rebuilt);
    CHECK(surface_F().term_count() == 34);
    CHECK(F_eval(Rat(0), Rat(0), Rat(0)) == Rat(-256));
    CHECK(F_eval(Rat(2), Rat(5), Rat(4)).is_zero());
    CHECK(F_eval(Rat(6), Rat(17), Rat(24)).is_zero());
    CHECK(F_factor_a2_check());
    // agreement between F and the a=2 factored path at random rationals
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<int> num(-9, 9), den(1, 3);
    MPoly q1 = MPoly::parse("12*b^2 - 4*b*c - 96*b + c^2 + 12*c + 196");
    MPoly q2 = MPoly::parse("4*b^2 - 4*b*c - 16*b + c^2 + 4*c + 20");
    for (int i = 0; i < 20; ++i) {
        Rat b(num(rng), den(rng)), c(num(rng), den(rng));
        std::map<Var, Rat> pt{{Var::b, b}, {Var::c, c}};
        CHECK(F_eval(Rat(2), b, c) == q1.eval(pt) * q2.eval(pt));
    }
    // the integral circle point (b,c) = (4,2) kills the first quadric
    CHECK(q1.eval({{Var::b, Rat(4)}, {Var::c, Rat(2)}}).is_zero());
}

TEST_CASE("F as a monic quartic in c matches the fast coefficient path") {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<long> v(-300, 300);
    for (int i = 0; i < 40; ++i) {
        long a = v(rng), b = v(rng);
        UPoly q = F_c_quartic(a, b);
        CHECK(q.degree() == 4);
        CHECK(q.is_monic());
        for (long c : {-5L, 0L, 17L}) {
            CHECK(q.eval(Rat(c)) == F_eval(Rat(a), Rat(b), Rat(c)));
        }
    }
}

TEST_CASE("search_box: golden boxes") {
    SearchOptions opts;
    opts.threads = 2;
    auto sols = search_box(-10, 10, -10, 10, opts);
    std::ostringstream os;
    write_search_csv(os, sols);
    CHECK(os.str() == slurp(golden_dir() + "/search_10.csv"));
    // cross-route: every reported point satisfies F = 0 through the MPoly path
    for (const auto& s : sols)
        CHECK(F_eval(Rat((long)s.a), Rat((long)s.b), Rat(s.c, mpz_class(1))).is_zero());
}

TEST_CASE("search_box: a-range [-10,10] with the wider b-range") {
    auto sols = search_box(-10, 10, -200, 200);
    // the non-a=2 rows are exactly the a=2t family points with |2t| <= 10
    std::vector<std::tuple<long, long, long>> non_a2;
    for (const auto& s : sols)
        if (s.a != 2) non_a2.push_back({s.a, s.b, s.c.get_si()});
    std::vector<std::tuple<long, long, long>> expect;
    for (long t = -5; t <= 5; ++t) {
        if (t == 1) continue;  // that one has a = 2
        expect.push_back({2 * t, t * t + 2 * t + 2, 2 * t * t + 2 * t});
    }
    expect.push_back({4, 10, 20});  // isolated point, not in any family
    std::sort(expect.begin(), expect.end());
    CHECK(non_a2 == expect);
    CHECK(sols.size() == 31);
    // family2_match follows (b,c,d) membership; at (0,2,0) the e-system has no
    // solution at all (the quartic is (x^2+1)^2), so the flag is off there
    for (const auto& s : sols) {
        bool expect_match = false;
        if (s.a % 2 == 0) {
            long t = s.a / 2;
            expect_match = s.b == t * t + 2 * t + 2 && s.c == 2 * t * t + 2 * t && t != 0;
        }
        if (s.a == 4 && s.b == 10 && s.c == 20) expect_match = false;  // no d exists
        CHECK(s.family2_match == expect_match);
    }
}

TEST_CASE("numeric and exact isolation agree on random large pairs") {
    std::mt19937_64 rng(606);
    std::uniform_int_distribution<long> v(-10000, 10000);
    for (int i = 0; i < 300; ++i) {
        long a = v(rng), b = v(rng);
        UPoly q = F_c_quartic(a, b);
        auto exact = integer_roots(q);
        // numeric path via a single-cell box
        SearchOptions numeric;
        numeric.recover = false;
        auto sols = search_box(a, a, b, b, numeric);
        std::vector<mpz_class> found;
        for (const auto& s : sols) found.push_back(s.c);
        CHECK(found == exact);
    }
    // pairs known to carry solutions
    for (long t : {-100L, -31L, 17L, 98L}) {
        long a = 2 * t, b = t * t + 2 * t + 2;
        auto exact = integer_roots(F_c_quartic(a, b));
        bool has = false;
        for (const auto& c : exact) has = has || c == 2 * t * t + 2 * t;
        CHECK(has);
    }
}

TEST_CASE("search_box determinism across thread counts") {
    SearchOptions one, many;
    one.threads = 1;
    many.threads = 8;
    one.recover = many.recover = false;
    auto s1 = search_box(-30, 5, -25, 25, one);
    auto s2 = search_box(-30, 5, -25, 25, many);
    REQUIRE(s1.size() == s2.size());
    for (size_t i = 0; i < s1.size(); ++i) {
        CHECK(s1[i].a == s2[i].a);
        CHECK(s1[i].b == s2[i].b);
        CHECK(s1[i].c == s2[i].c);
    }
}

TEST_CASE("write_search_csv integral filter") {
    SurfaceSolution s;
    s.a = 1;
    s.b = 2;
    s.c = 3;
    s.d_candidates = {{Rat(5), Rat(1), Rat(2), true}, {Rat(7, 2), Rat(3), Rat(4), true}};
    std::ostringstream all, integral;
    write_search_csv(all, {s});
    write_search_csv(integral, {s}, true);
    CHECK(all.str() ==
          "a,b,c,d,p,q,family2_match\n1,2,3,5,1,2,0\n1,2,3,7/2,3,4,0\n");
    CHECK(integral.str() == "a,b,c,d,p,q,family2_match\n1,2,3,5,1,2,0\n");
}

TEST_CASE("search_box rejects bad ranges") {
    CHECK_THROWS_AS(search_box(3, 2, 0, 0), error);
    CHECK_THROWS_AS(search_box(0, 1000000000L, 0, 1, {}), error);
}

TEST_CASE("param tables: canonical text round-trip") {
    // every data row reprints byte-identically through parse -> str
    std::ifstream in(std::string(QBETA_DATA_FILE), std::ios::binary);
    REQUIRE(in.good());
    std::string line;
    int rows = 0;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#' || line[0] == '[') continue;
        auto colon = line.find(':');
        REQUIRE(colon != std::string::npos);
        std::string body = line.substr(colon + 2);
        CHECK(MPoly::parse(body).str() == body);
        ++rows;
    }
    CHECK(rows == 74);  // (7+5)*3 b,c,d rows + 9+9 p rows + 10+10 q rows
}

TEST_CASE("param tables: corruption is caught by the checksum") {
    std::ifstream in(std::string(QBETA_DATA_FILE), std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream os;
    os << in.rdbuf();
    std::string text = os.str();
    CHECK_NOTHROW(parse_param_tables(text));
    // flip one digit inside a coefficient
    auto pos = text.find("663552");
    REQUIRE(pos != std::string::npos);
    std::string bad = text;
    bad[pos] = '7';
    CHECK_THROWS_WITH_AS(parse_param_tables(bad), doctest::Contains("checksum"), error);
    // strip the checksum line entirely
    std::string nohdr = text.substr(text.find("[b.num]"));
    CHECK_THROWS_AS(parse_param_tables(nohdr), error);
}

TEST_CASE("param tables: checksum and anchors") {
    CHECK(param_tables().checksum != 0);
    ParamEval pe = param_eval(Rat(1), Rat(1));
    CHECK(pe.b == Rat(97, 24));
    CHECK(pe.c == Rat(3, 4));
    CHECK(pe.d == Rat(17, 8));
    CHECK(pe.p == Rat(-6, 13));
    CHECK(pe.q == Rat(-51, 5));

    ParamEval p4 = param_eval(Rat(4), Rat(1));
    CHECK(p4.b == Rat(46, 3));
    CHECK(p4.c == Rat(20));
    CHECK(p4.d == Rat(25));
    CHECK(p4.p == Rat(-165, 26));
    CHECK(p4.q == Rat(525, 52));
    CHECK((p4.p * p4.p - Rat(4) * p4.q).sign() < 0);  // complex roots at a = 4

    // vanishing denominators are reported by name
    CHECK_THROWS_WITH_AS(param_eval(Rat(0), Rat(1)), doctest::Contains("q denominator"), error);
    CHECK_THROWS_WITH_AS(param_eval(Rat(0), Rat(5, 6)), doctest::Contains("b denominator"),
                         error);
}

TEST_CASE("the generic point (a^2/4+a+2, a^2/2+a) is the t->infinity limit") {
    // valid for the b and c tables: lim b = numerator/denominator of the
    // leading t-coefficients, and that ratio is the generic surface point
    const auto& tb = param_tables();
    auto lead_sum = [&](int section) {
        MPoly acc;
        MPoly a = MPoly::variable(Var::a), pw(Rat(1));
        for (const auto& row : tb.rows[section]) {
            acc = acc + MPoly(row.coeff(4)) * pw;
            pw = pw * a;
        }
        return acc;
    };
    MPoly a = MPoly::variable(Var::a);
    MPoly bnum = lead_sum(0), bden = lead_sum(1);
    CHECK(MPoly(Rat(4)) * bnum == (a * a + Rat(4) * a + MPoly(Rat(8))) * bden);
    MPoly cnum = lead_sum(2), cden = lead_sum(3);
    CHECK(MPoly(Rat(2)) * cnum == (a * a + Rat(2) * a) * cden);
    // the limit point satisfies F for sampled a
    for (long av : {-6L, -1L, 3L, 10L}) {
        Rat aa(av);
        CHECK(F_eval(aa, (aa * aa + Rat(4) * aa + Rat(8)) / Rat(4),
                     (aa * aa + Rat(2) * aa) / Rat(2))
                  .is_zero());
    }
}

TEST_CASE("param points lie on the variety and satisfy the e-system") {
    std::mt19937_64 rng(2024);
    std::uniform_int_distribution<int> num(-10, 10), den(1, 3);
    int checked = 0;
    while (checked < 30) {
        Rat a(num(rng), den(rng)), t(num(rng), den(rng));
        ParamEval pe;
        try {
            pe = param_eval(a, t);
        } catch (const error&) {
            continue;
        }
        ++checked;
        CHECK(F_eval(a, pe.b, pe.c).is_zero());
        auto rows = e_system().specialize({pe.a, pe.b, pe.c, pe.d});
        for (const auto& row : rows) CHECK((row.cp * pe.p + row.cq * pe.q - row.rhs).is_zero());
    }
}

TEST_CASE("P1 and the discriminant sign analysis") {
    CHECK(P1_poly() ==
          MPoly::parse("9*a^3*t^2 - 24*a^3*t + 18*a^3 - 116*a^2*t^2 + 312*a^2*t - 216*a^2 + "
                       "524*a*t^2 - 1344*a*t + 864*a - 800*t^2 + 1920*t - 1152"));
    MPoly a = MPoly::variable(Var::a);
    MPoly am4 = a - MPoly(Rat(4)), am2 = a - MPoly(Rat(2));
    CHECK(discriminant(P1_poly(), Var::t) == Rat(-72) * am4 * am4 * am4 * am2 * am2 * a);

    CHECK(P1_poly().eval({{Var::a, Rat(1)}, {Var::t, Rat(1)}}) == Rat(-5));
    auto r = disc_sign_check(Rat(1), Rat(1));
    CHECK(r.agree);
    CHECK(r.sign_disc > 0);

    // the reciprocal-parameter law holds where the literal one fails
    auto r2 = disc_sign_check(Rat(3), Rat(2, 3));
    CHECK(!r2.agree);
    CHECK(r2.agree_reversed);
    CHECK(r2.disc == Rat(210212480, 1361964747));

    // a < 0: P1 < 0 identically, so -a*P1 < 0 and disc < 0
    std::mt19937_64 rng(31);
    std::uniform_int_distribution<int> num(-12, -1), tnum(-12, 12), den(1, 3);
    int checked = 0;
    while (checked < 25) {
        Rat a_(num(rng), den(rng)), t_(tnum(rng), den(rng));
        DiscSignReport rep;
        try {
            rep = disc_sign_check(a_, t_);
        } catch (const error&) {
            continue;
        }
        ++checked;
        CHECK(rep.sign_m_a_p1 < 0);
        CHECK(rep.sign_disc < 0);
        CHECK(rep.agree_reversed);
    }
}

TEST_CASE("region grid and deterministic outputs") {
    // negative-a slice: -a*P1 < 0 everywhere
    for (const auto& cell : region_grid(Rat(-3), Rat(-1), Rat(-4), Rat(4), Rat(1, 2)))
        CHECK(cell.sign < 0);

    auto cells = region_grid(Rat(0), Rat(10), Rat(-10), Rat(10), Rat(1));
    CHECK(cells.size() == 11 * 21);
    bool pos_in_02 = false;
    for (const auto& cell : cells) {
        if (cell.a.is_zero()) CHECK(cell.sign == 0);
        if (cell.a == Rat(1) && cell.sign > 0) pos_in_02 = true;
    }
    CHECK(pos_in_02);

    std::ostringstream csv1, csv2;
    write_region_csv(csv1, cells);
    write_region_csv(csv2, cells);
    CHECK(csv1.str() == csv2.str());
    std::string svg = region_svg(cells, Rat(0), Rat(10), Rat(-10), Rat(10), Rat(1));
    CHECK(svg == slurp(golden_dir() + "/region_step1.svg"));
}
