#include "qbeta/identities.hpp"

#include "qbeta/upoly.hpp"

namespace qbeta {

namespace {

MPoly mvar(Var v) { return MPoly::variable(v); }
MPoly mp(const char* text) { return MPoly::parse(text); }

/// eq must be A*v + B with A a nonzero constant; returns -B/A.
MPoly solve_linear(const MPoly& eq, Var v) {
    auto cs = eq.collect(v);
    if (cs.size() != 2 || !cs[1].is_constant())
        throw error("solve_linear: equation is not A*v + B with constant A");
    return cs[0] * (Rat(-1) / cs[1].constant_value());
}

/// Coefficients (ascending in x) of target - (x + s1)(x^3 + s2 x^2 + s3 x + s4)
/// or target - (x^2 + s1 x + s2)(x^2 + s3 x + s4).
std::vector<MPoly> match_coeffs(const XPoly& target, bool linear_case) {
    XPoly lhs(Var::x);
    if (linear_case) {
        XPoly lin(Var::x, {mvar(Var::s1), MPoly(Rat(1))});
        XPoly cub(Var::x, {mvar(Var::s4), mvar(Var::s3), mvar(Var::s2), MPoly(Rat(1))});
        lhs = lin * cub;
    } else {
        XPoly q1(Var::x, {mvar(Var::s2), mvar(Var::s1), MPoly(Rat(1))});
        XPoly q2(Var::x, {mvar(Var::s4), mvar(Var::s3), MPoly(Rat(1))});
        lhs = q1 * q2;
    }
    XPoly diff = target - lhs;
    std::vector<MPoly> cs(4);
    for (int i = 0; i < 4; ++i) cs[i] = diff.coeff(i);
    return cs;
}

LemmaIdentity make(const std::string& name, MPoly lhs, MPoly rhs, std::string details = "") {
    bool holds = lhs == rhs;
    return {name, std::move(lhs), std::move(rhs), holds, std::move(details)};
}

XPoly f1_sym() {
    MPoly t = mvar(Var::t), t2 = t * t;
    return XPoly(Var::x, {Rat(6) * t2 - Rat(4) * t + MPoly(Rat(1)),
                          Rat(4) * t2 - Rat(4) * t + MPoly(Rat(2)), Rat(2) * t2 + MPoly(Rat(2)),
                          MPoly(Rat(2)), MPoly(Rat(1))});
}

XPoly f2_sym() {
    MPoly t = mvar(Var::t), t2 = t * t;
    return XPoly(Var::x, {Rat(3) * t2 - Rat(2) * t + MPoly(Rat(1)), Rat(2) * t2 + Rat(2) * t,
                          t2 + Rat(2) * t + MPoly(Rat(2)), Rat(2) * t, MPoly(Rat(1))});
}

}  // namespace

std::vector<LemmaIdentity> lemma1_identities() {
    std::vector<LemmaIdentity> out;

    {  // linear factor: eliminate s2, s3; then Res_{s4} of the two leftover equations
        auto cs = match_coeffs(f1_sym(), true);
        MPoly s2v = solve_linear(cs[3], Var::s2);
        for (auto& c : cs) c = c.substitute(Var::s2, s2v);
        MPoly s3v = solve_linear(cs[2], Var::s3);
        for (auto& c : cs) c = c.substitute(Var::s3, s3v);
        MPoly res = resultant(cs[0], cs[1], Var::s4);
        out.push_back(make("f1.linear: disc_t of Res_s4", discriminant(res, Var::t),
                           Rat(-8) * mp("s1^2 - 2*s1 + 1") *
                               mp("s1^4 - 2*s1^3 + 4*s1^2 - 2*s1 + 1"),
                           "expected (-8)(s1-1)^2(s1^4-2s1^3+4s1^2-2s1+1)"));
    }

    {  // quadratic split: eliminate s3, s4; Res_{s2}; factor structure and both discs
        auto cs = match_coeffs(f1_sym(), false);
        MPoly s3v = solve_linear(cs[3], Var::s3);
        for (auto& c : cs) c = c.substitute(Var::s3, s3v);
        MPoly s4v = solve_linear(cs[2], Var::s4);
        for (auto& c : cs) c = c.substitute(Var::s4, s4v);
        MPoly res = resultant(cs[0], cs[1], Var::s2);

        MPoly factor_a = mp("s1^2 + 2*t^2 - 2*s1 - 4*t + 2");
        MPoly factor_b =
            mp("s1^4 + 2*s1^2*t^2 - 4*s1^3 + 4*s1^2*t - 4*s1*t^2 + 6*s1^2 - 8*s1*t - 4*s1 + 8*t");
        out.push_back(make("f1.quadratic: Res_s2 factorization", res, -(factor_a * factor_b),
                           "expected (-1)(s1^2+2t^2-2s1-4t+2)(sextic)"));
        out.push_back(make("f1.quadratic: disc_t of the circle factor",
                           discriminant(factor_a, Var::t), mp("16*s1") - mp("8*s1^2"),
                           "expected -8s1^2+16s1"));
        out.push_back(make("f1.quadratic: disc_t of the sextic factor",
                           discriminant(factor_b, Var::t),
                           Rat(-8) * mp("s1^2 - 2*s1 + 2") *
                               mp("s1^4 - 4*s1^3 + 2*s1^2 + 4*s1 - 4"),
                           "expected (-8)(s1^2-2s1+2)(s1^4-4s1^3+2s1^2+4s1-4)"));
    }
    return out;
}

std::vector<LemmaIdentity> lemma2_identities() {
    std::vector<LemmaIdentity> out;

    {  // linear factor
        auto cs = match_coeffs(f2_sym(), true);
        MPoly s2v = solve_linear(cs[3], Var::s2);
        for (auto& c : cs) c = c.substitute(Var::s2, s2v);
        MPoly s3v = solve_linear(cs[2], Var::s3);
        for (auto& c : cs) c = c.substitute(Var::s3, s3v);
        MPoly res = resultant(cs[0], cs[1], Var::s4);
        out.push_back(make("f2.linear: disc_t of Res_s4", discriminant(res, Var::t),
                           Rat(-8) * mp("s1^4 - 2*s1^3 + 4*s1^2 - 2*s1 + 1"),
                           "expected (-8)(s1^4-2s1^3+4s1^2-2s1+1)"));
    }

    {  // quadratic split
        auto cs = match_coeffs(f2_sym(), false);
        MPoly s3v = solve_linear(cs[3], Var::s3);
        for (auto& c : cs) c = c.substitute(Var::s3, s3v);
        MPoly s4v = solve_linear(cs[2], Var::s4);
        for (auto& c : cs) c = c.substitute(Var::s4, s4v);
        MPoly eq1 = cs[0], eq2 = cs[1];

        MPoly lin = mp("t") - mp("s1");
        MPoly rest = mp("s1*t + 2*s2") - mp("s1^2 + 2*t + 2");
        out.push_back(make("f2.quadratic: x-coefficient equation factors", eq2,
                           -(lin * rest), "expected (-1)(-s1+t)(-s1^2+s1t+2s2-2t-2)"));

        MPoly eq1_diag = eq1.substitute(Var::s1, mvar(Var::t));
        out.push_back(make("f2.quadratic: s1=t branch disc_s2",
                           discriminant(eq1_diag, Var::s2), mp("16*t") - mp("8*t^2"),
                           "expected (-8)t(t-2)"));

        MPoly s2v = (mp("s1^2 + 2*t + 2") - mp("s1*t")) * Rat(1, 2);
        MPoly quart = eq1.substitute(Var::s2, s2v);
        MPoly quart_expected =
            (mp("4*s1^3*t + 2*s1*t^3 + 8*s1*t^2 + 8*s1*t + 4*t^2") -
             mp("s1^4 + 5*s1^2*t^2 + 4*s1^2*t + 4*t^3 + 4*s1^2 + 16*t")) * Rat(1, 4);
        out.push_back(make("f2.quadratic: other branch quartic in (s1,t)", quart,
                           quart_expected,
                           "expected (1/4)(-s1^4+4s1^3t-5s1^2t^2+2s1t^3-4s1^2t+8s1t^2-4t^3-"
                           "4s1^2+8s1t+4t^2-16t)"));
        MPoly core = mp("t^4 - 8*t^3 + 40*t^2 - 32*t + 16");
        out.push_back(make("f2.quadratic: disc_s1 of the branch quartic",
                           discriminant(quart, Var::s1),
                           Rat(-1, 32) * mvar(Var::t) * (mvar(Var::t) - MPoly(Rat(2))) * core *
                               core,
                           "expected (-1/32)t(t-2)(t^4-8t^3+40t^2-32t+16)^2"));
    }
    return out;
}

bool phi_map_check() {
    MPoly s1 = mvar(Var::s1);
    MPoly Xsub = Rat(-2) * (s1 - MPoly(Rat(1))) * (s1 - MPoly(Rat(1)));
    MPoly cubic = Xsub * Xsub * Xsub + Rat(6) * Xsub * Xsub - Rat(20) * Xsub + MPoly(Rat(8));
    MPoly rhs = Rat(-8) * mp("s1^2 - 2*s1 + 2") * mp("s1^4 - 4*s1^3 + 2*s1^2 + 4*s1 - 4");
    return cubic == rhs;
}

CPointsReport c_points_check() {
    CPointsReport rep;
    MPoly curve_rhs = Rat(-8) * mp("s1^2 - 2*s1 + 2") * mp("s1^4 - 4*s1^3 + 2*s1^2 + 4*s1 - 4");
    MPoly sextic =
        mp("s1^4 + 2*s1^2*t^2 - 4*s1^3 + 4*s1^2*t - 4*s1*t^2 + 6*s1^2 - 8*s1*t - 4*s1 + 8*t");
    std::string det;
    bool ok = true;
    for (long s1v : {0L, 2L}) {
        Rat val = curve_rhs.eval({{Var::s1, Rat(s1v)}});
        bool sq = val == Rat(64);
        ok = ok && sq;
        // mapped x-coordinate -2(s1-1)^2 = -2, so the images are (-2, ±8)
        Rat xmap = Rat(-2) * (Rat(s1v) - Rat(1)) * (Rat(s1v) - Rat(1));
        ok = ok && xmap == Rat(-2);
        // substituting s1 into the quadratic-split sextic must force t = 0
        MPoly slice = sextic.substitute(Var::s1, Rat(s1v));
        UPoly int_t = slice.to_upoly(Var::t);
        auto roots = rational_roots(int_t);
        ok = ok && int_t.degree() == 1 && roots.size() == 1 && roots[0].is_zero();
        det += "s1=" + std::to_string(s1v) + ": U^2 = " + val.str() + " (U = ±8), image (" +
               xmap.str() + ", ±8), split equation reduces to " + int_t.str("t") + " = 0; ";
    }
    det += "the curve values give U = ±8 at s1 in {0,2} (not ±4), matching the torsion "
           "y-coordinates under the map";
    rep.ok = ok;
    rep.details = det;
    return rep;
}

}  // namespace qbeta
