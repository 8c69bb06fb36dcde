#include "qbeta/families.hpp"

#include <algorithm>
#include <set>

namespace qbeta {

const char* family_id_name(FamilyId id) {
    switch (id) {
        case FamilyId::F1: return "f1";
        case FamilyId::F2: return "f2";
        case FamilyId::Circle: return "circle";
        case FamilyId::CBranch: return "cbranch";
    }
    return "?";
}

namespace {

// Every record with an annihilating pair must satisfy all four e-conditions.
void check_record(const FamilyRecord& rec) {
    if (!rec.p) return;
    auto rows = e_system().specialize(rec.coeffs);
    for (const auto& row : rows)
        if (!(row.cp * *rec.p + row.cq * *rec.q - row.rhs).is_zero())
            throw error("family record fails the e-system (internal)");
}

FamilyRecord finish(FamilyRecord rec) {
    if (rec.p) rec.disc = *rec.p * *rec.p - Rat(4) * *rec.q;
    rec.irreducible = is_irreducible(rec.coeffs.poly());
    check_record(rec);
    return rec;
}

}  // namespace

UPoly f1_poly(const Rat& t) {
    Rat t2 = t * t;
    return UPoly{Rat(6) * t2 - Rat(4) * t + Rat(1), Rat(4) * t2 - Rat(4) * t + Rat(2),
                 Rat(2) * t2 + Rat(2), Rat(2), Rat(1)};
}

UPoly f2_poly(const Rat& t) {
    Rat t2 = t * t;
    return UPoly{Rat(3) * t2 - Rat(2) * t + Rat(1), Rat(2) * t2 + Rat(2) * t,
                 t2 + Rat(2) * t + Rat(2), Rat(2) * t, Rat(1)};
}

FamilyRecord family1(const Rat& t) {
    if (t == Rat(0))
        throw error("family f1: t=0 is a pole of (p,q); the quartic factors as "
                    "(x + 1)^2*(x^2 + 1)");
    if (t == Rat(1))
        throw error("family f1: t=1 is a pole of (p,q); the quartic factors as "
                    "(x^2 + 1)*(x^2 + 2*x + 3)");
    Rat t2 = t * t, t3 = t2 * t;
    FamilyRecord rec;
    rec.id = FamilyId::F1;
    rec.t = t;
    rec.coeffs = {Rat(2), Rat(2) * t2 + Rat(2), Rat(4) * t2 - Rat(4) * t + Rat(2),
                  Rat(6) * t2 - Rat(4) * t + Rat(1)};
    rec.p = -(Rat(6) * t2 - Rat(6) * t + Rat(1)) / (t2 - t);
    rec.q = (Rat(18) * t3 - Rat(18) * t2 + Rat(7) * t - Rat(1)) / (Rat(2) * (t3 - t2));
    return finish(std::move(rec));
}

FamilyRecord family2(const Rat& t) {
    if (t == Rat(0))
        throw error("family f2: t=0 is a pole of q; the quartic factors as (x^2 + 1)^2");
    Rat t2 = t * t, t3 = t2 * t;
    FamilyRecord rec;
    rec.id = FamilyId::F2;
    rec.t = t;
    rec.coeffs = {Rat(2) * t, t2 + Rat(2) * t + Rat(2), Rat(2) * t2 + Rat(2) * t,
                  Rat(3) * t2 - Rat(2) * t + Rat(1)};
    rec.p = Rat(-2) * (Rat(3) * t2 - Rat(5) * t + Rat(4)) / (t2 - Rat(2) * t + Rat(2));
    rec.q = (Rat(9) * t3 - Rat(12) * t2 + Rat(7) * t - Rat(2)) /
            (t3 - Rat(2) * t2 + Rat(2) * t);
    return finish(std::move(rec));
}

FamilyRecord circle_family(const Rat& t) {
    Rat t2 = t * t, t3 = t2 * t;
    Rat den1 = Rat(2) * t2 + Rat(1);   // never zero over Q
    Rat den2 = Rat(4) * t2 + Rat(1);
    FamilyRecord rec;
    rec.id = FamilyId::Circle;
    rec.t = t;
    rec.coeffs = {Rat(2), (Rat(8) * t2 + Rat(5)) / den1,
                  Rat(4) * (t2 - t + Rat(1)) / den1,
                  Rat(2) * (Rat(3) * t2 - Rat(2) * t + Rat(1)) / den1};
    rec.p = Rat(4) * (Rat(2) * t3 - Rat(5) * t2 + t - Rat(1)) / den2;
    rec.q = Rat(-2) * (Rat(4) * t - Rat(1)) * (Rat(3) * t2 - Rat(2) * t + Rat(1)) / den2;
    // (c - 2b + 6)^2 + 2(2b - 9)^2 = 2
    Rat lhs = (rec.coeffs.c - Rat(2) * rec.coeffs.b + Rat(6));
    Rat rhs = (Rat(2) * rec.coeffs.b - Rat(9));
    if (lhs * lhs + Rat(2) * rhs * rhs != Rat(2))
        throw error("circle_family: point not on the circle (internal)");
    return finish(std::move(rec));
}

std::pair<UPoly, UPoly> remark2_split(const Rat& s) {
    if (s.is_zero()) throw error("remark2_split: s = 0 is excluded");
    Rat s2 = s * s;
    Rat den = s2 + Rat(2);
    UPoly g1{(s2 + Rat(4) * s + Rat(6)) / den, Rat(4) / den, Rat(1)};
    UPoly g2{(Rat(3) * s2 - Rat(4) * s + Rat(2)) / den, Rat(2) * s2 / den, Rat(1)};
    // product must match the circle quartic at t = (2-s^2)/(4s)
    Rat t = (Rat(2) - s2) / (Rat(4) * s);
    FamilyRecord rec = circle_family(t);
    if (!(g1 * g2 == rec.coeffs.poly()))
        throw error("remark2_split: factor product mismatch (internal)");
    return {g1, g2};
}

bool remark2_identity_holds() {
    // Clear denominators: (s^2+2)^2 * f(x; b(s),c(s),d(s)) == ((s^2+2)g1)((s^2+2)g2)
    MPoly s = MPoly::variable(Var::s), x = MPoly::variable(Var::x);
    MPoly s2 = s * s;
    MPoly den = s2 + MPoly(Rat(2));
    MPoly den_sq = den * den;
    // b,c,d with t = (2-s^2)/(4s) have exact denominator (s^2+2)^2:
    MPoly b_num = MPoly(Rat(4)) * (s2 * s2 + MPoly(Rat(6)) * s2 + MPoly(Rat(4)));
    MPoly c_num = MPoly(Rat(2)) *
                  (s2 * s2 + MPoly(Rat(4)) * s * s2 + MPoly(Rat(12)) * s2 - MPoly(Rat(8)) * s +
                   MPoly(Rat(4)));
    MPoly d_num = MPoly(Rat(3)) * s2 * s2 + MPoly(Rat(8)) * s * s2 + MPoly(Rat(4)) * s2 -
                  MPoly(Rat(16)) * s + MPoly(Rat(12));
    MPoly x2 = x * x, x3 = x2 * x, x4 = x2 * x2;
    MPoly lhs = den_sq * (x4 + MPoly(Rat(2)) * x3) + b_num * x2 + c_num * x + d_num;
    MPoly g1 = den * x2 + MPoly(Rat(4)) * x + (s2 + MPoly(Rat(4)) * s + MPoly(Rat(6)));
    MPoly g2 = den * x2 + MPoly(Rat(2)) * s2 * x +
               (MPoly(Rat(3)) * s2 - MPoly(Rat(4)) * s + MPoly(Rat(2)));
    return lhs == g1 * g2;
}

FamilyRecord c_branch(const Rat& a, const Rat& u) {
    FamilyRecord rec;
    rec.id = FamilyId::CBranch;
    rec.t = a;
    rec.u = u;
    Rat b = (Rat(9) * a * a + Rat(36) * a - Rat(16) - Rat(8) * u - u * u) / Rat(36);
    Rat d = (Rat(9) * a * a - Rat(12) * a + Rat(4) - u * u) / Rat(12);
    rec.coeffs = {a, b, Rat(2) * b - a, d};
    // verify the factorization at this point
    UPoly lin{(u + Rat(3) * a - Rat(2)) / Rat(6), Rat(1)};
    UPoly cub{(Rat(3) * a - u - Rat(2)) / Rat(2), (Rat(3) * a - u - Rat(1)) / Rat(3),
              (Rat(3) * a - u + Rat(2)) / Rat(6), Rat(1)};
    if (!(lin * cub == rec.coeffs.poly()))
        throw error("c_branch: factorization mismatch (internal)");
    Rat resid = (Rat(9) * b - Rat(12) * a - Rat(3) * d + Rat(5));
    resid = resid * resid - Rat(4) * (Rat(3) * a - Rat(2)) * (Rat(3) * a - Rat(2)) + Rat(48) * d;
    if (!resid.is_zero()) throw error("c_branch: curve residual nonzero (internal)");
    rec.irreducible = false;
    rec.notes = "reducible: (x + " + ((u + Rat(3) * a - Rat(2)) / Rat(6)).str() +
                ") divides the quartic";
    return rec;
}

bool c_branch_identities_hold(std::string* details) {
    MPoly a = MPoly::variable(Var::a), u = MPoly::variable(Var::u), x = MPoly::variable(Var::x);
    Rat r36(1, 36), r12(1, 12);
    MPoly b = (MPoly(Rat(9)) * a * a + MPoly(Rat(36)) * a - MPoly(Rat(16)) -
               MPoly(Rat(8)) * u - u * u) * r36;
    MPoly d = (MPoly(Rat(9)) * a * a - MPoly(Rat(12)) * a + MPoly(Rat(4)) - u * u) * r12;
    MPoly c = MPoly(Rat(2)) * b - a;
    MPoly x2 = x * x;
    MPoly f = x2 * x2 + a * x2 * x + b * x2 + c * x + d;
    MPoly lin = MPoly(Rat(6)) * x + u + MPoly(Rat(3)) * a - MPoly(Rat(2));
    MPoly cub = MPoly(Rat(6)) * x2 * x + (MPoly(Rat(3)) * a - u + MPoly(Rat(2))) * x2 +
                MPoly(Rat(2)) * (MPoly(Rat(3)) * a - u - MPoly(Rat(1))) * x +
                MPoly(Rat(3)) * (MPoly(Rat(3)) * a - u - MPoly(Rat(2)));
    bool fact_ok = MPoly(Rat(36)) * f == lin * cub;
    MPoly resid = (MPoly(Rat(9)) * b - MPoly(Rat(12)) * a - MPoly(Rat(3)) * d + MPoly(Rat(5)));
    resid = resid * resid -
            MPoly(Rat(4)) * (MPoly(Rat(3)) * a - MPoly(Rat(2))) * (MPoly(Rat(3)) * a - MPoly(Rat(2))) +
            MPoly(Rat(48)) * d;
    bool resid_ok = resid.is_zero();
    if (details) {
        *details = std::string("factorization identity: ") + (fact_ok ? "holds" : "fails") +
                   "; curve residual: " + (resid_ok ? "0" : resid.str()) +
                   "; note: d = (9*a^2 - 12*a + 4 - u^2)/12 is forced by both identities, the"
                   " mirrored form (9*a^2 + 36*a - 16 + 8*u - u^2)/36 satisfies neither";
    }
    return fact_ok && resid_ok;
}

std::vector<FamilyRecord> s_integer_examples(const std::vector<long>& primes, int n) {
    if (n < 1) throw error("s_integer_examples: n must be >= 1");
    std::vector<FamilyRecord> out;
    if (primes.empty()) {
        out.push_back(family2(Rat(1)));  // the only integer in (0,2)
        return out;
    }
    // enumerate denominators that are products of the given primes, ascending
    std::set<long> dens{1};
    auto grow = [&]() {
        std::set<long> next = dens;
        for (long d0 : dens)
            for (long pr : primes)
                if (d0 <= 100000 / pr) next.insert(d0 * pr);
        dens.swap(next);
    };
    for (int i = 0; i < 18; ++i) grow();
    for (long den : dens) {
        if (den == 1) continue;  // fractional parameters first
        for (long num = 1; num < 2 * den; ++num) {
            mpz_class g;
            mpz_gcd_ui(g.get_mpz_t(), mpz_class(num).get_mpz_t(), (unsigned long)den);
            if (g != 1) continue;
            out.push_back(family2(Rat(num, den)));
            if ((int)out.size() == n) return out;
        }
    }
    throw error("s_integer_examples: enumeration exhausted");
}

}  // namespace qbeta
