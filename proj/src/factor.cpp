#include "qbeta/factor.hpp"

#include <algorithm>
#include <map>

namespace qbeta {

UPoly Factorization::expand() const {
    UPoly acc{content};
    for (const auto& [f, mult] : factors)
        for (int i = 0; i < mult; ++i) acc = acc * f;
    return acc;
}

std::string Factorization::str(std::string_view var) const {
    std::string out;
    if (!content.is_one() || factors.empty()) out = content.str();
    for (const auto& [f, mult] : factors) {
        if (!out.empty()) out += "*";
        out += "(" + f.str(var) + ")";
        if (mult > 1) out += "^" + std::to_string(mult);
    }
    return out;
}

namespace {

UPoly compose(const UPoly& f, const UPoly& g) {
    UPoly acc;
    for (int i = f.degree(); i >= 0; --i) acc = acc * g + UPoly{f.coeff(i)};
    return acc;
}

std::vector<mpz_class> divisors_signed(const mpz_class& n) {
    mpz_class m = ::abs(n);
    std::vector<mpz_class> out;
    for (mpz_class i = 1; i * i <= m; ++i) {
        if (m % i == 0) {
            out.push_back(i);
            if (i * i != m) out.push_back(m / i);
        }
    }
    size_t k = out.size();
    for (size_t j = 0; j < k; ++j) out.push_back(-out[j]);
    return out;
}

// Split a monic integral quartic y^4+A y^3+B y^2+C y+D (no rational roots,
// D != 0) into two monic integral quadratics, or report irreducibility.
bool split_quartic_integral(const mpz_class& A, const mpz_class& B, const mpz_class& C,
                            const mpz_class& D, mpz_class out[4]) {
    for (const mpz_class& v : divisors_signed(D)) {
        mpz_class z = D / v;
        // y^4+Ay^3+By^2+Cy+D = (y^2+uy+v)(y^2+wy+z):
        //   u+w = A, uw = B-v-z, uz+vw = C.
        mpz_class disc = A * A - 4 * (B - v - z);
        if (sgn(disc) < 0 || !mpz_perfect_square_p(disc.get_mpz_t())) continue;
        mpz_class rt;
        mpz_sqrt(rt.get_mpz_t(), disc.get_mpz_t());
        for (int pick = 0; pick < (rt == 0 ? 1 : 2); ++pick) {
            mpz_class twice_u = pick == 0 ? mpz_class(A + rt) : mpz_class(A - rt);
            if (twice_u % 2 != 0) continue;
            mpz_class uu = twice_u / 2, ww = A - uu;
            if (uu * z + v * ww == C) {
                out[0] = uu; out[1] = v; out[2] = ww; out[3] = z;
                return true;
            }
        }
    }
    return false;
}

// Split a monic rational quartic with no rational roots into two monic
// rational quadratics via the resolvent cubic of the depressed form: a split
// (y^2+uy+v)(y^2-uy+z) of y^4+Py^2+Qy+R forces u^2 to be a rational root of
// U^3 + 2P U^2 + (P^2-4R) U - Q^2.
bool split_quartic_resolvent(const UPoly& f, UPoly out[2]) {
    Rat shift = f.coeff(3) / Rat(4);
    UPoly yshift{-shift, Rat(1)};  // x = y - shift
    UPoly g = compose(f, yshift);  // depressed: y^4 + P y^2 + Q y + R
    UPoly back{shift, Rat(1)};     // y = x + shift
    Rat P = g.coeff(2), Q = g.coeff(1), R = g.coeff(0);

    if (Q.is_zero()) {
        Rat disc = P * P - Rat(4) * R;
        if (disc.is_square()) {
            Rat rt = disc.sqrt_exact();
            UPoly g1{(P + rt) / Rat(2), Rat(0), Rat(1)};
            UPoly g2{(P - rt) / Rat(2), Rat(0), Rat(1)};
            out[0] = compose(g1, back);
            out[1] = compose(g2, back);
            return true;
        }
    }
    UPoly resolvent{-Q * Q, P * P - Rat(4) * R, Rat(2) * P, Rat(1)};
    for (const Rat& u2 : rational_roots(resolvent)) {
        if (u2.sign() <= 0 || !u2.is_square()) continue;
        Rat u = u2.sqrt_exact();
        Rat v = (P + u2 - Q / u) / Rat(2);
        Rat z = (P + u2 + Q / u) / Rat(2);
        UPoly g1{v, u, Rat(1)}, g2{z, -u, Rat(1)};
        if (g1 * g2 == g) {
            out[0] = compose(g1, back);
            out[1] = compose(g2, back);
            return true;
        }
    }
    return false;
}

}  // namespace

Factorization factor_quartic(const UPoly& p) {
    if (p.is_zero() || p.degree() < 1 || p.degree() > 4)
        throw error("factor_quartic: degree must be 1..4");

    Factorization out;
    out.content = p.lc();
    UPoly rest = p.monic();

    // strip rational roots with multiplicity
    std::map<Rat, int> root_mult;
    for (const Rat& r : rational_roots(rest)) {
        UPoly lin{-r, Rat(1)};
        for (;;) {
            auto [q, rem] = upoly_divrem(rest, lin);
            if (!rem.is_zero()) break;
            rest = q;
            ++root_mult[r];
        }
    }
    for (const auto& [r, mult] : root_mult) out.factors.push_back({UPoly{-r, Rat(1)}, mult});

    if (rest.degree() == 0) {
        // nothing further
    } else if (rest.degree() <= 3) {
        // no rational roots left: quadratics and cubics are irreducible
        out.factors.push_back({rest, 1});
    } else {
        UPoly split[2];
        bool found = false;
        // integral quartics with a modest constant term take the divisor-pair
        // route; root-scaled rational inputs can blow the constant term up,
        // and those go through the resolvent cubic instead
        auto ints = rest.primitive_integer().second;
        if (ints[4] == 1 && ::abs(ints[0]) < mpz_class(1000000000000L)) {
            mpz_class sp[4];
            if (split_quartic_integral(ints[3], ints[2], ints[1], ints[0], sp)) {
                split[0] = UPoly{Rat(sp[1]), Rat(sp[0]), Rat(1)};
                split[1] = UPoly{Rat(sp[3]), Rat(sp[2]), Rat(1)};
                found = true;
            }
        } else {
            found = split_quartic_resolvent(rest, split);
        }
        if (found) {
            if (split[0] == split[1]) {
                out.factors.push_back({split[0], 2});
            } else {
                out.factors.push_back({split[0], 1});
                out.factors.push_back({split[1], 1});
            }
        } else {
            out.factors.push_back({rest, 1});
        }
    }

    // deterministic order: by degree, then coefficient sequence text
    std::stable_sort(out.factors.begin(), out.factors.end(),
                     [](const auto& l, const auto& r) {
                         if (l.first.degree() != r.first.degree())
                             return l.first.degree() < r.first.degree();
                         return l.first.str() < r.first.str();
                     });
    if (!(out.expand() == p)) throw error("factor_quartic: internal verification failed");
    return out;
}

bool is_irreducible(const UPoly& p) {
    Factorization f = factor_quartic(p);
    return f.factors.size() == 1 && f.factors[0].second == 1;
}

}  // namespace qbeta
