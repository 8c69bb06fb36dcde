#include "qbeta/ec.hpp"

#include <algorithm>

namespace qbeta {

EllipticCurve::EllipticCurve(Rat a2_, Rat a4_, Rat a6_)
    : a2(std::move(a2_)), a4(std::move(a4_)), a6(std::move(a6_)) {
    disc_cubic = discriminant(rhs_poly());
    if (disc_cubic.is_zero()) throw error("EllipticCurve: singular (repeated root)");
}

std::string ECPoint::str() const {
    if (is_infinity()) return "O";
    return "(" + xy->first.str() + ", " + xy->second.str() + ")";
}

bool operator<(const ECPoint& l, const ECPoint& r) {
    if (l.is_infinity() != r.is_infinity()) return l.is_infinity();
    if (l.is_infinity()) return false;
    if (l.xy->first != r.xy->first) return l.xy->first < r.xy->first;
    return l.xy->second < r.xy->second;
}

bool on_curve(const EllipticCurve& e, const ECPoint& pt) {
    if (pt.is_infinity()) return true;
    const auto& [x, y] = *pt.xy;
    return y * y == e.rhs(x);
}

ECPoint ec_neg(const EllipticCurve& e, const ECPoint& P) {
    (void)e;
    if (P.is_infinity()) return P;
    return ECPoint::affine(P.xy->first, -P.xy->second);
}

ECPoint ec_add(const EllipticCurve& e, const ECPoint& P, const ECPoint& Q) {
    if (!on_curve(e, P) || !on_curve(e, Q)) throw error("ec_add: point not on the curve");
    if (P.is_infinity()) return Q;
    if (Q.is_infinity()) return P;
    const auto& [x1, y1] = *P.xy;
    const auto& [x2, y2] = *Q.xy;
    Rat lambda;
    if (x1 == x2) {
        if (y1 != y2 || y1.is_zero()) return ECPoint::infinity();
        lambda = (Rat(3) * x1 * x1 + Rat(2) * e.a2 * x1 + e.a4) / (Rat(2) * y1);
    } else {
        lambda = (y2 - y1) / (x2 - x1);
    }
    Rat x3 = lambda * lambda - e.a2 - x1 - x2;
    Rat y3 = lambda * (x1 - x3) - y1;
    return ECPoint::affine(x3, y3);
}

ECPoint ec_mul(const EllipticCurve& e, long n, const ECPoint& P) {
    if (n < 0) return ec_mul(e, -n, ec_neg(e, P));
    ECPoint acc = ECPoint::infinity();
    for (long i = 0; i < n; ++i) acc = ec_add(e, acc, P);  // n is tiny here
    return acc;
}

int point_order(const EllipticCurve& e, const ECPoint& P, int max_order) {
    ECPoint acc = ECPoint::infinity();
    for (int n = 1; n <= max_order; ++n) {
        acc = ec_add(e, acc, P);
        if (acc.is_infinity()) return n;
    }
    return 0;
}

std::vector<ECPoint> torsion_points(const EllipticCurve& e) {
    if (!e.integral()) throw error("torsion_points: non-integral model");
    std::vector<ECPoint> out{ECPoint::infinity()};
    std::vector<mpz_class> ys{0};
    mpz_class disc = e.disc_cubic.num();  // integral model: denominator is 1
    mpz_class ad = ::abs(disc);
    for (mpz_class y = 1; y * y <= ad; ++y)
        if (ad % (y * y) == 0) ys.push_back(y);
    for (const auto& y : ys) {
        Rat y2 = Rat(y) * Rat(y);
        // integer roots of rhs(x) - y^2
        UPoly shifted = e.rhs_poly() - UPoly{y2};
        for (const auto& x : integer_roots(shifted)) {
            for (int sgn_y : {1, -1}) {
                if (y == 0 && sgn_y < 0) continue;
                ECPoint pt = ECPoint::affine(Rat(x), sgn_y > 0 ? Rat(y) : Rat(mpz_class(-y)));
                if (!on_curve(e, pt)) continue;
                if (point_order(e, pt) == 0) continue;  // infinite order: discard
                out.push_back(pt);
            }
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    // cross-check: the group order divides #E(F_p) at good primes
    for (long p : good_primes(e, 3))
        if (count_points_mod_p(e, p) % (long)out.size() != 0)
            throw error("torsion_points: order does not divide #E(F_" + std::to_string(p) +
                        ")");
    return out;
}

long count_points_mod_p(const EllipticCurve& e, long p) {
    if (!e.integral()) throw error("count_points_mod_p: non-integral model");
    auto modp = [&](const Rat& r) {
        mpz_class m = r.num() % p;
        if (m < 0) m += p;
        return m.get_si();
    };
    long a2 = modp(e.a2), a4 = modp(e.a4), a6 = modp(e.a6);
    std::vector<char> is_sq(p, 0);
    for (long y = 0; y < p; ++y) is_sq[(y * y) % p] = 1;
    long count = 1;  // infinity
    for (long x = 0; x < p; ++x) {
        long v = (((x + a2) % p * x + a4) % p * x + a6) % p;
        if (v == 0)
            count += 1;
        else if (is_sq[v])
            count += 2;
    }
    return count;
}

std::vector<long> good_primes(const EllipticCurve& e, int count) {
    std::vector<long> out;
    mpz_class bad = 2 * ::abs(e.disc_cubic.num());
    for (long p = 3; (int)out.size() < count; p += 2) {
        bool prime = p > 1;
        for (long q = 3; q * q <= p; q += 2)
            if (p % q == 0) { prime = false; break; }
        if (!prime) continue;
        if (bad % p == 0) continue;
        out.push_back(p);
    }
    return out;
}

const EllipticCurve& lemma_curve() {
    static const EllipticCurve e(Rat(6), Rat(-20), Rat(8));
    return e;
}

}  // namespace qbeta
