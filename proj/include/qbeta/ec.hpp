#pragma once

#include "qbeta/upoly.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace qbeta {

/// y^2 = x^3 + a2 x^2 + a4 x + a6 with a squarefree right-hand side.
struct EllipticCurve {
    Rat a2, a4, a6;
    Rat disc_cubic;

    EllipticCurve(Rat a2_, Rat a4_, Rat a6_);
    UPoly rhs_poly() const { return UPoly{a6, a4, a2, Rat(1)}; }
    Rat rhs(const Rat& x) const { return rhs_poly().eval(x); }
    bool integral() const { return a2.is_integer() && a4.is_integer() && a6.is_integer(); }
};

/// Affine point or the point at infinity.
struct ECPoint {
    std::optional<std::pair<Rat, Rat>> xy;  // nullopt = infinity

    static ECPoint infinity() { return {}; }
    static ECPoint affine(Rat x, Rat y) { return {std::make_pair(std::move(x), std::move(y))}; }
    bool is_infinity() const { return !xy.has_value(); }
    std::string str() const;
    friend bool operator==(const ECPoint& l, const ECPoint& r) { return l.xy == r.xy; }
    friend bool operator<(const ECPoint& l, const ECPoint& r);
};

bool on_curve(const EllipticCurve& e, const ECPoint& pt);

/// Chord-tangent group law; inputs must lie on the curve.
ECPoint ec_add(const EllipticCurve& e, const ECPoint& P, const ECPoint& Q);
ECPoint ec_neg(const EllipticCurve& e, const ECPoint& P);
ECPoint ec_mul(const EllipticCurve& e, long n, const ECPoint& P);

/// Smallest n in 1..max_order with n*P = O, or 0 if none.
int point_order(const EllipticCurve& e, const ECPoint& P, int max_order = 12);

/// All rational torsion points of an integral curve: Nagell-Lutz candidates
/// (y = 0 or y^2 | disc_cubic) filtered by finite order (Mazur bound 12).
std::vector<ECPoint> torsion_points(const EllipticCurve& e);

/// Number of points over F_p (affine count plus infinity); pre: good reduction.
long count_points_mod_p(const EllipticCurve& e, long p);

/// Smallest `count` odd primes of good reduction (p does not divide 2*disc).
std::vector<long> good_primes(const EllipticCurve& e, int count);

/// The curve U^2 = X^3 + 6X^2 - 20X + 8 underlying the family analysis.
const EllipticCurve& lemma_curve();

}  // namespace qbeta
