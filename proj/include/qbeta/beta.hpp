#pragma once

#include "qbeta/factor.hpp"
#include "qbeta/mpoly.hpp"
#include "qbeta/xpoly.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace qbeta {

/// Coefficients of the monic quartic f(x) = x^4 + a x^3 + b x^2 + c x + d.
struct QuarticCoeffs {
    Rat a, b, c, d;
    UPoly poly() const { return UPoly{d, c, b, a, Rat(1)}; }
};

/// The four polynomial conditions e1..e4 in (d,p,q,a,b,c) expressing that
/// x^2 + p x + q annihilates beta = 4*alpha^4/(alpha^4-1) - alpha/(alpha-1)
/// whenever f annihilates alpha. Each e_i is affine in (p,q) jointly.
struct ESystem {
    std::array<MPoly, 4> e;

    struct Row {
        Rat cp, cq, rhs;  // cp*p + cq*q = rhs
    };
    /// Numeric specialization at (a,b,c,d): the linear system M*(p,q)^T = v.
    std::array<Row, 4> specialize(const QuarticCoeffs& k) const;
};

/// W_core(X) = [N0^2 + p*N0*D0 + q*D0^2] / (X-1)^2 with N0 = 3X^4-X^3-X^2-X
/// and D0 = X^4-1; the division is exact and deg_X = 6.
XPoly build_numerator_W();

/// Remainder of W_core modulo the symbolic monic quartic; coefficients in
/// ascending X-degree are (e1, e2, e3, e4).
ESystem build_e_polynomials();

/// Shared immutable instance (built once).
const ESystem& e_system();

enum class BetaKind { Quadratic, RationalBeta, NotQuadratic, Degenerate };
const char* beta_kind_name(BetaKind k);

struct BetaVerdict {
    BetaKind kind;
    std::optional<Rat> p, q, disc;
    std::optional<bool> real;
    bool f_irreducible = false;
    std::string notes;
};

struct DecideOptions {
    bool cross_validate = false;  // check against min_poly_beta (squarefree f only)
};

/// Decide whether beta is a quadratic algebraic number for the quartic f.
/// Pre: gcd(f, X^4-1) = 1; violations raise an error naming the shared factor.
BetaVerdict decide_beta(const QuarticCoeffs& k, const DecideOptions& opts = {});

/// Independent oracle: R(Y) = Res_X(f(X), N0(X) - Y*D0(X)) normalized monic.
/// R = prod_i (Y - beta(alpha_i)); beta is quadratic iff R is the square of an
/// irreducible quadratic. Pre: as decide_beta, plus f squarefree.
UPoly min_poly_beta(const QuarticCoeffs& k);

/// If R == (Y^2 + p Y + q)^2 returns (p,q).
std::optional<std::pair<Rat, Rat>> square_of_quadratic(const UPoly& r);

struct DTriple {
    Rat d, p, q;
    bool unique = true;  // false when the (p,q) system was underdetermined
};

/// All rational d for which the e-system specialized at (a,b,c) is solvable,
/// with the solved (p,q); d ascending.
std::vector<DTriple> recover_d(const Rat& a, const Rat& b, const Rat& c);

/// Shared-factor test against X^4-1; returns the offending factor's text.
std::optional<std::string> degenerate_factor(const UPoly& f);

}  // namespace qbeta
