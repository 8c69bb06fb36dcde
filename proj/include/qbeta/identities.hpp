#pragma once

#include "qbeta/mpoly.hpp"
#include "qbeta/xpoly.hpp"

#include <string>
#include <vector>

namespace qbeta {

/// A re-derived symbolic identity compared against its expected form.
struct LemmaIdentity {
    std::string name;
    MPoly lhs;   // computed from scratch
    MPoly rhs;   // expected (golden) polynomial
    bool holds;  // lhs == rhs
    std::string details;
};

/// Irreducibility analysis of the a=2 family quartic x^4+2x^3+(2t^2+2)x^2+
/// (4t^2-4t+2)x+6t^2-4t+1: linear-factor and quadratic-split obstructions.
std::vector<LemmaIdentity> lemma1_identities();

/// Same for the a=2t family quartic x^4+2tx^3+(t^2+2t+2)x^2+(2t^2+2t)x+3t^2-2t+1.
std::vector<LemmaIdentity> lemma2_identities();

/// The substitution X = -2(s1-1)^2 maps the sextic curve
/// U^2 = -8(s1^2-2s1+2)(s1^4-4s1^3+2s1^2+4s1-4) onto U^2 = X^3+6X^2-20X+8.
bool phi_map_check();

struct CPointsReport {
    bool ok = false;
    std::string details;
};

/// The rational points s1 in {0,2} of the sextic curve: U^2 = 64 there, the
/// mapped points are torsion, and both force t = 0 in the split equations.
CPointsReport c_points_check();

}  // namespace qbeta
