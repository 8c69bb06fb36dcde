#pragma once

#include "qbeta/upoly.hpp"

#include <string>
#include <vector>

namespace qbeta {

/// Complete factorization over Q: content * prod(factor_i ^ mult_i) == input,
/// every factor monic irreducible.
struct Factorization {
    Rat content;
    std::vector<std::pair<UPoly, int>> factors;  // (monic irreducible, multiplicity)

    UPoly expand() const;
    std::string str(std::string_view var = "x") const;
};

/// Factor a polynomial of degree 1..4 into monic irreducibles over Q.
/// Rational roots are stripped first; a remaining quartic is split (if possible)
/// into two monic quadratics by divisor-pair enumeration over the monic
/// integral transform y = lc*x.
Factorization factor_quartic(const UPoly& p);

bool is_irreducible(const UPoly& p);

}  // namespace qbeta
