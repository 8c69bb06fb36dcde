#pragma once

#include "qbeta/beta.hpp"

#include <optional>
#include <string>
#include <vector>

namespace qbeta {

enum class FamilyId { F1, F2, Circle, CBranch };
const char* family_id_name(FamilyId id);

/// One member of a parametric solution family. For CBranch (which produces
/// reducible quartics) there is no annihilating pair, so p, q and disc are absent.
struct FamilyRecord {
    FamilyId id;
    Rat t;                      // the parameter (a for CBranch)
    std::optional<Rat> u;       // second parameter of CBranch
    QuarticCoeffs coeffs;
    std::optional<Rat> p, q, disc;
    bool irreducible = false;
    std::string notes;
};

/// a=2 family: b = 2t^2+2, c = 4t^2-4t+2, d = 6t^2-4t+1. Poles at t in {0,1}.
FamilyRecord family1(const Rat& t);

/// a = 2t family: b = t^2+2t+2, c = 2t^2+2t, d = 3t^2-2t+1. Pole at t = 0.
FamilyRecord family2(const Rat& t);

/// a=2 circle branch: (c-2b+6)^2 + 2(2b-9)^2 = 2; defined for every rational t.
FamilyRecord circle_family(const Rat& t);

/// The two monic quadratic factors of the circle quartic at t = (2-s^2)/(4s).
std::pair<UPoly, UPoly> remark2_split(const Rat& s);
/// The splitting identity as an exact identity in s (cleared denominators).
bool remark2_identity_holds();

/// c = 2b-a branch with b = (9a^2+36a-16-8u-u^2)/36 and d = (9a^2-12a+4-u^2)/12;
/// the quartic factors as (6x+u+3a-2)/6 times a cubic.
FamilyRecord c_branch(const Rat& a, const Rat& u);
/// Factorization identity and curve-equation residual, checked symbolically.
bool c_branch_identities_hold(std::string* details = nullptr);

/// n distinct family2 records with t an S-integer in (0,2) (denominators
/// supported on the given primes); every record has disc > 0.
std::vector<FamilyRecord> s_integer_examples(const std::vector<long>& primes, int n);

/// Quartic coefficient specializations alone (defined at the p,q poles too).
UPoly f1_poly(const Rat& t);
UPoly f2_poly(const Rat& t);

}  // namespace qbeta
