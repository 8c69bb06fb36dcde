#pragma once

#include "qbeta/beta.hpp"

#include <iosfwd>
#include <vector>

namespace qbeta {

/// The quartic surface polynomial F(a,b,c) (34 terms, constant term -256).
const MPoly& surface_F();

Rat F_eval(const Rat& a, const Rat& b, const Rat& c);

/// F(2,b,c) == (12b^2-4bc-96b+c^2+12c+196)(4b^2-4bc-16b+c^2+4c+20), exactly.
bool F_factor_a2_check();

/// Integral surface point with the d-recovery output attached.
struct SurfaceSolution {
    long a, b;
    mpz_class c;
    std::vector<DTriple> d_candidates;  // family-2 d first when family2_match
    bool family2_match = false;         // a even and (b,c,d) = family2(a/2)
};

struct SearchOptions {
    int threads = 0;        // 0: hardware concurrency
    bool exact = false;     // force the Sturm path for every (a,b)
    bool recover = true;    // attach recover_d output
};

/// All integral solutions of F(a,b,c) = 0 with a in [a_min,a_max] and
/// b in [b_min,b_max]; c is unbounded. Results sorted by (a,b,c),
/// independent of thread count and of the root-isolation path.
std::vector<SurfaceSolution> search_box(long a_min, long a_max, long b_min, long b_max,
                                        const SearchOptions& opts = {});

/// Monic quartic in c over the integers at fixed (a,b): F(a,b,c) as UPoly.
UPoly F_c_quartic(long a, long b);

/// CSV schema: a,b,c,d,p,q,family2_match with one row per d candidate and
/// "-" entries when recover_d is empty. integral_only keeps integer d only.
void write_search_csv(std::ostream& os, const std::vector<SurfaceSolution>& sols,
                      bool integral_only = false);

}  // namespace qbeta
