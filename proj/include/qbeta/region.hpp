#pragma once

#include "qbeta/param.hpp"

#include <iosfwd>
#include <vector>

namespace qbeta {

struct RegionCell {
    Rat a, t;
    int sign;  // exact sign of -a * P1(a,t)
};

/// Exact sign of -a*P1 on the lattice a in [a0,a1], t in [t0,t1] with the given
/// step; rows ordered by a then t.
std::vector<RegionCell> region_grid(const Rat& a0, const Rat& a1, const Rat& t0, const Rat& t1,
                                    const Rat& step);

/// CSV rows "a,t,sign".
void write_region_csv(std::ostream& os, const std::vector<RegionCell>& cells);

/// Deterministic SVG: one fixed-size rectangle per positive lattice cell.
std::string region_svg(const std::vector<RegionCell>& cells, const Rat& a0, const Rat& a1,
                       const Rat& t0, const Rat& t1, const Rat& step);

}  // namespace qbeta
