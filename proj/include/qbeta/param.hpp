#pragma once

#include "qbeta/mpoly.hpp"

#include <array>
#include <string>
#include <vector>

namespace qbeta {

/// The ten coefficient tables of the surface parametrization over Q(a):
/// each of b,c,d,p,q is sum_i num_i(t)*a^i / sum_i den_i(t)*a^i.
struct ParamTables {
    // order: b.num, b.den, c.num, c.den, d.num, d.den, p.num, p.den, q.num, q.den
    std::array<std::vector<UPoly>, 10> rows;
    uint64_t checksum = 0;
};

/// Parsed from the embedded data file; the stored fnv1a64 checksum is verified.
const ParamTables& param_tables();

/// Parse table text (same format as data/remark_tables.txt), verifying its
/// embedded checksum; throws on corruption or malformed sections.
ParamTables parse_param_tables(std::string_view text);

uint64_t fnv1a64(std::string_view data);

struct ParamEval {
    Rat a, t;
    Rat b, c, d, p, q;
};

/// Exact evaluation of the five rational functions; a vanishing denominator
/// raises an error naming which of b,c,d,p,q is undefined.
ParamEval param_eval(const Rat& a, const Rat& t);

/// P1(a,t) = (9a^3-116a^2+524a-800)t^2 - 24(a-5)(a-4)^2 t + 18(a-4)^3.
const MPoly& P1_poly();
/// P1 with its t-coefficients reversed, i.e. t^2 * P1(a, 1/t).
const MPoly& P1_reversed_poly();

struct DiscSignReport {
    Rat disc;              // p^2 - 4q at (a,t)
    Rat p1, p1_reversed;   // P1(a,t) and t^2*P1(a,1/t)
    int sign_disc, sign_m_a_p1, sign_m_a_p1_reversed;
    bool agree;            // sign_disc in {0, sign(-a*P1(a,t))}
    bool agree_reversed;   // sign_disc in {0, sign(-a*t^2*P1(a,1/t))}
};

/// Compares sign(p^2-4q) with sign(-a*P1) in both parameter conventions.
/// Pre: param_eval defined at (a,t) and a != 0.
DiscSignReport disc_sign_check(const Rat& a, const Rat& t);

}  // namespace qbeta
