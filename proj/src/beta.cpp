#include "qbeta/beta.hpp"

#include <algorithm>

namespace qbeta {

namespace {

XPoly n0_poly() {
    // 3X^4 - X^3 - X^2 - X
    return XPoly(Var::X, {MPoly(), MPoly(Rat(-1)), MPoly(Rat(-1)), MPoly(Rat(-1)), MPoly(Rat(3))});
}

XPoly d0_poly() {
    // X^4 - 1
    return XPoly(Var::X, {MPoly(Rat(-1)), MPoly(), MPoly(), MPoly(), MPoly(Rat(1))});
}

}  // namespace

XPoly build_numerator_W() {
    XPoly n0 = n0_poly(), d0 = d0_poly();
    XPoly w8 = n0 * n0 + (n0 * d0) * MPoly::variable(Var::p) + (d0 * d0) * MPoly::variable(Var::q);
    XPoly xm1(Var::X, {MPoly(Rat(-1)), MPoly(Rat(1))});
    auto [q1, r1] = xpoly_divrem_monic(w8, xm1);
    if (!r1.is_zero()) throw error("build_numerator_W: first division not exact");
    auto [q2, r2] = xpoly_divrem_monic(q1, xm1);
    if (!r2.is_zero()) throw error("build_numerator_W: second division not exact");
    if (q2.degree() != 6) throw error("build_numerator_W: degree is not 6");
    return q2;
}

ESystem build_e_polynomials() {
    XPoly f_sym(Var::X, {MPoly::variable(Var::d), MPoly::variable(Var::c),
                         MPoly::variable(Var::b), MPoly::variable(Var::a), MPoly(Rat(1))});
    XPoly rem = xpoly_divrem_monic(build_numerator_W(), f_sym).second;
    if (rem.degree() > 3) throw error("build_e_polynomials: remainder degree > 3");
    ESystem sys;
    for (int i = 0; i < 4; ++i) sys.e[i] = rem.coeff(i);
    return sys;
}

const ESystem& e_system() {
    static const ESystem sys = build_e_polynomials();
    return sys;
}

std::array<ESystem::Row, 4> ESystem::specialize(const QuarticCoeffs& k) const {
    std::array<Row, 4> rows;
    for (int i = 0; i < 4; ++i) {
        MPoly ei = e[i]
                       .substitute(Var::a, k.a)
                       .substitute(Var::b, k.b)
                       .substitute(Var::c, k.c)
                       .substitute(Var::d, k.d);
        std::map<Var, Rat> zero{{Var::p, Rat()}, {Var::q, Rat()}};
        rows[i].cp = ei.coeff_of(Var::p, 1).eval({});
        rows[i].cq = ei.coeff_of(Var::q, 1).eval({});
        rows[i].rhs = -ei.eval(zero);
        if (ei.degree(Var::p) > 1 || ei.degree(Var::q) > 1)
            throw error("ESystem: specialized row not affine in (p,q)");
    }
    return rows;
}

const char* beta_kind_name(BetaKind k) {
    switch (k) {
        case BetaKind::Quadratic: return "Quadratic";
        case BetaKind::RationalBeta: return "RationalBeta";
        case BetaKind::NotQuadratic: return "NotQuadratic";
        case BetaKind::Degenerate: return "Degenerate";
    }
    return "?";
}

std::optional<std::string> degenerate_factor(const UPoly& f) {
    if (f.eval(Rat(1)).is_zero()) return "x - 1";
    if (f.eval(Rat(-1)).is_zero()) return "x + 1";
    UPoly x2p1{Rat(1), Rat(), Rat(1)};
    if (upoly_divrem(f, x2p1).second.is_zero()) return "x^2 + 1";
    // x^2+1 divides f iff they share both roots; a shared single factor of
    // x^4-1 beyond the rational roots can only be x^2+1 itself.
    UPoly g = upoly_gcd(f, UPoly{Rat(-1), Rat(), Rat(), Rat(), Rat(1)});
    if (g.degree() > 0) return g.str();
    return std::nullopt;
}

namespace {

struct LinSolve {
    int rank_m = 0, rank_aug = 0;
    std::optional<std::pair<Rat, Rat>> solution;  // for rank_m == 2
    std::optional<std::pair<Rat, Rat>> anysol;    // for rank_m == 1, a representative
};

LinSolve solve_2unknowns(const std::array<ESystem::Row, 4>& rows) {
    LinSolve out;
    // Gaussian elimination on the 4x3 matrix [cp cq | rhs].
    std::vector<std::array<Rat, 3>> m;
    for (const auto& r : rows) m.push_back({r.cp, r.cq, r.rhs});
    size_t row = 0;
    std::vector<size_t> pivot_cols;
    for (size_t col = 0; col < 3 && row < m.size(); ++col) {
        size_t piv = row;
        while (piv < m.size() && m[piv][col].is_zero()) ++piv;
        if (piv == m.size()) continue;
        std::swap(m[piv], m[row]);
        for (size_t i = 0; i < m.size(); ++i) {
            if (i == row || m[i][col].is_zero()) continue;
            Rat f = m[i][col] / m[row][col];
            for (size_t j = col; j < 3; ++j) m[i][j] -= f * m[row][j];
        }
        pivot_cols.push_back(col);
        ++row;
    }
    for (size_t c : pivot_cols) {
        out.rank_aug++;
        if (c < 2) out.rank_m++;
    }
    if (out.rank_m == 2 && out.rank_aug == 2) {
        // reduced rows with pivots in columns 0 and 1
        Rat pv, qv;
        for (size_t i = 0; i < m.size(); ++i) {
            if (!m[i][0].is_zero() && m[i][1].is_zero()) pv = m[i][2] / m[i][0];
            if (m[i][0].is_zero() && !m[i][1].is_zero()) qv = m[i][2] / m[i][1];
        }
        out.solution = {pv, qv};
    } else if (out.rank_m == 1 && out.rank_aug == 1) {
        for (size_t i = 0; i < m.size(); ++i) {
            if (!m[i][0].is_zero()) {
                out.anysol = {m[i][2] / m[i][0], Rat()};
                break;
            }
            if (!m[i][1].is_zero()) {
                out.anysol = {Rat(), m[i][2] / m[i][1]};
                break;
            }
        }
    }
    return out;
}

}  // namespace

BetaVerdict decide_beta(const QuarticCoeffs& k, const DecideOptions& opts) {
    UPoly f = k.poly();
    if (auto shared = degenerate_factor(f))
        throw error("decide_beta: f shares the factor " + *shared +
                    " with x^4 - 1, so beta is undefined for some root of f");

    BetaVerdict v;
    v.f_irreducible = is_irreducible(f);
    LinSolve ls = solve_2unknowns(e_system().specialize(k));

    if (ls.rank_m == 2 && ls.rank_aug == 2) {
        auto [pv, qv] = *ls.solution;
        Rat disc = pv * pv - Rat(4) * qv;
        if (disc.is_square()) {
            v.kind = BetaKind::Degenerate;
            v.p = pv;
            v.q = qv;
            v.disc = disc;
            Rat rt = disc.sqrt_exact();
            Rat r1 = (-pv + rt) / Rat(2), r2 = (-pv - rt) / Rat(2);
            v.notes = "unique annihilating quadratic has a square discriminant; beta is rational"
                      " (roots " + r1.str() + ", " + r2.str() + ")";
        } else {
            v.kind = BetaKind::Quadratic;
            v.p = pv;
            v.q = qv;
            v.disc = disc;
            v.real = disc.sign() > 0;
        }
    } else if (ls.rank_m == 1 && ls.rank_aug == 1) {
        v.kind = BetaKind::RationalBeta;
        v.notes = "system has rank 1: beta satisfies a pencil of quadratics, hence is rational";
        if (ls.anysol) {
            v.p = ls.anysol->first;
            v.q = ls.anysol->second;
        }
    } else if (ls.rank_m == 0 && ls.rank_aug == 0) {
        v.kind = BetaKind::Degenerate;
        v.notes = "e-system vanishes identically";
    } else {
        v.kind = BetaKind::NotQuadratic;
    }

    if (opts.cross_validate && upoly_gcd(f, f.derivative()).degree() == 0) {
        UPoly r = min_poly_beta(k);
        auto sq = square_of_quadratic(r);
        bool oracle_quadratic = sq && !(sq->first * sq->first - Rat(4) * sq->second).is_square();
        bool we_quadratic = v.kind == BetaKind::Quadratic;
        if (oracle_quadratic != we_quadratic ||
            (we_quadratic && (sq->first != *v.p || sq->second != *v.q)))
            throw error("decide_beta: oracle disagreement for f = " + f.str());
    }
    return v;
}

UPoly min_poly_beta(const QuarticCoeffs& k) {
    UPoly f = k.poly();
    if (auto shared = degenerate_factor(f))
        throw error("min_poly_beta: Res(f, X^4-1) = 0 (shared factor " + *shared + ")");
    if (upoly_gcd(f, f.derivative()).degree() > 0)
        throw error("min_poly_beta: f is not squarefree");

    MPoly fX;
    {
        XPoly fx(Var::X, {MPoly(k.d), MPoly(k.c), MPoly(k.b), MPoly(k.a), MPoly(Rat(1))});
        fX = fx.to_mpoly();
    }
    MPoly n0 = n0_poly().to_mpoly();
    MPoly d0 = d0_poly().to_mpoly();
    MPoly g = n0 - MPoly::variable(Var::Y) * d0;
    MPoly res = resultant(fX, g, Var::X);
    UPoly r = res.to_upoly(Var::Y);
    if (r.degree() != 4) throw error("min_poly_beta: resultant degree != 4");
    return r.monic();
}

std::optional<std::pair<Rat, Rat>> square_of_quadratic(const UPoly& r) {
    if (r.degree() != 4 || !r.is_monic()) return std::nullopt;
    Rat alpha = r.coeff(3) / Rat(2);
    Rat beta = (r.coeff(2) - alpha * alpha) / Rat(2);
    if (r.coeff(1) == Rat(2) * alpha * beta && r.coeff(0) == beta * beta)
        return std::make_pair(alpha, beta);
    return std::nullopt;
}

std::vector<DTriple> recover_d(const Rat& a, const Rat& b, const Rat& c) {
    // rows of [cp(d) cq(d) rhs(d)], entries affine in d (e4 is d-free)
    std::array<std::array<UPoly, 3>, 4> rows;
    for (int i = 0; i < 4; ++i) {
        MPoly ei = e_system().e[i]
                       .substitute(Var::a, a)
                       .substitute(Var::b, b)
                       .substitute(Var::c, c);
        rows[i][0] = ei.coeff_of(Var::p, 1).to_upoly(Var::d);
        rows[i][1] = ei.coeff_of(Var::q, 1).to_upoly(Var::d);
        MPoly konst = ei.substitute(Var::p, Rat()).substitute(Var::q, Rat());
        rows[i][2] = (-konst).to_upoly(Var::d);
    }

    // 3x3 minors of the augmented matrix; solvability needs rank <= 2
    UPoly g;
    bool all_zero = true;
    for (int skip = 0; skip < 4; ++skip) {
        int idx[3], n = 0;
        for (int i = 0; i < 4; ++i)
            if (i != skip) idx[n++] = i;
        UPoly det;
        for (int j = 0; j < 3; ++j) {
            UPoly minor2 = rows[idx[1]][(j + 1) % 3] * rows[idx[2]][(j + 2) % 3] -
                           rows[idx[1]][(j + 2) % 3] * rows[idx[2]][(j + 1) % 3];
            det = det + rows[idx[0]][j] * minor2;
        }
        if (!det.is_zero()) all_zero = false;
        g = upoly_gcd(g, det);
    }
    if (all_zero)
        throw error("recover_d: every d gives a rank-deficient system at (" + a.str() + ", " +
                    b.str() + ", " + c.str() + ")");

    std::vector<DTriple> out;
    if (g.degree() == 0) return out;
    for (const Rat& droot : rational_roots(g)) {
        QuarticCoeffs k{a, b, c, droot};
        LinSolve ls = solve_2unknowns(e_system().specialize(k));
        if (ls.rank_m == 2 && ls.rank_aug == 2) {
            out.push_back({droot, ls.solution->first, ls.solution->second, true});
        } else if (ls.rank_m == ls.rank_aug && ls.rank_m <= 1 && ls.anysol) {
            out.push_back({droot, ls.anysol->first, ls.anysol->second, false});
        }
    }
    std::sort(out.begin(), out.end(), [](const DTriple& l, const DTriple& r) { return l.d < r.d; });
    return out;
}

}  // namespace qbeta
