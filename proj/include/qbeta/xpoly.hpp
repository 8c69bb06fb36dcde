#pragma once

#include "qbeta/mpoly.hpp"

#include <vector>

namespace qbeta {

/// Polynomial in one distinguished variable with MPoly coefficients
/// (the coefficients must not involve the distinguished variable).
class XPoly {
public:
    XPoly() : var_(Var::X) {}
    explicit XPoly(Var v) : var_(v) {}
    XPoly(Var v, std::vector<MPoly> ascending) : var_(v), c_(std::move(ascending)) { trim(); }

    static XPoly from_mpoly(const MPoly& m, Var v) { return XPoly(v, m.collect(v)); }
    MPoly to_mpoly() const;

    Var var() const { return var_; }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const MPoly& lc() const;
    bool is_monic() const;
    MPoly coeff(int i) const { return (i >= 0 && i < (int)c_.size()) ? c_[i] : MPoly(); }
    const std::vector<MPoly>& coeffs() const { return c_; }

    XPoly operator-() const;
    friend XPoly operator+(const XPoly& l, const XPoly& r);
    friend XPoly operator-(const XPoly& l, const XPoly& r);
    friend XPoly operator*(const XPoly& l, const XPoly& r);
    XPoly operator*(const MPoly& s) const;
    friend bool operator==(const XPoly& l, const XPoly& r) { return l.var_ == r.var_ && l.c_ == r.c_; }

private:
    void trim();
    Var var_;
    std::vector<MPoly> c_;
};

/// Division by a divisor monic in the distinguished variable; no coefficient
/// fractions are introduced beyond those already present.
std::pair<XPoly, XPoly> xpoly_divrem_monic(const XPoly& dividend, const XPoly& divisor);

/// Determinant of a square MPoly matrix by fraction-free (Bareiss) elimination
/// with row pivoting; all divisions are exact.
MPoly bareiss_det(std::vector<std::vector<MPoly>> m);

/// Sylvester resultant eliminating v, with p's coefficients in the top rows:
/// resultant(x - u, x - v) = u - v.
MPoly resultant(const MPoly& p, const MPoly& q, Var v);

/// (-1)^{n(n-1)/2} * Res(p, dp/dv) / lc(p), computed exactly.
MPoly discriminant(const MPoly& p, Var v);

}  // namespace qbeta
