#include "qbeta/xpoly.hpp"

namespace qbeta {

void XPoly::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    for (const auto& co : c_)
        if (co.depends_on(var_))
            throw error("XPoly: coefficient depends on the distinguished variable");
}

MPoly XPoly::to_mpoly() const {
    MPoly out;
    MPoly xv = MPoly::variable(var_);
    for (int i = degree(); i >= 0; --i) out = out * xv + c_[i];
    return out;
}

const MPoly& XPoly::lc() const {
    if (is_zero()) throw error("XPoly: leading coefficient of zero polynomial");
    return c_.back();
}

bool XPoly::is_monic() const {
    return !is_zero() && lc().is_constant() && lc().constant_value().is_one();
}

XPoly XPoly::operator-() const {
    XPoly r(*this);
    for (auto& co : r.c_) co = -co;
    return r;
}

XPoly operator+(const XPoly& l, const XPoly& r) {
    if (l.var_ != r.var_) throw error("XPoly: mixed distinguished variables");
    std::vector<MPoly> c(std::max(l.c_.size(), r.c_.size()));
    for (size_t i = 0; i < c.size(); ++i) c[i] = l.coeff((int)i) + r.coeff((int)i);
    return XPoly(l.var_, std::move(c));
}

XPoly operator-(const XPoly& l, const XPoly& r) { return l + (-r); }

XPoly operator*(const XPoly& l, const XPoly& r) {
    if (l.var_ != r.var_) throw error("XPoly: mixed distinguished variables");
    if (l.is_zero() || r.is_zero()) return XPoly(l.var_);
    std::vector<MPoly> c(l.c_.size() + r.c_.size() - 1);
    for (size_t i = 0; i < l.c_.size(); ++i)
        for (size_t j = 0; j < r.c_.size(); ++j) c[i + j] = c[i + j] + l.c_[i] * r.c_[j];
    return XPoly(l.var_, std::move(c));
}

XPoly XPoly::operator*(const MPoly& s) const {
    std::vector<MPoly> c(c_.size());
    for (size_t i = 0; i < c_.size(); ++i) c[i] = c_[i] * s;
    return XPoly(var_, std::move(c));
}

std::pair<XPoly, XPoly> xpoly_divrem_monic(const XPoly& dividend, const XPoly& divisor) {
    if (dividend.var() != divisor.var()) throw error("xpoly_divrem_monic: mixed variables");
    if (!divisor.is_monic())
        throw error("xpoly_divrem_monic: divisor is not monic in " +
                    std::string(var_name(divisor.var())));
    Var v = dividend.var();
    int dd = divisor.degree();
    XPoly rem = dividend;
    std::vector<MPoly> quo(std::max(0, dividend.degree() - dd + 1));
    while (!rem.is_zero() && rem.degree() >= dd) {
        int k = rem.degree() - dd;
        MPoly f = rem.lc();
        quo[k] = f;
        std::vector<MPoly> shift(k + 1);
        shift[k] = f;
        rem = rem - XPoly(v, std::move(shift)) * divisor;
    }
    return {XPoly(v, std::move(quo)), rem};
}

MPoly bareiss_det(std::vector<std::vector<MPoly>> m) {
    size_t n = m.size();
    if (n == 0) return MPoly(Rat(1));
    int sign = 1;
    MPoly prev(Rat(1));
    for (size_t k = 0; k + 1 < n; ++k) {
        size_t piv = k;
        while (piv < n && m[piv][k].is_zero()) ++piv;
        if (piv == n) return MPoly();
        if (piv != k) {
            std::swap(m[piv], m[k]);
            sign = -sign;
        }
        for (size_t i = k + 1; i < n; ++i) {
            for (size_t j = k + 1; j < n; ++j)
                m[i][j] = (m[k][k] * m[i][j] - m[i][k] * m[k][j]).exact_div(prev);
            m[i][k] = MPoly();
        }
        prev = m[k][k];
    }
    MPoly det = m[n - 1][n - 1];
    return sign < 0 ? -det : det;
}

MPoly resultant(const MPoly& p, const MPoly& q, Var v) {
    XPoly P = XPoly::from_mpoly(p, v);
    XPoly Q = XPoly::from_mpoly(q, v);
    if (P.is_zero() || Q.is_zero()) throw error("resultant: zero input");
    int m = P.degree(), n = Q.degree();
    if (m == 0 && n == 0)
        throw error(std::string("resultant: both inputs constant in ") + var_name(v));
    if (m == 0) return P.coeff(0).pow(n);
    if (n == 0) return Q.coeff(0).pow(m);
    size_t size = m + n;
    std::vector<std::vector<MPoly>> s(size, std::vector<MPoly>(size));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j <= m; ++j) s[i][i + j] = P.coeff(m - j);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j <= n; ++j) s[n + i][i + j] = Q.coeff(n - j);
    return bareiss_det(std::move(s));
}

MPoly discriminant(const MPoly& p, Var v) {
    XPoly P = XPoly::from_mpoly(p, v);
    int n = P.degree();
    if (n < 1) throw error(std::string("discriminant: input constant in ") + var_name(v));
    std::vector<MPoly> dc(n);
    for (int i = 1; i <= n; ++i) dc[i - 1] = P.coeff(i) * Rat(i);
    MPoly res = resultant(p, XPoly(v, std::move(dc)).to_mpoly(), v);
    MPoly out = res.exact_div(P.lc());
    return (n * (n - 1) / 2) % 2 ? -out : out;
}

}  // namespace qbeta
