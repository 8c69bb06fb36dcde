#include "qbeta/upoly.hpp"

#include <algorithm>

namespace qbeta {

void UPoly::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

UPoly UPoly::monomial(const Rat& coef, int deg) {
    UPoly r;
    if (coef.is_zero()) return r;
    r.c_.assign(deg + 1, Rat());
    r.c_[deg] = coef;
    return r;
}

const Rat& UPoly::lc() const {
    if (is_zero()) throw error("UPoly: leading coefficient of zero polynomial");
    return c_.back();
}

Rat UPoly::eval(const Rat& x) const {
    Rat acc;
    for (int i = degree(); i >= 0; --i) acc = acc * x + c_[i];
    return acc;
}

UPoly UPoly::derivative() const {
    std::vector<Rat> d;
    for (int i = 1; i <= degree(); ++i) d.push_back(c_[i] * Rat(i));
    return UPoly(std::move(d));
}

UPoly UPoly::monic() const {
    if (is_zero()) return *this;
    return *this * (Rat(1) / lc());
}

UPoly UPoly::operator-() const {
    UPoly r(*this);
    for (auto& c : r.c_) c = -c;
    return r;
}

UPoly operator+(const UPoly& l, const UPoly& r) {
    std::vector<Rat> c(std::max(l.c_.size(), r.c_.size()));
    for (size_t i = 0; i < c.size(); ++i) c[i] = l.coeff((int)i) + r.coeff((int)i);
    return UPoly(std::move(c));
}

UPoly operator-(const UPoly& l, const UPoly& r) { return l + (-r); }

UPoly operator*(const UPoly& l, const UPoly& r) {
    if (l.is_zero() || r.is_zero()) return UPoly();
    std::vector<Rat> c(l.c_.size() + r.c_.size() - 1);
    for (size_t i = 0; i < l.c_.size(); ++i)
        for (size_t j = 0; j < r.c_.size(); ++j) c[i + j] += l.c_[i] * r.c_[j];
    return UPoly(std::move(c));
}

UPoly UPoly::operator*(const Rat& s) const {
    UPoly r(*this);
    for (auto& c : r.c_) c *= s;
    r.trim();
    return r;
}

UPoly UPoly::pow(unsigned n) const {
    UPoly acc{Rat(1)};
    for (unsigned i = 0; i < n; ++i) acc = acc * *this;
    return acc;
}

std::pair<Rat, std::vector<mpz_class>> UPoly::primitive_integer() const {
    if (is_zero()) return {Rat(), {}};
    mpz_class den_lcm(1);
    for (const auto& c : c_)
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.den().get_mpz_t());
    std::vector<mpz_class> ints(c_.size());
    mpz_class g(0);
    for (size_t i = 0; i < c_.size(); ++i) {
        ints[i] = c_[i].num() * (den_lcm / c_[i].den());
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), ints[i].get_mpz_t());
    }
    if (sgn(ints.back()) < 0) g = -g;
    for (auto& v : ints) v /= g;
    return {Rat(g, den_lcm), std::move(ints)};
}

std::pair<UPoly, UPoly> upoly_divrem(const UPoly& dividend, const UPoly& divisor) {
    if (divisor.is_zero()) throw error("upoly_divrem: zero divisor");
    UPoly rem = dividend;
    std::vector<Rat> quo;
    int dd = divisor.degree();
    if (rem.degree() >= dd) quo.assign(rem.degree() - dd + 1, Rat());
    while (!rem.is_zero() && rem.degree() >= dd) {
        int k = rem.degree() - dd;
        Rat f = rem.lc() / divisor.lc();
        quo[k] = f;
        rem = rem - UPoly::monomial(f, k) * divisor;
    }
    return {UPoly(std::move(quo)), rem};
}

UPoly upoly_gcd(UPoly a, UPoly b) {
    while (!b.is_zero()) {
        UPoly r = upoly_divrem(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

UPoly squarefree_part(const UPoly& p) {
    if (p.is_zero()) return p;
    if (p.degree() == 0) return UPoly{Rat(1)};
    UPoly g = upoly_gcd(p, p.derivative());
    return upoly_divrem(p, g).first.monic();
}

SturmChain::SturmChain(const UPoly& p) {
    if (p.is_zero()) throw error("SturmChain: zero polynomial");
    UPoly f = squarefree_part(p);
    chain_.push_back(f);
    if (f.degree() >= 1) {
        chain_.push_back(f.derivative());
        while (chain_.back().degree() >= 1) {
            UPoly r = upoly_divrem(chain_[chain_.size() - 2], chain_.back()).second;
            if (r.is_zero()) break;
            chain_.push_back(-r);
        }
    }
    Rat m;
    const Rat& l = f.lc();
    for (int i = 0; i < f.degree(); ++i) m = std::max(m, (f.coeff(i) / l).abs());
    bound_ = Rat(1) + m;
}

int SturmChain::variations(const Rat& x) const {
    int var = 0, last = 0;
    for (const auto& f : chain_) {
        int s = f.eval(x).sign();
        if (s == 0) continue;
        if (last != 0 && s != last) ++var;
        last = s;
    }
    return var;
}

int SturmChain::count_between(const Rat& lo, const Rat& hi) const {
    return variations(lo) - variations(hi);
}

int SturmChain::count_all() const {
    return count_between(-bound_ - Rat(1), bound_ + Rat(1));
}

std::vector<mpz_class> integer_roots(const UPoly& p) {
    if (p.is_zero()) throw error("integer_roots: zero polynomial");
    std::vector<mpz_class> out;
    if (p.degree() == 0) return out;
    if (p.coeff(0).is_zero()) out.push_back(0);
    SturmChain chain(p);
    mpz_class lo = (-chain.bound()).floor() - 1;
    mpz_class hi = chain.bound().ceil() + 1;
    struct Seg { mpz_class lo, hi; int count; };
    std::vector<Seg> stack;
    int total = chain.count_between(Rat(lo), Rat(hi));
    if (total > 0) stack.push_back({lo, hi, total});
    while (!stack.empty()) {
        Seg s = stack.back();
        stack.pop_back();
        if (s.hi - s.lo == 1) {
            if (!p.eval(Rat(s.hi)).is_zero()) continue;
            if (s.hi != 0) out.push_back(s.hi);  // root 0 already recorded
            continue;
        }
        mpz_class mid = (s.lo + s.hi) / 2;
        if (mid == s.lo) mid += 1;
        int left = chain.count_between(Rat(s.lo), Rat(mid));
        if (left > 0) stack.push_back({s.lo, mid, left});
        if (s.count - left > 0) stack.push_back({mid, s.hi, s.count - left});
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Rat> rational_roots(const UPoly& p) {
    if (p.is_zero()) throw error("rational_roots: zero polynomial");
    std::vector<Rat> out;
    if (p.degree() == 0) return out;
    auto [content, ints] = p.primitive_integer();
    (void)content;
    // Root-scale y = lc*x so integer roots of the monic transform give the
    // rational roots of p with denominator dividing lc.
    const mpz_class& lead = ints.back();
    int n = (int)ints.size() - 1;
    std::vector<Rat> scaled(ints.size());
    mpz_class powl(1);
    for (int i = n; i >= 0; --i) {
        scaled[i] = Rat(mpz_class(ints[i] * powl));
        if (i > 0) powl *= lead;
    }
    for (const auto& y : integer_roots(UPoly(std::move(scaled)))) {
        Rat r(y, lead);
        if (p.eval(r).is_zero()) out.push_back(r);
    }
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

Rat det_gauss(std::vector<std::vector<Rat>> m) {
    size_t n = m.size();
    Rat det(1);
    for (size_t k = 0; k < n; ++k) {
        size_t piv = k;
        while (piv < n && m[piv][k].is_zero()) ++piv;
        if (piv == n) return Rat();
        if (piv != k) {
            std::swap(m[piv], m[k]);
            det = -det;
        }
        det *= m[k][k];
        for (size_t i = k + 1; i < n; ++i) {
            if (m[i][k].is_zero()) continue;
            Rat f = m[i][k] / m[k][k];
            for (size_t j = k; j < n; ++j) m[i][j] -= f * m[k][j];
        }
    }
    return det;
}

}  // namespace

Rat resultant(const UPoly& p, const UPoly& q) {
    if (p.is_zero() || q.is_zero()) throw error("resultant: zero input");
    int m = p.degree(), n = q.degree();
    if (m == 0 && n == 0) throw error("resultant: both inputs constant");
    if (m == 0) {
        Rat r(1);
        for (int i = 0; i < n; ++i) r *= p.coeff(0);
        return r;
    }
    if (n == 0) {
        Rat r(1);
        for (int i = 0; i < m; ++i) r *= q.coeff(0);
        return r;
    }
    size_t size = m + n;
    std::vector<std::vector<Rat>> s(size, std::vector<Rat>(size));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j <= m; ++j) s[i][i + j] = p.coeff(m - j);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j <= n; ++j) s[n + i][i + j] = q.coeff(n - j);
    return det_gauss(std::move(s));
}

Rat discriminant(const UPoly& p) {
    int n = p.degree();
    if (n < 1) throw error("discriminant: constant input");
    Rat r = resultant(p, p.derivative());
    Rat d = r / p.lc();
    return (n * (n - 1) / 2) % 2 ? -d : d;
}

std::string UPoly::str(std::string_view var) const {
    if (is_zero()) return "0";
    std::string out;
    for (int i = degree(); i >= 0; --i) {
        const Rat& c = c_[i];
        if (c.is_zero()) continue;
        bool neg = c.sign() < 0;
        Rat mag = c.abs();
        std::string term;
        if (i == 0) {
            term = mag.str();
        } else {
            std::string mono(var);
            if (i > 1) mono += "^" + std::to_string(i);
            term = mag.is_one() ? mono : mag.str() + "*" + mono;
        }
        if (out.empty())
            out = (neg ? "-" : "") + term;
        else
            out += (neg ? " - " : " + ") + term;
    }
    return out;
}

}  // namespace qbeta
