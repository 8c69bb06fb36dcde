#pragma once

#include "qbeta/rat.hpp"

#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

namespace qbeta {

/// Dense univariate polynomial over Rat, coefficients ascending by degree.
/// The zero polynomial has an empty coefficient vector and degree -1.
class UPoly {
public:
    UPoly() = default;
    UPoly(std::initializer_list<Rat> ascending) : c_(ascending) { trim(); }
    explicit UPoly(std::vector<Rat> ascending) : c_(std::move(ascending)) { trim(); }
    explicit UPoly(const Rat& constant) { c_.push_back(constant); trim(); }

    static UPoly monomial(const Rat& coef, int deg);
    static UPoly x() { return monomial(Rat(1), 1); }

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    Rat coeff(int i) const { return (i >= 0 && i < (int)c_.size()) ? c_[i] : Rat(); }
    const std::vector<Rat>& coeffs() const { return c_; }
    const Rat& lc() const;
    bool is_monic() const { return !is_zero() && lc().is_one(); }

    Rat eval(const Rat& x) const;
    UPoly derivative() const;
    UPoly monic() const;

    UPoly operator-() const;
    friend UPoly operator+(const UPoly& l, const UPoly& r);
    friend UPoly operator-(const UPoly& l, const UPoly& r);
    friend UPoly operator*(const UPoly& l, const UPoly& r);
    UPoly operator*(const Rat& s) const;
    UPoly pow(unsigned n) const;

    friend bool operator==(const UPoly& l, const UPoly& r) { return l.c_ == r.c_; }

    /// Content (gcd of coefficients as a positive rational times the sign of
    /// the leading coefficient) and the primitive integer coefficient list,
    /// so that *this == content * primitive.
    std::pair<Rat, std::vector<mpz_class>> primitive_integer() const;

    std::string str(std::string_view var = "x") const;

private:
    void trim();
    std::vector<Rat> c_;
};

/// Quotient and remainder; exact over Rat. Throws on zero divisor.
std::pair<UPoly, UPoly> upoly_divrem(const UPoly& dividend, const UPoly& divisor);

/// Monic gcd (zero polynomial if both inputs are zero).
UPoly upoly_gcd(UPoly a, UPoly b);

/// p / gcd(p, p'), monic.
UPoly squarefree_part(const UPoly& p);

/// All rational roots of a nonzero polynomial, ascending.
std::vector<Rat> rational_roots(const UPoly& p);

/// All integer roots of a nonzero polynomial, ascending (exact Sturm bisection).
std::vector<mpz_class> integer_roots(const UPoly& p);

/// Number of distinct real roots in (lo, hi] via a Sturm chain.
class SturmChain {
public:
    explicit SturmChain(const UPoly& p);  // pre: p nonzero
    int count_between(const Rat& lo, const Rat& hi) const;
    int count_all() const;  // all real roots of the squarefree part
    const Rat& bound() const { return bound_; }  // Cauchy bound: roots lie in (-B, B)
private:
    int variations(const Rat& x) const;
    int variations_at_inf(int sign_dir) const;
    std::vector<UPoly> chain_;
    Rat bound_;
};

Rat resultant(const UPoly& p, const UPoly& q);
Rat discriminant(const UPoly& p);

}  // namespace qbeta
