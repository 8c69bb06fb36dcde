#pragma once

#include "qbeta/rat.hpp"
#include "qbeta/upoly.hpp"

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace qbeta {

/// Fixed global variable order; term printing and the canonical text form
/// follow this order, so output is byte-stable.
enum class Var : int { d = 0, p, q, a, b, c, t, u, s, s1, s2, s3, s4, x, X, Y, U };
constexpr int kVarCount = 17;

const char* var_name(Var v);
std::optional<Var> var_from_name(std::string_view name);

using Expo = std::array<int16_t, kVarCount>;

/// Sparse multivariate polynomial over Rat; the term map holds no zero
/// coefficients, so equality is equality of term maps.
class MPoly {
public:
    MPoly() = default;
    MPoly(const Rat& constant);
    MPoly(long constant) : MPoly(Rat(constant)) {}
    MPoly(int constant) : MPoly(Rat(constant)) {}

    static MPoly variable(Var v);
    static MPoly monomial(const Rat& coef, const Expo& e);
    /// Canonical text form: "233*a^4 - 352*a^3*b + 1/2*c - 3".
    static MPoly parse(std::string_view text);

    bool is_zero() const { return t_.empty(); }
    bool is_constant() const;
    Rat constant_value() const;  // pre: is_constant
    size_t term_count() const { return t_.size(); }

    int degree(Var v) const;
    int total_degree() const;
    bool depends_on(Var v) const { return degree(v) > 0; }

    MPoly operator-() const;
    friend MPoly operator+(const MPoly& l, const MPoly& r);
    friend MPoly operator-(const MPoly& l, const MPoly& r);
    friend MPoly operator*(const MPoly& l, const MPoly& r);
    MPoly operator*(const Rat& s) const;
    MPoly pow(unsigned n) const;
    friend bool operator==(const MPoly& l, const MPoly& r) { return l.t_ == r.t_; }

    MPoly substitute(Var v, const MPoly& value) const;
    MPoly substitute(Var v, const Rat& value) const { return substitute(v, MPoly(value)); }

    /// Exact evaluation; throws if the polynomial depends on an unassigned variable.
    Rat eval(const std::map<Var, Rat>& assignment) const;

    /// Coefficients of v^0, v^1, ... (each free of v).
    std::vector<MPoly> collect(Var v) const;
    MPoly coeff_of(Var v, int k) const;

    /// Exact division; throws if the divisor does not divide exactly.
    MPoly exact_div(const MPoly& divisor) const;

    /// View of the poly as univariate in v with Rat coefficients;
    /// throws if any other variable occurs.
    UPoly to_upoly(Var v) const;
    static MPoly from_upoly(const UPoly& p, Var v);

    const std::map<Expo, Rat>& terms() const { return t_; }

    std::string str() const;

private:
    void add_term(const Expo& e, const Rat& c);
    std::map<Expo, Rat> t_;
};

inline MPoly operator*(const Rat& s, const MPoly& m) { return m * s; }

}  // namespace qbeta
