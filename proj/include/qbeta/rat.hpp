#pragma once

#include <gmpxx.h>

#include <compare>
#include <stdexcept>
#include <string>
#include <string_view>

namespace qbeta {

// Library-wide error type for precondition violations, poles and parse failures.
struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Arbitrary-precision rational, always in lowest terms with positive denominator.
class Rat {
public:
    Rat() : v_(0) {}
    Rat(int n) : v_(n) {}
    Rat(long n) : v_(static_cast<signed long>(n)) {}
    Rat(const mpz_class& n) : v_(n) {}
    Rat(long num, long den);
    Rat(const mpz_class& num, const mpz_class& den);
    explicit Rat(const mpq_class& v) : v_(v) { v_.canonicalize(); }

    // Accepts an optional sign, digits, and an optional "/digits" part.
    static Rat parse(std::string_view text);

    const mpz_class& num() const { return v_.get_num(); }
    const mpz_class& den() const { return v_.get_den(); }

    int sign() const { return sgn(v_); }
    bool is_zero() const { return sgn(v_) == 0; }
    bool is_one() const { return v_ == 1; }
    bool is_integer() const { return v_.get_den() == 1; }

    /// True iff the value is the square of a rational (0 counts).
    bool is_square() const;
    /// Exact square root; pre: is_square().
    Rat sqrt_exact() const;

    Rat abs() const { return Rat(mpq_class(::abs(v_))); }
    mpz_class floor() const;
    mpz_class ceil() const;
    double to_double() const { return v_.get_d(); }
    std::string str() const;

    Rat operator-() const { return Rat(mpq_class(-v_)); }
    Rat& operator+=(const Rat& o) { v_ += o.v_; return *this; }
    Rat& operator-=(const Rat& o) { v_ -= o.v_; return *this; }
    Rat& operator*=(const Rat& o) { v_ *= o.v_; return *this; }
    Rat& operator/=(const Rat& o);

    friend Rat operator+(Rat l, const Rat& r) { return l += r; }
    friend Rat operator-(Rat l, const Rat& r) { return l -= r; }
    friend Rat operator*(Rat l, const Rat& r) { return l *= r; }
    friend Rat operator/(Rat l, const Rat& r) { return l /= r; }

    friend bool operator==(const Rat& l, const Rat& r) { return l.v_ == r.v_; }
    friend std::strong_ordering operator<=>(const Rat& l, const Rat& r) {
        int c = cmp(l.v_, r.v_);
        return c < 0 ? std::strong_ordering::less
             : c > 0 ? std::strong_ordering::greater
                     : std::strong_ordering::equal;
    }

private:
    mpq_class v_;
};

inline Rat abs(const Rat& r) { return r.abs(); }

}  // namespace qbeta
