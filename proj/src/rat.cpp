#include "qbeta/rat.hpp"

namespace qbeta {

Rat::Rat(long num, long den) {
    if (den == 0) throw error("Rat: zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
}

Rat::Rat(const mpz_class& num, const mpz_class& den) {
    if (den == 0) throw error("Rat: zero denominator");
    v_ = mpq_class(num) / mpq_class(den);
}

Rat Rat::parse(std::string_view text) {
    size_t i = 0, n = text.size();
    auto fail = [&]() -> Rat { throw error("Rat: cannot parse '" + std::string(text) + "'"); };
    bool neg = false;
    if (i < n && (text[i] == '+' || text[i] == '-')) {
        neg = text[i] == '-';
        ++i;
    }
    size_t num_start = i;
    while (i < n && text[i] >= '0' && text[i] <= '9') ++i;
    if (i == num_start) return fail();
    mpz_class num(std::string(text.substr(num_start, i - num_start)), 10);
    if (neg) num = -num;
    mpz_class den(1);
    if (i < n) {
        if (text[i] != '/') return fail();
        ++i;
        size_t den_start = i;
        while (i < n && text[i] >= '0' && text[i] <= '9') ++i;
        if (i == den_start || i != n) return fail();
        den = mpz_class(std::string(text.substr(den_start)), 10);
        if (den == 0) throw error("Rat: zero denominator in '" + std::string(text) + "'");
    }
    return Rat(num, den);
}

Rat& Rat::operator/=(const Rat& o) {
    if (o.is_zero()) throw error("Rat: division by zero");
    v_ /= o.v_;
    return *this;
}

bool Rat::is_square() const {
    if (sign() < 0) return false;
    return mpz_perfect_square_p(num().get_mpz_t()) && mpz_perfect_square_p(den().get_mpz_t());
}

Rat Rat::sqrt_exact() const {
    if (!is_square()) throw error("Rat: not a perfect square: " + str());
    mpz_class rn, rd;
    mpz_sqrt(rn.get_mpz_t(), num().get_mpz_t());
    mpz_sqrt(rd.get_mpz_t(), den().get_mpz_t());
    return Rat(rn, rd);
}

mpz_class Rat::floor() const {
    mpz_class r;
    mpz_fdiv_q(r.get_mpz_t(), num().get_mpz_t(), den().get_mpz_t());
    return r;
}

mpz_class Rat::ceil() const {
    mpz_class r;
    mpz_cdiv_q(r.get_mpz_t(), num().get_mpz_t(), den().get_mpz_t());
    return r;
}

std::string Rat::str() const {
    if (is_integer()) return num().get_str();
    return num().get_str() + "/" + den().get_str();
}

}  // namespace qbeta
