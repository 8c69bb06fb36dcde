#include "qbeta/mpoly.hpp"

#include <algorithm>
#include <cctype>

namespace qbeta {

namespace {
constexpr const char* kNames[kVarCount] = {
    "d", "p", "q", "a", "b", "c", "t", "u", "s", "s1", "s2", "s3", "s4", "x", "X", "Y", "U"};
}

const char* var_name(Var v) { return kNames[static_cast<int>(v)]; }

std::optional<Var> var_from_name(std::string_view name) {
    for (int i = 0; i < kVarCount; ++i)
        if (name == kNames[i]) return static_cast<Var>(i);
    return std::nullopt;
}

MPoly::MPoly(const Rat& constant) {
    if (!constant.is_zero()) t_.emplace(Expo{}, constant);
}

MPoly MPoly::variable(Var v) {
    Expo e{};
    e[static_cast<int>(v)] = 1;
    return monomial(Rat(1), e);
}

MPoly MPoly::monomial(const Rat& coef, const Expo& e) {
    MPoly r;
    if (!coef.is_zero()) r.t_.emplace(e, coef);
    return r;
}

bool MPoly::is_constant() const {
    if (t_.empty()) return true;
    return t_.size() == 1 && t_.begin()->first == Expo{};
}

Rat MPoly::constant_value() const {
    if (t_.empty()) return Rat();
    if (!is_constant()) throw error("MPoly: not a constant: " + str());
    return t_.begin()->second;
}

int MPoly::degree(Var v) const {
    int deg = 0;
    for (const auto& [e, c] : t_) deg = std::max(deg, (int)e[static_cast<int>(v)]);
    return deg;
}

int MPoly::total_degree() const {
    int deg = 0;
    for (const auto& [e, c] : t_) {
        int s = 0;
        for (int16_t v : e) s += v;
        deg = std::max(deg, s);
    }
    return deg;
}

void MPoly::add_term(const Expo& e, const Rat& c) {
    if (c.is_zero()) return;
    auto it = t_.find(e);
    if (it == t_.end()) {
        t_.emplace(e, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) t_.erase(it);
    }
}

MPoly MPoly::operator-() const {
    MPoly r(*this);
    for (auto& [e, c] : r.t_) c = -c;
    return r;
}

MPoly operator+(const MPoly& l, const MPoly& r) {
    MPoly out(l);
    for (const auto& [e, c] : r.t_) out.add_term(e, c);
    return out;
}

MPoly operator-(const MPoly& l, const MPoly& r) {
    MPoly out(l);
    for (const auto& [e, c] : r.t_) out.add_term(e, -c);
    return out;
}

MPoly operator*(const MPoly& l, const MPoly& r) {
    MPoly out;
    for (const auto& [el, cl] : l.t_)
        for (const auto& [er, cr] : r.t_) {
            Expo e;
            for (int i = 0; i < kVarCount; ++i) e[i] = el[i] + er[i];
            out.add_term(e, cl * cr);
        }
    return out;
}

MPoly MPoly::operator*(const Rat& sc) const {
    MPoly out;
    if (sc.is_zero()) return out;
    for (const auto& [e, c] : t_) out.t_.emplace(e, c * sc);
    return out;
}

MPoly MPoly::pow(unsigned n) const {
    MPoly acc(Rat(1));
    for (unsigned i = 0; i < n; ++i) acc = acc * *this;
    return acc;
}

MPoly MPoly::substitute(Var v, const MPoly& value) const {
    int vi = static_cast<int>(v);
    MPoly out;
    for (const auto& [e, c] : t_) {
        Expo rest = e;
        int k = rest[vi];
        rest[vi] = 0;
        MPoly term = MPoly::monomial(c, rest);
        if (k > 0) term = term * value.pow(k);
        out = out + term;
    }
    return out;
}

Rat MPoly::eval(const std::map<Var, Rat>& assignment) const {
    Rat out;
    for (const auto& [e, c] : t_) {
        Rat term = c;
        for (int i = 0; i < kVarCount; ++i) {
            if (e[i] == 0) continue;
            auto it = assignment.find(static_cast<Var>(i));
            if (it == assignment.end())
                throw error(std::string("MPoly::eval: unassigned variable ") + kNames[i]);
            Rat pw(1);
            for (int k = 0; k < e[i]; ++k) pw *= it->second;
            term *= pw;
        }
        out += term;
    }
    return out;
}

std::vector<MPoly> MPoly::collect(Var v) const {
    int vi = static_cast<int>(v);
    std::vector<MPoly> out(degree(v) + 1);
    for (const auto& [e, c] : t_) {
        Expo rest = e;
        int k = rest[vi];
        rest[vi] = 0;
        out[k].add_term(rest, c);
    }
    while (out.size() > 1 && out.back().is_zero()) out.pop_back();
    return out;
}

MPoly MPoly::coeff_of(Var v, int k) const {
    auto cs = collect(v);
    return k < (int)cs.size() ? cs[k] : MPoly();
}

MPoly MPoly::exact_div(const MPoly& divisor) const {
    if (divisor.is_zero()) throw error("MPoly: division by zero");
    MPoly rem(*this), quo;
    const auto& dlead = *divisor.t_.rbegin();
    while (!rem.is_zero()) {
        const auto& rlead = *rem.t_.rbegin();
        Expo e;
        for (int i = 0; i < kVarCount; ++i) {
            e[i] = rlead.first[i] - dlead.first[i];
            if (e[i] < 0) throw error("MPoly: not exactly divisible");
        }
        MPoly m = MPoly::monomial(rlead.second / dlead.second, e);
        quo = quo + m;
        rem = rem - m * divisor;
    }
    return quo;
}

UPoly MPoly::to_upoly(Var v) const {
    int vi = static_cast<int>(v);
    std::vector<Rat> cs(degree(v) + 1);
    for (const auto& [e, c] : t_) {
        for (int i = 0; i < kVarCount; ++i)
            if (i != vi && e[i] != 0)
                throw error(std::string("MPoly: not univariate in ") + var_name(v) + ": " + str());
        cs[e[vi]] = c;
    }
    return UPoly(std::move(cs));
}

MPoly MPoly::from_upoly(const UPoly& p, Var v) {
    MPoly out;
    Expo e{};
    for (int i = 0; i <= p.degree(); ++i) {
        e[static_cast<int>(v)] = (int16_t)i;
        out.add_term(e, p.coeff(i));
    }
    return out;
}

std::string MPoly::str() const {
    if (t_.empty()) return "0";
    std::string out;
    for (auto it = t_.rbegin(); it != t_.rend(); ++it) {
        const auto& [e, c] = *it;
        bool neg = c.sign() < 0;
        Rat mag = c.abs();
        std::string mono;
        for (int i = 0; i < kVarCount; ++i) {
            if (e[i] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += kNames[i];
            if (e[i] > 1) mono += "^" + std::to_string(e[i]);
        }
        std::string term;
        if (mono.empty())
            term = mag.str();
        else if (mag.is_one())
            term = mono;
        else
            term = mag.str() + "*" + mono;
        if (out.empty())
            out = (neg ? "-" : "") + term;
        else
            out += (neg ? " - " : " + ") + term;
    }
    return out;
}

namespace {

struct Parser {
    std::string_view in;
    size_t pos = 0;

    void skip_ws() {
        while (pos < in.size() && std::isspace((unsigned char)in[pos])) ++pos;
    }
    bool eof() {
        skip_ws();
        return pos >= in.size();
    }
    char peek() {
        skip_ws();
        return pos < in.size() ? in[pos] : '\0';
    }
    [[noreturn]] void fail(const std::string& why) {
        throw error("MPoly::parse: " + why + " at offset " + std::to_string(pos) + " in '" +
                    std::string(in) + "'");
    }

    mpz_class integer() {
        skip_ws();
        size_t start = pos;
        while (pos < in.size() && std::isdigit((unsigned char)in[pos])) ++pos;
        if (pos == start) fail("expected digits");
        return mpz_class(std::string(in.substr(start, pos - start)), 10);
    }

    Rat rational() {
        mpz_class n = integer();
        skip_ws();
        if (pos < in.size() && in[pos] == '/') {
            ++pos;
            mpz_class den = integer();
            return Rat(n, den);
        }
        return Rat(n);
    }

    std::optional<Var> try_var() {
        skip_ws();
        if (pos >= in.size() || !std::isalpha((unsigned char)in[pos])) return std::nullopt;
        size_t start = pos;
        ++pos;
        while (pos < in.size() && std::isdigit((unsigned char)in[pos])) ++pos;
        auto v = var_from_name(in.substr(start, pos - start));
        if (!v) fail("unknown variable '" + std::string(in.substr(start, pos - start)) + "'");
        return v;
    }

    // term := [rational] { '*' factor } | factor { '*' factor }
    // factor := var [ '^' int ]
    MPoly term() {
        Rat coef(1);
        Expo e{};
        bool saw_any = false;
        skip_ws();
        if (pos < in.size() && std::isdigit((unsigned char)in[pos])) {
            coef = rational();
            saw_any = true;
        }
        while (true) {
            skip_ws();
            if (saw_any) {
                if (pos < in.size() && in[pos] == '*') {
                    ++pos;
                } else {
                    break;
                }
            }
            auto v = try_var();
            if (!v) {
                if (!saw_any) fail("expected a term");
                fail("expected a variable after '*'");
            }
            int exp = 1;
            skip_ws();
            if (pos < in.size() && in[pos] == '^') {
                ++pos;
                exp = (int)integer().get_si();
            }
            e[static_cast<int>(*v)] = (int16_t)(e[static_cast<int>(*v)] + exp);
            saw_any = true;
        }
        return MPoly::monomial(coef, e);
    }

    MPoly parse() {
        MPoly out;
        bool first = true;
        while (!eof()) {
            int sign = 1;
            skip_ws();
            if (in[pos] == '+' || in[pos] == '-') {
                sign = in[pos] == '-' ? -1 : 1;
                ++pos;
            } else if (!first) {
                fail("expected '+' or '-' between terms");
            }
            MPoly t = term();
            out = sign < 0 ? out - t : out + t;
            first = false;
        }
        if (first) fail("empty input");
        return out;
    }
};

}  // namespace

MPoly MPoly::parse(std::string_view text) {
    Parser p{text};
    return p.parse();
}

}  // namespace qbeta
