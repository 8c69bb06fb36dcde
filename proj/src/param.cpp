#include "qbeta/param.hpp"

#include "qbeta/param_data.inc"

#include <sstream>

namespace qbeta {

uint64_t fnv1a64(std::string_view data) {
    uint64_t h = 0xcbf29ce484222325ull;
    for (unsigned char b : data) {
        h ^= b;
        h *= 0x100000001b3ull;
    }
    return h;
}

namespace {

std::string strip(const std::string& s) {
    size_t b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    size_t e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

}  // namespace

ParamTables parse_param_tables(std::string_view text) {
    static const char* kSectionNames[10] = {"b.num", "b.den", "c.num", "c.den", "d.num",
                                            "d.den", "p.num", "p.den", "q.num", "q.den"};
    ParamTables out;
    std::istringstream in{std::string(text)};
    std::string line, payload;
    uint64_t stored = 0;
    int section = -1;
    while (std::getline(in, line)) {
        line = strip(line);
        if (line.empty()) continue;
        if (line[0] == '#') {
            auto pos = line.find("fnv1a64:");
            if (pos != std::string::npos)
                stored = std::stoull(strip(line.substr(pos + 8)), nullptr, 16);
            continue;
        }
        payload += line;
        payload += '\n';
        if (line[0] == '[') {
            std::string name = line.substr(1, line.size() - 2);
            section = -1;
            for (int i = 0; i < 10; ++i)
                if (name == kSectionNames[i]) section = i;
            if (section < 0) throw error("param tables: unknown section " + name);
            continue;
        }
        auto colon = line.find(':');
        if (section < 0 || colon == std::string::npos)
            throw error("param tables: malformed line '" + line + "'");
        size_t idx = std::stoul(line.substr(0, colon));
        auto& rows = out.rows[section];
        if (idx != rows.size()) throw error("param tables: non-consecutive row index");
        rows.push_back(MPoly::parse(strip(line.substr(colon + 1))).to_upoly(Var::t));
    }
    out.checksum = fnv1a64(payload);
    if (stored == 0 || out.checksum != stored)
        throw error("param tables: checksum mismatch");
    for (const auto& rows : out.rows)
        if (rows.empty()) throw error("param tables: missing section");
    return out;
}

namespace {

Rat eval_series(const std::vector<UPoly>& rows, const Rat& a, const Rat& t) {
    Rat acc, pw(1);
    for (const auto& row : rows) {
        acc += row.eval(t) * pw;
        pw *= a;
    }
    return acc;
}

}  // namespace

const ParamTables& param_tables() {
    static const ParamTables tables = parse_param_tables(kRemarkTablesText);
    return tables;
}

ParamEval param_eval(const Rat& a, const Rat& t) {
    const auto& tb = param_tables();
    static const char* kNames[5] = {"b", "c", "d", "p", "q"};
    Rat vals[5];
    for (int i = 0; i < 5; ++i) {
        Rat den = eval_series(tb.rows[2 * i + 1], a, t);
        if (den.is_zero())
            throw error(std::string("param_eval: the ") + kNames[i] +
                        " denominator vanishes at (a,t) = (" + a.str() + ", " + t.str() + ")");
        vals[i] = eval_series(tb.rows[2 * i], a, t) / den;
    }
    return {a, t, vals[0], vals[1], vals[2], vals[3], vals[4]};
}

const MPoly& P1_poly() {
    static const MPoly P1 = [] {
        MPoly a = MPoly::variable(Var::a), t = MPoly::variable(Var::t);
        MPoly am4 = a - MPoly(Rat(4));
        MPoly lead = MPoly(Rat(9)) * a * a * a - MPoly(Rat(116)) * a * a +
                     MPoly(Rat(524)) * a - MPoly(Rat(800));
        MPoly mid = MPoly(Rat(-24)) * (a - MPoly(Rat(5))) * am4 * am4;
        MPoly konst = MPoly(Rat(18)) * am4 * am4 * am4;
        return lead * t * t + mid * t + konst;
    }();
    return P1;
}

const MPoly& P1_reversed_poly() {
    static const MPoly rev = [] {
        auto cs = P1_poly().collect(Var::t);
        MPoly t = MPoly::variable(Var::t);
        return cs[2] + cs[1] * t + cs[0] * t * t;
    }();
    return rev;
}

DiscSignReport disc_sign_check(const Rat& a, const Rat& t) {
    if (a.is_zero()) throw error("disc_sign_check: a = 0");
    ParamEval pe = param_eval(a, t);
    DiscSignReport r;
    r.disc = pe.p * pe.p - Rat(4) * pe.q;
    r.p1 = P1_poly().eval({{Var::a, a}, {Var::t, t}});
    r.p1_reversed = P1_reversed_poly().eval({{Var::a, a}, {Var::t, t}});
    r.sign_disc = r.disc.sign();
    r.sign_m_a_p1 = (-a * r.p1).sign();
    r.sign_m_a_p1_reversed = (-a * r.p1_reversed).sign();
    r.agree = r.sign_disc == 0 || r.sign_disc == r.sign_m_a_p1;
    r.agree_reversed = r.sign_disc == 0 || r.sign_disc == r.sign_m_a_p1_reversed;
    return r;
}

}  // namespace qbeta
