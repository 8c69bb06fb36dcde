#include "qbeta/surface.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <ostream>
#include <thread>

namespace qbeta {

namespace {

const char* kFText =
    "233*a^4 - 352*a^3*b + 108*a^3*c + 168*a^3 + 368*a^2*b^2 - 264*a^2*b*c - 624*a^2*b"
    " + 46*a^2*c^2 - 184*a^2*c - 544*a^2 - 160*a*b^3 + 128*a*b^2*c + 352*a*b^2"
    " - 16*a*b*c^2 + 64*a*b*c + 128*a*b - 4*a*c^3 - 8*a*c^2 + 768*a*c + 640*a"
    " + 48*b^4 - 64*b^3*c - 256*b^3 + 32*b^2*c^2 + 288*b^2*c + 384*b^2 - 8*b*c^3"
    " - 144*b*c^2 - 512*b*c + c^4 + 24*c^3 + 96*c^2 - 640*c - 256";

}  // namespace

const MPoly& surface_F() {
    static const MPoly F = MPoly::parse(kFText);
    return F;
}

Rat F_eval(const Rat& a, const Rat& b, const Rat& c) {
    return surface_F().eval({{Var::a, a}, {Var::b, b}, {Var::c, c}});
}

bool F_factor_a2_check() {
    MPoly F2 = surface_F().substitute(Var::a, Rat(2));
    MPoly q1 = MPoly::parse("12*b^2 - 4*b*c - 96*b + c^2 + 12*c + 196");
    MPoly q2 = MPoly::parse("4*b^2 - 4*b*c - 16*b + c^2 + 4*c + 20");
    return F2 == q1 * q2;
}

namespace {

using i128 = __int128;

struct CQuartic {
    i128 c3, c2, c1, c0;  // monic: c^4 + c3*c^3 + c2*c^2 + c1*c + c0
};

// Coefficients of F(a,b,.) as a monic quartic in c; |a|,|b| <= 1e4 keeps
// every value well inside the i128 range.
CQuartic c_quartic_i128(long a, long b) {
    i128 A = a, B = b;
    CQuartic k;
    k.c3 = -4 * A - 8 * B + 24;
    k.c2 = 46 * A * A - 16 * A * B + 32 * B * B - 8 * A - 144 * B + 96;
    k.c1 = 108 * A * A * A - 264 * A * A * B + 128 * A * B * B - 64 * B * B * B -
           184 * A * A + 64 * A * B + 288 * B * B + 768 * A - 512 * B - 640;
    k.c0 = 233 * A * A * A * A - 352 * A * A * A * B + 368 * A * A * B * B -
           160 * A * B * B * B + 48 * B * B * B * B + 168 * A * A * A - 624 * A * A * B +
           352 * A * B * B - 256 * B * B * B - 544 * A * A + 128 * A * B + 384 * B * B +
           640 * A - 256;
    return k;
}

mpz_class i128_to_mpz(i128 v) {
    bool neg = v < 0;
    unsigned __int128 u = neg ? -(unsigned __int128)v : (unsigned __int128)v;
    mpz_class hi((unsigned long)(u >> 64)), lo((unsigned long)(u & 0xFFFFFFFFFFFFFFFFull));
    mpz_class r = (hi << 64) + lo;
    return neg ? mpz_class(-r) : r;
}

double horner4(double x, double c3, double c2, double c1, double c0) {
    return (((x + c3) * x + c2) * x + c1) * x + c0;
}

// real roots of the monic quartic by derivative cascade + bisection; critical
// points are reported too so that even-multiplicity roots (no sign change)
// still produce integer candidates
int quartic_real_roots(double c3, double c2, double c1, double c0, double roots[4],
                       double crit_out[3], int* ncrit_out) {
    double bound = 1.0 + std::max(std::max(std::fabs(c3), std::fabs(c2)),
                                  std::max(std::fabs(c1), std::fabs(c0)));

    auto bisect = [](auto&& f, double lo, double hi) {
        double flo = f(lo);
        for (int it = 0; it < 200; ++it) {
            double mid = 0.5 * (lo + hi);
            if (mid == lo || mid == hi) break;
            double fm = f(mid);
            if ((fm <= 0) == (flo <= 0)) {
                lo = mid;
                flo = fm;
            } else {
                hi = mid;
            }
        }
        return 0.5 * (lo + hi);
    };

    // critical points: roots of 4c^3 + 3c3 c^2 + 2c2 c + c1
    auto fp = [&](double x) { return ((4 * x + 3 * c3) * x + 2 * c2) * x + c1; };
    double crit[3];
    int ncrit = 0;
    {
        // roots of f'' = 12c^2 + 6c3 c + 2c2
        double disc = 36 * c3 * c3 - 96 * c2;
        double stat[2];
        int nstat = 0;
        if (disc > 0) {
            double r = std::sqrt(disc);
            stat[nstat++] = (-6 * c3 - r) / 24;
            stat[nstat++] = (-6 * c3 + r) / 24;
        }
        double pts[4];
        int np = 0;
        pts[np++] = -bound;
        for (int i = 0; i < nstat; ++i) pts[np++] = stat[i];
        pts[np++] = bound;
        for (int i = 0; i + 1 < np; ++i) {
            double lo = pts[i], hi = pts[i + 1];
            if (!(lo < hi)) continue;
            if ((fp(lo) <= 0) != (fp(hi) <= 0)) crit[ncrit++] = bisect(fp, lo, hi);
        }
    }

    auto f = [&](double x) { return horner4(x, c3, c2, c1, c0); };
    double pts[5];
    int np = 0;
    pts[np++] = -bound;
    for (int i = 0; i < ncrit; ++i) pts[np++] = crit[i];
    pts[np++] = bound;
    int nroots = 0;
    for (int i = 0; i + 1 < np; ++i) {
        double lo = pts[i], hi = pts[i + 1];
        if (!(lo < hi)) continue;
        double flo = f(lo), fhi = f(hi);
        if (flo == 0) roots[nroots++] = lo;
        if ((flo <= 0) != (fhi <= 0)) roots[nroots++] = bisect(f, lo, hi);
    }
    for (int i = 0; i < ncrit; ++i) crit_out[i] = crit[i];
    *ncrit_out = ncrit;
    return nroots;
}

std::vector<mpz_class> integer_roots_numeric(const CQuartic& k) {
    double c3 = (double)k.c3, c2 = (double)k.c2, c1 = (double)k.c1, c0 = (double)k.c0;
    double roots[4], crit[3];
    int ncrit = 0;
    int n = quartic_real_roots(c3, c2, c1, c0, roots, crit, &ncrit);
    std::vector<long long> cands;
    auto add_window = [&](double x) {
        if (std::fabs(x) > 9.0e15) return;  // beyond exact double integers
        long long base = (long long)std::llround(x);
        for (long long c = base - 2; c <= base + 2; ++c) cands.push_back(c);
    };
    for (int i = 0; i < n; ++i) add_window(roots[i]);
    for (int i = 0; i < ncrit; ++i) add_window(crit[i]);
    std::sort(cands.begin(), cands.end());
    cands.erase(std::unique(cands.begin(), cands.end()), cands.end());
    std::vector<mpz_class> out;
    for (long long c : cands) {
        // double prefilter with a conservative error bound
        double x = (double)c, ax = std::fabs(x);
        double fv = horner4(x, c3, c2, c1, c0);
        double mag = (((ax + std::fabs(c3)) * ax + std::fabs(c2)) * ax + std::fabs(c1)) * ax +
                     std::fabs(c0);
        if (std::fabs(fv) > mag * 1e-10) continue;
        // exact confirmation in i128 when safe, else GMP
        bool zero;
        if (ax < 3.0e6) {
            i128 cc = c;
            i128 v = (((cc + k.c3) * cc + k.c2) * cc + k.c1) * cc + k.c0;
            zero = v == 0;
        } else {
            mpz_class cc(std::to_string(c));
            mpz_class v = (((cc + i128_to_mpz(k.c3)) * cc + i128_to_mpz(k.c2)) * cc +
                           i128_to_mpz(k.c1)) * cc + i128_to_mpz(k.c0);
            zero = v == 0;
        }
        if (zero) out.push_back(mpz_class(std::to_string(c)));
    }
    return out;
}

bool numeric_result_ambiguous(const CQuartic& k, const std::vector<mpz_class>& found) {
    (void)found;
    // large coefficients push double isolation toward its precision limit
    i128 m = k.c3 < 0 ? -k.c3 : k.c3;
    auto upd = [&](i128 v) { if (v < 0) v = -v; if (v > m) m = v; };
    upd(k.c2);
    upd(k.c1);
    upd(k.c0);
    return m > (i128)1 << 100;
}

}  // namespace

UPoly F_c_quartic(long a, long b) {
    CQuartic k = c_quartic_i128(a, b);
    return UPoly{Rat(i128_to_mpz(k.c0)), Rat(i128_to_mpz(k.c1)), Rat(i128_to_mpz(k.c2)),
                 Rat(i128_to_mpz(k.c3)), Rat(1)};
}

std::vector<SurfaceSolution> search_box(long a_min, long a_max, long b_min, long b_max,
                                        const SearchOptions& opts) {
    if (a_min > a_max || b_min > b_max) throw error("search_box: empty range");
    if (std::max(std::labs(a_min), std::labs(a_max)) > 100000000L ||
        std::max(std::labs(b_min), std::labs(b_max)) > 100000000L)
        throw error("search_box: range exceeds 1e8");
    long rows_n = a_max - a_min + 1;
    std::vector<std::vector<SurfaceSolution>> per_row(rows_n);

    int nthreads = opts.threads > 0 ? opts.threads
                                    : (int)std::max(1u, std::thread::hardware_concurrency());
    nthreads = std::min<long>(nthreads, rows_n);
    std::atomic<long> next_row{0};

    auto worker = [&]() {
        for (;;) {
            long row = next_row.fetch_add(1);
            if (row >= rows_n) return;
            long a = a_min + row;
            auto& out = per_row[row];
            for (long b = b_min; b <= b_max; ++b) {
                std::vector<mpz_class> roots;
                if (opts.exact) {
                    roots = integer_roots(F_c_quartic(a, b));
                } else {
                    CQuartic k = c_quartic_i128(a, b);
                    roots = integer_roots_numeric(k);
                    if (numeric_result_ambiguous(k, roots))
                        roots = integer_roots(F_c_quartic(a, b));
                }
                for (const auto& c : roots) {
                    SurfaceSolution sol;
                    sol.a = a;
                    sol.b = b;
                    sol.c = c;
                    out.push_back(std::move(sol));
                }
            }
        }
    };
    std::vector<std::thread> threads;
    for (int i = 0; i < nthreads; ++i) threads.emplace_back(worker);
    for (auto& th : threads) th.join();

    std::vector<SurfaceSolution> all;
    for (auto& row : per_row) {
        std::sort(row.begin(), row.end(), [](const SurfaceSolution& l, const SurfaceSolution& r) {
            return std::tie(l.a, l.b, l.c) < std::tie(r.a, r.b, r.c);
        });
        for (auto& s : row) all.push_back(std::move(s));
    }

    if (opts.recover) {
        for (auto& sol : all) {
            sol.d_candidates = recover_d(Rat((long)sol.a), Rat((long)sol.b), Rat(sol.c, mpz_class(1)));
            if (sol.a % 2 == 0) {
                Rat tv(sol.a, 2);
                Rat fb = tv * tv + Rat(2) * tv + Rat(2);
                Rat fc = Rat(2) * tv * tv + Rat(2) * tv;
                if (Rat((long)sol.b) == fb && Rat(sol.c, mpz_class(1)) == fc) {
                    Rat fd = Rat(3) * tv * tv - Rat(2) * tv + Rat(1);
                    for (size_t i = 0; i < sol.d_candidates.size(); ++i) {
                        if (sol.d_candidates[i].d == fd) {
                            sol.family2_match = true;
                            std::rotate(sol.d_candidates.begin(), sol.d_candidates.begin() + i,
                                        sol.d_candidates.begin() + i + 1);
                            break;
                        }
                    }
                }
            }
        }
    }
    return all;
}

void write_search_csv(std::ostream& os, const std::vector<SurfaceSolution>& sols,
                      bool integral_only) {
    os << "a,b,c,d,p,q,family2_match\n";
    for (const auto& s : sols) {
        std::string prefix = std::to_string(s.a) + "," + std::to_string(s.b) + "," +
                             s.c.get_str() + ",";
        std::string fm = s.family2_match ? "1" : "0";
        bool wrote = false;
        for (const auto& t : s.d_candidates) {
            if (integral_only && !t.d.is_integer()) continue;
            os << prefix << t.d.str() << "," << t.p.str() << "," << t.q.str() << "," << fm
               << "\n";
            wrote = true;
        }
        if (!wrote) os << prefix << "-,-,-," << fm << "\n";
    }
}

}  // namespace qbeta
