#include "qbeta/region.hpp"

#include <ostream>
#include <sstream>

namespace qbeta {

std::vector<RegionCell> region_grid(const Rat& a0, const Rat& a1, const Rat& t0, const Rat& t1,
                                    const Rat& step) {
    if (step.sign() <= 0) throw error("region_grid: step must be positive");
    std::vector<RegionCell> out;
    for (Rat a = a0; a <= a1; a += step) {
        for (Rat t = t0; t <= t1; t += step) {
            Rat v = -a * P1_poly().eval({{Var::a, a}, {Var::t, t}});
            out.push_back({a, t, v.sign()});
        }
    }
    return out;
}

void write_region_csv(std::ostream& os, const std::vector<RegionCell>& cells) {
    os << "a,t,sign\n";
    for (const auto& c : cells) os << c.a.str() << "," << c.t.str() << "," << c.sign << "\n";
}

std::string region_svg(const std::vector<RegionCell>& cells, const Rat& a0, const Rat& a1,
                       const Rat& t0, const Rat& t1, const Rat& step) {
    // one lattice point per cell, cell size fixed at 8x8 px
    const int px = 8;
    auto index = [&](const Rat& v, const Rat& lo) {
        return (long)(((v - lo) / step).floor().get_si());
    };
    long na = index(a1, a0) + 1, nt = index(t1, t0) + 1;
    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << na * px << "\" height=\""
       << nt * px << "\" viewBox=\"0 0 " << na * px << " " << nt * px << "\">\n";
    os << "<rect width=\"" << na * px << "\" height=\"" << nt * px << "\" fill=\"#ffffff\"/>\n";
    for (const auto& c : cells) {
        if (c.sign <= 0) continue;
        long ia = index(c.a, a0);
        long it = nt - 1 - index(c.t, t0);  // t increases upward
        os << "<rect x=\"" << ia * px << "\" y=\"" << it * px << "\" width=\"" << px
           << "\" height=\"" << px << "\" fill=\"#4477aa\"/>\n";
    }
    os << "</svg>\n";
    return os.str();
}

}  // namespace qbeta
