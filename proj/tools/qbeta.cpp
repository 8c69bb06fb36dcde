#include "qbeta/beta.hpp"
#include "qbeta/ec.hpp"
#include "qbeta/families.hpp"
#include "qbeta/param.hpp"
#include "qbeta/region.hpp"
#include "qbeta/surface.hpp"
#include "qbeta/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>

using nlohmann::json;
using namespace qbeta;

namespace {

json verdict_json(const BetaVerdict& v) {
    json j;
    j["kind"] = beta_kind_name(v.kind);
    j["p"] = v.p ? json(v.p->str()) : json(nullptr);
    j["q"] = v.q ? json(v.q->str()) : json(nullptr);
    j["disc"] = v.disc ? json(v.disc->str()) : json(nullptr);
    j["real"] = v.real ? json(*v.real) : json(nullptr);
    j["f_irreducible"] = v.f_irreducible;
    j["notes"] = v.notes;
    return j;
}

json record_json(const FamilyRecord& r) {
    json j;
    j["family"] = family_id_name(r.id);
    j["t"] = r.t.str();
    if (r.u) j["u"] = r.u->str();
    j["a"] = r.coeffs.a.str();
    j["b"] = r.coeffs.b.str();
    j["c"] = r.coeffs.c.str();
    j["d"] = r.coeffs.d.str();
    j["p"] = r.p ? json(r.p->str()) : json(nullptr);
    j["q"] = r.q ? json(r.q->str()) : json(nullptr);
    j["disc"] = r.disc ? json(r.disc->str()) : json(nullptr);
    j["irreducible"] = r.irreducible;
    if (!r.notes.empty()) j["notes"] = r.notes;
    return j;
}

std::ostream& open_out(std::ofstream& file, const std::string& path) {
    if (path.empty() || path == "-") return std::cout;
    file.open(path, std::ios::binary);
    if (!file) throw error("cannot open output file: " + path);
    return file;
}

FamilyRecord make_record(const std::string& id, const Rat& t, const Rat& u) {
    if (id == "f1") return family1(t);
    if (id == "f2") return family2(t);
    if (id == "circle") return circle_family(t);
    if (id == "cbranch") return c_branch(t, u);
    throw error("unknown family id: " + id);
}

int run(int argc, char** argv) {
    CLI::App app{"exact computations on quartic numbers whose beta invariant is quadratic"};
    app.require_subcommand(1);

    std::string a_s, b_s, c_s, d_s, t_s = "0", u_s = "0", s_s;
    bool json_out = false, require_irr = false;

    auto* check = app.add_subcommand("check", "decide whether beta is quadratic for f");
    check->add_option("--a", a_s)->required();
    check->add_option("--b", b_s)->required();
    check->add_option("--c", c_s)->required();
    check->add_option("--d", d_s)->required();
    check->add_flag("--json", json_out);
    check->add_flag("--require-irreducible", require_irr);

    auto* minpoly = app.add_subcommand("minpoly", "minimal polynomial of beta via resultants");
    minpoly->add_option("--a", a_s)->required();
    minpoly->add_option("--b", b_s)->required();
    minpoly->add_option("--c", c_s)->required();
    minpoly->add_option("--d", d_s)->required();

    std::string fam_id;
    auto* family = app.add_subcommand("family", "evaluate one parametric family member");
    family->add_option("--id", fam_id, "f1|f2|circle|cbranch")->required();
    family->add_option("--t", t_s)->required();
    family->add_option("--u", u_s, "second parameter (cbranch)");

    std::string tfrom_s, tto_s, tstep_s = "1", csv_path, svg_path;
    auto* scan = app.add_subcommand("family-scan", "scan a family over a rational t-grid");
    scan->add_option("--id", fam_id)->required();
    scan->add_option("--t-from", tfrom_s)->required();
    scan->add_option("--t-to", tto_s)->required();
    scan->add_option("--t-step", tstep_s);
    scan->add_option("--csv", csv_path, "output path ('-' for stdout)")->required();

    long amin = 0, amax = 0, bmin = 0, bmax = 0;
    int threads = 0;
    bool integral = false, exact = false;
    auto* search = app.add_subcommand("search", "integral points of F(a,b,c)=0 over a box");
    search->add_option("--amin", amin)->required();
    search->add_option("--amax", amax)->required();
    search->add_option("--bmin", bmin)->required();
    search->add_option("--bmax", bmax)->required();
    search->add_option("--threads", threads);
    search->add_flag("--integral", integral, "keep integer d candidates only");
    search->add_flag("--exact", exact, "force exact Sturm root isolation");
    search->add_option("--csv", csv_path)->required();

    auto* solved = app.add_subcommand("solve-d", "recover d (and p,q) from a surface point");
    solved->add_option("--a", a_s)->required();
    solved->add_option("--b", b_s)->required();
    solved->add_option("--c", c_s)->required();

    auto* param = app.add_subcommand("param", "evaluate the surface parametrization");
    param->add_option("--a", a_s)->required();
    param->add_option("--t", t_s)->required();

    auto* region = app.add_subcommand("region", "sign of -a*P1 on [0,10]x[-10,10]");
    region->add_option("--step", tstep_s)->required();
    region->add_option("--csv", csv_path)->required();
    region->add_option("--svg", svg_path);

    std::string suite = "all";
    auto* verify = app.add_subcommand("verify", "run the identity and oracle suites");
    verify->add_option("--suite", suite, "e-system|lemmas|surface|param|torsion|all");

    auto* torsion = app.add_subcommand("torsion", "torsion of U^2 = X^3+6X^2-20X+8");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    if (check->parsed()) {
        BetaVerdict v = decide_beta(
            {Rat::parse(a_s), Rat::parse(b_s), Rat::parse(c_s), Rat::parse(d_s)});
        if (json_out) {
            std::cout << verdict_json(v).dump(2) << "\n";
        } else {
            std::cout << "kind: " << beta_kind_name(v.kind) << "\n";
            if (v.p)
                std::cout << "quadratic: " << UPoly{*v.q, *v.p, Rat(1)}.str("x") << "\n";
            if (v.disc) std::cout << "disc: " << v.disc->str() << "\n";
            if (v.real) std::cout << "real: " << (*v.real ? "true" : "false") << "\n";
            std::cout << "f_irreducible: " << (v.f_irreducible ? "true" : "false") << "\n";
            if (!v.notes.empty()) std::cout << "notes: " << v.notes << "\n";
        }
        if (require_irr && !v.f_irreducible) {
            std::cerr << "f is reducible\n";
            return 1;
        }
        return 0;
    }
    if (minpoly->parsed()) {
        UPoly r = min_poly_beta(
            {Rat::parse(a_s), Rat::parse(b_s), Rat::parse(c_s), Rat::parse(d_s)});
        std::cout << "R(Y) = " << r.str("Y") << "\n";
        if (auto sq = square_of_quadratic(r)) {
            UPoly quad{sq->second, sq->first, Rat(1)};
            std::cout << "R = (" << quad.str("Y") << ")^2\n";
        }
        return 0;
    }
    if (family->parsed()) {
        std::cout << record_json(make_record(fam_id, Rat::parse(t_s), Rat::parse(u_s))).dump(2)
                  << "\n";
        return 0;
    }
    if (scan->parsed()) {
        std::ofstream file;
        std::ostream& os = open_out(file, csv_path);
        os << "family,t,a,b,c,d,p,q,disc,irreducible\n";
        Rat from = Rat::parse(tfrom_s), to = Rat::parse(tto_s), step = Rat::parse(tstep_s);
        if (step.sign() <= 0) throw error("family-scan: step must be positive");
        for (Rat t = from; t <= to; t += step) {
            FamilyRecord r;
            try {
                r = make_record(fam_id, t, Rat::parse(u_s));
            } catch (const error& e) {
                std::cerr << "skipping t = " << t.str() << ": " << e.what() << "\n";
                continue;
            }
            os << family_id_name(r.id) << "," << r.t.str() << "," << r.coeffs.a.str() << ","
               << r.coeffs.b.str() << "," << r.coeffs.c.str() << "," << r.coeffs.d.str() << ","
               << (r.p ? r.p->str() : "-") << "," << (r.q ? r.q->str() : "-") << ","
               << (r.disc ? r.disc->str() : "-") << "," << (r.irreducible ? "1" : "0") << "\n";
        }
        return 0;
    }
    if (search->parsed()) {
        SearchOptions opts;
        opts.threads = threads;
        opts.exact = exact;
        auto sols = search_box(amin, amax, bmin, bmax, opts);
        std::ofstream file;
        std::ostream& os = open_out(file, csv_path);
        write_search_csv(os, sols, integral);
        std::cerr << sols.size() << " integral surface points\n";
        return 0;
    }
    if (solved->parsed()) {
        auto triples = recover_d(Rat::parse(a_s), Rat::parse(b_s), Rat::parse(c_s));
        json arr = json::array();
        for (const auto& t : triples) {
            json j;
            j["d"] = t.d.str();
            j["p"] = t.p.str();
            j["q"] = t.q.str();
            j["unique"] = t.unique;
            arr.push_back(j);
        }
        std::cout << arr.dump(2) << "\n";
        return 0;
    }
    if (param->parsed()) {
        Rat a = Rat::parse(a_s), t = Rat::parse(t_s);
        ParamEval pe = param_eval(a, t);
        json j;
        j["a"] = pe.a.str();
        j["t"] = pe.t.str();
        j["b"] = pe.b.str();
        j["c"] = pe.c.str();
        j["d"] = pe.d.str();
        j["p"] = pe.p.str();
        j["q"] = pe.q.str();
        if (!a.is_zero()) {
            auto r = disc_sign_check(a, t);
            j["disc"] = r.disc.str();
            j["sign_disc"] = r.sign_disc;
            j["sign_minus_a_P1"] = r.sign_m_a_p1;
            j["sign_minus_a_P1_reciprocal"] = r.sign_m_a_p1_reversed;
        }
        std::cout << j.dump(2) << "\n";
        return 0;
    }
    if (region->parsed()) {
        Rat step = Rat::parse(tstep_s);
        auto cells = region_grid(Rat(0), Rat(10), Rat(-10), Rat(10), step);
        std::ofstream file;
        std::ostream& os = open_out(file, csv_path);
        write_region_csv(os, cells);
        if (!svg_path.empty()) {
            std::ofstream svg(svg_path, std::ios::binary);
            if (!svg) throw error("cannot open output file: " + svg_path);
            svg << region_svg(cells, Rat(0), Rat(10), Rat(-10), Rat(10), step);
        }
        return 0;
    }
    if (verify->parsed()) {
        auto results = verify_suite(suite);
        int failures = 0;
        for (const auto& r : results) {
            std::cout << (r.ok ? "[ ok ] " : "[FAIL] ") << r.name;
            if (!r.details.empty()) std::cout << " — " << r.details;
            std::cout << "\n";
            if (!r.ok) ++failures;
        }
        std::cout << results.size() << " checks, " << failures << " failure(s)\n";
        return failures == 0 ? 0 : 1;
    }
    if (torsion->parsed()) {
        const auto& e = lemma_curve();
        json j;
        j["curve"] = "U^2 = " + e.rhs_poly().str("X");
        j["disc_cubic"] = e.disc_cubic.str();
        json pts = json::array();
        for (const auto& pt : torsion_points(e)) pts.push_back(pt.str());
        j["torsion"] = pts;
        j["order"] = pts.size();
        json counts = json::object();
        for (long p : good_primes(e, 3))
            counts[std::to_string(p)] = count_points_mod_p(e, p);
        j["point_counts_mod_p"] = counts;
        j["note"] = "the Mordell-Weil rank is not computed here; the torsion list is certified "
                    "by the group law and the point counts";
        std::cout << j.dump(2) << "\n";
        return 0;
    }
    return 2;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const qbeta::error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
