// ss3: supersingular genus-3 toolkit over F_{2^n}.
//
// Subcommands: classify-elliptic, count-d, count-quartic, weil, catalog,
// construct, census, verify-tables, moduli.  Machine-readable JSON on
// stdout; --pretty adds indentation.  Exit codes: 0 ok / full agreement,
// 1 disagreement diff, 2 bad flags, 3 scale guard, 4 internal verification
// failure.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <set>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "ss3/auxgeom.hpp"
#include "ss3/elliptic.hpp"
#include "ss3/quartic.hpp"
#include "ss3/synthesis.hpp"
#include "ss3/tower.hpp"

using json = nlohmann::ordered_json;
using namespace ss3;

namespace {

struct ScaleGuardError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Options {
    int n = 0;
    bool pretty = false;
    int jobs = 1;
    int guard_n = 24;           // max base degree
    std::uint64_t census_guard = 1ull << 17;
    std::string out;
};

fe parse_elem(const std::string& s, const Field& f, const std::string& flag) {
    auto v = Field::parse_hex(s);
    if (!v || *v >= f.q())
        throw CLI::ValidationError(flag, "expected a hex field element below q");
    return *v;
}

Field make_field(const Options& o) {
    if (o.n < 1 || o.n > o.guard_n)
        throw ScaleGuardError("degree n outside the configured guard [1," +
                              std::to_string(o.guard_n) + "]");
    return Field::make(o.n);
}

Tower make_tower(const Options& o) {
    if (o.n < 1 || o.n > std::min(o.guard_n, 21))
        throw ScaleGuardError("tower operations need 1 <= n <= 21 within the guard");
    return Tower(make_field(o));
}

json elem_json(fe v) { return Field::to_hex(v); }

json quartic_json(const Quartic& c, int n) {
    return json{{"d", elem_json(c.d)},
                {"e", elem_json(c.e)},
                {"f", elem_json(c.f)},
                {"g", elem_json(c.g)},
                {"n", n}};
}

json weil_json(const WeilPoly& w) {
    return json{{"a1", w.a1}, {"a2", w.a2}, {"a3", w.a3}, {"q", w.q}};
}

json isom_json(const IsomClass& c) {
    json j{{"label", std::string(label_name(c.label))}};
    if (c.label == EllLabel::Ea || c.label == EllLabel::Eat)
        j["coset"] = elem_json(c.coset);
    return j;
}

void emit(const Options& o, const json& j) {
    std::string text = o.pretty ? j.dump(2) : j.dump();
    if (!o.out.empty()) {
        std::ofstream f(o.out);
        f << text << "\n";
    } else {
        std::cout << text << "\n";
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"supersingular genus-3 quartics over binary fields"};
    app.require_subcommand(1);
    app.fallthrough();
    Options o;
    app.add_flag("--pretty", o.pretty, "indent JSON output");
    app.add_option("--jobs", o.jobs, "worker threads for sweeps")->default_val(1);
    app.add_option("--guard", o.guard_n, "max base-field degree")->default_val(24);
    app.add_option("--census-guard", o.census_guard,
                   "max number of quartics a census may enumerate");
    app.add_option("--out", o.out, "write JSON to a file instead of stdout");
    std::string moduli_file;
    app.add_option("--moduli-file", moduli_file,
                   "modulus table override, lines \"n:hex\" (or env SS3_MODULI_FILE)");

    std::string a_hex = "0", b_hex = "0", c_hex = "0";
    std::string A_hex = "1", B_hex = "0", C_hex = "0", D_hex = "0";
    std::string d_hex = "0", e_hex = "0", f_hex = "0", g_hex = "1";
    std::string weil_arg;
    bool naive = false, oracle = false, want_max = false, want_min = false;
    int ext = 1;

    auto* cls = app.add_subcommand("classify-elliptic",
                                   "isomorphism class and trace of y^2+y=ax^3+bx^2+c");
    cls->add_option("-n", o.n, "field degree")->required();
    cls->add_option("--a", a_hex)->required();
    cls->add_option("--b", b_hex);
    cls->add_option("--c", c_hex);

    auto* cd = app.add_subcommand("count-d", "analyze y^2+y = Ax^9+Bx^3+Cx+D");
    cd->add_option("-n", o.n)->required();
    cd->add_option("--A", A_hex)->required();
    cd->add_option("--B", B_hex);
    cd->add_option("--C", C_hex);
    cd->add_option("--D", D_hex);

    auto* cq = app.add_subcommand("count-quartic",
                                  "points of Y^4+fY^2+gY = X^3+dX^2+e over k, k2, k3");
    cq->add_option("-n", o.n)->required();
    cq->add_option("--d", d_hex);
    cq->add_option("--e", e_hex);
    cq->add_option("--f", f_hex);
    cq->add_option("--g", g_hex)->required();
    cq->add_option("--ext", ext, "extension degree to count over (1, 2 or 3)")
        ->check(CLI::Range(1, 3));

    auto* wl = app.add_subcommand("weil", "Weil polynomial of a quartic's Jacobian");
    wl->add_option("-n", o.n)->required();
    wl->add_option("--d", d_hex);
    wl->add_option("--e", e_hex);
    wl->add_option("--f", f_hex);
    wl->add_option("--g", g_hex)->required();
    wl->add_flag("--naive", naive, "use the counting route instead of classification");

    auto* cat = app.add_subcommand("catalog",
                                   "all supersingular threefold classes with verdicts");
    cat->add_option("-n", o.n)->required();

    auto* con = app.add_subcommand("construct", "quartic witness for a target class");
    con->add_option("-n", o.n)->required();
    con->add_option("--weil", weil_arg, "target a1,a2,a3");
    con->add_flag("--maximal", want_max, "target the maximal class (square q)");
    con->add_flag("--minimal", want_min, "target the minimal class (square q)");

    auto* cen = app.add_subcommand("census",
                                   "sweep all quartics; compare with the prediction");
    cen->add_option("-n", o.n)->required();
    cen->add_flag("--oracle", oracle, "count points instead of classifying");

    auto* vt = app.add_subcommand("verify-tables",
                                  "check counts against traces for every model");
    vt->add_option("-n", o.n)->required();

    auto* md = app.add_subcommand("moduli", "the modulus table in use");
    md->add_option("-n", o.n, "largest degree to list")->default_val(16);

    CLI11_PARSE(app, argc, argv);

    try {
        if (const char* envf = std::getenv("SS3_MODULI_FILE"))
            Field::load_moduli_file(envf);
        if (!moduli_file.empty()) Field::load_moduli_file(moduli_file);

        if (cls->parsed()) {
            Field f = make_field(o);
            fe a = parse_elem(a_hex, f, "--a");
            fe b = parse_elem(b_hex, f, "--b");
            fe c = parse_elem(c_hex, f, "--c");
            if (a == 0) throw CLI::ValidationError("--a", "must be nonzero");
            IsomClass ic = classify(f, {a, b, c});
            json j = isom_json(ic);
            j["t"] = frobenius_trace(f, ic.label);
            emit(o, j);
        } else if (cd->parsed()) {
            Field f = make_field(o);
            DCurveParams p{parse_elem(A_hex, f, "--A"), parse_elem(B_hex, f, "--B"),
                           parse_elem(C_hex, f, "--C"), parse_elem(D_hex, f, "--D")};
            if (p.A == 0) throw CLI::ValidationError("--A", "must be nonzero");
            DCurveAnalysis an = analyze_d(f, p);
            json basis = json::array();
            for (fe v : an.basis) basis.push_back(elem_json(v));
            emit(o, json{{"w", an.w},
                         {"Qvanishes", an.q_vanishes},
                         {"count", an.count},
                         {"sign", an.sign},
                         {"kernel_basis", basis}});
        } else if (cq->parsed()) {
            Tower tw = make_tower(o);
            const Field& k = tw.k();
            Quartic c{parse_elem(d_hex, k, "--d"), parse_elem(e_hex, k, "--e"),
                      parse_elem(f_hex, k, "--f"), parse_elem(g_hex, k, "--g")};
            if (c.g == 0) throw CLI::ValidationError("--g", "must be nonzero");
            if (3 * o.n > 24 && ext == 3)
                throw ScaleGuardError("counting over k3 limited to n <= 8");
            if (2 * o.n > 24 && ext == 2)
                throw ScaleGuardError("counting over k2 limited to n <= 12");
            std::uint64_t cnt = 0;
            if (ext == 1)
                cnt = quartic_count(k, c.d, c.e, c.f, c.g);
            else if (ext == 2)
                cnt = quartic_count(tw.k2(), tw.embed2(c.d), tw.embed2(c.e),
                                    tw.embed2(c.f), tw.embed2(c.g));
            else
                cnt = quartic_count(tw.k3(), tw.embed3(c.d), tw.embed3(c.e),
                                    tw.embed3(c.f), tw.embed3(c.g));
            json j = quartic_json(c, o.n);
            j["type"] = std::string(kind_name(type_of(tw, c).kind));
            j["ext"] = ext;
            j["count"] = cnt;
            emit(o, j);
        } else if (wl->parsed()) {
            Tower tw = make_tower(o);
            const Field& k = tw.k();
            Quartic c{parse_elem(d_hex, k, "--d"), parse_elem(e_hex, k, "--e"),
                      parse_elem(f_hex, k, "--f"), parse_elem(g_hex, k, "--g")};
            if (c.g == 0) throw CLI::ValidationError("--g", "must be nonzero");
            WeilPoly w;
            if (naive) {
                if (3 * o.n > 24)
                    throw ScaleGuardError("the counting route is limited to n <= 8");
                w = naive_weil_poly(tw, c);
            } else {
                w = weil_poly(tw, c);
            }
            json j = quartic_json(c, o.n);
            j["type"] = std::string(kind_name(type_of(tw, c).kind));
            j["weil"] = weil_json(w);
            j["route"] = naive ? "counting" : "classification";
            emit(o, j);
        } else if (cat->parsed()) {
            Field k = make_field(o);
            json out = json::array();
            for (const auto& entry : enumerate_classes(k)) {
                Verdict v = contains_jacobian(k, entry.spec);
                json j{{"shape", std::string(shape_name(entry.spec.shape))},
                       {"weil", weil_json(entry.poly)},
                       {"decomposition", entry.decomposition},
                       {"attainable", v.attainable},
                       {"reason", v.reason}};
                out.push_back(std::move(j));
            }
            emit(o, out);
        } else if (con->parsed()) {
            Tower tw = make_tower(o);
            const Field& k = tw.k();
            WeilPoly target;
            if (want_max == want_min) {
                if (weil_arg.empty())
                    throw CLI::ValidationError(
                        "construct", "need exactly one of --weil, --maximal, --minimal");
                long long a1, a2, a3;
                if (std::sscanf(weil_arg.c_str(), "%lld,%lld,%lld", &a1, &a2, &a3) != 3)
                    throw CLI::ValidationError("--weil", "expected a1,a2,a3");
                target = WeilPoly{a1, a2, a3, k.q()};
            } else {
                target = want_max ? maximal_class_poly(k) : minimal_class_poly(k);
            }
            ConstructOutcome out = construct_for_weil(tw, target);
            json j{{"weil", weil_json(target)}};
            if (out.witness) {
                j["attainable"] = true;
                j["witness"] = quartic_json(*out.witness, o.n);
                j["realization"] = out.detail;
                j["N1"] = quartic_count(k, out.witness->d, out.witness->e,
                                        out.witness->f, out.witness->g);
            } else {
                j["attainable"] = false;
                for (const auto& entry : enumerate_classes(k))
                    if (entry.poly == target) j["reason"] = contains_jacobian(k, entry.spec).reason;
            }
            emit(o, j);
        } else if (cen->parsed()) {
            Tower tw = make_tower(o);
            if (oracle && 3 * o.n > 24)
                throw ScaleGuardError("census --oracle is limited to n <= 8");
            CensusResult res = census(tw, o.jobs, oracle, o.census_guard);
            CensusDiff diff = compare_census(tw.k(), res);
            json realized = json::array();
            for (const auto& [p, cnt] : res.realized) {
                json j = weil_json(p);
                j["quartics"] = cnt;
                realized.push_back(std::move(j));
            }
            json dj{{"predicted_not_realized", json::array()},
                    {"realized_not_predicted", json::array()}};
            for (const auto& p : diff.predicted_not_realized)
                dj["predicted_not_realized"].push_back(weil_json(p));
            for (const auto& p : diff.realized_not_predicted)
                dj["realized_not_predicted"].push_back(weil_json(p));
            emit(o, json{{"n", o.n},
                         {"route", oracle ? "counting" : "classification"},
                         {"realized", realized},
                         {"diff", dj},
                         {"agreement", diff.empty()}});
            return diff.empty() ? 0 : 1;
        } else if (vt->parsed()) {
            Field f = make_field(o);
            if (o.n > 10) throw ScaleGuardError("verify-tables sweeps need n <= 10");
            std::uint64_t q = f.q(), bad = 0;
            std::set<std::pair<EllLabel, fe>> classes;
            for (fe a = 1; a < q; ++a) {
                ClassifierA c(f, a);
                for (fe b = 0; b < q; ++b) {
                    auto bp = c.resolve_b(b);
                    std::uint64_t m0 = 0;
                    for (fe x = 0; x < q; ++x)
                        if (f.trace(f.mul(f.sqr(x), f.mul(a, x) ^ b)) == 0) ++m0;
                    for (fe cc = 0; cc < q; ++cc) {
                        IsomClass ic = c.with_c(bp, cc);
                        classes.insert({ic.label, ic.coset});
                        std::int64_t t = frobenius_trace(f, ic.label);
                        std::uint64_t cnt = 1 + 2 * (f.trace(cc) == 0 ? m0 : q - m0);
                        if (static_cast<std::int64_t>(cnt) !=
                            static_cast<std::int64_t>(q) + 1 + t)
                            ++bad;
                    }
                }
            }
            bool classes_ok = classes.size() == (o.n % 2 == 0 ? 7u : 3u);
            emit(o, json{{"n", o.n},
                         {"models", (q - 1) * q * q},
                         {"count_mismatches", bad},
                         {"isomorphism_classes", classes.size()},
                         {"classes_ok", classes_ok},
                         {"agreement", bad == 0 && classes_ok}});
            return (bad == 0 && classes_ok) ? 0 : 1;
        } else if (md->parsed()) {
            json out = json::array();
            for (int deg = 1; deg <= o.n && deg <= 63; ++deg) {
                Field f = Field::make(deg);
                out.push_back(json{{"n", deg},
                                   {"modulus", Field::to_hex(f.modulus())},
                                   {"c0", elem_json(f.c0())}});
            }
            emit(o, out);
        }
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const ScaleGuardError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::length_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::logic_error& e) {
        std::cerr << "internal verification failure: " << e.what() << "\n";
        return 4;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
