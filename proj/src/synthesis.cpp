#include "ss3/synthesis.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace ss3 {

std::string_view shape_name(ClassShape s) {
    switch (s) {
        case ClassShape::Simple: return "simple";
        case ClassShape::EllTimesSurface: return "elliptic_x_surface";
        case ClassShape::TripleSplit: return "triple_split";
    }
    return "?";
}

std::array<EllLabel, 3> sorted_triple(EllLabel a, EllLabel b, EllLabel c) {
    std::array<EllLabel, 3> t{a, b, c};
    std::sort(t.begin(), t.end());
    return t;
}

namespace {

EllLabel label_for_trace(int n, std::int64_t t) {
    for (EllLabel l : labels_for(n))
        if (frobenius_trace_deg(n, l) == t) return l;
    throw std::invalid_argument("no supersingular elliptic class with that trace");
}

std::string surface_str(std::pair<std::int64_t, std::int64_t> s) {
    std::ostringstream os;
    os << "A(" << s.first << "," << s.second << ")";
    return os.str();
}

WeilPoly expand_ell_surface(const Field& k, std::int64_t s,
                            std::pair<std::int64_t, std::int64_t> surf) {
    auto [s2, t2] = surf;
    std::int64_t q = static_cast<std::int64_t>(k.q());
    return {s + s2, t2 + s * s2 + q, s * t2 + 2 * q * s2, k.q()};
}

}  // namespace

std::vector<CatalogEntry> enumerate_classes(const Field& k) {
    int n = k.n();
    std::int64_t q = static_cast<std::int64_t>(k.q());
    std::vector<CatalogEntry> out;
    std::set<WeilPoly> seen;
    auto add = [&](IsogenyClassSpec spec, WeilPoly p, std::string dec) {
        if (!seen.insert(p).second)
            throw std::logic_error("catalog collision at a1=" + std::to_string(p.a1) +
                                   " a2=" + std::to_string(p.a2) +
                                   " a3=" + std::to_string(p.a3));
        out.push_back({spec, p, std::move(dec)});
    };

    auto labels = labels_for(n);
    for (std::size_t i = 0; i < labels.size(); ++i)
        for (std::size_t j = i; j < labels.size(); ++j)
            for (std::size_t l = j; l < labels.size(); ++l) {
                std::array<std::int64_t, 3> ts{frobenius_trace_deg(n, labels[i]),
                                               frobenius_trace_deg(n, labels[j]),
                                               frobenius_trace_deg(n, labels[l])};
                std::sort(ts.begin(), ts.end());
                IsogenyClassSpec spec{ClassShape::TripleSplit, 0, 0, {0, 0}, ts};
                std::string dec = std::string(label_name(labels[i])) + " x " +
                                  std::string(label_name(labels[j])) + " x " +
                                  std::string(label_name(labels[l]));
                add(spec, weil_of_split(k, ts), std::move(dec));
            }

    std::vector<std::pair<std::int64_t, std::int64_t>> surfaces;
    if (n % 2 == 0) {
        std::int64_t rq = std::int64_t{1} << (n / 2);
        surfaces = {{0, 0}, {0, -q}, {rq, q}, {-rq, q}};
    } else {
        std::int64_t r2q = std::int64_t{1} << ((n + 1) / 2);
        surfaces = {{0, -2 * q}, {0, q}, {0, -q}, {r2q, q}, {-r2q, q}};
    }
    for (EllLabel l : labels)
        for (auto surf : surfaces) {
            std::int64_t s = frobenius_trace_deg(n, l);
            IsogenyClassSpec spec{ClassShape::EllTimesSurface, 0, s, surf, {}};
            add(spec, expand_ell_surface(k, s, surf),
                std::string(label_name(l)) + " x " + surface_str(surf));
        }

    if (n % 2 == 0) {
        std::int64_t rq3 = q * (std::int64_t{1} << (n / 2));  // sqrt(q^3)
        for (int sign : {+1, -1}) {
            IsogenyClassSpec spec{ClassShape::Simple, sign, 0, {0, 0}, {}};
            add(spec, WeilPoly{0, 0, sign * rq3, k.q()}, "simple");
        }
    }

    std::sort(out.begin(), out.end(),
              [](const CatalogEntry& a, const CatalogEntry& b) { return a.poly < b.poly; });
    return out;
}

Verdict contains_jacobian(const Field& k, const IsogenyClassSpec& spec) {
    std::uint64_t q = k.q();
    int n = k.n();
    bool sq = n % 2 == 0;
    std::int64_t qi = static_cast<std::int64_t>(q);
    switch (spec.shape) {
        case ClassShape::Simple:
            return {true, "simple class, realized by a quartic of cubic type"};
        case ClassShape::EllTimesSurface: {
            auto [s2, t2] = spec.surface;
            std::int64_t s = spec.ell_trace;
            if (sq) {
                std::int64_t rq = std::int64_t{1} << (n / 2);
                if (t2 == qi && (s2 == rq || s2 == -rq))
                    return {false, "surface family with cubic coefficient +-sqrt(q) is never a Jacobian factor here"};
                if (q == 4) {
                    if (s2 == 0 && t2 == 0 && (s == 0 || s == 4 || s == -4))
                        return {false, "excluded elliptic x surface product over F4"};
                    if (s == 4 && s2 == 0 && t2 == -4)
                        return {false, "excluded elliptic x surface product over F4"};
                }
                return {true, "elliptic x surface class, realized by a quartic"};
            }
            std::int64_t r2q = std::int64_t{1} << ((n + 1) / 2);
            if (t2 == qi && (s2 == r2q || s2 == -r2q)) {
                if (s == 0)
                    return {false, "trace-0 elliptic times the sqrt(2q)-surface family is never attained"};
                if (s == s2)
                    return {false, "sign-matched sqrt(2q) elliptic and surface factors are never attained"};
            }
            if (q == 8 && s == 4 && s2 == 0 && t2 == -16)
                return {false, "excluded elliptic x surface product over F8"};
            if (q == 2) {
                if (s2 == 0 && t2 == -4)
                    return {false, "surface A(0,-4) is never a Jacobian factor over F2"};
                if ((s == 2 && s2 == 0 && t2 == -2) || (s == -2 && s2 == 0 && t2 == 2))
                    return {false, "excluded elliptic x surface product over F2"};
                if (s == 2 && s2 == -2 && t2 == 2)
                    return {false, "excluded elliptic x surface product over F2"};
            }
            return {true, "elliptic x surface class, realized by a quartic"};
        }
        case ClassShape::TripleSplit: {
            auto T = spec.traces;  // ascending
            auto is = [&](std::int64_t a, std::int64_t b, std::int64_t c) {
                std::array<std::int64_t, 3> w{a, b, c};
                std::sort(w.begin(), w.end());
                return T == w;
            };
            if (q == 2) return {false, "split classes contain no Jacobians over F2"};
            if (q == 4) {
                bool has2 = std::count(T.begin(), T.end(), 2) > 0;
                bool hasm2 = std::count(T.begin(), T.end(), -2) > 0;
                bool listed = is(0, 2, 2) || is(0, -2, -2) || is(4, 2, 2) ||
                              is(4, -2, -2) || is(0, 0, 2) || is(-4, 4, -2);
                if ((has2 && hasm2) || listed)
                    return {true, "attained split class over F4"};
                return {false, "excluded split class over F4"};
            }
            if (q == 8 && is(-4, -4, -4))
                return {false, "excluded split class over F8"};
            if (q == 16) {
                if (is(0, 0, -8) || is(0, 8, 8) || is(0, -8, -8) || is(8, 8, 8) ||
                    is(-8, -8, -8) || is(-8, 8, 8) || is(-4, 8, 8) || is(-4, -8, -8))
                    return {false, "excluded split class over F16"};
            }
            if (q == 64 && is(-16, -16, -16))
                return {false, "excluded split class over F64"};
            return {true, "split class, realized by a quartic"};
        }
    }
    throw std::logic_error("unreachable");
}

bool cubic_attainable(std::uint64_t q, EllLabel target) {
    if (q == 4 && target == EllLabel::E1t) return false;
    if (q == 2 && target == EllLabel::H) return false;
    return true;
}

bool quadratic_attainable(std::uint64_t q, EllLabel E, EllLabel F) {
    using L = EllLabel;
    if (q == 16) return !((E == L::E1 && F == L::E1t) || (E == L::E1t && F == L::E1));
    if (q == 8) return !((E == L::H && F == L::E1) || (E == L::Ht && F == L::E1t));
    if (q == 4) {
        auto in3 = [](L x) { return x == L::E0 || x == L::E1 || x == L::E1t; };
        if (in3(E) && in3(F)) return false;
        if ((E == L::E1 && F == L::Eat) || (E == L::E1t && F == L::Ea) ||
            (E == L::Ea && F == L::E1t) || (E == L::Eat && F == L::E1))
            return false;
        return true;
    }
    if (q == 2)
        return (E == L::E1 && F == L::Ea) || (E == L::E1 && F == L::Eat) ||
               (E == L::H && F == L::Eat) || (E == L::Ht && F == L::Ea);
    return true;
}

bool split_attainable(std::uint64_t q, std::array<EllLabel, 3> T) {
    using L = EllLabel;
    std::sort(T.begin(), T.end());
    auto is = [&](L a, L b, L c) { return T == sorted_triple(a, b, c); };
    if (q == 2) return false;
    if (q == 4)
        return is(L::E1, L::Ea, L::Ea) || is(L::E1t, L::Ea, L::Eat) ||
               is(L::E1, L::Eat, L::Eat) || is(L::E0, L::Ea, L::Ea) ||
               is(L::E0, L::Ea, L::Eat) || is(L::E0, L::Eat, L::Eat);
    if (q == 8) return !(is(L::H, L::H, L::H) || is(L::H, L::Ht, L::Ht));
    if (q == 16) {
        if (is(L::E1, L::E1, L::Eat) || is(L::E1t, L::E1t, L::Eat) ||
            is(L::E1, L::E1t, L::Ea))
            return false;
        auto in3 = [](L x) { return x == L::E0 || x == L::E1 || x == L::E1t; };
        if (in3(T[0]) && in3(T[1]) && in3(T[2])) return false;
        return true;
    }
    if (q == 64) return !(is(L::E1, L::E1, L::E1t) || is(L::E1t, L::E1t, L::E1t));
    return true;
}

Quartic quartic_from_data(const Tower& tw, std::array<fe, 3> aset, int ext, fe d, fe e) {
    const Field& Fx = ext == 1 ? tw.k() : ext == 2 ? tw.k2() : tw.k3();
    if (aset[0] == 0 || aset[1] == 0 || aset[2] == 0)
        throw std::invalid_argument("quotient data must be nonzero");
    if ((aset[0] ^ aset[1] ^ aset[2]) != 0)
        throw std::invalid_argument("quotient data must sum to zero");
    if (aset[0] == aset[1] || aset[0] == aset[2] || aset[1] == aset[2])
        throw std::invalid_argument("quotient data must be pairwise distinct");
    fe s1 = Fx.sqrt(aset[0]), s2 = Fx.sqrt(aset[1]), s3 = Fx.sqrt(aset[2]);
    fe g2 = Fx.inv(Fx.mul(s1, Fx.mul(s2, s3)));
    fe gE = Fx.sqrt(g2);
    fe fE = Fx.mul(g2, Fx.mul(s1, s2) ^ Fx.mul(s1, s3) ^ Fx.mul(s2, s3));
    fe fk = fE, gk = gE;
    if (ext == 2) {
        auto f0 = tw.retract2(fE), g0 = tw.retract2(gE);
        if (!f0 || !g0) throw std::invalid_argument("quotient data is not Galois-stable");
        fk = *f0;
        gk = *g0;
    } else if (ext == 3) {
        auto f0 = tw.retract3(fE), g0 = tw.retract3(gE);
        if (!f0 || !g0) throw std::invalid_argument("quotient data is not Galois-stable");
        fk = *f0;
        gk = *g0;
    }
    return {d, e, fk, gk};
}

namespace {

void verify_witness(const Tower& tw, const Quartic& qq, const WeilPoly& want,
                    const char* what) {
    WeilPoly got = weil_poly(tw, qq);
    if (!(got == want))
        throw std::logic_error(std::string("internal verification failure: ") + what);
}

}  // namespace

std::optional<Quartic> construct_cubic_type(const Tower& tw, EllLabel target, fe coset) {
    const Field& k = tw.k();
    const Field& k3 = tw.k3();
    std::uint64_t q = k.q();
    if (!cubic_attainable(q, target)) return std::nullopt;
    WeilPoly want = weil_of_cubic(k, frobenius_trace(k3, target));

    auto cubic_has_root = [&](fe f, fe g) {
        for (fe y = 0; y < q; ++y)
            if ((k.mul(k.sqr(y), y) ^ k.mul(f, y) ^ g) == 0) return true;
        return false;
    };
    auto try_a = [&](fe a) -> std::optional<Quartic> {
        ClassifierA cls(k3, a);
        for (fe d = 0; d < q; ++d) {
            IsomClass ic = cls.classify(k3.mul(a, tw.embed3(d)), 0);
            if (ic.label != target) continue;
            if (coset != 0 && ic.coset != coset) continue;
            fe a2 = tw.conj3(a);
            Quartic qq = quartic_from_data(tw, {a, a2, tw.conj3(a2)}, 3, d, 0);
            verify_witness(tw, qq, want, "cubic-type constructor");
            return qq;
        }
        return std::nullopt;
    };

    if (k.n() % 2 == 0) {
        if (target == EllLabel::Ea || target == EllLabel::Eat) {
            for (fe j = 1; j < q; ++j) {
                if (k.is_cube(j)) continue;  // x^3+j irreducible, roots are non-cubes in k3
                if (coset != 0 && tw.embed3(k.pow(j, (q - 1) / 3)) != coset) continue;
                if (auto r = try_a(*k3.cube_root(tw.embed3(j)))) return r;
            }
        } else {
            for (fe j = 0; j < q; ++j) {
                if (cubic_has_root(j, 1)) continue;  // x^3+jx+1 irreducible, roots are cubes
                if (auto r = try_a(irreducible_cubic_root(tw, j, 1))) return r;
            }
        }
    } else {
        for (fe j = 0; j < q; ++j) {
            // x^3+x^2+jx+(j+1), depressed by x = y+1 to y^3+(j+1)y+1
            if (cubic_has_root(j ^ 1, 1)) continue;
            fe u = irreducible_cubic_root(tw, j ^ 1, 1) ^ 1;
            fe a = k3.mul(k3.sqr(u), u);
            if (tw.rel_trace3(a) != 0)
                throw std::logic_error("u^3 should have zero relative trace");
            if (auto r = try_a(a)) return r;
        }
    }
    throw std::logic_error("attainable cubic-type class not realized by the search");
}

std::optional<Quartic> construct_quadratic_type(const Tower& tw, EllLabel E, EllLabel F) {
    const Field& k = tw.k();
    const Field& k2 = tw.k2();
    std::uint64_t q = k.q();
    if (!quadratic_attainable(q, E, F)) return std::nullopt;
    WeilPoly want =
        weil_of_quadratic(k, frobenius_trace(k, E), frobenius_trace(k2, F));
    bool need_f_cube = label_is_cube_family(F);
    bool need_e_cube = label_is_cube_family(E);
    for (fe ap = 1; ap < k2.q(); ++ap) {
        if (tw.in_k2_image(ap)) continue;  // a' ranges over k2 \ k
        if (k2.is_cube(ap) != need_f_cube) continue;
        fe a = tw.rel_trace2(ap);
        if (a == 0) throw std::logic_error("relative trace of a' outside k cannot vanish");
        if (k.n() % 2 == 0 && k.is_cube(a) != need_e_cube) continue;
        ClassifierA ce(k, a);
        ClassifierA cf(k2, ap);
        fe e1 = 0;
        while (e1 < q && k.trace(k.mul(a, e1)) == 0) ++e1;
        for (int ei = 0; ei < 2; ++ei) {
            fe e = ei ? e1 : 0;
            fe cE = k.mul(a, e);
            fe cF = k2.mul(ap, tw.embed2(e));
            for (fe d = 0; d < q; ++d) {
                if (ce.classify(k.mul(a, d), cE).label != E) continue;
                if (cf.classify(k2.mul(ap, tw.embed2(d)), cF).label != F) continue;
                Quartic qq =
                    quartic_from_data(tw, {tw.embed2(a), ap, tw.conj2(ap)}, 2, d, e);
                verify_witness(tw, qq, want, "quadratic-type constructor");
                return qq;
            }
        }
    }
    throw std::logic_error("attainable quadratic-type pair not realized by the search");
}

std::optional<Quartic> construct_split(const Tower& tw, std::array<EllLabel, 3> T) {
    const Field& k = tw.k();
    std::uint64_t q = k.q();
    std::sort(T.begin(), T.end());
    if (!split_attainable(q, T)) return std::nullopt;
    std::array<std::int64_t, 3> ts{frobenius_trace(k, T[0]), frobenius_trace(k, T[1]),
                                   frobenius_trace(k, T[2])};
    WeilPoly want = weil_of_split(k, ts);
    int want_cubes = 0;
    for (EllLabel l : T) want_cubes += label_is_cube_family(l) ? 1 : 0;
    for (fe x = 1; x < q; ++x) {
        for (fe y = x + 1; y < q; ++y) {
            fe z = x ^ y;
            if (z <= y) continue;
            if (k.n() % 2 == 0) {
                int cubes = (k.is_cube(x) ? 1 : 0) + (k.is_cube(y) ? 1 : 0) +
                            (k.is_cube(z) ? 1 : 0);
                if (cubes != want_cubes) continue;
            }
            std::array<fe, 3> as{x, y, z};
            ClassifierA c1(k, x), c2(k, y), c3(k, z);
            // e = 0 plus one bitwist representative per pair
            std::vector<fe> ecands{0};
            for (int i = 0; i < 3; ++i)
                for (int j = i + 1; j < 3; ++j)
                    for (fe e = 1; e < q; ++e)
                        if (k.trace(k.mul(as[static_cast<std::size_t>(i)], e)) == 1 &&
                            k.trace(k.mul(as[static_cast<std::size_t>(j)], e)) == 1) {
                            ecands.push_back(e);
                            break;
                        }
            std::sort(ecands.begin(), ecands.end());
            ecands.erase(std::unique(ecands.begin(), ecands.end()), ecands.end());
            for (fe e : ecands) {
                for (fe d = 0; d < q; ++d) {
                    auto got = sorted_triple(
                        c1.classify(k.mul(x, d), k.mul(x, e)).label,
                        c2.classify(k.mul(y, d), k.mul(y, e)).label,
                        c3.classify(k.mul(z, d), k.mul(z, e)).label);
                    if (got != T) continue;
                    Quartic qq = quartic_from_data(tw, as, 1, d, e);
                    verify_witness(tw, qq, want, "split constructor");
                    return qq;
                }
            }
        }
    }
    throw std::logic_error("attainable split class not realized by the search");
}

WeilPoly maximal_class_poly(const Field& k) {
    if (k.n() % 2 != 0) throw std::invalid_argument("maximal classes need square q");
    std::int64_t t = std::int64_t{2} << (k.n() / 2);  // 2 sqrt(q)
    return weil_of_split(k, {t, t, t});
}

WeilPoly minimal_class_poly(const Field& k) {
    if (k.n() % 2 != 0) throw std::invalid_argument("minimal classes need square q");
    std::int64_t t = std::int64_t{2} << (k.n() / 2);
    return weil_of_split(k, {-t, -t, -t});
}

ConstructOutcome construct_for_weil(const Tower& tw, const WeilPoly& target) {
    const Field& k = tw.k();
    int n = k.n();
    if (target.q != k.q()) throw std::invalid_argument("target polynomial has wrong q");
    auto catalog = enumerate_classes(k);
    bool known = false;
    for (const auto& ce : catalog)
        if (ce.poly == target) known = true;
    if (!known)
        throw std::invalid_argument("target is not a supersingular threefold class here");

    // Split realization first (cheapest witnesses), then quadratic, then cubic.
    auto labels = labels_for(n);
    for (std::size_t i = 0; i < labels.size(); ++i)
        for (std::size_t j = i; j < labels.size(); ++j)
            for (std::size_t l = j; l < labels.size(); ++l) {
                std::array<std::int64_t, 3> ts{frobenius_trace_deg(n, labels[i]),
                                               frobenius_trace_deg(n, labels[j]),
                                               frobenius_trace_deg(n, labels[l])};
                if (!(weil_of_split(k, ts) == target)) continue;
                auto T = sorted_triple(labels[i], labels[j], labels[l]);
                if (!split_attainable(k.q(), T)) continue;
                auto w = construct_split(tw, T);
                if (!w) continue;
                return {*w, std::string("split type ") + std::string(label_name(T[0])) +
                                " x " + std::string(label_name(T[1])) + " x " +
                                std::string(label_name(T[2]))};
            }
    for (EllLabel E : labels)
        for (EllLabel F : labels_for(2 * n)) {
            if (!(weil_of_quadratic(k, frobenius_trace_deg(n, E),
                                    frobenius_trace_deg(2 * n, F)) == target))
                continue;
            if (!quadratic_attainable(k.q(), E, F)) continue;
            auto w = construct_quadratic_type(tw, E, F);
            if (!w) continue;
            return {*w, std::string("quadratic type (") + std::string(label_name(E)) +
                            ", " + std::string(label_name(F)) + ")"};
        }
    for (EllLabel L : labels_for(3 * n)) {
        if (!(weil_of_cubic(k, frobenius_trace_deg(3 * n, L)) == target)) continue;
        if (!cubic_attainable(k.q(), L)) continue;
        auto w = construct_cubic_type(tw, L);
        if (!w) continue;
        return {*w, std::string("cubic type ") + std::string(label_name(L))};
    }
    return {std::nullopt, "no quartic type attains this class"};
}

CensusResult census(const Tower& tw, int jobs, bool oracle, std::uint64_t guard) {
    const Field& k = tw.k();
    std::uint64_t q = k.q();
    if ((q - 1) * q * q * q > guard)
        throw std::length_error("census size exceeds the scale guard");
    if (jobs < 1) jobs = 1;

    std::vector<fe> e2tab(q), e3tab(q);
    for (fe v = 0; v < q; ++v) {
        e2tab[v] = tw.embed2(v);
        e3tab[v] = tw.embed3(v);
    }

    auto run_g_range = [&](fe g_lo, fe g_hi, std::map<WeilPoly, std::uint64_t>& tally) {
        const Field& k2 = tw.k2();
        const Field& k3 = tw.k3();
        for (fe g = g_lo; g < g_hi; ++g) {
            fe ginv = k.inv(g);
            for (fe f = 0; f < q; ++f) {
                Quartic base{0, 0, f, g};
                if (oracle) {
                    for (fe d = 0; d < q; ++d)
                        for (fe e = 0; e < q; ++e)
                            ++tally[naive_weil_poly(tw, {d, e, f, g})];
                    continue;
                }
                QuarticType t = type_of(tw, base);
                switch (t.kind) {
                    case QuarticKind::Split: {
                        std::array<fe, 3> av{};
                        for (int i = 0; i < 3; ++i)
                            av[static_cast<std::size_t>(i)] =
                                k.sqr(k.mul(ginv, t.roots_k[static_cast<std::size_t>(i)]));
                        ClassifierA c0(k, av[0]), c1(k, av[1]), c2(k, av[2]);
                        for (fe d = 0; d < q; ++d) {
                            auto b0 = c0.resolve_b(k.mul(av[0], d));
                            auto b1 = c1.resolve_b(k.mul(av[1], d));
                            auto b2 = c2.resolve_b(k.mul(av[2], d));
                            for (fe e = 0; e < q; ++e) {
                                std::array<std::int64_t, 3> ts{
                                    frobenius_trace(k, c0.with_c(b0, k.mul(av[0], e)).label),
                                    frobenius_trace(k, c1.with_c(b1, k.mul(av[1], e)).label),
                                    frobenius_trace(k, c2.with_c(b2, k.mul(av[2], e)).label)};
                                ++tally[weil_of_split(k, ts)];
                            }
                        }
                        break;
                    }
                    case QuarticKind::Quadratic: {
                        fe a = k.sqr(k.mul(ginv, t.root_k));
                        fe ap = k2.sqr(k2.mul(e2tab[ginv], t.root_ext));
                        ClassifierA ck(k, a), cq(k2, ap);
                        for (fe d = 0; d < q; ++d) {
                            auto bk = ck.resolve_b(k.mul(a, d));
                            auto bq = cq.resolve_b(k2.mul(ap, e2tab[d]));
                            for (fe e = 0; e < q; ++e) {
                                std::int64_t s =
                                    frobenius_trace(k, ck.with_c(bk, k.mul(a, e)).label);
                                std::int64_t t2 = frobenius_trace(
                                    k2, cq.with_c(bq, k2.mul(ap, e2tab[e])).label);
                                ++tally[weil_of_quadratic(k, s, t2)];
                            }
                        }
                        break;
                    }
                    case QuarticKind::Cubic: {
                        fe a = k3.sqr(k3.mul(e3tab[ginv], t.root_ext));
                        ClassifierA cc(k3, a);
                        for (fe d = 0; d < q; ++d) {
                            auto bp = cc.resolve_b(k3.mul(a, e3tab[d]));
                            for (fe e = 0; e < q; ++e) {
                                std::int64_t t3 = frobenius_trace(
                                    k3, cc.with_c(bp, k3.mul(a, e3tab[e])).label);
                                ++tally[weil_of_cubic(k, t3)];
                            }
                        }
                        break;
                    }
                }
            }
        }
    };

    CensusResult out;
    if (jobs == 1 || q - 1 < static_cast<std::uint64_t>(jobs)) {
        run_g_range(1, q, out.realized);
        return out;
    }
    std::vector<std::map<WeilPoly, std::uint64_t>> parts(static_cast<std::size_t>(jobs));
    std::vector<std::thread> threads;
    std::uint64_t span = (q - 1 + static_cast<std::uint64_t>(jobs) - 1) /
                         static_cast<std::uint64_t>(jobs);
    for (int t = 0; t < jobs; ++t) {
        fe lo = 1 + static_cast<fe>(t) * span;
        fe hi = std::min<std::uint64_t>(q, lo + span);
        if (lo >= hi) break;
        threads.emplace_back(
            [&, lo, hi, t] { run_g_range(lo, hi, parts[static_cast<std::size_t>(t)]); });
    }
    for (auto& th : threads) th.join();
    for (const auto& part : parts)
        for (const auto& [p, c] : part) out.realized[p] += c;
    return out;
}

CensusDiff compare_census(const Field& k, const CensusResult& res) {
    CensusDiff diff;
    auto catalog = enumerate_classes(k);
    std::set<WeilPoly> predicted;
    for (const auto& ce : catalog)
        if (contains_jacobian(k, ce.spec).attainable) predicted.insert(ce.poly);
    std::set<WeilPoly> realized;
    for (const auto& [p, c] : res.realized) realized.insert(p);
    for (const auto& p : predicted)
        if (!realized.count(p)) diff.predicted_not_realized.push_back(p);
    for (const auto& p : realized)
        if (!predicted.count(p)) diff.realized_not_predicted.push_back(p);
    return diff;
}

}  // namespace ss3
