#include "ss3/quartic.hpp"

#include <algorithm>
#include <stdexcept>

namespace ss3 {

std::string_view kind_name(QuarticKind k) {
    switch (k) {
        case QuarticKind::Split: return "split";
        case QuarticKind::Quadratic: return "quadratic";
        case QuarticKind::Cubic: return "cubic";
    }
    return "?";
}

QuarticType type_of(const Tower& tw, const Quartic& c) {
    const Field& k = tw.k();
    if (c.g == 0) throw std::invalid_argument("quartic requires g != 0");
    // nonzero roots of R(Y) = Y^4+fY^2+gY are the roots of S(Y) = Y^3+fY+g
    std::vector<fe> roots;
    for (fe y = 1; y < k.q(); ++y) {
        fe v = k.mul(k.sqr(y), y) ^ k.mul(c.f, y) ^ c.g;
        if (v == 0) roots.push_back(y);
    }
    QuarticType out{};
    if (roots.size() == 3) {
        out.kind = QuarticKind::Split;
        std::sort(roots.begin(), roots.end());
        out.roots_k = {roots[0], roots[1], roots[2]};
        return out;
    }
    if (roots.size() == 1) {
        out.kind = QuarticKind::Quadratic;
        out.root_k = roots[0];
        // S = (Y+theta)(Y^2+theta Y+(theta^2+f)); solve the factor in k2
        const Field& k2 = tw.k2();
        fe th = tw.embed2(roots[0]);
        fe rhs = k2.mul(tw.embed2(k.sqr(roots[0]) ^ c.f), k2.inv(k2.sqr(th)));
        auto w = k2.solve_as(rhs);  // (Y/theta)^2 + (Y/theta) = (theta^2+f)/theta^2
        if (!w) throw std::logic_error("irreducible quadratic factor must split in k2");
        fe r1 = k2.mul(th, *w);
        fe r2 = r1 ^ th;
        out.root_ext = std::min(r1, r2);
        return out;
    }
    if (!roots.empty()) throw std::logic_error("separable cubic with two roots in k");
    out.kind = QuarticKind::Cubic;
    fe th = irreducible_cubic_root(tw, c.f, c.g);
    fe t2 = tw.conj3(th), t3 = tw.conj3(t2);
    out.root_ext = std::min({th, t2, t3});
    return out;
}

std::vector<Quotient> elliptic_quotients(const Tower& tw, const Quartic& c) {
    const Field& k = tw.k();
    QuarticType t = type_of(tw, c);
    std::vector<Quotient> out;
    fe ginv = k.inv(c.g);
    auto model_in = [&](const Field& Fx, fe theta, fe gi, fe d, fe e) {
        fe a = Fx.sqr(Fx.mul(gi, theta));
        return ASModel{a, Fx.mul(a, d), Fx.mul(a, e)};
    };
    switch (t.kind) {
        case QuarticKind::Split:
            for (fe th : t.roots_k) out.push_back({model_in(k, th, ginv, c.d, c.e), 1});
            break;
        case QuarticKind::Quadratic: {
            out.push_back({model_in(k, t.root_k, ginv, c.d, c.e), 1});
            const Field& k2 = tw.k2();
            ASModel m2 = model_in(k2, t.root_ext, tw.embed2(ginv), tw.embed2(c.d),
                                  tw.embed2(c.e));
            out.push_back({m2, 2});
            ASModel m2c{tw.conj2(m2.a), tw.conj2(m2.b), tw.conj2(m2.c)};
            out.push_back({m2c, 2});
            break;
        }
        case QuarticKind::Cubic: {
            const Field& k3 = tw.k3();
            ASModel m = model_in(k3, t.root_ext, tw.embed3(ginv), tw.embed3(c.d),
                                 tw.embed3(c.e));
            out.push_back({m, 3});
            ASModel mc{tw.conj3(m.a), tw.conj3(m.b), tw.conj3(m.c)};
            out.push_back({mc, 3});
            ASModel mcc{tw.conj3(mc.a), tw.conj3(mc.b), tw.conj3(mc.c)};
            out.push_back({mcc, 3});
            break;
        }
    }
    return out;
}

WeilPoly weil_of_split(const Field& k, std::array<std::int64_t, 3> ts) {
    std::int64_t q = static_cast<std::int64_t>(k.q());
    std::int64_t e1 = ts[0] + ts[1] + ts[2];
    std::int64_t e2 = ts[0] * ts[1] + ts[0] * ts[2] + ts[1] * ts[2];
    std::int64_t e3 = ts[0] * ts[1] * ts[2];
    return {e1, e2 + 3 * q, e3 + 2 * q * e1, k.q()};
}

WeilPoly weil_of_quadratic(const Field& k, std::int64_t s, std::int64_t t2) {
    std::int64_t q = static_cast<std::int64_t>(k.q());
    return {s, t2 + q, s * t2, k.q()};
}

WeilPoly weil_of_cubic(const Field& k, std::int64_t t3) { return {0, 0, t3, k.q()}; }

WeilPoly weil_negated(const WeilPoly& w) { return {-w.a1, w.a2, -w.a3, w.q}; }

WeilPoly weil_poly_with_type(const Tower& tw, const Quartic& c, const QuarticType& t) {
    const Field& k = tw.k();
    fe ginv = k.inv(c.g);
    switch (t.kind) {
        case QuarticKind::Split: {
            std::array<std::int64_t, 3> ts{};
            for (int i = 0; i < 3; ++i) {
                fe a = k.sqr(k.mul(ginv, t.roots_k[static_cast<std::size_t>(i)]));
                IsomClass cls = classify(k, {a, k.mul(a, c.d), k.mul(a, c.e)});
                ts[static_cast<std::size_t>(i)] = frobenius_trace(k, cls.label);
            }
            return weil_of_split(k, ts);
        }
        case QuarticKind::Quadratic: {
            fe a = k.sqr(k.mul(ginv, t.root_k));
            IsomClass ck = classify(k, {a, k.mul(a, c.d), k.mul(a, c.e)});
            const Field& k2 = tw.k2();
            fe a2 = k2.sqr(k2.mul(tw.embed2(ginv), t.root_ext));
            IsomClass c2 = classify(
                k2, {a2, k2.mul(a2, tw.embed2(c.d)), k2.mul(a2, tw.embed2(c.e))});
            return weil_of_quadratic(k, frobenius_trace(k, ck.label),
                                     frobenius_trace(k2, c2.label));
        }
        case QuarticKind::Cubic: {
            const Field& k3 = tw.k3();
            fe a3 = k3.sqr(k3.mul(tw.embed3(ginv), t.root_ext));
            IsomClass c3 = classify(
                k3, {a3, k3.mul(a3, tw.embed3(c.d)), k3.mul(a3, tw.embed3(c.e))});
            return weil_of_cubic(k, frobenius_trace(k3, c3.label));
        }
    }
    throw std::logic_error("unreachable");
}

WeilPoly weil_poly(const Tower& tw, const Quartic& c) {
    return weil_poly_with_type(tw, c, type_of(tw, c));
}

std::uint64_t quartic_count(const Field& F, fe d, fe e, fe f, fe g) {
    // R(y) = y^4 + f y^2 + g y is F2-linear; each x contributes |ker R| points
    // when x^3+dx^2+e lies in im R, none otherwise.  Membership is tested by
    // the left-kernel functionals of R.
    std::vector<std::uint64_t> img(static_cast<std::size_t>(F.n()));
    for (int i = 0; i < F.n(); ++i) {
        fe y = fe{1} << i;
        img[static_cast<std::size_t>(i)] =
            F.sqr(F.sqr(y)) ^ F.mul(f, F.sqr(y)) ^ F.mul(g, y);
    }
    LinearSolver rmap(img);
    int kdim = static_cast<int>(rmap.kernel().size());
    LinearSolver left(transpose_map(img, F.n()));
    const auto& funcs = left.kernel();
    std::uint64_t per = std::uint64_t{1} << kdim;
    std::uint64_t cnt = 1;
    for (fe x = 0; x < F.q(); ++x) {
        fe v = F.mul(F.sqr(x), x ^ d) ^ e;  // x^3 + d x^2 + e
        bool in = true;
        for (std::uint64_t m : funcs)
            if (__builtin_parityll(v & m)) {
                in = false;
                break;
            }
        if (in) cnt += per;
    }
    return cnt;
}

WeilPoly naive_weil_poly(const Tower& tw, const Quartic& c, int max_count_degree) {
    const Field& k = tw.k();
    if (3 * k.n() > max_count_degree)
        throw std::invalid_argument("naive Weil computation beyond the counting guard");
    using i128 = __int128;
    std::uint64_t n1 = quartic_count(k, c.d, c.e, c.f, c.g);
    std::uint64_t n2 = quartic_count(tw.k2(), tw.embed2(c.d), tw.embed2(c.e),
                                     tw.embed2(c.f), tw.embed2(c.g));
    std::uint64_t n3 = quartic_count(tw.k3(), tw.embed3(c.d), tw.embed3(c.e),
                                     tw.embed3(c.f), tw.embed3(c.g));
    i128 q = k.q();
    i128 p1 = q + 1 - static_cast<i128>(n1);
    i128 p2 = q * q + 1 - static_cast<i128>(n2);
    i128 p3 = q * q * q + 1 - static_cast<i128>(n3);
    i128 e1 = p1;
    i128 e2 = (e1 * p1 - p2) / 2;
    if ((e1 * p1 - p2) % 2 != 0) throw std::logic_error("Newton identity parity failure");
    i128 e3num = p3 - e1 * p2 + e2 * p1;
    if (e3num % 3 != 0) throw std::logic_error("Newton identity divisibility failure");
    i128 e3 = e3num / 3;
    return {static_cast<std::int64_t>(-e1), static_cast<std::int64_t>(e2),
            static_cast<std::int64_t>(-e3), k.q()};
}

namespace {

bool extreme_count(const Tower& tw, const Quartic& c, int sign) {
    const Field& k = tw.k();
    if (k.n() % 2 != 0)
        throw std::invalid_argument("maximal/minimal is defined here for square q only");
    std::int64_t sq = std::int64_t{1} << (k.n() / 2);
    std::int64_t n1 = static_cast<std::int64_t>(quartic_count(k, c.d, c.e, c.f, c.g));
    return n1 == static_cast<std::int64_t>(k.q()) + 1 + sign * 6 * sq;
}

}  // namespace

bool is_maximal(const Tower& tw, const Quartic& c) { return extreme_count(tw, c, +1); }
bool is_minimal(const Tower& tw, const Quartic& c) { return extreme_count(tw, c, -1); }

}  // namespace ss3
