#include "ss3/elliptic.hpp"

#include <stdexcept>

namespace ss3 {

std::string_view label_name(EllLabel l) {
    switch (l) {
        case EllLabel::E1: return "E1";
        case EllLabel::E1t: return "E1'";
        case EllLabel::Ea: return "Ea";
        case EllLabel::Eat: return "Ea'";
        case EllLabel::E0: return "E0";
        case EllLabel::H: return "H";
        case EllLabel::Ht: return "H'";
    }
    return "?";
}

EllLabel twisted_label(EllLabel l, int n) {
    switch (l) {
        case EllLabel::E1: return n % 2 ? EllLabel::E1 : EllLabel::E1t;
        case EllLabel::E1t: return EllLabel::E1;
        case EllLabel::Ea: return EllLabel::Eat;
        case EllLabel::Eat: return EllLabel::Ea;
        case EllLabel::E0: return EllLabel::E0;
        case EllLabel::H: return EllLabel::Ht;
        case EllLabel::Ht: return EllLabel::H;
    }
    return l;
}

bool label_is_cube_family(EllLabel l) {
    return l != EllLabel::Ea && l != EllLabel::Eat;
}

std::vector<EllLabel> labels_for(int n) {
    if (n % 2 == 0)
        return {EllLabel::E1, EllLabel::E1t, EllLabel::Ea, EllLabel::Eat, EllLabel::E0};
    return {EllLabel::E1, EllLabel::H, EllLabel::Ht};
}

std::int64_t frobenius_trace(const Field& F, EllLabel l) {
    return frobenius_trace_deg(F.n(), l);
}

std::int64_t frobenius_trace_deg(int n, EllLabel l) {
    if (n % 2 == 0) {
        std::int64_t sq = std::int64_t{1} << (n / 2);
        std::int64_t eps = (n / 2) % 2 ? -1 : 1;  // (-1)^(n/2)
        switch (l) {
            case EllLabel::E1: return -2 * eps * sq;
            case EllLabel::E1t: return 2 * eps * sq;
            case EllLabel::Ea: return eps * sq;
            case EllLabel::Eat: return -eps * sq;
            case EllLabel::E0: return 0;
            default: throw std::invalid_argument("label/parity mismatch (H over square field)");
        }
    }
    std::int64_t s2q = std::int64_t{1} << ((n + 1) / 2);  // sqrt(2q)
    int r = n % 8;
    std::int64_t eps = (r == 1 || r == 7) ? 1 : -1;  // (-1)^((n^2-1)/8)
    switch (l) {
        case EllLabel::E1: return 0;
        case EllLabel::H: return eps * s2q;
        case EllLabel::Ht: return -eps * s2q;
        default: throw std::invalid_argument("label/parity mismatch (square label over non-square field)");
    }
}

ASModel normalize(const Field& F, fe a3, fe a2, fe a4, fe a6) {
    if (a3 == 0) throw std::invalid_argument("a3 = 0 is not supersingular");
    fe s = F.inv(F.sqr(a3));  // a3^-2
    fe a = s;
    fe b = F.mul(s, a2);
    fe gamma = F.mul(s, a4);  // killed by y -> y + gamma*x, shifting b by gamma^2
    fe delta = F.mul(s, a6);
    b ^= F.sqr(gamma);
    fe c = F.trace(delta) ? F.c0() : fe{0};
    return {a, b, c};
}

ASModel twist(const Field& F, const ASModel& E) { return {E.a, E.b, E.c ^ F.c0()}; }

std::uint64_t naive_count(const Field& F, const ASModel& E) {
    std::uint64_t cnt = 1;
    for (fe x = 0; x < F.q(); ++x) {
        fe v = F.mul(F.sqr(x), F.mul(E.a, x) ^ E.b) ^ E.c;  // a x^3 + b x^2 + c
        if (F.trace(v) == 0) cnt += 2;
    }
    return cnt;
}

ClassifierA::ClassifierA(const Field& F, fe a) : F_(F), a_(a) {
    if (a == 0) throw std::invalid_argument("normal model requires a != 0");
    cube_ = F.is_cube(a);
    if (cube_) {
        u_ = *F.cube_root(a);
        u2inv_ = F.inv(F.sqr(u_));
    } else {
        coset_ = F.pow(a, (F.q() - 1) / 3);
    }
    if (F.n() % 2 == 0) {
        fe a2 = F.sqr(a);
        va_ = F.linear_solver([&](fe v) { return F.mul(a2, F.sqr(F.sqr(v))) ^ F.mul(a, v); });
    } else {
        // n odd: the relevant solver is v^4+v = b u^-2 + 1, shared per field
    }
}

ClassifierA::BPart ClassifierA::resolve_b(fe b) const {
    const Field& F = F_;
    if (F.n() % 2 == 1) {
        fe h = F.mul(b, u2inv_);
        if (F.trace(h) == 0) return {2, 0};
        // 1 + v + v^4 = h, i.e. v^4 + v = h + 1; solvable since Tr(h+1) = 0
        auto v = F.solve_as4(h ^ 1);
        if (!v) throw std::logic_error("v^4+v = h+1 must be solvable here");
        return {3, *v};
    }
    if (!cube_) {
        auto v = va_.solve(b);
        if (!v) throw std::logic_error("a^2 v^4 + a v is bijective for non-cube a");
        return {0, *v};
    }
    fe h = F.mul(b, u2inv_);
    if (F.trace_to_f4(h) != 0) return {1, 0};
    auto v = va_.solve(b);
    if (!v) throw std::logic_error("b u^-2 in AS^2(k) must make a^2 v^4 + a v = b solvable");
    return {0, *v};
}

IsomClass ClassifierA::with_c(const BPart& p, fe c) const {
    const Field& F = F_;
    switch (p.branch) {
        case 1: return {EllLabel::E0, 0};
        case 2: return {EllLabel::E1, 0};
        case 3: {
            fe v = p.v;
            int bit = F.trace(c ^ F.mul(v, F.sqr(v)) ^ v);
            return {bit == 0 ? EllLabel::H : EllLabel::Ht, 0};
        }
        default: {
            fe v = p.v;
            int bit = F.trace(c ^ F.mul(a_, F.mul(v, F.sqr(v))));
            if (cube_) return {bit == 0 ? EllLabel::E1 : EllLabel::E1t, 0};
            return {bit == 0 ? EllLabel::Ea : EllLabel::Eat, coset_};
        }
    }
}

IsomClass classify(const Field& F, const ASModel& E) {
    return ClassifierA(F, E.a).classify(E.b, E.c);
}

}  // namespace ss3
