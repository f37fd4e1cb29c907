#pragma once

#include "ss3/field.hpp"

// The tower k = F_q inside k2 = F_{q^2} and k3 = F_{q^3}.  The extensions
// are independent Field contexts; the embeddings are realized by the
// enumeration-least root of the base modulus inside the subfield fixed by
// Frobenius^n, located by F2 linear algebra plus direct evaluation.
// Immutable after construction, shareable across threads.

namespace ss3 {

class Tower {
public:
    explicit Tower(int n);         // base degree; requires 3n <= 63
    explicit Tower(Field base);

    const Field& k() const noexcept { return k_; }
    const Field& k2() const noexcept { return k2_; }
    const Field& k3() const noexcept { return k3_; }

    fe embed2(fe x) const { return apply_map(emb2_, x); }
    fe embed3(fe x) const { return apply_map(emb3_, x); }
    std::optional<fe> retract2(fe y) const { return ret2_.solve(y); }
    std::optional<fe> retract3(fe y) const { return ret3_.solve(y); }
    bool in_k2_image(fe y) const { return ret2_.in_image(y); }
    bool in_k3_image(fe y) const { return ret3_.in_image(y); }

    // Galois conjugation over k: x -> x^q.
    fe conj2(fe x) const { return apply_map(frob2_, x); }
    fe conj3(fe x) const { return apply_map(frob3_, x); }

    // Relative traces Tr_{k2/k}, Tr_{k3/k}; throws std::logic_error if the
    // Galois-stable value fails to land in the embedded base field.
    fe rel_trace2(fe x) const;
    fe rel_trace3(fe x) const;
    fe rel_norm2(fe x) const { return k2_.mul(x, conj2(x)); }
    fe rel_norm3(fe x) const {
        fe c = conj3(x);
        return k3_.mul(x, k3_.mul(c, conj3(c)));
    }

private:
    void build();

    Field k_, k2_, k3_;
    std::vector<std::uint64_t> emb2_, emb3_;    // images of base basis
    std::vector<std::uint64_t> frob2_, frob3_;  // x -> x^q
    LinearSolver ret2_, ret3_;
};

// Root in k3 of an irreducible cubic Y^3 + f Y + g over k (f, g in k,
// g != 0, no roots in k).  Deterministic; see quartic.cpp for use.
fe irreducible_cubic_root(const Tower& tw, fe f, fe g);

}  // namespace ss3
