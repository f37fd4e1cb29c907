#pragma once

#include <map>
#include <optional>
#include <string>

#include "ss3/quartic.hpp"

// The catalog of supersingular abelian-threefold isogeny classes over F_q,
// the Jacobian-containment predicate with its exception tables, and
// constructors producing an explicit quartic in any attainable class.

namespace ss3 {

enum class ClassShape : std::uint8_t { Simple, EllTimesSurface, TripleSplit };
std::string_view shape_name(ClassShape s);

struct IsogenyClassSpec {
    ClassShape shape;
    int simple_sign = 0;                            // Simple: x^6 +- sqrt(q^3) x^3 + q^3
    std::int64_t ell_trace = 0;                     // EllTimesSurface: s
    std::pair<std::int64_t, std::int64_t> surface;  // EllTimesSurface: (s', t')
    std::array<std::int64_t, 3> traces{};           // TripleSplit: sorted
};

struct CatalogEntry {
    IsogenyClassSpec spec;
    WeilPoly poly;
    std::string decomposition;
};

// Complete duplicate-free catalog: simple classes (square q only), elliptic
// times simple-surface products, and all multisets of three elliptic traces.
std::vector<CatalogEntry> enumerate_classes(const Field& k);

struct Verdict {
    bool attainable = false;
    std::string reason;
};

Verdict contains_jacobian(const Field& k, const IsogenyClassSpec& spec);

// Type-level attainability: the exception tables for quartics of cubic /
// quadratic / split type.  Triples are multisets (sorted by label order).
bool cubic_attainable(std::uint64_t q, EllLabel target_over_k3);
bool quadratic_attainable(std::uint64_t q, EllLabel e_over_k, EllLabel f_over_k2);
bool split_attainable(std::uint64_t q, std::array<EllLabel, 3> triple);

std::array<EllLabel, 3> sorted_triple(EllLabel a, EllLabel b, EllLabel c);

// Quartic with prescribed quotient data {a, a', a''} (pairwise distinct,
// nonzero, sum zero, Galois-stable as a set), given in k (ext=1), k2 (ext=2)
// or k3 (ext=3).  Its elliptic quotients reproduce (a_i, a_i d, a_i e).
Quartic quartic_from_data(const Tower& tw, std::array<fe, 3> aset, int ext, fe d, fe e);

// Deterministic constructors; nullopt exactly on the exception tables.
// Internal verification failures throw std::logic_error.
std::optional<Quartic> construct_cubic_type(const Tower& tw, EllLabel target,
                                            fe coset = 0);
std::optional<Quartic> construct_quadratic_type(const Tower& tw, EllLabel e_over_k,
                                                EllLabel f_over_k2);
std::optional<Quartic> construct_split(const Tower& tw, std::array<EllLabel, 3> triple);

struct ConstructOutcome {
    std::optional<Quartic> witness;
    std::string detail;  // realization used, or why none exists
};
ConstructOutcome construct_for_weil(const Tower& tw, const WeilPoly& target);

WeilPoly maximal_class_poly(const Field& k);
WeilPoly minimal_class_poly(const Field& k);

// Exhaustive sweep over all (q-1)q^3 quartics; counts realized Weil
// polynomials via the classification route (or the counting oracle).
struct CensusResult {
    std::map<WeilPoly, std::uint64_t> realized;
};
CensusResult census(const Tower& tw, int jobs = 1, bool oracle = false,
                    std::uint64_t guard = 1ull << 17);

struct CensusDiff {
    std::vector<WeilPoly> predicted_not_realized;
    std::vector<WeilPoly> realized_not_predicted;
    bool empty() const {
        return predicted_not_realized.empty() && realized_not_predicted.empty();
    }
};
CensusDiff compare_census(const Field& k, const CensusResult& res);

}  // namespace ss3
