#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "wz/bigint.hpp"
#include "wz/ff.hpp"
#include "wz/mpoly.hpp"

namespace wz {

/// Enumeration budget: hard cap on evaluated points per counting task.
struct GeomBudget {
    uint64_t max_points = 1ull << 24;
};

/// A variety over F_q given by integer-coefficient equations, closed under
/// product, union and translate-embeddings into products.
struct VarietySpec {
    enum class Kind { Affine, Projective, Product, Union, TranslateEmbed };

    Kind kind = Kind::Affine;
    FqField base;
    std::string name;

    // Affine / Projective: coordinate count (affine n, projective n+1) and
    // defining equations over those coordinates (plus the reserved g).
    uint32_t coord_count = 0;
    std::vector<IntMPoly> equations;

    // Product: factors. Union: components.
    std::vector<VarietySpec> parts;

    // TranslateEmbed: parts[0] is the ambient Product, parts[1] the curve
    // occupying `slot`; `fixed[j]` pins slot j (empty at the live slot).
    uint32_t slot = 0;
    std::vector<std::vector<FqElem>> fixed;

    uint32_t ambient_slots() const {
        if (kind == Kind::Product) return static_cast<uint32_t>(parts.size());
        if (kind == Kind::TranslateEmbed) return parts[0].ambient_slots();
        if (kind == Kind::Union) return parts.empty() ? 0 : parts[0].ambient_slots();
        return 1;
    }
};

VarietySpec make_affine(const FqField& base, uint32_t nvars,
                        std::vector<IntMPoly> equations, std::string name = "");
/// Homogeneity of every equation is checked; NonHomogeneous otherwise.
VarietySpec make_projective(const FqField& base, uint32_t ncoords,
                            std::vector<IntMPoly> equations,
                            std::string name = "");
VarietySpec make_product(std::vector<VarietySpec> factors, std::string name = "");
VarietySpec make_union(std::vector<VarietySpec> components, std::string name = "");
VarietySpec make_translate_embed(VarietySpec ambient_product, uint32_t slot,
                                 VarietySpec curve,
                                 std::vector<std::vector<FqElem>> fixed,
                                 std::string name = "");

/// Point of a variety: one coordinate tuple per ambient slot (projective
/// tuples normalized so the first nonzero coordinate is 1).
using GeomPoint = std::vector<std::vector<FqElem>>;

/// Finite group action generated by per-slot polynomial self-maps. Each map
/// carries one or more polynomial representatives; a representative applies
/// at a point when not all of its coordinates vanish there (projective
/// maps need several representatives to be total).
struct PolyMap {
    std::vector<std::vector<IntMPoly>> reps;
};

struct GroupAction {
    std::vector<PolyMap> slot_maps;  // one per ambient slot
    uint32_t order = 1;
    bool declared_free = false;
};

struct CountTable {
    BigInt q;
    std::vector<BigInt> counts;  // counts[r-1] = N_r

    const BigInt& N(uint32_t r) const { return counts.at(r - 1); }
    uint32_t R() const { return static_cast<uint32_t>(counts.size()); }
};

/// Exact |V(F_{q^r})| by exhaustive enumeration (closed formulas for bare
/// ambient spaces). Products multiply, unions use inclusion-exclusion,
/// translate-embeddings count their curve.
BigInt count_points(const VarietySpec& V, uint32_t r,
                    const GeomBudget& budget = GeomBudget{});

/// N_1..N_R with the Moebius-consistency invariant enforced
/// (InconsistentCounts on violation).
CountTable count_table(const VarietySpec& V, uint32_t R,
                       const GeomBudget& budget = GeomBudget{});

/// #{x in V(F_{q^{mr}}) : Frob_{q^r}(x) = g^k(x)} for the k-th power of the
/// action generator (m = action order). k = 0 reduces to count_points.
BigInt twisted_count(const VarietySpec& V, const GroupAction& action,
                     uint32_t k, uint32_t r,
                     const GeomBudget& budget = GeomBudget{});

/// |(V/G)(F_{q^r})| = (1/|G|) sum_k twisted_count(V, g^k, r), after checking
/// the action is free on all enumerated points.
BigInt quotient_count_free(const VarietySpec& V, const GroupAction& action,
                           uint32_t r, const GeomBudget& budget = GeomBudget{});

/// Advisory Jacobian-rank check at every F_{q^r}-point, r = 1..r_max; the
/// expected rank is the number of equations (complete-intersection reading).
bool smoothness_spot_check(const VarietySpec& V, uint32_t r_max = 2,
                           const GeomBudget& budget = GeomBudget{});

/// Explicit point lists and slow-path helpers used by cross-checks.
std::vector<GeomPoint> list_points(const VarietySpec& V, uint32_t r,
                                   const GeomBudget& budget = GeomBudget{});
bool point_on(const VarietySpec& V, const GeomPoint& pt, uint32_t r);
GeomPoint apply_generator(const VarietySpec& V, const GroupAction& action,
                          uint32_t k, const GeomPoint& pt, uint32_t r_total);
GeomPoint frobenius_point(const VarietySpec& V, const GeomPoint& pt,
                          uint32_t r_total, uint32_t s);

/// Direct inclusion-free union count (membership test against every
/// component), the oracle that inclusion-exclusion is checked against.
BigInt direct_union_count(const VarietySpec& U, uint32_t r,
                          const GeomBudget& budget = GeomBudget{});

/// Moebius function on small integers.
int moebius(uint32_t n);

}  // namespace wz
