#include "wz/geom.hpp"

#include <algorithm>
#include <optional>

#include "wz/errors.hpp"
#include "wz/fffast.hpp"

namespace wz {

namespace {

constexpr uint32_t kExtensionDegreeCap = 24;

FqField ext_field(const FqField& base, uint32_t r) {
    return FqField::make(base.p(), base.a() * r, kExtensionDegreeCap);
}

BigInt pow_big(uint64_t n, uint32_t e) { return BigInt::pow(BigInt::from_uint64(n), e); }

// Number of candidate points the enumeration will visit.
BigInt ambient_size(bool projective, uint32_t ncoords, uint64_t n) {
    if (!projective) return pow_big(n, ncoords);
    BigInt total(0);
    for (uint32_t i = 0; i < ncoords; ++i) total += pow_big(n, i);
    return total;
}

void check_budget(const BigInt& points, const GeomBudget& budget) {
    if (points > BigInt::from_uint64(budget.max_points))
        throw BudgetExceeded("enumeration of " + points.to_string() +
                             " points exceeds the budget of " +
                             std::to_string(budget.max_points));
}

// Enumerate tuples over the field; for projective ambients, normalized
// representatives (first nonzero coordinate 1). fn gets raw index tuples.
template <class Fn>
void for_each_tuple(const CompiledField& cf, bool projective, uint32_t ncoords,
                    Fn&& fn) {
    uint64_t n = cf.size();
    std::vector<uint32_t> pt(ncoords, 0);
    if (!projective) {
        for (;;) {
            fn(pt.data());
            int i = static_cast<int>(ncoords) - 1;
            while (i >= 0) {
                if (++pt[i] < n) break;
                pt[i] = 0;
                --i;
            }
            if (i < 0) return;
        }
    }
    // normalized representatives: leading coordinate 1, earlier ones 0
    for (uint32_t lead = 0; lead < ncoords; ++lead) {
        std::fill(pt.begin(), pt.end(), 0u);
        pt[lead] = cf.one();
        for (;;) {
            fn(pt.data());
            int i = static_cast<int>(ncoords) - 1;
            while (i >= static_cast<int>(lead + 1)) {
                if (++pt[i] < n) break;
                pt[i] = 0;
                --i;
            }
            if (i < static_cast<int>(lead + 1)) break;
        }
    }
}

// A flat equation-variety slice: affine or projective coordinates with a
// concatenated equation list.
struct EqSlice {
    bool projective = false;
    uint32_t ncoords = 0;
    std::vector<const IntMPoly*> eqs;
    const FqField* base = nullptr;
};

std::optional<EqSlice> as_eq_slice(const VarietySpec& V) {
    if (V.kind != VarietySpec::Kind::Affine &&
        V.kind != VarietySpec::Kind::Projective)
        return std::nullopt;
    EqSlice s;
    s.projective = V.kind == VarietySpec::Kind::Projective;
    s.ncoords = V.coord_count;
    s.base = &V.base;
    for (const auto& e : V.equations) s.eqs.push_back(&e);
    return s;
}

BigInt count_eq_slice(const EqSlice& s, uint32_t r, const GeomBudget& budget) {
    if (s.eqs.empty()) {
        // whole ambient space: closed formula, no enumeration
        BigInt qr = BigInt::pow(s.base->q(), r);
        if (!s.projective) return BigInt::pow(qr, s.ncoords);
        BigInt total(0);
        for (uint32_t i = 0; i < s.ncoords; ++i) total += BigInt::pow(qr, i);
        return total;
    }
    FqField big = ext_field(*s.base, r);
    CompiledField cf(big);
    check_budget(ambient_size(s.projective, s.ncoords, cf.size()), budget);
    std::vector<CompiledPoly> eqs;
    eqs.reserve(s.eqs.size());
    for (const auto* e : s.eqs) eqs.emplace_back(*e, cf, *s.base);
    uint64_t count = 0;
    for_each_tuple(cf, s.projective, s.ncoords, [&](const uint32_t* pt) {
        for (const auto& e : eqs)
            if (e.eval(cf, pt) != 0) return;
        ++count;
    });
    return BigInt::from_uint64(count);
}

// --- translate-embed cells ---

struct SlotConstraint {
    bool fixed = false;
    std::vector<FqElem> point;           // when fixed
    bool projective = false;             // slot ambient shape
    uint32_t ncoords = 0;
    std::vector<const IntMPoly*> eqs;    // when not fixed
};

struct Cell {
    bool empty = false;
    std::vector<SlotConstraint> slots;
};

std::vector<FqElem> normalize_proj(const FqField& f, std::vector<FqElem> pt) {
    for (auto& c : pt)
        if (!c.is_zero()) {
            FqElem s = f.inv(c);
            for (auto& d : pt) d = f.mul(d, s);
            return pt;
        }
    throw NonHomogeneous("projective point with all coordinates zero");
}

bool fixed_point_satisfies(const FqField& base,
                           const std::vector<FqElem>& pt,
                           const std::vector<const IntMPoly*>& eqs) {
    const FqElem* gval = nullptr;
    FqElem gen;
    if (base.a() > 1) {
        gen = base.generator();
        gval = &gen;
    }
    for (const auto* e : eqs)
        if (!mpoly_eval_g(*e, pt, base, gval).is_zero()) return false;
    return true;
}

Cell cell_of_translate(const VarietySpec& V) {
    const VarietySpec& ambient = V.parts[0];
    const VarietySpec& curve = V.parts[1];
    Cell c;
    c.slots.resize(ambient.parts.size());
    for (uint32_t j = 0; j < ambient.parts.size(); ++j) {
        const VarietySpec& factor = ambient.parts[j];
        SlotConstraint& sc = c.slots[j];
        sc.projective = factor.kind == VarietySpec::Kind::Projective;
        sc.ncoords = factor.coord_count;
        if (j == V.slot) {
            for (const auto& e : curve.equations) sc.eqs.push_back(&e);
        } else {
            sc.fixed = true;
            sc.point = V.fixed[j];
        }
    }
    return c;
}

Cell intersect_cells(const FqField& base, const Cell& a, const Cell& b) {
    Cell out;
    if (a.empty || b.empty) {
        out.empty = true;
        return out;
    }
    out.slots.resize(a.slots.size());
    for (size_t j = 0; j < a.slots.size(); ++j) {
        const SlotConstraint &x = a.slots[j], &y = b.slots[j];
        SlotConstraint& o = out.slots[j];
        o.projective = x.projective;
        o.ncoords = x.ncoords;
        if (x.fixed && y.fixed) {
            if (x.point != y.point) {
                out.empty = true;
                return out;
            }
            o = x;
        } else if (x.fixed || y.fixed) {
            const SlotConstraint& f = x.fixed ? x : y;
            const SlotConstraint& e = x.fixed ? y : x;
            if (!fixed_point_satisfies(base, f.point, e.eqs)) {
                out.empty = true;
                return out;
            }
            o = f;
        } else {
            o = x;
            for (const auto* e : y.eqs) o.eqs.push_back(e);
        }
    }
    return out;
}

BigInt count_cell(const FqField& base, const Cell& c, uint32_t r,
                  const GeomBudget& budget) {
    if (c.empty) return BigInt(0);
    BigInt total(1);
    for (const auto& s : c.slots) {
        if (s.fixed) continue;
        EqSlice slice;
        slice.projective = s.projective;
        slice.ncoords = s.ncoords;
        slice.eqs = s.eqs;
        slice.base = &base;
        total *= count_eq_slice(slice, r, budget);
    }
    return total;
}

bool union_is_cellular(const VarietySpec& U) {
    for (const auto& c : U.parts)
        if (c.kind != VarietySpec::Kind::TranslateEmbed) return false;
    return !U.parts.empty();
}

// --- action evaluation on explicit points ---

std::vector<FqElem> eval_map_reps(const std::vector<std::vector<IntMPoly>>& reps,
                                  const std::vector<FqElem>& pt,
                                  const FqField& big, const FqField& base,
                                  bool projective) {
    const FqElem* gval = nullptr;
    FqElem root;
    if (base.a() > 1) {
        root = big.embed_generator(base);
        gval = &root;
    }
    for (const auto& rep : reps) {
        std::vector<FqElem> img;
        img.reserve(rep.size());
        bool all_zero = true;
        for (const auto& coord : rep) {
            FqElem v = mpoly_eval_g(coord, pt, big, gval);
            if (!v.is_zero()) all_zero = false;
            img.push_back(v);
        }
        if (all_zero) continue;
        return projective ? normalize_proj(big, std::move(img)) : img;
    }
    throw ActionNotClosed("all map representatives vanish at a point");
}

const VarietySpec& slot_variety(const VarietySpec& V, uint32_t j) {
    if (V.kind == VarietySpec::Kind::Product) return V.parts[j];
    return V;
}

uint32_t num_slots(const VarietySpec& V) {
    return V.kind == VarietySpec::Kind::Product
               ? static_cast<uint32_t>(V.parts.size())
               : 1;
}

// Re-express a base-field element inside an extension via the pinned root
// of the base modulus.
FqElem embed_elem(const FqField& big, const FqField& base, const FqElem& c) {
    if (big == base) return c;
    FqElem root = base.a() > 1 ? big.embed_generator(base) : big.one();
    FqElem acc = big.zero(), xp = big.one();
    for (uint32_t i = 0; i < base.a(); ++i) {
        acc = big.add(acc, big.mul(big.from_int(BigInt(c.coords[i])), xp));
        xp = big.mul(xp, root);
    }
    return acc;
}

std::vector<FqElem> embed_tuple(const FqField& big, const FqField& base,
                                const std::vector<FqElem>& pt) {
    std::vector<FqElem> out;
    out.reserve(pt.size());
    for (const auto& c : pt) out.push_back(embed_elem(big, base, c));
    return out;
}

}  // namespace

int moebius(uint32_t n) {
    int m = 1;
    for (uint32_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            n /= d;
            if (n % d == 0) return 0;
            m = -m;
        }
    }
    if (n > 1) m = -m;
    return m;
}

VarietySpec make_affine(const FqField& base, uint32_t nvars,
                        std::vector<IntMPoly> equations, std::string name) {
    VarietySpec v;
    v.kind = VarietySpec::Kind::Affine;
    v.base = base;
    v.coord_count = nvars;
    v.name = std::move(name);
    for (auto& e : equations)
        if (e.arity() != nvars)
            throw ArityMismatch("equation arity does not match the ambient");
    v.equations = std::move(equations);
    return v;
}

VarietySpec make_projective(const FqField& base, uint32_t ncoords,
                            std::vector<IntMPoly> equations, std::string name) {
    VarietySpec v;
    v.kind = VarietySpec::Kind::Projective;
    v.base = base;
    v.coord_count = ncoords;
    v.name = std::move(name);
    for (auto& e : equations) {
        if (e.arity() != ncoords)
            throw ArityMismatch("equation arity does not match the ambient");
        if (!e.is_homogeneous())
            throw NonHomogeneous("projective equation is not homogeneous: " +
                                 e.to_string());
    }
    v.equations = std::move(equations);
    return v;
}

VarietySpec make_product(std::vector<VarietySpec> factors, std::string name) {
    if (factors.empty()) throw Error("product needs at least one factor");
    for (const auto& f : factors)
        if (f.base != factors[0].base)
            throw FieldMismatch("product factors over different base fields");
    VarietySpec v;
    v.kind = VarietySpec::Kind::Product;
    v.base = factors[0].base;
    v.name = std::move(name);
    v.parts = std::move(factors);
    return v;
}

VarietySpec make_union(std::vector<VarietySpec> components, std::string name) {
    if (components.empty()) throw Error("union needs at least one component");
    const VarietySpec& first = components[0];
    for (const auto& c : components) {
        if (c.base != first.base)
            throw FieldMismatch("union components over different base fields");
        if (c.kind != first.kind)
            throw Error("union components must share one ambient shape");
        if ((c.kind == VarietySpec::Kind::Affine ||
             c.kind == VarietySpec::Kind::Projective) &&
            c.coord_count != first.coord_count)
            throw Error("union components must share the ambient coordinates");
    }
    VarietySpec v;
    v.kind = VarietySpec::Kind::Union;
    v.base = first.base;
    v.name = std::move(name);
    v.parts = std::move(components);
    return v;
}

VarietySpec make_translate_embed(VarietySpec ambient_product, uint32_t slot,
                                 VarietySpec curve,
                                 std::vector<std::vector<FqElem>> fixed,
                                 std::string name) {
    if (ambient_product.kind != VarietySpec::Kind::Product)
        throw Error("translate-embed ambient must be a product");
    if (slot >= ambient_product.parts.size())
        throw Error("translate-embed slot out of range");
    if (fixed.size() != ambient_product.parts.size())
        throw Error("translate-embed needs one fixed entry per slot");
    // fixed points must lie on their ambient factors
    for (uint32_t j = 0; j < fixed.size(); ++j) {
        if (j == slot) continue;
        const VarietySpec& factor = ambient_product.parts[j];
        std::vector<FqElem> pt = fixed[j];
        if (pt.size() != factor.coord_count)
            throw ArityMismatch("fixed point arity does not match its slot");
        if (factor.kind == VarietySpec::Kind::Projective)
            pt = normalize_proj(factor.base, std::move(pt));
        std::vector<const IntMPoly*> eqs;
        for (const auto& e : factor.equations) eqs.push_back(&e);
        if (!fixed_point_satisfies(factor.base, pt, eqs))
            throw HypothesisViolated("fixed point is not on its ambient factor");
        fixed[j] = pt;
    }
    VarietySpec v;
    v.kind = VarietySpec::Kind::TranslateEmbed;
    v.base = ambient_product.base;
    v.slot = slot;
    v.name = std::move(name);
    v.parts.push_back(std::move(ambient_product));
    v.parts.push_back(std::move(curve));
    v.fixed = std::move(fixed);
    return v;
}

BigInt count_points(const VarietySpec& V, uint32_t r, const GeomBudget& budget) {
    switch (V.kind) {
        case VarietySpec::Kind::Affine:
        case VarietySpec::Kind::Projective:
            return count_eq_slice(*as_eq_slice(V), r, budget);
        case VarietySpec::Kind::Product: {
            BigInt total(1);
            for (const auto& f : V.parts) total *= count_points(f, r, budget);
            return total;
        }
        case VarietySpec::Kind::TranslateEmbed:
            return count_points(V.parts[1], r, budget);
        case VarietySpec::Kind::Union: {
            size_t k = V.parts.size();
            if (k > 16) throw BudgetExceeded("union with more than 16 components");
            BigInt total(0);
            if (union_is_cellular(V)) {
                std::vector<Cell> cells;
                for (const auto& c : V.parts) cells.push_back(cell_of_translate(c));
                for (uint32_t mask = 1; mask < (1u << k); ++mask) {
                    Cell inter;
                    bool started = false;
                    for (size_t i = 0; i < k; ++i) {
                        if (!(mask >> i & 1)) continue;
                        inter = started ? intersect_cells(V.base, inter, cells[i])
                                        : cells[i];
                        started = true;
                    }
                    BigInt c = count_cell(V.base, inter, r, budget);
                    total = (__builtin_popcount(mask) % 2) ? total + c : total - c;
                }
                return total;
            }
            for (uint32_t mask = 1; mask < (1u << k); ++mask) {
                EqSlice s;
                bool started = false;
                for (size_t i = 0; i < k; ++i) {
                    if (!(mask >> i & 1)) continue;
                    auto si = as_eq_slice(V.parts[i]);
                    if (!si) throw Error("union mixes incompatible components");
                    if (!started) {
                        s = *si;
                        started = true;
                    } else {
                        s.eqs.insert(s.eqs.end(), si->eqs.begin(), si->eqs.end());
                    }
                }
                BigInt c = count_eq_slice(s, r, budget);
                total = (__builtin_popcount(mask) % 2) ? total + c : total - c;
            }
            return total;
        }
    }
    throw Error("unreachable");
}

CountTable count_table(const VarietySpec& V, uint32_t R, const GeomBudget& budget) {
    CountTable t;
    t.q = V.base.q();
    for (uint32_t r = 1; r <= R; ++r) {
        BigInt n = count_points(V, r, budget);
        if (n.is_negative()) throw InconsistentCounts("negative point count");
        t.counts.push_back(n);
    }
    // Moebius consistency: closed-point counts must be nonnegative integers.
    for (uint32_t d = 1; d <= R; ++d) {
        BigInt acc(0);
        for (uint32_t e = 1; e <= d; ++e) {
            if (d % e) continue;
            acc += BigInt(moebius(d / e)) * t.N(e);
        }
        BigInt q_, rem;
        BigInt::divmod(acc, BigInt(d), q_, rem);
        if (!rem.is_zero() || q_.is_negative())
            throw InconsistentCounts("Moebius inversion of the count table fails at d = " +
                                     std::to_string(d));
    }
    return t;
}

BigInt twisted_count(const VarietySpec& V, const GroupAction& action, uint32_t k,
                     uint32_t r, const GeomBudget& budget) {
    uint32_t slots = num_slots(V);
    if (action.slot_maps.size() != slots)
        throw ActionNotClosed("action has the wrong number of slot maps");
    uint32_t m = action.order;
    BigInt total(1);
    for (uint32_t j = 0; j < slots; ++j) {
        const VarietySpec& W = slot_variety(V, j);
        auto slice = as_eq_slice(W);
        if (!slice) throw Error("twisted counts need explicit slot equations");
        FqField big = ext_field(V.base, m * r);
        CompiledField cf(big);
        check_budget(ambient_size(slice->projective, slice->ncoords, cf.size()),
                     budget);
        std::vector<CompiledPoly> eqs;
        for (const auto* e : slice->eqs) eqs.emplace_back(*e, cf, *slice->base);
        // compile every representative of the slot map
        std::vector<std::vector<CompiledPoly>> reps;
        for (const auto& rep : action.slot_maps[j].reps) {
            std::vector<CompiledPoly> cr;
            for (const auto& coord : rep) cr.emplace_back(coord, cf, *slice->base);
            reps.push_back(std::move(cr));
        }
        uint32_t nc = slice->ncoords;
        auto apply_once = [&](const std::vector<uint32_t>& pt) {
            for (const auto& rep : reps) {
                std::vector<uint32_t> img(nc);
                bool all_zero = true;
                for (uint32_t c = 0; c < nc; ++c) {
                    img[c] = rep[c].eval(cf, pt.data());
                    if (img[c]) all_zero = false;
                }
                if (all_zero) continue;
                if (slice->projective) {
                    uint32_t lead = 0;
                    while (img[lead] == 0) ++lead;
                    uint32_t s = cf.inv(img[lead]);
                    for (auto& c : img) c = cf.mul(c, s);
                }
                return img;
            }
            throw ActionNotClosed("all map representatives vanish at a point");
        };
        auto on_variety = [&](const uint32_t* pt) {
            for (const auto& e : eqs)
                if (e.eval(cf, pt) != 0) return false;
            return true;
        };
        uint64_t count = 0;
        uint32_t frob_s = V.base.a() * r;
        for_each_tuple(cf, slice->projective, nc, [&](const uint32_t* raw) {
            if (!on_variety(raw)) return;
            std::vector<uint32_t> pt(raw, raw + nc);
            // closure and order checks along the orbit
            std::vector<uint32_t> cur = pt;
            std::vector<uint32_t> gk = pt;
            for (uint32_t step = 1; step <= m; ++step) {
                cur = apply_once(cur);
                if (!on_variety(cur.data()))
                    throw ActionNotClosed("generator image leaves the variety");
                if (step == k) gk = cur;
            }
            if (cur != pt)
                throw ActionNotClosed("generator order does not divide the declared order");
            std::vector<uint32_t> fr(nc);
            for (uint32_t c = 0; c < nc; ++c) fr[c] = cf.frob(pt[c], frob_s);
            if (fr == gk) ++count;
        });
        total *= BigInt::from_uint64(count);
    }
    return total;
}

BigInt quotient_count_free(const VarietySpec& V, const GroupAction& action,
                           uint32_t r, const GeomBudget& budget) {
    uint32_t m = action.order;
    uint32_t slots = num_slots(V);
    // freeness on all enumerated points of V(F_{q^{mr}}): a fixed point of
    // g^k on the product exists iff every slot has one
    for (uint32_t k = 1; k < m; ++k) {
        bool some_slot_free = false;
        for (uint32_t j = 0; j < slots && !some_slot_free; ++j) {
            const VarietySpec& W = slot_variety(V, j);
            auto slice = as_eq_slice(W);
            if (!slice) throw Error("quotient counts need explicit slot equations");
            FqField big = ext_field(V.base, m * r);
            CompiledField cf(big);
            std::vector<CompiledPoly> eqs;
            for (const auto* e : slice->eqs) eqs.emplace_back(*e, cf, *slice->base);
            std::vector<std::vector<CompiledPoly>> reps;
            for (const auto& rep : action.slot_maps[j].reps) {
                std::vector<CompiledPoly> cr;
                for (const auto& coord : rep) cr.emplace_back(coord, cf, *slice->base);
                reps.push_back(std::move(cr));
            }
            uint32_t nc = slice->ncoords;
            bool fixed_found = false;
            for_each_tuple(cf, slice->projective, nc, [&](const uint32_t* raw) {
                if (fixed_found) return;
                for (const auto& e : eqs)
                    if (e.eval(cf, raw) != 0) return;
                std::vector<uint32_t> cur(raw, raw + nc);
                for (uint32_t step = 0; step < k; ++step) {
                    for (const auto& rep : reps) {
                        std::vector<uint32_t> img(nc);
                        bool all_zero = true;
                        for (uint32_t c = 0; c < nc; ++c) {
                            img[c] = rep[c].eval(cf, cur.data());
                            if (img[c]) all_zero = false;
                        }
                        if (all_zero) continue;
                        if (slice->projective) {
                            uint32_t lead = 0;
                            while (img[lead] == 0) ++lead;
                            uint32_t s = cf.inv(img[lead]);
                            for (auto& c : img) c = cf.mul(c, s);
                        }
                        cur = img;
                        break;
                    }
                }
                if (std::equal(cur.begin(), cur.end(), raw)) fixed_found = true;
            });
            if (!fixed_found) some_slot_free = true;
        }
        if (!some_slot_free)
            throw ActionNotFree("g^" + std::to_string(k) +
                                " fixes an enumerated point");
    }

    BigInt acc(0);
    for (uint32_t k = 0; k < m; ++k) acc += twisted_count(V, action, k, r, budget);
    BigInt q_, rem;
    BigInt::divmod(acc, BigInt(m), q_, rem);
    if (!rem.is_zero())
        throw NonIntegralQuotient("twisted count sum is not divisible by |G|");
    return q_;
}

bool smoothness_spot_check(const VarietySpec& V, uint32_t r_max,
                           const GeomBudget& budget) {
    auto slice = as_eq_slice(V);
    if (!slice)
        throw HypothesisViolated("smoothness check needs explicit equations");
    if (slice->eqs.empty()) return true;  // ambient space, nothing to check
    size_t neq = slice->eqs.size();
    uint32_t nc = slice->ncoords;
    for (uint32_t r = 1; r <= r_max; ++r) {
        FqField big = ext_field(*slice->base, r);
        CompiledField cf(big);
        check_budget(ambient_size(slice->projective, nc, cf.size()), budget);
        std::vector<CompiledPoly> eqs;
        std::vector<std::vector<CompiledPoly>> jac(neq);
        for (size_t i = 0; i < neq; ++i) {
            eqs.emplace_back(*slice->eqs[i], cf, *slice->base);
            const IntMPoly& f = *slice->eqs[i];
            int gi = f.g_index();
            for (size_t v = 0; v < f.vars().size(); ++v) {
                if (static_cast<int>(v) == gi) continue;
                jac[i].emplace_back(f.derivative(v), cf, *slice->base);
            }
        }
        bool ok = true;
        for_each_tuple(cf, slice->projective, nc, [&](const uint32_t* pt) {
            if (!ok) return;
            for (const auto& e : eqs)
                if (e.eval(cf, pt) != 0) return;
            // Gaussian rank of the Jacobian at this point
            std::vector<std::vector<uint32_t>> m(neq, std::vector<uint32_t>(nc));
            for (size_t i = 0; i < neq; ++i)
                for (uint32_t j = 0; j < nc; ++j) m[i][j] = jac[i][j].eval(cf, pt);
            size_t rank = 0;
            for (uint32_t col = 0; col < nc && rank < neq; ++col) {
                size_t piv = rank;
                while (piv < neq && m[piv][col] == 0) ++piv;
                if (piv == neq) continue;
                std::swap(m[piv], m[rank]);
                uint32_t ipiv = cf.inv(m[rank][col]);
                for (size_t i = rank + 1; i < neq; ++i) {
                    if (m[i][col] == 0) continue;
                    uint32_t f = cf.mul(m[i][col], ipiv);
                    for (uint32_t j = col; j < nc; ++j)
                        m[i][j] = cf.add(m[i][j], cf.neg(cf.mul(f, m[rank][j])));
                }
                ++rank;
            }
            if (rank != neq) ok = false;
        });
        if (!ok) return false;
    }
    return true;
}

std::vector<GeomPoint> list_points(const VarietySpec& V, uint32_t r,
                                   const GeomBudget& budget) {
    switch (V.kind) {
        case VarietySpec::Kind::Affine:
        case VarietySpec::Kind::Projective: {
            auto slice = as_eq_slice(V);
            FqField big = ext_field(V.base, r);
            CompiledField cf(big);
            check_budget(ambient_size(slice->projective, slice->ncoords, cf.size()),
                         budget);
            std::vector<CompiledPoly> eqs;
            for (const auto* e : slice->eqs) eqs.emplace_back(*e, cf, V.base);
            std::vector<GeomPoint> out;
            for_each_tuple(cf, slice->projective, slice->ncoords,
                           [&](const uint32_t* pt) {
                               for (const auto& e : eqs)
                                   if (e.eval(cf, pt) != 0) return;
                               GeomPoint gp(1);
                               for (uint32_t c = 0; c < slice->ncoords; ++c)
                                   gp[0].push_back(cf.elem_of(pt[c]));
                               out.push_back(std::move(gp));
                           });
            return out;
        }
        case VarietySpec::Kind::Product: {
            std::vector<std::vector<GeomPoint>> factor_pts;
            BigInt total(1);
            for (const auto& f : V.parts) {
                factor_pts.push_back(list_points(f, r, budget));
                total *= BigInt::from_uint64(factor_pts.back().size());
            }
            check_budget(total, budget);
            std::vector<GeomPoint> out;
            std::vector<size_t> idx(V.parts.size(), 0);
            for (;;) {
                GeomPoint gp;
                for (size_t j = 0; j < V.parts.size(); ++j)
                    for (const auto& tuple : factor_pts[j][idx[j]])
                        gp.push_back(tuple);
                out.push_back(std::move(gp));
                int j = static_cast<int>(V.parts.size()) - 1;
                while (j >= 0) {
                    if (++idx[j] < factor_pts[j].size()) break;
                    idx[j] = 0;
                    --j;
                }
                if (j < 0) break;
            }
            return out;
        }
        case VarietySpec::Kind::TranslateEmbed: {
            auto curve_pts = list_points(V.parts[1], r, budget);
            FqField big = ext_field(V.base, r);
            std::vector<GeomPoint> out;
            for (const auto& cp : curve_pts) {
                GeomPoint gp;
                for (uint32_t j = 0; j < V.parts[0].parts.size(); ++j) {
                    if (j == V.slot)
                        gp.push_back(cp[0]);
                    else
                        gp.push_back(embed_tuple(big, V.base, V.fixed[j]));
                }
                out.push_back(std::move(gp));
            }
            return out;
        }
        case VarietySpec::Kind::Union: {
            std::vector<GeomPoint> out;
            for (const auto& c : V.parts) {
                auto pts = list_points(c, r, budget);
                out.insert(out.end(), pts.begin(), pts.end());
            }
            std::sort(out.begin(), out.end(),
                      [](const GeomPoint& a, const GeomPoint& b) {
                          return std::lexicographical_compare(
                              a.begin(), a.end(), b.begin(), b.end(),
                              [](const std::vector<FqElem>& u,
                                 const std::vector<FqElem>& v) {
                                  return u < v;
                              });
                      });
            out.erase(std::unique(out.begin(), out.end()), out.end());
            return out;
        }
    }
    throw Error("unreachable");
}

bool point_on(const VarietySpec& V, const GeomPoint& pt, uint32_t r) {
    FqField big = ext_field(V.base, r);
    const FqElem* gval = nullptr;
    FqElem root;
    if (V.base.a() > 1) {
        root = big.embed_generator(V.base);
        gval = &root;
    }
    auto eqs_hold = [&](const std::vector<IntMPoly>& eqs,
                        const std::vector<FqElem>& tuple) {
        for (const auto& e : eqs)
            if (!mpoly_eval_g(e, tuple, big, gval).is_zero()) return false;
        return true;
    };
    switch (V.kind) {
        case VarietySpec::Kind::Affine:
        case VarietySpec::Kind::Projective:
            return eqs_hold(V.equations, pt.at(0));
        case VarietySpec::Kind::Product: {
            size_t off = 0;
            for (const auto& f : V.parts) {
                uint32_t ns = num_slots(f);
                GeomPoint sub(pt.begin() + off, pt.begin() + off + ns);
                if (!point_on(f, sub, r)) return false;
                off += ns;
            }
            return true;
        }
        case VarietySpec::Kind::TranslateEmbed: {
            for (uint32_t j = 0; j < V.parts[0].parts.size(); ++j) {
                const auto& tuple = pt.at(j);
                if (j == V.slot) {
                    GeomPoint sub = {tuple};
                    if (!point_on(V.parts[1], sub, r)) return false;
                } else {
                    auto want = embed_tuple(big, V.base, V.fixed[j]);
                    if (V.parts[0].parts[j].kind == VarietySpec::Kind::Projective)
                        want = normalize_proj(big, std::move(want));
                    if (tuple != want) return false;
                }
            }
            return true;
        }
        case VarietySpec::Kind::Union: {
            for (const auto& c : V.parts)
                if (point_on(c, pt, r)) return true;
            return false;
        }
    }
    throw Error("unreachable");
}

GeomPoint apply_generator(const VarietySpec& V, const GroupAction& action,
                          uint32_t k, const GeomPoint& pt, uint32_t r_total) {
    FqField big = ext_field(V.base, r_total);
    GeomPoint cur = pt;
    for (uint32_t step = 0; step < k; ++step) {
        GeomPoint next;
        for (uint32_t j = 0; j < cur.size(); ++j) {
            const VarietySpec& W = slot_variety(V, j);
            bool projective = W.kind == VarietySpec::Kind::Projective;
            next.push_back(eval_map_reps(action.slot_maps[j].reps, cur[j], big,
                                         V.base, projective));
        }
        cur = std::move(next);
    }
    return cur;
}

GeomPoint frobenius_point(const VarietySpec& V, const GeomPoint& pt,
                          uint32_t r_total, uint32_t s) {
    FqField big = ext_field(V.base, r_total);
    GeomPoint out;
    for (uint32_t j = 0; j < pt.size(); ++j) {
        std::vector<FqElem> tuple;
        for (const auto& c : pt[j]) tuple.push_back(big.frobenius(c, s));
        const VarietySpec& W = slot_variety(V, j);
        if (W.kind == VarietySpec::Kind::Projective)
            tuple = normalize_proj(big, std::move(tuple));
        out.push_back(std::move(tuple));
    }
    return out;
}

BigInt direct_union_count(const VarietySpec& U, uint32_t r,
                          const GeomBudget& budget) {
    if (U.kind != VarietySpec::Kind::Union)
        throw Error("direct_union_count takes a union");
    uint64_t count = 0;
    if (union_is_cellular(U)) {
        // enumerate the ambient product's points (tuples of factor points)
        const VarietySpec& ambient = U.parts[0].parts[0];
        auto pts = list_points(ambient, r, budget);
        for (const auto& pt : pts)
            if (point_on(U, pt, r)) ++count;
        return BigInt::from_uint64(count);
    }
    // plain equation components: enumerate the shared coordinate ambient
    auto slice = as_eq_slice(U.parts[0]);
    FqField big = ext_field(U.base, r);
    CompiledField cf(big);
    check_budget(ambient_size(slice->projective, slice->ncoords, cf.size()),
                 budget);
    std::vector<std::vector<CompiledPoly>> comp_eqs;
    for (const auto& c : U.parts) {
        std::vector<CompiledPoly> eqs;
        for (const auto& e : c.equations) eqs.emplace_back(e, cf, U.base);
        comp_eqs.push_back(std::move(eqs));
    }
    for_each_tuple(cf, slice->projective, slice->ncoords, [&](const uint32_t* pt) {
        for (const auto& eqs : comp_eqs) {
            bool on = true;
            for (const auto& e : eqs)
                if (e.eval(cf, pt) != 0) {
                    on = false;
                    break;
                }
            if (on) {
                ++count;
                return;
            }
        }
    });
    return BigInt::from_uint64(count);
}

}  // namespace wz
