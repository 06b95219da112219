#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "wz/bigint.hpp"
#include "wz/mpoly.hpp"

namespace wz {

/// Element of F_{p^a}: coordinates in the basis 1, g, ..., g^{a-1} where g
/// is a root of the field's pinned modulus. Each coordinate lies in [0, p).
struct FqElem {
    uint32_t p = 0;
    uint32_t a = 0;
    std::vector<uint32_t> coords;

    bool is_zero() const {
        for (uint32_t c : coords)
            if (c) return false;
        return true;
    }
    bool operator==(const FqElem& o) const {
        return p == o.p && a == o.a && coords == o.coords;
    }
    bool operator!=(const FqElem& o) const { return !(*this == o); }
    bool operator<(const FqElem& o) const { return coords < o.coords; }
};

/// Field context for F_{p^a}. The modulus is pinned to the lexicographically
/// least monic irreducible of degree a over F_p (coefficient order
/// c_0, ..., c_{a-1}), so construction is deterministic. Immutable once
/// built and safe to share.
class FqField {
  public:
    FqField() = default;
    /// p prime (trial-division checked), 1 <= a <= degree_cap.
    static FqField make(uint32_t p, uint32_t a, uint32_t degree_cap = 16);

    uint32_t p() const { return p_; }
    uint32_t a() const { return a_; }
    const BigInt& q() const { return q_; }
    uint64_t order_u64() const { return q_u64_; }
    /// Modulus coefficients c_0..c_{a-1} (the x^a coefficient is 1).
    const std::vector<uint32_t>& modulus() const { return modulus_; }

    bool operator==(const FqField& o) const { return p_ == o.p_ && a_ == o.a_; }
    bool operator!=(const FqField& o) const { return !(*this == o); }

    FqElem zero() const;
    FqElem one() const;
    FqElem generator() const;  // the class of x; requires a >= 2
    FqElem from_int(const BigInt& c) const;

    FqElem add(const FqElem& x, const FqElem& y) const;
    FqElem sub(const FqElem& x, const FqElem& y) const;
    FqElem neg(const FqElem& x) const;
    FqElem mul(const FqElem& x, const FqElem& y) const;
    FqElem inv(const FqElem& x) const;  // DivisionByZero on 0
    FqElem pow(const FqElem& x, uint64_t e) const;
    /// x -> x^{p^s}
    FqElem frobenius(const FqElem& x, uint32_t s) const;

    bool eq(const FqElem& x, const FqElem& y) const;

    // CoeffRing interface used by the Witt machinery.
    using Elem = FqElem;
    uint32_t char_p() const { return p_; }
    static constexpr bool torsion_free = false;
    FqElem pow_p(const FqElem& x) const { return frobenius(x, 1); }

    /// Deterministic enumeration in pinned lexicographic coordinate order
    /// (c_0 most significant). element_at(index) is its random-access form.
    void enumerate(const std::function<void(const FqElem&)>& fn) const;
    FqElem element_at(uint64_t index) const;
    uint64_t element_index(const FqElem& x) const;

    /// Least root (pinned element order) of `base`'s modulus in this field;
    /// identity when base == *this. Used to re-express base-field constants
    /// written in the symbol g inside extension fields.
    FqElem embed_generator(const FqField& base) const;

  private:
    uint32_t p_ = 0;
    uint32_t a_ = 0;
    std::vector<uint32_t> modulus_;
    BigInt q_;
    uint64_t q_u64_ = 0;  // 0 if the order does not fit in 64 bits

    void check_elem(const FqElem& x) const;
};

/// Evaluate an integer-coefficient polynomial at a point of field^arity.
/// Integer coefficients reduce mod p; the reserved symbol g binds to the
/// field generator (requires a > 1 when present).
FqElem mpoly_eval(const IntMPoly& f, const std::vector<FqElem>& point,
                  const FqField& field);

/// Same, with an explicit value for g (for evaluation inside extension
/// fields where g means a root of the base modulus).
FqElem mpoly_eval_g(const IntMPoly& f, const std::vector<FqElem>& point,
                    const FqField& field, const FqElem* g_value);

bool is_prime_u32(uint32_t n);

}  // namespace wz
