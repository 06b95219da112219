#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "wz/ff.hpp"

namespace wz {

/// Flat, index-based view of a finite field built for enumeration kernels.
/// Elements are their pinned enumeration indices (0 = zero element). Fields
/// up to zech_table_cap elements get discrete-log tables (multiplication by
/// exponent addition); larger fields fall back to coordinate arithmetic.
class CompiledField {
  public:
    static constexpr uint64_t kZechCap = 1u << 20;

    explicit CompiledField(const FqField& field);

    const FqField& field() const { return field_; }
    uint64_t size() const { return n_; }

    uint32_t zero() const { return 0; }
    uint32_t one() const { return one_; }

    uint32_t add(uint32_t x, uint32_t y) const;
    uint32_t neg(uint32_t x) const;
    uint32_t mul(uint32_t x, uint32_t y) const;
    uint32_t inv(uint32_t x) const;  // DivisionByZero on 0
    uint32_t pow(uint32_t x, uint64_t e) const;
    /// x^(p^s)
    uint32_t frob(uint32_t x, uint32_t s) const;

    uint32_t index_of(const FqElem& e) const;
    FqElem elem_of(uint32_t idx) const;

  private:
    FqField field_;
    uint64_t n_;
    uint32_t one_;
    bool tabled_;
    // tabled mode
    std::vector<uint32_t> log_;      // index -> discrete log (log_[0] unused)
    std::vector<uint32_t> exp_;      // discrete log -> index
    std::vector<uint32_t> add_one_;  // Zech-style: index -> index of x+1
    std::vector<uint32_t> neg_;      // index -> index of -x

    uint32_t slow_add(uint32_t x, uint32_t y) const;
    uint32_t slow_mul(uint32_t x, uint32_t y) const;
};

/// A polynomial compiled against a CompiledField for fast repeated
/// evaluation: integer coefficients reduced into the field, with the
/// reserved symbol g resolved to the chosen root of the base modulus.
class CompiledPoly {
  public:
    CompiledPoly(const IntMPoly& f, const CompiledField& cf,
                 const FqField& base_field);

    /// Evaluate at a point given by element indices (arity coordinates).
    uint32_t eval(const CompiledField& cf, const uint32_t* point) const;

    size_t arity() const { return arity_; }

  private:
    struct Term {
        uint32_t coeff;  // element index, never zero()
        std::vector<uint16_t> exps;
    };
    std::vector<Term> terms_;
    size_t arity_;
};

}  // namespace wz
