#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "wz/bigint.hpp"

namespace wz {

/// Sparse multivariate polynomial with big-integer coefficients.
/// Terms map exponent vectors (one entry per variable) to nonzero
/// coefficients. Variable names are carried for parsing and printing; all
/// arithmetic is positional. The reserved name "g" denotes the field
/// generator and is excluded from arity and degree bookkeeping.
class IntMPoly {
  public:
    using Exps = std::vector<uint16_t>;

    IntMPoly() = default;
    explicit IntMPoly(std::vector<std::string> vars) : vars_(std::move(vars)) {}

    static IntMPoly constant(std::vector<std::string> vars, BigInt c);
    static IntMPoly variable(std::vector<std::string> vars, size_t index);

    const std::vector<std::string>& vars() const { return vars_; }
    size_t nvars() const { return vars_.size(); }
    const std::map<Exps, BigInt>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    /// Index of the reserved generator symbol, or -1 if absent.
    int g_index() const;
    /// Number of coordinate variables (excludes "g").
    size_t arity() const;

    void add_term(const Exps& e, const BigInt& c);

    IntMPoly operator+(const IntMPoly& o) const;
    IntMPoly operator-(const IntMPoly& o) const;
    IntMPoly operator*(const IntMPoly& o) const;
    IntMPoly operator-() const;
    bool operator==(const IntMPoly& o) const {
        return vars_ == o.vars_ && terms_ == o.terms_;
    }
    bool operator!=(const IntMPoly& o) const { return !(*this == o); }

    IntMPoly pow(unsigned e) const;
    IntMPoly scale(const BigInt& k) const;
    /// Divide every coefficient exactly by k; throws NonIntegralUniversal.
    IntMPoly divide_exact_scalar(const BigInt& k) const;
    IntMPoly derivative(size_t var) const;
    /// Substitute zero for the given variables.
    IntMPoly substitute_zero(const std::vector<size_t>& zero_vars) const;
    /// Reduce all coefficients into [0, p).
    IntMPoly reduce_mod(const BigInt& p) const;

    /// Total degree counting coordinate variables only; -1 for zero.
    int total_degree() const;
    bool is_homogeneous() const;

    std::string to_string() const;

  private:
    std::vector<std::string> vars_;
    std::map<Exps, BigInt> terms_;
};

}  // namespace wz
