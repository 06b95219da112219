#pragma once

#include <string>
#include <vector>

#include "wz/bigint.hpp"

namespace wz {

/// Dense univariate polynomial over Z, little-endian coefficients,
/// no trailing zeros. The zero polynomial has an empty vector.
class IntPoly {
  public:
    IntPoly() = default;
    explicit IntPoly(std::vector<BigInt> coeffs) : c_(std::move(coeffs)) {
        trim();
    }
    static IntPoly constant(BigInt v) { return IntPoly({std::move(v)}); }
    /// c0 + c1 t + c2 t^2 + ...
    static IntPoly of(std::initializer_list<long long> cs);

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const std::vector<BigInt>& coeffs() const { return c_; }
    BigInt coeff(int i) const {
        return (i >= 0 && i < static_cast<int>(c_.size())) ? c_[i] : BigInt(0);
    }

    IntPoly operator+(const IntPoly& o) const;
    IntPoly operator-(const IntPoly& o) const;
    IntPoly operator*(const IntPoly& o) const;
    IntPoly operator-() const;
    bool operator==(const IntPoly& o) const { return c_ == o.c_; }
    bool operator!=(const IntPoly& o) const { return c_ != o.c_; }

    IntPoly scale(const BigInt& k) const;
    /// Substitute t -> k*t.
    IntPoly compose_scale(const BigInt& k) const;
    /// Exact division; throws if not divisible over Z.
    IntPoly divide_exact(const IntPoly& d) const;

    BigInt eval(const BigInt& x) const;
    BigInt content() const;  // gcd of coefficients, 0 for zero poly
    IntPoly primitive_part() const;

    /// gcd over Q, returned as a primitive integer polynomial whose lowest
    /// nonzero coefficient is positive (1 for coprime inputs).
    static IntPoly gcd_primitive(IntPoly a, IntPoly b);

    /// Power sums s_r of the inverse roots of a polynomial with constant
    /// term 1, for r = 1..R, via Newton's identities. Exact.
    static std::vector<BigInt> inverse_root_power_sums(const IntPoly& f, int R);

    std::string to_string(const std::string& var = "t") const;

  private:
    std::vector<BigInt> c_;
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }
};

/// Resultant in x of two polynomials whose coefficients are IntPoly in t,
/// via fraction-free Bareiss elimination of the Sylvester matrix.
/// a and b are given by coefficient lists in x (little-endian), with
/// nominal degrees taken from the list lengths.
IntPoly resultant_x(const std::vector<IntPoly>& a, const std::vector<IntPoly>& b);

}  // namespace wz
