#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace wz {

/// Arbitrary-precision signed integer, sign-magnitude with 32-bit limbs.
/// Covers the sizes this library needs (universal Witt polynomial
/// coefficients, Bareiss intermediates, residues mod p^M); nothing here is
/// tuned for cryptographic operand sizes.
class BigInt {
  public:
    BigInt() = default;
    BigInt(long long v);  // NOLINT: implicit by design, matches int literals
    explicit BigInt(const std::string& decimal);

    static BigInt from_uint64(uint64_t v);

    bool is_zero() const { return limbs_.empty(); }
    bool is_negative() const { return negative_; }
    int sign() const { return is_zero() ? 0 : (negative_ ? -1 : 1); }

    BigInt operator-() const;
    BigInt abs() const;

    BigInt operator+(const BigInt& o) const;
    BigInt operator-(const BigInt& o) const;
    BigInt operator*(const BigInt& o) const;
    /// Truncated division (C semantics: quotient rounds toward zero).
    BigInt operator/(const BigInt& o) const;
    BigInt operator%(const BigInt& o) const;

    BigInt& operator+=(const BigInt& o) { return *this = *this + o; }
    BigInt& operator-=(const BigInt& o) { return *this = *this - o; }
    BigInt& operator*=(const BigInt& o) { return *this = *this * o; }
    BigInt& operator/=(const BigInt& o) { return *this = *this / o; }
    BigInt& operator%=(const BigInt& o) { return *this = *this % o; }

    bool operator==(const BigInt& o) const;
    bool operator!=(const BigInt& o) const { return !(*this == o); }
    bool operator<(const BigInt& o) const;
    bool operator>(const BigInt& o) const { return o < *this; }
    bool operator<=(const BigInt& o) const { return !(o < *this); }
    bool operator>=(const BigInt& o) const { return !(*this < o); }

    /// Quotient and remainder in one pass; remainder has the dividend's sign.
    static void divmod(const BigInt& a, const BigInt& b, BigInt& q, BigInt& r);

    /// Euclidean remainder in [0, |m|).
    BigInt mod_euclid(const BigInt& m) const;

    /// Exact division; throws NonIntegralUniversal if a remainder is left.
    BigInt divide_exact(const BigInt& o) const;

    static BigInt gcd(BigInt a, BigInt b);
    static BigInt pow(const BigInt& base, uint64_t exp);
    /// Modular exponentiation with Euclidean reduction (m > 0).
    static BigInt powmod(BigInt base, BigInt exp, const BigInt& m);

    bool fits_int64() const;
    int64_t to_int64() const;  // requires fits_int64()
    std::string to_string() const;

    /// Number of times p divides *this; returns -1 for zero.
    int valuation(const BigInt& p) const;

    size_t hash() const;

  private:
    bool negative_ = false;
    std::vector<uint32_t> limbs_;  // little-endian, no trailing zeros

    void trim();
    static int cmp_mag(const BigInt& a, const BigInt& b);
    static BigInt add_mag(const BigInt& a, const BigInt& b);
    static BigInt sub_mag(const BigInt& a, const BigInt& b);  // |a| >= |b|
    static void divmod_mag(const BigInt& a, const BigInt& b, BigInt& q,
                           BigInt& r);
};

inline BigInt operator+(long long a, const BigInt& b) { return BigInt(a) + b; }
inline BigInt operator*(long long a, const BigInt& b) { return BigInt(a) * b; }

/// Exact rational number; always stored reduced with positive denominator.
class BigRat {
  public:
    BigRat() : num_(0), den_(1) {}
    BigRat(BigInt n) : num_(std::move(n)), den_(1) {}  // NOLINT
    BigRat(long long n) : num_(n), den_(1) {}          // NOLINT
    BigRat(BigInt n, BigInt d);

    const BigInt& num() const { return num_; }
    const BigInt& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_integer() const { return den_ == BigInt(1); }

    BigRat operator+(const BigRat& o) const;
    BigRat operator-(const BigRat& o) const;
    BigRat operator*(const BigRat& o) const;
    BigRat operator/(const BigRat& o) const;
    BigRat operator-() const;

    bool operator==(const BigRat& o) const {
        return num_ == o.num_ && den_ == o.den_;
    }
    bool operator!=(const BigRat& o) const { return !(*this == o); }
    bool operator<(const BigRat& o) const;
    bool operator>(const BigRat& o) const { return o < *this; }
    bool operator<=(const BigRat& o) const { return !(o < *this); }
    bool operator>=(const BigRat& o) const { return !(*this < o); }

    std::string to_string() const;

  private:
    BigInt num_;
    BigInt den_;
    void normalize();
};

}  // namespace wz
