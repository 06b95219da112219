#include "wz/bigint.hpp"

#include <algorithm>
#include <cstdlib>

#include "wz/errors.hpp"

namespace wz {

void BigInt::trim() {
    while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
    if (limbs_.empty()) negative_ = false;
}

BigInt::BigInt(long long v) {
    negative_ = v < 0;
    unsigned long long u =
        negative_ ? ~static_cast<unsigned long long>(v) + 1ULL
                  : static_cast<unsigned long long>(v);
    while (u) {
        limbs_.push_back(static_cast<uint32_t>(u & 0xffffffffULL));
        u >>= 32;
    }
}

BigInt BigInt::from_uint64(uint64_t v) {
    BigInt r;
    while (v) {
        r.limbs_.push_back(static_cast<uint32_t>(v & 0xffffffffULL));
        v >>= 32;
    }
    return r;
}

BigInt::BigInt(const std::string& decimal) {
    size_t i = 0;
    bool neg = false;
    if (i < decimal.size() && (decimal[i] == '-' || decimal[i] == '+')) {
        neg = decimal[i] == '-';
        ++i;
    }
    if (i >= decimal.size()) throw Error("BigInt: empty decimal string");
    BigInt acc;
    for (; i < decimal.size(); ++i) {
        char c = decimal[i];
        if (c < '0' || c > '9') throw Error("BigInt: bad digit in decimal string");
        acc = acc * BigInt(10) + BigInt(c - '0');
    }
    acc.negative_ = neg;
    acc.trim();
    *this = acc;
}

int BigInt::cmp_mag(const BigInt& a, const BigInt& b) {
    if (a.limbs_.size() != b.limbs_.size())
        return a.limbs_.size() < b.limbs_.size() ? -1 : 1;
    for (size_t i = a.limbs_.size(); i-- > 0;) {
        if (a.limbs_[i] != b.limbs_[i]) return a.limbs_[i] < b.limbs_[i] ? -1 : 1;
    }
    return 0;
}

BigInt BigInt::add_mag(const BigInt& a, const BigInt& b) {
    BigInt r;
    const auto& x = a.limbs_;
    const auto& y = b.limbs_;
    size_t n = std::max(x.size(), y.size());
    r.limbs_.resize(n, 0);
    uint64_t carry = 0;
    for (size_t i = 0; i < n; ++i) {
        uint64_t s = carry;
        if (i < x.size()) s += x[i];
        if (i < y.size()) s += y[i];
        r.limbs_[i] = static_cast<uint32_t>(s & 0xffffffffULL);
        carry = s >> 32;
    }
    if (carry) r.limbs_.push_back(static_cast<uint32_t>(carry));
    return r;
}

BigInt BigInt::sub_mag(const BigInt& a, const BigInt& b) {
    BigInt r;
    r.limbs_ = a.limbs_;
    int64_t borrow = 0;
    for (size_t i = 0; i < r.limbs_.size(); ++i) {
        int64_t d = static_cast<int64_t>(r.limbs_[i]) - borrow -
                    (i < b.limbs_.size() ? static_cast<int64_t>(b.limbs_[i]) : 0);
        if (d < 0) {
            d += 1LL << 32;
            borrow = 1;
        } else {
            borrow = 0;
        }
        r.limbs_[i] = static_cast<uint32_t>(d);
    }
    r.trim();
    return r;
}

BigInt BigInt::operator-() const {
    BigInt r = *this;
    if (!r.is_zero()) r.negative_ = !r.negative_;
    return r;
}

BigInt BigInt::abs() const {
    BigInt r = *this;
    r.negative_ = false;
    return r;
}

BigInt BigInt::operator+(const BigInt& o) const {
    if (negative_ == o.negative_) {
        BigInt r = add_mag(*this, o);
        r.negative_ = negative_;
        r.trim();
        return r;
    }
    int c = cmp_mag(*this, o);
    if (c == 0) return BigInt();
    if (c > 0) {
        BigInt r = sub_mag(*this, o);
        r.negative_ = negative_;
        r.trim();
        return r;
    }
    BigInt r = sub_mag(o, *this);
    r.negative_ = o.negative_;
    r.trim();
    return r;
}

BigInt BigInt::operator-(const BigInt& o) const { return *this + (-o); }

BigInt BigInt::operator*(const BigInt& o) const {
    if (is_zero() || o.is_zero()) return BigInt();
    BigInt r;
    r.limbs_.assign(limbs_.size() + o.limbs_.size(), 0);
    for (size_t i = 0; i < limbs_.size(); ++i) {
        uint64_t carry = 0;
        uint64_t ai = limbs_[i];
        for (size_t j = 0; j < o.limbs_.size(); ++j) {
            uint64_t cur = r.limbs_[i + j] + carry + ai * o.limbs_[j];
            r.limbs_[i + j] = static_cast<uint32_t>(cur & 0xffffffffULL);
            carry = cur >> 32;
        }
        size_t k = i + o.limbs_.size();
        while (carry) {
            uint64_t cur = r.limbs_[k] + carry;
            r.limbs_[k] = static_cast<uint32_t>(cur & 0xffffffffULL);
            carry = cur >> 32;
            ++k;
        }
    }
    r.negative_ = negative_ != o.negative_;
    r.trim();
    return r;
}

// Knuth algorithm D on 32-bit limbs.
void BigInt::divmod_mag(const BigInt& a, const BigInt& b, BigInt& q, BigInt& r) {
    if (b.is_zero()) throw DivisionByZero("BigInt division by zero");
    if (cmp_mag(a, b) < 0) {
        q = BigInt();
        r = a;
        r.negative_ = false;
        return;
    }
    if (b.limbs_.size() == 1) {
        uint64_t d = b.limbs_[0];
        q.limbs_.assign(a.limbs_.size(), 0);
        q.negative_ = false;
        uint64_t rem = 0;
        for (size_t i = a.limbs_.size(); i-- > 0;) {
            uint64_t cur = (rem << 32) | a.limbs_[i];
            q.limbs_[i] = static_cast<uint32_t>(cur / d);
            rem = cur % d;
        }
        q.trim();
        r = from_uint64(rem);
        return;
    }

    // Normalize so the divisor's top limb has its high bit set.
    int shift = 0;
    uint32_t top = b.limbs_.back();
    while (!(top & 0x80000000u)) {
        top <<= 1;
        ++shift;
    }
    auto shl = [](const std::vector<uint32_t>& v, int s) {
        std::vector<uint32_t> out(v.size() + 1, 0);
        for (size_t i = 0; i < v.size(); ++i) {
            out[i] |= static_cast<uint32_t>((static_cast<uint64_t>(v[i]) << s) &
                                            0xffffffffULL);
            if (s)
                out[i + 1] |= static_cast<uint32_t>(static_cast<uint64_t>(v[i]) >>
                                                    (32 - s));
        }
        return out;
    };
    std::vector<uint32_t> u = shl(a.limbs_, shift);
    std::vector<uint32_t> v = shl(b.limbs_, shift);
    while (!v.empty() && v.back() == 0) v.pop_back();
    size_t n = v.size();
    size_t m = u.size() - n;

    q.limbs_.assign(m, 0);
    q.negative_ = false;
    const uint64_t base = 1ULL << 32;
    for (size_t j = m; j-- > 0;) {
        uint64_t num = (static_cast<uint64_t>(u[j + n]) << 32) | u[j + n - 1];
        uint64_t qhat = num / v[n - 1];
        uint64_t rhat = num % v[n - 1];
        while (qhat >= base ||
               qhat * v[n - 2] > ((rhat << 32) | u[j + n - 2])) {
            --qhat;
            rhat += v[n - 1];
            if (rhat >= base) break;
        }
        // Multiply-subtract qhat * v from u[j..j+n].
        int64_t borrow = 0;
        uint64_t carry = 0;
        for (size_t i = 0; i < n; ++i) {
            uint64_t prod = qhat * v[i] + carry;
            carry = prod >> 32;
            int64_t d = static_cast<int64_t>(u[i + j]) -
                        static_cast<int64_t>(prod & 0xffffffffULL) - borrow;
            if (d < 0) {
                d += static_cast<int64_t>(base);
                borrow = 1;
            } else {
                borrow = 0;
            }
            u[i + j] = static_cast<uint32_t>(d);
        }
        int64_t d = static_cast<int64_t>(u[j + n]) - static_cast<int64_t>(carry) -
                    borrow;
        if (d < 0) {
            // qhat was one too large; add divisor back.
            d += static_cast<int64_t>(base);
            --qhat;
            uint64_t c2 = 0;
            for (size_t i = 0; i < n; ++i) {
                uint64_t s = static_cast<uint64_t>(u[i + j]) + v[i] + c2;
                u[i + j] = static_cast<uint32_t>(s & 0xffffffffULL);
                c2 = s >> 32;
            }
            d += static_cast<int64_t>(c2);
            d &= static_cast<int64_t>(base - 1);
        }
        u[j + n] = static_cast<uint32_t>(d);
        q.limbs_[j] = static_cast<uint32_t>(qhat);
    }
    q.trim();
    // Denormalize remainder.
    r.limbs_.assign(n, 0);
    r.negative_ = false;
    for (size_t i = 0; i < n; ++i) {
        uint32_t lo = u[i] >> shift;
        uint32_t hi =
            (shift && i + 1 < u.size())
                ? static_cast<uint32_t>((static_cast<uint64_t>(u[i + 1])
                                         << (32 - shift)) &
                                        0xffffffffULL)
                : 0;
        r.limbs_[i] = lo | hi;
    }
    r.trim();
}

void BigInt::divmod(const BigInt& a, const BigInt& b, BigInt& q, BigInt& r) {
    divmod_mag(a, b, q, r);
    q.negative_ = !q.is_zero() && (a.negative_ != b.negative_);
    r.negative_ = !r.is_zero() && a.negative_;
}

BigInt BigInt::operator/(const BigInt& o) const {
    BigInt q, r;
    divmod(*this, o, q, r);
    return q;
}

BigInt BigInt::operator%(const BigInt& o) const {
    BigInt q, r;
    divmod(*this, o, q, r);
    return r;
}

BigInt BigInt::mod_euclid(const BigInt& m) const {
    BigInt r = *this % m;
    if (r.is_negative()) r += m.abs();
    return r;
}

BigInt BigInt::divide_exact(const BigInt& o) const {
    BigInt q, r;
    divmod(*this, o, q, r);
    if (!r.is_zero()) throw NonIntegralUniversal("exact division left remainder");
    return q;
}

bool BigInt::operator==(const BigInt& o) const {
    return negative_ == o.negative_ && limbs_ == o.limbs_;
}

bool BigInt::operator<(const BigInt& o) const {
    if (negative_ != o.negative_) return negative_;
    int c = cmp_mag(*this, o);
    return negative_ ? c > 0 : c < 0;
}

BigInt BigInt::gcd(BigInt a, BigInt b) {
    a.negative_ = false;
    b.negative_ = false;
    while (!b.is_zero()) {
        BigInt r = a % b;
        a = b;
        b = r;
    }
    return a;
}

BigInt BigInt::pow(const BigInt& base, uint64_t exp) {
    BigInt r(1), b = base;
    while (exp) {
        if (exp & 1) r *= b;
        exp >>= 1;
        if (exp) b *= b;
    }
    return r;
}

BigInt BigInt::powmod(BigInt base, BigInt exp, const BigInt& m) {
    BigInt r(1);
    base = base.mod_euclid(m);
    while (!exp.is_zero()) {
        if ((exp % BigInt(2)) == BigInt(1)) r = (r * base).mod_euclid(m);
        exp /= BigInt(2);
        if (!exp.is_zero()) base = (base * base).mod_euclid(m);
    }
    return r;
}

bool BigInt::fits_int64() const {
    if (limbs_.size() > 2) return false;
    if (limbs_.size() < 2) return true;
    uint64_t mag = (static_cast<uint64_t>(limbs_[1]) << 32) | limbs_[0];
    return negative_ ? mag <= (1ULL << 63) : mag < (1ULL << 63);
}

int64_t BigInt::to_int64() const {
    uint64_t mag = 0;
    if (limbs_.size() >= 1) mag |= limbs_[0];
    if (limbs_.size() >= 2) mag |= static_cast<uint64_t>(limbs_[1]) << 32;
    return negative_ ? -static_cast<int64_t>(mag) : static_cast<int64_t>(mag);
}

std::string BigInt::to_string() const {
    if (is_zero()) return "0";
    BigInt t = abs();
    std::string digits;
    const BigInt billion(1000000000);
    while (!t.is_zero()) {
        BigInt q, r;
        divmod(t, billion, q, r);
        uint64_t chunk = r.limbs_.empty() ? 0 : r.limbs_[0];
        for (int i = 0; i < 9; ++i) {
            digits.push_back(static_cast<char>('0' + chunk % 10));
            chunk /= 10;
        }
        t = q;
    }
    while (digits.size() > 1 && digits.back() == '0') digits.pop_back();
    if (negative_) digits.push_back('-');
    std::reverse(digits.begin(), digits.end());
    return digits;
}

int BigInt::valuation(const BigInt& p) const {
    if (is_zero()) return -1;
    int v = 0;
    BigInt t = abs(), q, r;
    for (;;) {
        divmod(t, p, q, r);
        if (!r.is_zero()) return v;
        t = q;
        ++v;
    }
}

size_t BigInt::hash() const {
    size_t h = negative_ ? 0x9e3779b97f4a7c15ULL : 0;
    for (uint32_t l : limbs_) h = h * 1099511628211ULL + l;
    return h;
}

// --- BigRat ---

BigRat::BigRat(BigInt n, BigInt d) : num_(std::move(n)), den_(std::move(d)) {
    if (den_.is_zero()) throw DivisionByZero("BigRat with zero denominator");
    normalize();
}

void BigRat::normalize() {
    if (den_.is_negative()) {
        num_ = -num_;
        den_ = -den_;
    }
    if (num_.is_zero()) {
        den_ = BigInt(1);
        return;
    }
    BigInt g = BigInt::gcd(num_, den_);
    num_ = num_.divide_exact(g);
    den_ = den_.divide_exact(g);
}

BigRat BigRat::operator+(const BigRat& o) const {
    return BigRat(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}
BigRat BigRat::operator-(const BigRat& o) const {
    return BigRat(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}
BigRat BigRat::operator*(const BigRat& o) const {
    return BigRat(num_ * o.num_, den_ * o.den_);
}
BigRat BigRat::operator/(const BigRat& o) const {
    if (o.num_.is_zero()) throw DivisionByZero("BigRat division by zero");
    return BigRat(num_ * o.den_, den_ * o.num_);
}
BigRat BigRat::operator-() const { return BigRat(-num_, den_); }

bool BigRat::operator<(const BigRat& o) const {
    return num_ * o.den_ < o.num_ * den_;
}

std::string BigRat::to_string() const {
    if (is_integer()) return num_.to_string();
    return num_.to_string() + "/" + den_.to_string();
}

}  // namespace wz
