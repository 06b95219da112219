#include "wz/ff.hpp"

#include <algorithm>

#include "wz/errors.hpp"

namespace wz {

bool is_prime_u32(uint32_t n) {
    if (n < 2) return false;
    for (uint32_t d = 2; static_cast<uint64_t>(d) * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

namespace {

// Dense polynomials over F_p, little-endian, used for modulus search and
// element arithmetic. Entries of `c` lie in [0, p).
using FpPoly = std::vector<uint32_t>;

void fp_trim(FpPoly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

FpPoly fp_mul(const FpPoly& x, const FpPoly& y, uint32_t p) {
    if (x.empty() || y.empty()) return {};
    FpPoly r(x.size() + y.size() - 1, 0);
    for (size_t i = 0; i < x.size(); ++i) {
        if (!x[i]) continue;
        for (size_t j = 0; j < y.size(); ++j) {
            r[i + j] =
                static_cast<uint32_t>((r[i + j] + static_cast<uint64_t>(x[i]) * y[j]) % p);
        }
    }
    fp_trim(r);
    return r;
}

// Remainder of f modulo monic m.
FpPoly fp_mod(FpPoly f, const FpPoly& m, uint32_t p) {
    fp_trim(f);
    size_t dm = m.size() - 1;
    while (f.size() > dm) {
        uint32_t lead = f.back();
        size_t shift = f.size() - 1 - dm;
        if (lead) {
            for (size_t j = 0; j < m.size(); ++j) {
                uint64_t sub = static_cast<uint64_t>(lead) * m[j] % p;
                uint32_t& tgt = f[shift + j];
                tgt = static_cast<uint32_t>((tgt + p - sub) % p);
            }
        }
        f.pop_back();
        fp_trim(f);
        if (f.size() <= dm) break;
    }
    return f;
}

FpPoly fp_gcd(FpPoly x, FpPoly y, uint32_t p) {
    fp_trim(x);
    fp_trim(y);
    auto inv_mod_p = [p](uint32_t v) {
        uint32_t r = 1;
        uint64_t b = v % p, e = p - 2;
        while (e) {
            if (e & 1) r = static_cast<uint32_t>(r * b % p);
            b = b * b % p;
            e >>= 1;
        }
        return r;
    };
    while (!y.empty()) {
        // make y monic, then reduce
        uint32_t li = inv_mod_p(y.back());
        FpPoly ym = y;
        for (auto& c : ym) c = static_cast<uint32_t>(static_cast<uint64_t>(c) * li % p);
        FpPoly r = fp_mod(x, ym, p);
        x = y;
        y = r;
    }
    return x;
}

// A monic f of degree a with no irreducible factor of degree <= a/2 is
// irreducible; x^{p^i} - x is the product of all irreducibles of degree
// dividing i, so gcd tests against it detect small factors.
bool fp_irreducible(const FpPoly& m, uint32_t p) {
    uint32_t a = static_cast<uint32_t>(m.size() - 1);
    if (a == 1) return true;
    FpPoly xp = {0, 1};  // x^{p^i} mod m, computed incrementally
    for (uint32_t i = 1; i <= a / 2; ++i) {
        // xp <- xp^p mod m
        FpPoly acc = {1};
        FpPoly base = xp;
        uint32_t e = p;
        while (e) {
            if (e & 1) acc = fp_mod(fp_mul(acc, base, p), m, p);
            e >>= 1;
            if (e) base = fp_mod(fp_mul(base, base, p), m, p);
        }
        xp = acc;
        // gcd(xp - x, m) must be constant
        FpPoly diff = xp;
        if (diff.size() < 2) diff.resize(2, 0);
        diff[1] = (diff[1] + p - 1) % p;
        fp_trim(diff);
        FpPoly g = fp_gcd(m, diff, p);
        if (g.size() > 1) return false;
    }
    return true;
}

}  // namespace

FqField FqField::make(uint32_t p, uint32_t a, uint32_t degree_cap) {
    if (!is_prime_u32(p)) throw NotPrime("p = " + std::to_string(p) + " is not prime");
    if (a < 1 || a > degree_cap)
        throw DegreeOutOfRange("extension degree " + std::to_string(a) +
                               " outside [1, " + std::to_string(degree_cap) + "]");
    FqField f;
    f.p_ = p;
    f.a_ = a;
    f.q_ = BigInt::pow(BigInt(p), a);
    f.q_u64_ = f.q_.fits_int64() ? static_cast<uint64_t>(f.q_.to_int64()) : 0;

    // Scan monic candidates in lex order on (c_0, ..., c_{a-1}).
    std::vector<uint32_t> c(a, 0);
    for (;;) {
        FpPoly m(c.begin(), c.end());
        m.push_back(1);
        if (fp_irreducible(m, p)) {
            f.modulus_ = c;
            return f;
        }
        // next candidate: increment c_{a-1} fastest
        int i = static_cast<int>(a) - 1;
        while (i >= 0) {
            if (++c[i] < p) break;
            c[i] = 0;
            --i;
        }
        if (i < 0) break;
    }
    throw Error("no irreducible modulus found");  // unreachable for valid p, a
}

void FqField::check_elem(const FqElem& x) const {
    if (x.p != p_ || x.a != a_ || x.coords.size() != a_)
        throw FieldMismatch("element does not belong to F_" + q_.to_string());
}

FqElem FqField::zero() const { return FqElem{p_, a_, std::vector<uint32_t>(a_, 0)}; }

FqElem FqField::one() const {
    FqElem e = zero();
    e.coords[0] = 1;
    return e;
}

FqElem FqField::generator() const {
    if (a_ < 2) throw DegreeOutOfRange("generator needs a >= 2");
    FqElem e = zero();
    e.coords[1] = 1;
    return e;
}

FqElem FqField::from_int(const BigInt& c) const {
    FqElem e = zero();
    e.coords[0] = static_cast<uint32_t>(c.mod_euclid(BigInt(p_)).to_int64());
    return e;
}

FqElem FqField::add(const FqElem& x, const FqElem& y) const {
    check_elem(x);
    check_elem(y);
    FqElem r = zero();
    for (uint32_t i = 0; i < a_; ++i) r.coords[i] = (x.coords[i] + y.coords[i]) % p_;
    return r;
}

FqElem FqField::neg(const FqElem& x) const {
    check_elem(x);
    FqElem r = zero();
    for (uint32_t i = 0; i < a_; ++i) r.coords[i] = (p_ - x.coords[i]) % p_;
    return r;
}

FqElem FqField::sub(const FqElem& x, const FqElem& y) const {
    return add(x, neg(y));
}

FqElem FqField::mul(const FqElem& x, const FqElem& y) const {
    check_elem(x);
    check_elem(y);
    FpPoly m(modulus_.begin(), modulus_.end());
    m.push_back(1);
    FpPoly prod = fp_mul(FpPoly(x.coords.begin(), x.coords.end()),
                         FpPoly(y.coords.begin(), y.coords.end()), p_);
    FpPoly red = fp_mod(prod, m, p_);
    FqElem r = zero();
    for (size_t i = 0; i < red.size(); ++i) r.coords[i] = red[i];
    return r;
}

FqElem FqField::inv(const FqElem& x) const {
    check_elem(x);
    if (x.is_zero()) throw DivisionByZero("inverse of zero field element");
    // Extended Euclid in F_p[x] against the modulus.
    FpPoly m(modulus_.begin(), modulus_.end());
    m.push_back(1);
    FpPoly r0 = m, r1(x.coords.begin(), x.coords.end());
    fp_trim(r1);
    FpPoly s0 = {}, s1 = {1};
    auto inv_mod_p = [this](uint32_t v) {
        uint64_t r = 1, b = v % p_, e = p_ - 2;
        while (e) {
            if (e & 1) r = r * b % p_;
            b = b * b % p_;
            e >>= 1;
        }
        return static_cast<uint32_t>(r);
    };
    while (!r1.empty() && r1.size() > 1) {
        uint32_t li = inv_mod_p(r1.back());
        FpPoly r1m = r1;
        for (auto& cc : r1m) cc = static_cast<uint32_t>(static_cast<uint64_t>(cc) * li % p_);
        // long-divide r0 by monic r1m, tracking the cofactor
        FpPoly q(r0.size() > r1m.size() ? r0.size() - r1m.size() + 1 : 1, 0);
        FpPoly rem = r0;
        while (rem.size() >= r1m.size() && !rem.empty()) {
            uint32_t lead = rem.back();
            size_t shift = rem.size() - r1m.size();
            q[shift] = static_cast<uint32_t>((q[shift] + static_cast<uint64_t>(lead)) % p_);
            for (size_t j = 0; j < r1m.size(); ++j) {
                uint64_t sub = static_cast<uint64_t>(lead) * r1m[j] % p_;
                rem[shift + j] = static_cast<uint32_t>((rem[shift + j] + p_ - sub) % p_);
            }
            fp_trim(rem);
            if (rem.empty()) break;
        }
        // account for the scaling of r1: r0 = q*(li*r1) + rem  =>  actual
        // quotient against r1 is q*li
        for (auto& cc : q) cc = static_cast<uint32_t>(static_cast<uint64_t>(cc) * li % p_);
        FpPoly qs1 = fp_mul(q, s1, p_);
        FpPoly s2(std::max(s0.size(), qs1.size()), 0);
        for (size_t i = 0; i < s2.size(); ++i) {
            uint32_t v0 = i < s0.size() ? s0[i] : 0;
            uint32_t v1 = i < qs1.size() ? qs1[i] : 0;
            s2[i] = (v0 + p_ - v1 % p_) % p_;
        }
        fp_trim(s2);
        r0 = r1;
        r1 = rem;
        s0 = s1;
        s1 = s2;
    }
    if (r1.empty()) throw DivisionByZero("element not invertible");
    uint32_t scale = inv_mod_p(r1[0]);
    FqElem out = zero();
    for (size_t i = 0; i < s1.size() && i < a_; ++i)
        out.coords[i] = static_cast<uint32_t>(static_cast<uint64_t>(s1[i]) * scale % p_);
    return out;
}

FqElem FqField::pow(const FqElem& x, uint64_t e) const {
    check_elem(x);
    FqElem r = one(), b = x;
    while (e) {
        if (e & 1) r = mul(r, b);
        e >>= 1;
        if (e) b = mul(b, b);
    }
    return r;
}

FqElem FqField::frobenius(const FqElem& x, uint32_t s) const {
    FqElem r = x;
    for (uint32_t i = 0; i < s; ++i) r = pow(r, p_);
    return r;
}

bool FqField::eq(const FqElem& x, const FqElem& y) const {
    check_elem(x);
    check_elem(y);
    return x.coords == y.coords;
}

void FqField::enumerate(const std::function<void(const FqElem&)>& fn) const {
    FqElem e = zero();
    for (;;) {
        fn(e);
        int i = static_cast<int>(a_) - 1;
        while (i >= 0) {
            if (++e.coords[i] < p_) break;
            e.coords[i] = 0;
            --i;
        }
        if (i < 0) return;
    }
}

FqElem FqField::element_at(uint64_t index) const {
    FqElem e = zero();
    for (int i = static_cast<int>(a_) - 1; i >= 0; --i) {
        e.coords[i] = static_cast<uint32_t>(index % p_);
        index /= p_;
    }
    return e;
}

uint64_t FqField::element_index(const FqElem& x) const {
    uint64_t idx = 0;
    for (uint32_t i = 0; i < a_; ++i) idx = idx * p_ + x.coords[i];
    return idx;
}

FqElem FqField::embed_generator(const FqField& base) const {
    if (base == *this) return generator();
    if (base.p() != p_ || a_ % base.a() != 0)
        throw FieldMismatch("no embedding of F_" + base.q().to_string() +
                            " into F_" + q_.to_string());
    // Least root of the base modulus, in the pinned element order.
    uint64_t n = order_u64();
    for (uint64_t i = 0; i < n; ++i) {
        FqElem x = element_at(i);
        FqElem acc = pow(x, base.a());  // x^a term (monic)
        FqElem xp = one();
        for (uint32_t j = 0; j < base.a(); ++j) {
            acc = add(acc, mul(from_int(BigInt(base.modulus()[j])), xp));
            xp = mul(xp, x);
        }
        if (acc.is_zero()) return x;
    }
    throw FieldMismatch("base modulus has no root in target field");
}

FqElem mpoly_eval_g(const IntMPoly& f, const std::vector<FqElem>& point,
                    const FqField& field, const FqElem* g_value) {
    int gi = f.g_index();
    if (point.size() != f.arity())
        throw ArityMismatch("point has " + std::to_string(point.size()) +
                            " coordinates, polynomial expects " +
                            std::to_string(f.arity()));
    FqElem gval;
    if (gi >= 0) {
        if (g_value)
            gval = *g_value;
        else if (field.a() > 1)
            gval = field.generator();
        else
            throw UnboundVariable("symbol g needs an extension field");
    }
    FqElem acc = field.zero();
    for (const auto& [e, c] : f.terms()) {
        FqElem term = field.from_int(c);
        size_t pi = 0;
        for (size_t v = 0; v < e.size(); ++v) {
            const FqElem* val;
            if (static_cast<int>(v) == gi) {
                val = &gval;
            } else {
                val = &point[pi];
                ++pi;
            }
            if (e[v]) term = field.mul(term, field.pow(*val, e[v]));
        }
        acc = field.add(acc, term);
    }
    return acc;
}

FqElem mpoly_eval(const IntMPoly& f, const std::vector<FqElem>& point,
                  const FqField& field) {
    return mpoly_eval_g(f, point, field, nullptr);
}

}  // namespace wz
