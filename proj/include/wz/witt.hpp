#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <vector>

#include "wz/bigint.hpp"
#include "wz/errors.hpp"
#include "wz/ff.hpp"
#include "wz/mpoly.hpp"

namespace wz {

/// Context for truncated p-typical Witt vectors of length n. Holds the
/// universal addition / multiplication / negation polynomials over Z in the
/// variables X0..X{n-1}, Y0..Y{n-1}, obtained by solving the ghost equations
/// top-down with exact division by p^i. Immutable once built; contexts are
/// cached per (p, n) and shared.
struct WittCtx {
    uint32_t p = 0;
    uint32_t n = 0;
    std::vector<IntMPoly> add_polys;  // S_0..S_{n-1}
    std::vector<IntMPoly> mul_polys;  // M_0..M_{n-1}
    std::vector<IntMPoly> neg_polys;  // N_0..N_{n-1} (X variables only)
};

struct WittCaps {
    uint32_t max_p = 5;
    uint32_t max_n = 4;
    uint32_t max_n_p2 = 5;  // p = 2 admits one more coordinate
};

/// Build (or fetch from the cache) the context for W_n over a prime p.
/// Throws CapExceeded outside the configured symbolic caps.
std::shared_ptr<const WittCtx> witt_ctx(uint32_t p, uint32_t n,
                                        const WittCaps& caps = WittCaps{});

/// Witt vector over a coefficient ring R. R supplies: Elem, zero(), one(),
/// add, neg, mul, eq, from_int(BigInt), char_p() (0 in characteristic zero),
/// pow_p (when char_p() != 0) and a static torsion_free flag.
template <class R>
struct WittVec {
    std::vector<typename R::Elem> coords;
};

namespace detail {

template <class R>
typename R::Elem ring_pow(const R& ring, const typename R::Elem& x, uint32_t e) {
    typename R::Elem r = ring.one(), b = x;
    while (e) {
        if (e & 1) r = ring.mul(r, b);
        e >>= 1;
        if (e) b = ring.mul(b, b);
    }
    return r;
}

template <class R>
typename R::Elem eval_universal(const R& ring, const IntMPoly& f,
                                const std::vector<typename R::Elem>& args) {
    typename R::Elem acc = ring.zero();
    for (const auto& [e, c] : f.terms()) {
        typename R::Elem term = ring.from_int(c);
        for (size_t v = 0; v < e.size(); ++v)
            if (e[v]) term = ring.mul(term, ring_pow(ring, args[v], e[v]));
        acc = ring.add(acc, term);
    }
    return acc;
}

template <class R>
void check_len(const WittCtx& ctx, const WittVec<R>& x) {
    if (x.coords.size() != ctx.n)
        throw ContextMismatch("Witt vector length does not match context");
}

}  // namespace detail

template <class R>
WittVec<R> witt_zero(const WittCtx& ctx, const R& ring) {
    WittVec<R> r;
    r.coords.assign(ctx.n, ring.zero());
    return r;
}

/// Teichmuller representative (a, 0, ..., 0); multiplicative.
template <class R>
WittVec<R> teichmuller(const WittCtx& ctx, const R& ring,
                       const typename R::Elem& a) {
    WittVec<R> r = witt_zero(ctx, ring);
    r.coords[0] = a;
    return r;
}

template <class R>
WittVec<R> witt_one(const WittCtx& ctx, const R& ring) {
    return teichmuller(ctx, ring, ring.one());
}

template <class R>
bool witt_eq(const WittCtx& ctx, const R& ring, const WittVec<R>& x,
             const WittVec<R>& y) {
    detail::check_len(ctx, x);
    detail::check_len(ctx, y);
    for (uint32_t i = 0; i < ctx.n; ++i)
        if (!ring.eq(x.coords[i], y.coords[i])) return false;
    return true;
}

template <class R>
WittVec<R> witt_add(const WittCtx& ctx, const R& ring, const WittVec<R>& x,
                    const WittVec<R>& y) {
    detail::check_len(ctx, x);
    detail::check_len(ctx, y);
    std::vector<typename R::Elem> args = x.coords;
    args.insert(args.end(), y.coords.begin(), y.coords.end());
    WittVec<R> r;
    r.coords.reserve(ctx.n);
    for (uint32_t i = 0; i < ctx.n; ++i)
        r.coords.push_back(detail::eval_universal(ring, ctx.add_polys[i], args));
    return r;
}

template <class R>
WittVec<R> witt_mul(const WittCtx& ctx, const R& ring, const WittVec<R>& x,
                    const WittVec<R>& y) {
    detail::check_len(ctx, x);
    detail::check_len(ctx, y);
    std::vector<typename R::Elem> args = x.coords;
    args.insert(args.end(), y.coords.begin(), y.coords.end());
    WittVec<R> r;
    r.coords.reserve(ctx.n);
    for (uint32_t i = 0; i < ctx.n; ++i)
        r.coords.push_back(detail::eval_universal(ring, ctx.mul_polys[i], args));
    return r;
}

template <class R>
WittVec<R> witt_neg(const WittCtx& ctx, const R& ring, const WittVec<R>& x) {
    detail::check_len(ctx, x);
    std::vector<typename R::Elem> args = x.coords;
    args.insert(args.end(), x.coords.begin(), x.coords.end());  // Y unused
    WittVec<R> r;
    r.coords.reserve(ctx.n);
    for (uint32_t i = 0; i < ctx.n; ++i)
        r.coords.push_back(detail::eval_universal(ring, ctx.neg_polys[i], args));
    return r;
}

template <class R>
WittVec<R> witt_sub(const WittCtx& ctx, const R& ring, const WittVec<R>& x,
                    const WittVec<R>& y) {
    return witt_add(ctx, ring, x, witt_neg(ctx, ring, y));
}

/// V: W_{n-1} -> W_n, (a_0,...,a_{n-2}) -> (0, a_0, ..., a_{n-2}).
template <class R>
WittVec<R> verschiebung(const WittCtx& ctx, const R& ring,
                        const WittVec<R>& x) {
    if (ctx.n < 2) throw ContextMismatch("verschiebung needs n >= 2");
    if (x.coords.size() != ctx.n - 1)
        throw ContextMismatch("verschiebung input must have length n-1");
    WittVec<R> r;
    r.coords.reserve(ctx.n);
    r.coords.push_back(ring.zero());
    for (const auto& c : x.coords) r.coords.push_back(c);
    return r;
}

/// Same-length V on W_n (shift and drop the top coordinate); the form in
/// which FV = VF = p is checked.
template <class R>
WittVec<R> verschiebung_trunc(const WittCtx& ctx, const R& ring,
                              const WittVec<R>& x) {
    detail::check_len(ctx, x);
    WittVec<R> r;
    r.coords.reserve(ctx.n);
    r.coords.push_back(ring.zero());
    for (uint32_t i = 0; i + 1 < ctx.n; ++i) r.coords.push_back(x.coords[i]);
    return r;
}

/// F in characteristic p raises coordinates to the p-th power.
template <class R>
WittVec<R> frobenius_char_p(const WittCtx& ctx, const R& ring,
                            const WittVec<R>& x) {
    if (ring.char_p() != ctx.p)
        throw NotCharP("coefficient ring is not of characteristic p");
    detail::check_len(ctx, x);
    WittVec<R> r;
    r.coords.reserve(ctx.n);
    for (const auto& c : x.coords) r.coords.push_back(ring.pow_p(c));
    return r;
}

/// Image of an integer under Z -> W_n(R): repeated addition of the unit.
/// In characteristic p the argument reduces mod p^n first.
template <class R>
WittVec<R> witt_from_int(const WittCtx& ctx, const R& ring, BigInt m) {
    if (ring.char_p() != 0)
        m = m.mod_euclid(BigInt::pow(BigInt(ctx.p), ctx.n));
    bool neg = m.is_negative();
    if (neg) m = -m;
    WittVec<R> acc = witt_zero(ctx, ring);
    WittVec<R> unit = witt_one(ctx, ring);
    for (BigInt i(0); i < m; i += BigInt(1)) acc = witt_add(ctx, ring, acc, unit);
    return neg ? witt_neg(ctx, ring, acc) : acc;
}

/// Membership in W_n^{r,s}(I) = {a_0 in I^r, a_i in I^s for i >= 1}.
/// `in_ideal_power(elem, k)` decides membership in I^k.
template <class R>
bool witt_ideal_member(
    const WittCtx& ctx, const WittVec<R>& x,
    const std::function<bool(const typename R::Elem&, uint32_t)>& in_ideal_power,
    uint32_t r, uint32_t s) {
    detail::check_len(ctx, x);
    if (!in_ideal_power(x.coords[0], r)) return false;
    for (uint32_t i = 1; i < ctx.n; ++i)
        if (!in_ideal_power(x.coords[i], s)) return false;
    return true;
}

/// Divided power gamma_i(Vy) = (p^{i-1}/i!) V(y^i) on the image of V,
/// in characteristic p. `vy` must equal verschiebung(y); the integer scalar
/// p^{i-1}/i! is a p-adic integer and acts through witt_from_int.
template <class R>
WittVec<R> divided_power(const WittCtx& ctx, const R& ring, uint32_t i,
                         const WittVec<R>& vy, const WittVec<R>& y) {
    if (ring.char_p() != ctx.p) throw NotCharP("divided powers need char p");
    if (i < 1) throw Error("divided_power needs i >= 1");
    WittVec<R> check = verschiebung(ctx, ring, y);
    if (!witt_eq(ctx, ring, check, vy))
        throw NotInImageOfV("x is not V(y) for the supplied y");

    // v_p(i!) <= i-1, so p^{i-1}/i! lies in Z_p.
    BigInt fact(1);
    for (uint32_t k = 2; k <= i; ++k) fact *= BigInt(k);
    int v = fact.valuation(BigInt(ctx.p));
    if (v > static_cast<int>(i) - 1)
        throw Error("divided power scalar not p-integral");
    BigInt unit_part = fact.divide_exact(BigInt::pow(BigInt(ctx.p), v));
    BigInt pn = BigInt::pow(BigInt(ctx.p), ctx.n);
    // scalar = p^{i-1-v} * unit_part^{-1} mod p^n
    BigInt inv = BigInt(1);
    {
        // unit_part is prime to p; invert by Euler's theorem mod p^n
        BigInt phi = pn.divide_exact(BigInt(ctx.p)) * BigInt(ctx.p - 1);
        inv = BigInt::powmod(unit_part, phi - BigInt(1), pn);
    }
    BigInt scalar = (BigInt::pow(BigInt(ctx.p), i - 1 - v) * inv).mod_euclid(pn);

    // y^i in W_{n-1}, then V, then the integer scalar action.
    auto sub_ctx = witt_ctx(ctx.p, ctx.n - 1);
    WittVec<R> ypow = witt_one(*sub_ctx, ring);
    for (uint32_t k = 0; k < i; ++k) ypow = witt_mul(*sub_ctx, ring, ypow, y);
    WittVec<R> vyi = verschiebung(ctx, ring, ypow);
    return witt_mul(ctx, ring, witt_from_int(ctx, ring, scalar), vyi);
}

/// Ghost components w_i = sum_{j<=i} p^j a_j^{p^{i-j}} over a p-torsion-free
/// ring.
template <class R>
std::vector<typename R::Elem> ghost(const WittCtx& ctx, const R& ring,
                                    const WittVec<R>& x) {
    static_assert(std::is_same_v<decltype(R::torsion_free), const bool>);
    if (!R::torsion_free)
        throw NotTorsionFree("ghost components need a p-torsion-free ring");
    detail::check_len(ctx, x);
    std::vector<typename R::Elem> w;
    w.reserve(ctx.n);
    for (uint32_t i = 0; i < ctx.n; ++i) {
        typename R::Elem acc = ring.zero();
        BigInt pj(1);
        for (uint32_t j = 0; j <= i; ++j) {
            uint32_t e = 1;
            for (uint32_t k = 0; k < i - j; ++k) e *= ctx.p;
            acc = ring.add(acc, ring.mul(ring.from_int(pj),
                                         detail::ring_pow(ring, x.coords[j], e)));
            pj *= BigInt(ctx.p);
        }
        w.push_back(acc);
    }
    return w;
}

// --- coefficient rings beyond FqField ---

/// F_q[x]/(x^e), or F_q[x] itself when e == 0. Dense coefficients.
class PolyQuotRing {
  public:
    struct Elem {
        std::vector<FqElem> c;  // little-endian, trailing zeros trimmed
        bool operator==(const Elem& o) const { return c == o.c; }
    };

    PolyQuotRing(FqField base, uint32_t e) : base_(std::move(base)), e_(e) {}

    const FqField& base() const { return base_; }
    uint32_t truncation() const { return e_; }

    Elem zero() const { return Elem{}; }
    Elem one() const { return from_int(BigInt(1)); }
    Elem x() const;
    Elem monomial(uint32_t k, const FqElem& coeff) const;
    Elem from_int(const BigInt& v) const;

    Elem add(const Elem& a, const Elem& b) const;
    Elem neg(const Elem& a) const;
    Elem mul(const Elem& a, const Elem& b) const;
    bool eq(const Elem& a, const Elem& b) const { return a.c == b.c; }

    uint32_t char_p() const { return base_.p(); }
    static constexpr bool torsion_free = false;
    Elem pow_p(const Elem& a) const { return detail::ring_pow(*this, a, base_.p()); }

    /// x-adic valuation; UINT32_MAX for zero.
    uint32_t x_valuation(const Elem& a) const;

  private:
    FqField base_;
    uint32_t e_;
    void trim(Elem& a) const;
};

/// Z[vars]: multivariate integer polynomials as a torsion-free ring.
class IntMPolyRing {
  public:
    using Elem = IntMPoly;
    explicit IntMPolyRing(std::vector<std::string> vars) : vars_(std::move(vars)) {}

    const std::vector<std::string>& vars() const { return vars_; }
    Elem zero() const { return IntMPoly(vars_); }
    Elem one() const { return from_int(BigInt(1)); }
    Elem var(size_t i) const { return IntMPoly::variable(vars_, i); }
    Elem from_int(const BigInt& v) const { return IntMPoly::constant(vars_, v); }

    Elem add(const Elem& a, const Elem& b) const { return a + b; }
    Elem neg(const Elem& a) const { return -a; }
    Elem mul(const Elem& a, const Elem& b) const { return a * b; }
    bool eq(const Elem& a, const Elem& b) const { return a == b; }

    uint32_t char_p() const { return 0; }
    static constexpr bool torsion_free = true;
    Elem pow_p(const Elem&) const { throw NotCharP("Z[vars] has characteristic 0"); }

  private:
    std::vector<std::string> vars_;
};

}  // namespace wz
