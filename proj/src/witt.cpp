#include "wz/witt.hpp"

#include <map>
#include <mutex>
#include <random>

namespace wz {

namespace {

// Ghost polynomial w_i in the given half of the variable set:
// sum_{j<=i} p^j V_{off+j}^{p^{i-j}}.
IntMPoly ghost_poly(const std::vector<std::string>& vars, uint32_t p,
                    uint32_t i, size_t off) {
    IntMPoly w(vars);
    BigInt pj(1);
    for (uint32_t j = 0; j <= i; ++j) {
        uint32_t e = 1;
        for (uint32_t k = 0; k < i - j; ++k) e *= p;
        IntMPoly::Exps ev(vars.size(), 0);
        ev[off + j] = static_cast<uint16_t>(e);
        w.add_term(ev, pj);
        pj *= BigInt(p);
    }
    return w;
}

// Verify the ghost identities for the constructed family at a few integer
// points, independently of the symbolic path that produced it.
void spot_check_ctx(const WittCtx& ctx) {
    std::mt19937_64 rng(9157);
    auto ghost_num = [&](const std::vector<BigInt>& a) {
        std::vector<BigInt> w(ctx.n);
        for (uint32_t i = 0; i < ctx.n; ++i) {
            BigInt acc(0), pj(1);
            for (uint32_t j = 0; j <= i; ++j) {
                uint64_t e = 1;
                for (uint32_t k = 0; k < i - j; ++k) e *= ctx.p;
                acc += pj * BigInt::pow(a[j], e);
                pj *= BigInt(ctx.p);
            }
            w[i] = acc;
        }
        return w;
    };
    auto eval_int = [&](const IntMPoly& f, const std::vector<BigInt>& args) {
        BigInt acc(0);
        for (const auto& [e, c] : f.terms()) {
            BigInt t = c;
            for (size_t v = 0; v < e.size(); ++v)
                if (e[v]) t *= BigInt::pow(args[v], e[v]);
            acc += t;
        }
        return acc;
    };
    for (int trial = 0; trial < 3; ++trial) {
        std::vector<BigInt> x(ctx.n), y(ctx.n), args;
        for (uint32_t i = 0; i < ctx.n; ++i) {
            x[i] = BigInt(static_cast<long long>(rng() % 7) - 3);
            y[i] = BigInt(static_cast<long long>(rng() % 7) - 3);
        }
        args = x;
        args.insert(args.end(), y.begin(), y.end());
        std::vector<BigInt> s(ctx.n), m(ctx.n), ng(ctx.n);
        for (uint32_t i = 0; i < ctx.n; ++i) {
            s[i] = eval_int(ctx.add_polys[i], args);
            m[i] = eval_int(ctx.mul_polys[i], args);
            ng[i] = eval_int(ctx.neg_polys[i], args);
        }
        auto wx = ghost_num(x), wy = ghost_num(y);
        auto ws = ghost_num(s), wm = ghost_num(m), wn = ghost_num(ng);
        for (uint32_t i = 0; i < ctx.n; ++i) {
            if (ws[i] != wx[i] + wy[i] || wm[i] != wx[i] * wy[i] ||
                wn[i] != -wx[i])
                throw NonIntegralUniversal(
                    "universal polynomials fail the ghost identity");
        }
    }
}

std::shared_ptr<const WittCtx> build_ctx(uint32_t p, uint32_t n) {
    auto ctx = std::make_shared<WittCtx>();
    ctx->p = p;
    ctx->n = n;
    std::vector<std::string> vars;
    for (uint32_t i = 0; i < n; ++i) vars.push_back("X" + std::to_string(i));
    for (uint32_t i = 0; i < n; ++i) vars.push_back("Y" + std::to_string(i));

    std::vector<IntMPoly> gx(n), gy(n);
    for (uint32_t i = 0; i < n; ++i) {
        gx[i] = ghost_poly(vars, p, i, 0);
        gy[i] = ghost_poly(vars, p, i, n);
    }

    BigInt pb(p);
    auto solve_family = [&](const std::function<IntMPoly(uint32_t)>& target,
                            std::vector<IntMPoly>& out) {
        out.clear();
        for (uint32_t i = 0; i < n; ++i) {
            IntMPoly rhs = target(i);
            BigInt pj(1);
            for (uint32_t j = 0; j < i; ++j) {
                uint32_t e = 1;
                for (uint32_t k = 0; k < i - j; ++k) e *= p;
                rhs = rhs - out[j].pow(e).scale(pj);
                pj *= pb;
            }
            // pj == p^i here; the division must come out exact over Z
            out.push_back(rhs.divide_exact_scalar(pj));
        }
    };

    solve_family([&](uint32_t i) { return gx[i] + gy[i]; }, ctx->add_polys);
    solve_family([&](uint32_t i) { return gx[i] * gy[i]; }, ctx->mul_polys);
    solve_family([&](uint32_t i) { return -gx[i]; }, ctx->neg_polys);

    spot_check_ctx(*ctx);
    return ctx;
}

}  // namespace

std::shared_ptr<const WittCtx> witt_ctx(uint32_t p, uint32_t n,
                                        const WittCaps& caps) {
    if (!is_prime_u32(p)) throw NotPrime("Witt context needs a prime p");
    uint32_t nmax = (p == 2) ? caps.max_n_p2 : caps.max_n;
    if (n < 1 || p > caps.max_p || n > nmax)
        throw CapExceeded("(p, n) = (" + std::to_string(p) + ", " +
                          std::to_string(n) + ") outside the symbolic caps");

    static std::mutex mu;
    static std::map<std::pair<uint32_t, uint32_t>,
                    std::shared_ptr<const WittCtx>>
        cache;
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_pair(p, n);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    auto ctx = build_ctx(p, n);
    cache[key] = ctx;
    return ctx;
}

// --- PolyQuotRing ---

void PolyQuotRing::trim(Elem& a) const {
    if (e_ && a.c.size() > e_) a.c.resize(e_);
    while (!a.c.empty() && a.c.back().is_zero()) a.c.pop_back();
}

PolyQuotRing::Elem PolyQuotRing::x() const { return monomial(1, base_.one()); }

PolyQuotRing::Elem PolyQuotRing::monomial(uint32_t k, const FqElem& coeff) const {
    Elem r;
    if ((e_ && k >= e_) || coeff.is_zero()) return r;
    r.c.assign(k + 1, base_.zero());
    r.c[k] = coeff;
    return r;
}

PolyQuotRing::Elem PolyQuotRing::from_int(const BigInt& v) const {
    Elem r;
    FqElem c = base_.from_int(v);
    if (!c.is_zero()) r.c.push_back(c);
    return r;
}

PolyQuotRing::Elem PolyQuotRing::add(const Elem& a, const Elem& b) const {
    Elem r;
    r.c.resize(std::max(a.c.size(), b.c.size()), base_.zero());
    for (size_t i = 0; i < r.c.size(); ++i) {
        FqElem s = base_.zero();
        if (i < a.c.size()) s = base_.add(s, a.c[i]);
        if (i < b.c.size()) s = base_.add(s, b.c[i]);
        r.c[i] = s;
    }
    trim(r);
    return r;
}

PolyQuotRing::Elem PolyQuotRing::neg(const Elem& a) const {
    Elem r = a;
    for (auto& c : r.c) c = base_.neg(c);
    return r;
}

PolyQuotRing::Elem PolyQuotRing::mul(const Elem& a, const Elem& b) const {
    Elem r;
    if (a.c.empty() || b.c.empty()) return r;
    size_t len = a.c.size() + b.c.size() - 1;
    if (e_ && len > e_) len = e_;
    r.c.assign(len, base_.zero());
    for (size_t i = 0; i < a.c.size(); ++i) {
        if (a.c[i].is_zero()) continue;
        for (size_t j = 0; j < b.c.size(); ++j) {
            if (i + j >= len) break;
            r.c[i + j] = base_.add(r.c[i + j], base_.mul(a.c[i], b.c[j]));
        }
    }
    trim(r);
    return r;
}

uint32_t PolyQuotRing::x_valuation(const Elem& a) const {
    for (size_t i = 0; i < a.c.size(); ++i)
        if (!a.c[i].is_zero()) return static_cast<uint32_t>(i);
    return UINT32_MAX;
}

}  // namespace wz
