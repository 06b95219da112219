#include "wz/padic.hpp"

#include <algorithm>
#include <cstdio>
#include <cstdlib>

#include "wz/errors.hpp"

namespace wz {

namespace {

// valuation of a residue, capped: returns cap when x = 0 mod p^cap
int val_capped(const BigInt& x, uint32_t p, uint32_t cap) {
    if (x.is_zero()) return static_cast<int>(cap);
    int v = x.valuation(BigInt(p));
    return std::min(v, static_cast<int>(cap));
}

struct Work {
    uint32_t p;
    uint32_t W;  // working precision
    BigInt pW;
};

std::vector<BigInt> reduce_vec(const std::vector<BigInt>& c, const Work& w) {
    std::vector<BigInt> out;
    out.reserve(c.size());
    for (const auto& x : c) out.push_back(x.mod_euclid(w.pW));
    return out;
}

std::vector<BigInt> mul_mod(const std::vector<BigInt>& a,
                            const std::vector<BigInt>& b, const Work& w) {
    std::vector<BigInt> r(a.size() + b.size() - 1, BigInt(0));
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i].is_zero()) continue;
        for (size_t j = 0; j < b.size(); ++j)
            r[i + j] = (r[i + j] + a[i] * b[j]).mod_euclid(w.pW);
    }
    return r;
}

// modular inverse of a unit mod p^W
BigInt inv_unit(const BigInt& u, const Work& w) {
    // Hensel-lift the mod-p inverse
    BigInt pb(w.p);
    BigInt u0 = u.mod_euclid(pb);
    if (u0.is_zero()) throw DivisionByZero("inverse of a non-unit mod p^W");
    BigInt x = BigInt::powmod(u0, pb - BigInt(2), pb);
    BigInt mod = pb;
    while (mod < w.pW) {
        mod = mod * mod;
        if (mod > w.pW) mod = w.pW;
        x = (x * (BigInt(2) - u * x)).mod_euclid(mod);
    }
    return x.mod_euclid(w.pW);
}

// power-series quotient f/g mod t^len, g(0) a unit
std::vector<BigInt> series_div(const std::vector<BigInt>& f,
                               const std::vector<BigInt>& g, size_t len,
                               const Work& w) {
    BigInt g0inv = inv_unit(g[0], w);
    std::vector<BigInt> h(len, BigInt(0));
    for (size_t m = 0; m < len; ++m) {
        BigInt acc = m < f.size() ? f[m] : BigInt(0);
        for (size_t i = 1; i <= m && i < g.size(); ++i) acc -= g[i] * h[m - i];
        h[m] = (acc * g0inv).mod_euclid(w.pW);
    }
    return h;
}

// Solve A x = b mod p^W with full valuation pivoting; A is square.
// Returns false when the system cannot be solved at this precision.
bool solve_mod(std::vector<std::vector<BigInt>> A, std::vector<BigInt> b,
               std::vector<BigInt>& x, const Work& w) {
    size_t n = A.size();
    std::vector<size_t> col_of(n);
    for (size_t i = 0; i < n; ++i) col_of[i] = i;
    std::vector<BigInt> sol(n, BigInt(0));
    std::vector<std::pair<size_t, size_t>> pivots;  // (row, col) in order
    for (size_t step = 0; step < n; ++step) {
        // locate min-valuation entry in the remaining submatrix
        int best_v = INT32_MAX;
        size_t br = step, bc = step;
        for (size_t i = step; i < n; ++i)
            for (size_t j = step; j < n; ++j) {
                int v = val_capped(A[i][j], w.p, w.W);
                if (v < best_v) {
                    best_v = v;
                    br = i;
                    bc = j;
                }
            }
        if (best_v >= static_cast<int>(w.W)) return false;  // singular at precision
        std::swap(A[step], A[br]);
        std::swap(b[step], b[br]);
        for (size_t i = 0; i < n; ++i) std::swap(A[i][step], A[i][bc]);
        std::swap(col_of[step], col_of[bc]);
        // eliminate below
        BigInt pc = BigInt::pow(BigInt(w.p), best_v);
        BigInt unit = A[step][step].divide_exact(pc);
        BigInt uinv = inv_unit(unit, w);
        for (size_t i = step + 1; i < n; ++i) {
            int vi = val_capped(A[i][step], w.p, w.W);
            if (vi >= static_cast<int>(w.W)) continue;
            // ratio = A[i][step] / A[step][step]; exact because vi >= best_v
            BigInt ratio = (A[i][step].divide_exact(pc) * uinv).mod_euclid(w.pW);
            for (size_t j = step; j < n; ++j)
                A[i][j] = (A[i][j] - ratio * A[step][j]).mod_euclid(w.pW);
            b[i] = (b[i] - ratio * b[step]).mod_euclid(w.pW);
        }
    }
    // back substitution
    for (size_t step = n; step-- > 0;) {
        BigInt acc = b[step];
        for (size_t j = step + 1; j < n; ++j)
            acc = (acc - A[step][j] * sol[j]).mod_euclid(w.pW);
        int vp = val_capped(A[step][step], w.p, w.W);
        BigInt pc = BigInt::pow(BigInt(w.p), vp);
        BigInt rem = acc % pc;
        if (!rem.is_zero()) return false;  // precision shortfall
        BigInt unit = A[step][step].divide_exact(pc);
        sol[step] = (acc.divide_exact(pc) * inv_unit(unit, w)).mod_euclid(w.pW);
    }
    x.assign(n, BigInt(0));
    for (size_t i = 0; i < n; ++i) x[col_of[i]] = sol[i];
    return true;
}

struct HullPoint {
    int i;
    long long v;
};

// lower convex hull of (i, v) points, left to right
std::vector<HullPoint> lower_hull(const std::vector<HullPoint>& pts) {
    std::vector<HullPoint> hull;
    for (const auto& pt : pts) {
        while (hull.size() >= 2) {
            const auto& a = hull[hull.size() - 2];
            const auto& b = hull[hull.size() - 1];
            // drop b unless slope(a,b) < slope(b,pt)
            __int128 lhs = static_cast<__int128>(b.v - a.v) * (pt.i - b.i);
            __int128 rhs = static_cast<__int128>(pt.v - b.v) * (b.i - a.i);
            if (lhs < rhs) break;
            hull.pop_back();
        }
        hull.push_back(pt);
    }
    return hull;
}

NewtonPolygon polygon_from_vals(const std::vector<std::pair<int, long long>>& vals,
                                uint32_t a) {
    std::vector<HullPoint> pts;
    for (const auto& [i, v] : vals) pts.push_back({i, v});
    auto hull = lower_hull(pts);
    NewtonPolygon np;
    for (const auto& h : hull)
        np.vertices.emplace_back(h.i, BigRat(BigInt(h.v), BigInt(a)));
    for (size_t j = 0; j + 1 < hull.size(); ++j) {
        BigRat slope(BigInt(hull[j + 1].v - hull[j].v),
                     BigInt(static_cast<long long>(hull[j + 1].i - hull[j].i) * a));
        np.slopes.emplace_back(slope, hull[j + 1].i - hull[j].i);
    }
    return np;
}

// internal split of a residue polynomial at hull vertex k; f has constant
// term 1 and exact degree f.size()-1 at this precision
std::pair<std::vector<BigInt>, std::vector<BigInt>> split_at_vertex(
    const std::vector<BigInt>& f_in, uint32_t k, const Work& w) {
    size_t d = f_in.size() - 1;
    std::vector<BigInt> f = reduce_vec(f_in, w);

    // polygon in v_p units
    std::vector<std::pair<int, long long>> vals;
    for (size_t i = 0; i <= d; ++i) {
        int v = val_capped(f[i], w.p, w.W);
        if (v < static_cast<int>(w.W)) vals.emplace_back(static_cast<int>(i), v);
    }
    if (vals.empty() || vals.front().first != 0 || vals.back().first != static_cast<int>(d))
        throw PrecisionLoss("polygon endpoints vanish at working precision");
    auto hull0 = lower_hull([&] {
        std::vector<HullPoint> pts;
        for (auto& [i, v] : vals) pts.push_back({i, v});
        return pts;
    }());
    bool is_vertex = false;
    for (size_t j = 1; j + 1 < hull0.size(); ++j)
        if (hull0[j].i == static_cast<int>(k)) is_vertex = true;
    if (!is_vertex) throw NotAVertex("k is not an interior polygon vertex");

    // integer down-shift by the floor of the first slope
    long long num = hull0[1].v - hull0[0].v;
    long long den = hull0[1].i - hull0[0].i;
    long long sigma = num >= 0 ? num / den : 0;
    if (sigma > 0) {
        BigInt ps(1), pb(w.p);
        for (size_t i = 1; i <= d; ++i) {
            ps *= BigInt::pow(pb, sigma);
            // residues are divisible by p^{i sigma} because the hull
            // majorizes the line of slope sigma
            BigInt pe = BigInt::pow(pb, static_cast<uint64_t>(sigma) * i);
            f[i] = f[i].divide_exact(pe).mod_euclid(w.pW);
        }
    }

    // Hull of the shifted polynomial, as exact rationals; the left part is
    // the target polygon of g, the right part (rebased at the vertex) that
    // of h. These fix the p-power weights that balance the update system.
    std::vector<std::pair<int, long long>> svals;
    for (size_t i = 0; i <= d; ++i) {
        int v = val_capped(f[i], w.p, w.W);
        if (v < static_cast<int>(w.W)) svals.emplace_back(static_cast<int>(i), v);
    }
    auto shull = lower_hull([&] {
        std::vector<HullPoint> pts;
        for (auto& [i, v] : svals) pts.push_back({i, v});
        return pts;
    }());
    // hull value at integer x, as a rational num/den
    auto hull_at = [&](size_t x) -> std::pair<long long, long long> {
        for (size_t j = 0; j + 1 < shull.size(); ++j) {
            if (static_cast<long long>(x) > shull[j + 1].i) continue;
            long long dx = shull[j + 1].i - shull[j].i;
            long long num2 = shull[j].v * dx +
                             (shull[j + 1].v - shull[j].v) *
                                 (static_cast<long long>(x) - shull[j].i);
            return {num2, dx};
        }
        return {shull.back().v, 1};
    };
    auto floor_div = [](long long n2, long long d2) {
        long long q2 = n2 / d2;
        if ((n2 % d2) && ((n2 < 0) != (d2 < 0))) --q2;
        return q2;
    };
    auto ceil_div = [&](long long n2, long long d2) { return -floor_div(-n2, d2); };
    // dg corrections respect the left hull (integer valuations round up to
    // the ceiling); dh corrections are unconstrained because h is recomputed
    // from g by power-series division every round
    std::vector<long long> wg(k + 1, 0), rowexp(d + 1, 0);
    for (size_t j = 1; j <= k; ++j) {
        auto [n2, d2] = hull_at(j);
        wg[j] = ceil_div(n2, d2);
    }
    for (size_t m2 = 1; m2 <= d; ++m2) {
        auto [n2, d2] = hull_at(m2);
        rowexp[m2] = floor_div(n2, d2);
    }

    // initial left factor: hull-restricted truncation
    std::vector<BigInt> g(f.begin(), f.begin() + k + 1);
    std::vector<BigInt> h;

    int last_gain = INT32_MIN;
    bool converged = false;
    BigInt pb(w.p);
    for (int round = 0; round < 200 && !converged; ++round) {
        h = series_div(f, g, d - k + 1, w);
        // E = f - g h
        std::vector<BigInt> gh = mul_mod(g, h, w);
        gh.resize(d + 1, BigInt(0));
        std::vector<BigInt> E(d + 1, BigInt(0));
        int gain = static_cast<int>(w.W);
        bool zero = true;
        for (size_t i = 0; i <= d; ++i) {
            E[i] = (f[i] - gh[i]).mod_euclid(w.pW);
            int v = val_capped(E[i], w.p, w.W);
            if (v < static_cast<int>(w.W)) zero = false;
            gain = std::min(gain, v - static_cast<int>(rowexp[i]));
        }
        if (std::getenv("WZ_TRACE_SPLIT"))
            std::fprintf(stderr, "split d=%zu k=%u round=%d gain=%d\n", d, k,
                         round, gain);
        if (zero) {
            converged = true;
            break;
        }
        // allow a few rounds before insisting on progress; the adaptive row
        // scaling below settles once the iterate respects the target hulls
        if (round > 6 && gain <= last_gain)
            throw PrecisionLoss("slope split iteration stalled");
        last_gain = std::max(last_gain, gain);
        // linear update: dg * h + dh * g = E with dg(0) = dh(0) = 0,
        // deg dg <= k, deg dh <= d-k. Unknowns are rescaled by the hull
        // weights (dg_j = p^{wg_j} dg'_j, dh_j = p^{wh_j} dh'_j) and row m
        // is divided by p^{floor hull(m)}; convexity makes every scaled
        // entry integral and the system solvable without losing digits.
        size_t n = d;
        std::vector<std::vector<BigInt>> A(n, std::vector<BigInt>(n, BigInt(0)));
        std::vector<BigInt> b(n, BigInt(0));
        for (size_t m = 1; m <= d; ++m) {
            for (size_t j = 1; j <= k; ++j) {
                if (m < j || m - j >= h.size()) continue;
                A[m - 1][j - 1] =
                    (h[m - j] * BigInt::pow(pb, static_cast<uint64_t>(wg[j])))
                        .mod_euclid(w.pW);
            }
            for (size_t j = 1; j <= d - k; ++j) {
                if (m < j || m - j >= g.size()) continue;
                A[m - 1][k + j - 1] = g[m - j];
            }
            b[m - 1] = E[m];
            // adaptive row scaling: divide by the largest p-power allowed by
            // both the hull floor and the actual row content
            int e = static_cast<int>(rowexp[m]);
            for (size_t j = 0; j < n && e > 0; ++j)
                e = std::min(e, val_capped(A[m - 1][j], w.p, w.W));
            e = std::min(e, val_capped(b[m - 1], w.p, w.W));
            if (e > 0) {
                BigInt rowdiv = BigInt::pow(pb, static_cast<uint64_t>(e));
                for (size_t j = 0; j < n; ++j)
                    A[m - 1][j] = A[m - 1][j].divide_exact(rowdiv);
                b[m - 1] = b[m - 1].divide_exact(rowdiv);
            }
        }
        std::vector<BigInt> x;
        if (!solve_mod(std::move(A), std::move(b), x, w))
            throw PrecisionLoss("slope split update system singular at precision");
        for (size_t j = 1; j <= k; ++j) {
            BigInt delta = x[j - 1] * BigInt::pow(pb, static_cast<uint64_t>(wg[j]));
            g[j] = (g[j] + delta).mod_euclid(w.pW);
        }
    }
    if (!converged) throw PrecisionLoss("slope split did not converge");

    // undo the down-shift
    if (sigma > 0) {
        BigInt pb(w.p);
        for (size_t i = 1; i < g.size(); ++i)
            g[i] = (g[i] * BigInt::pow(pb, static_cast<uint64_t>(sigma) * i))
                       .mod_euclid(w.pW);
        for (size_t i = 1; i < h.size(); ++i)
            h[i] = (h[i] * BigInt::pow(pb, static_cast<uint64_t>(sigma) * i))
                       .mod_euclid(w.pW);
    }
    return {g, h};
}

std::vector<BigInt> to_residues(const IntPoly& f, const Work& w) {
    std::vector<BigInt> out;
    for (int i = 0; i <= f.degree(); ++i) out.push_back(f.coeff(i).mod_euclid(w.pW));
    return out;
}

PadicPoly to_padic(const std::vector<BigInt>& c, uint32_t p, uint32_t M) {
    PadicPoly out;
    out.p = p;
    out.M = M;
    BigInt pM = BigInt::pow(BigInt(p), M);
    for (const auto& x : c) out.c.push_back(x.mod_euclid(pM));
    while (out.c.size() > 1 && out.c.back().is_zero()) out.c.pop_back();
    return out;
}

// one full factorization pass at target precision Mw (internal precision
// is higher); throws PrecisionLoss on any instability
SlopeFactorization raw_factorization(const IntPoly& f, uint32_t p, uint32_t a,
                                     uint32_t Mw) {
    if (f.coeff(0) != BigInt(1))
        throw BadNormalization("slope machinery needs f(0) = 1");
    Work w;
    w.p = p;
    w.W = 2 * Mw + 8 + 2 * static_cast<uint32_t>(std::max(0, f.degree()));
    w.pW = BigInt::pow(BigInt(p), w.W);

    SlopeFactorization out;
    out.M = Mw;
    std::vector<BigInt> cur = to_residues(f, w);
    for (;;) {
        if (cur.size() == 1) break;  // constant 1: done
        // polygon of the current residue polynomial
        std::vector<std::pair<int, long long>> vals;
        for (size_t i = 0; i < cur.size(); ++i) {
            int v = val_capped(cur[i], p, w.W);
            if (v < static_cast<int>(w.W)) vals.emplace_back(static_cast<int>(i), v);
        }
        if (vals.back().first != static_cast<int>(cur.size()) - 1)
            throw PrecisionLoss("leading coefficient vanished at precision");
        auto np = polygon_from_vals(vals, a);
        if (np.single_slope()) {
            out.factors.emplace_back(np.slopes[0].first, to_padic(cur, p, Mw));
            break;
        }
        uint32_t k = static_cast<uint32_t>(np.vertices[1].first);
        auto [g, h] = split_at_vertex(cur, k, w);
        out.factors.emplace_back(np.slopes[0].first, to_padic(g, p, Mw));
        cur = h;
    }
    return out;
}

bool factorizations_agree(const SlopeFactorization& x, const SlopeFactorization& y,
                          uint32_t p, uint32_t M) {
    if (x.factors.size() != y.factors.size()) return false;
    BigInt pM = BigInt::pow(BigInt(p), M);
    for (size_t i = 0; i < x.factors.size(); ++i) {
        if (x.factors[i].first != y.factors[i].first) return false;
        const auto &a = x.factors[i].second.c, &b = y.factors[i].second.c;
        if (a.size() != b.size()) return false;
        for (size_t j = 0; j < a.size(); ++j)
            if (a[j].mod_euclid(pM) != b[j].mod_euclid(pM)) return false;
    }
    return true;
}

void verify_factorization(const SlopeFactorization& fac, const IntPoly& f,
                          uint32_t p, uint32_t a, uint32_t M) {
    Work w;
    w.p = p;
    w.W = M;
    w.pW = BigInt::pow(BigInt(p), M);
    // product round-trip
    std::vector<BigInt> prod = {BigInt(1)};
    int degsum = 0;
    for (const auto& [lam, g] : fac.factors) {
        prod = mul_mod(prod, reduce_vec(g.c, w), w);
        degsum += g.degree();
    }
    if (degsum != f.degree())
        throw PrecisionLoss("slope factor degrees do not sum to deg f");
    for (int i = 0; i <= f.degree(); ++i)
        if (prod[i] != f.coeff(i).mod_euclid(w.pW))
            throw PrecisionLoss("slope factor product fails mod p^M");
    // single-slope polygons, ascending slopes, Z_p-integrality at precision
    for (size_t i = 0; i < fac.factors.size(); ++i) {
        const auto& [lam, g] = fac.factors[i];
        if (g.degree() >= 1) {
            auto np = newton_polygon_residues(g, a);
            if (!np.single_slope() || np.slopes[0].first != lam)
                throw PrecisionLoss("slope factor polygon is not a single segment");
        }
        if (i + 1 < fac.factors.size() && !(lam < fac.factors[i + 1].first))
            throw PrecisionLoss("slopes not strictly increasing");
        for (const auto& coeff : g.c)
            if (coeff.is_negative())
                throw PrecisionLoss("slope factor coefficient not a residue");
    }
}

}  // namespace

PadicScalar::PadicScalar(uint32_t p_, uint32_t a_, uint32_t M_, BigInt v)
    : p(p_), a(a_), M(M_) {
    value = v.mod_euclid(BigInt::pow(BigInt(p_), M_));
}

bool PadicScalar::zero_at_precision() const { return value.is_zero(); }

int PadicScalar::vp() const { return val_capped(value, p, M); }

BigRat PadicScalar::vq() const { return BigRat(BigInt(vp()), BigInt(a)); }

bool PadicPoly::is_one() const {
    if (c.empty()) return false;
    if (c[0] != BigInt(1)) return false;
    for (size_t i = 1; i < c.size(); ++i)
        if (!c[i].is_zero()) return false;
    return true;
}

std::string PadicPoly::to_string() const {
    std::string out = "[";
    for (size_t i = 0; i < c.size(); ++i) {
        if (i) out += ", ";
        out += c[i].to_string();
    }
    return out + "] mod " + std::to_string(p) + "^" + std::to_string(M);
}

std::vector<int> NewtonPolygon::interior_vertices() const {
    std::vector<int> out;
    for (size_t j = 1; j + 1 < vertices.size(); ++j) out.push_back(vertices[j].first);
    return out;
}

NewtonPolygon newton_polygon(const IntPoly& f, uint32_t p, uint32_t a) {
    if (f.is_zero() || f.coeff(0) != BigInt(1))
        throw BadNormalization("Newton polygon needs f(0) = 1");
    std::vector<std::pair<int, long long>> vals;
    for (int i = 0; i <= f.degree(); ++i) {
        if (f.coeff(i).is_zero()) continue;  // infinite valuation: skip
        vals.emplace_back(i, f.coeff(i).valuation(BigInt(p)));
    }
    return polygon_from_vals(vals, a);
}

NewtonPolygon newton_polygon_residues(const PadicPoly& f, uint32_t a) {
    if (f.c.empty() || f.c[0] != BigInt(1))
        throw BadNormalization("Newton polygon needs f(0) = 1");
    std::vector<std::pair<int, long long>> vals;
    for (int i = 0; i <= f.degree(); ++i) {
        int v = val_capped(f.c[i], f.p, f.M);
        if (v >= static_cast<int>(f.M)) continue;
        vals.emplace_back(i, v);
    }
    if (vals.back().first != f.degree())
        throw BadNormalization("leading coefficient is zero at precision");
    return polygon_from_vals(vals, a);
}

std::pair<PadicPoly, PadicPoly> slope_split(const IntPoly& f, uint32_t k,
                                            uint32_t p, uint32_t a, uint32_t M) {
    if (f.coeff(0) != BigInt(1))
        throw BadNormalization("slope split needs f(0) = 1");
    (void)a;
    auto run = [&](uint32_t Mw) {
        Work w;
        w.p = p;
        w.W = 2 * Mw + 8 + 2 * static_cast<uint32_t>(std::max(0, f.degree()));
        w.pW = BigInt::pow(BigInt(p), w.W);
        return split_at_vertex(to_residues(f, w), k, w);
    };
    auto [g1, h1] = run(M);
    auto [g2, h2] = run(2 * M);
    PadicPoly g = to_padic(g1, p, M), h = to_padic(h1, p, M);
    PadicPoly g2m = to_padic(g2, p, M), h2m = to_padic(h2, p, M);
    if (g.c != g2m.c || h.c != h2m.c)
        throw PrecisionLoss("slope split unstable between M and 2M");
    // g h = f mod p^M
    Work w;
    w.p = p;
    w.W = M;
    w.pW = BigInt::pow(BigInt(p), M);
    auto prod = mul_mod(reduce_vec(g.c, w), reduce_vec(h.c, w), w);
    prod.resize(static_cast<size_t>(f.degree()) + 1, BigInt(0));
    for (int i = 0; i <= f.degree(); ++i)
        if (prod[i] != f.coeff(i).mod_euclid(w.pW))
            throw PrecisionLoss("split product fails mod p^M");
    return {g, h};
}

SlopeFactorization slope_factorization(const IntPoly& f, uint32_t p, uint32_t a,
                                       uint32_t M) {
    for (int attempt = 0; attempt <= 2; ++attempt) {
        uint32_t Mw = M << attempt;
        try {
            SlopeFactorization r1 = raw_factorization(f, p, a, Mw);
            SlopeFactorization r2 = raw_factorization(f, p, a, 2 * Mw);
            if (!factorizations_agree(r1, r2, p, Mw))
                throw PrecisionLoss("factorization unstable between M and 2M");
            verify_factorization(r1, f, p, a, Mw);
            // report at the caller's precision
            SlopeFactorization out;
            out.M = M;
            for (const auto& [lam, g] : r1.factors)
                out.factors.emplace_back(lam, to_padic(g.c, p, M));
            return out;
        } catch (const PrecisionLoss&) {
            if (attempt == 2) throw;
        }
    }
    throw PrecisionLoss("unreachable");
}

PadicPoly slope_lt_factor(const IntPoly& f, const BigRat& rho, uint32_t p,
                          uint32_t a, uint32_t M) {
    auto fac = slope_factorization(f, p, a, M);
    Work w;
    w.p = p;
    w.W = M;
    w.pW = BigInt::pow(BigInt(p), M);
    std::vector<BigInt> prod = {BigInt(1)};
    for (const auto& [lam, g] : fac.factors)
        if (lam < rho) prod = mul_mod(prod, reduce_vec(g.c, w), w);
    return to_padic(prod, p, M);
}

ZetaSlopeLt zeta_slope_lt(const RationalZeta& Z, const BigRat& rho, uint32_t p,
                          uint32_t a, uint32_t M) {
    ZetaSlopeLt out;
    out.num = slope_lt_factor(Z.num, rho, p, a, M);
    out.den = slope_lt_factor(Z.den, rho, p, a, M);
    out.trivial = out.num.is_one() && out.den.is_one();
    return out;
}

PadicPoly padic_one(uint32_t p, uint32_t M) {
    PadicPoly out;
    out.p = p;
    out.M = M;
    out.c = {BigInt(1)};
    return out;
}

PadicPoly padic_mul(const PadicPoly& a, const PadicPoly& b) {
    if (a.p != b.p || a.M != b.M)
        throw ContextMismatch("padic polynomial precisions differ");
    Work w;
    w.p = a.p;
    w.W = a.M;
    w.pW = BigInt::pow(BigInt(a.p), a.M);
    PadicPoly out;
    out.p = a.p;
    out.M = a.M;
    out.c = mul_mod(a.c, b.c, w);
    return out;
}

bool zeta_slope_parts_equal(const ZetaSlopeLt& x, const ZetaSlopeLt& y) {
    if (x.num.p != y.num.p || x.num.M != y.num.M) return false;
    Work w;
    w.p = x.num.p;
    w.W = x.num.M;
    w.pW = BigInt::pow(BigInt(w.p), w.W);
    auto lhs = mul_mod(x.num.c, y.den.c, w);
    auto rhs = mul_mod(y.num.c, x.den.c, w);
    lhs.resize(std::max(lhs.size(), rhs.size()), BigInt(0));
    rhs.resize(lhs.size(), BigInt(0));
    return lhs == rhs;
}

}  // namespace wz
