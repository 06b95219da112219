#include "wz/zeta.hpp"

#include <algorithm>

#include "wz/errors.hpp"

namespace wz {

namespace {

ZetaSeries series_core(const std::vector<BigInt>& N, const BigInt& q, uint32_t M,
                       bool require_nonneg) {
    if (N.size() < M)
        throw MissingCounts("need counts through r = " + std::to_string(M));
    ZetaSeries s;
    s.q = q;
    s.c.assign(M + 1, BigInt(0));
    s.c[0] = BigInt(1);
    // m c_m = sum_{r=1}^m N_r c_{m-r}, from t Z'/Z = sum N_r t^r
    for (uint32_t m = 1; m <= M; ++m) {
        BigInt acc(0);
        for (uint32_t r = 1; r <= m; ++r) acc += N[r - 1] * s.c[m - r];
        BigInt qq, rem;
        BigInt::divmod(acc, BigInt(m), qq, rem);
        if (!rem.is_zero())
            throw NonIntegralSeries("series coefficient c_" + std::to_string(m) +
                                    " is not integral");
        if (require_nonneg && qq.is_negative())
            throw NonIntegralSeries("negative series coefficient from a count table");
        s.c[m] = qq;
    }
    return s;
}

BigInt lcm(const BigInt& a, const BigInt& b) {
    return (a * b).divide_exact(BigInt::gcd(a, b)).abs();
}

// Verify that den * series == num through t^M, over Z.
bool reproduces(const ZetaSeries& s, const IntPoly& num, const IntPoly& den) {
    uint32_t M = s.order();
    for (uint32_t m = 0; m <= M; ++m) {
        BigInt acc(0);
        for (int i = 0; i <= den.degree() && i <= static_cast<int>(m); ++i)
            acc += den.coeff(i) * s.c[m - i];
        if (acc != num.coeff(static_cast<int>(m))) return false;
    }
    return true;
}

}  // namespace

ZetaSeries series_from_counts(const CountTable& counts, uint32_t M) {
    return series_core(counts.counts, counts.q, M, /*require_nonneg=*/true);
}

ZetaSeries series_from_sequence(const std::vector<BigInt>& N, const BigInt& q,
                                uint32_t M) {
    return series_core(N, q, M, /*require_nonneg=*/false);
}

RationalZeta reconstruct_rational(const ZetaSeries& series, uint32_t d_num,
                                  uint32_t d_den) {
    uint32_t M = series.order();
    if (d_num + d_den + 1 > M)
        throw InsufficientTerms("need d_num + d_den + 1 <= M");
    auto c = [&](int i) { return i < 0 ? BigInt(0) : series.c.at(i); };

    // Solve for den coefficients d_1..d_k from the linear relations
    // sum_i c_{m-i} d_i = -c_m, m = d_num+1 .. d_num+k.
    uint32_t k = d_den;
    std::vector<BigRat> d(k + 1, BigRat(0));
    d[0] = BigRat(1);
    if (k > 0) {
        std::vector<std::vector<BigRat>> A(k, std::vector<BigRat>(k + 1, BigRat(0)));
        for (uint32_t row = 0; row < k; ++row) {
            int m = static_cast<int>(d_num) + 1 + static_cast<int>(row);
            for (uint32_t i = 1; i <= k; ++i)
                A[row][i - 1] = BigRat(c(m - static_cast<int>(i)));
            A[row][k] = BigRat(-c(m));
        }
        // Gaussian elimination with column pivoting; free variables get 0.
        std::vector<int> pivot_col(k, -1);
        uint32_t rank = 0;
        for (uint32_t col = 0; col < k && rank < k; ++col) {
            uint32_t piv = rank;
            while (piv < k && A[piv][col].is_zero()) ++piv;
            if (piv == k) continue;
            std::swap(A[piv], A[rank]);
            BigRat inv = BigRat(1) / A[rank][col];
            for (uint32_t j = col; j <= k; ++j) A[rank][j] = A[rank][j] * inv;
            for (uint32_t i = 0; i < k; ++i) {
                if (i == rank || A[i][col].is_zero()) continue;
                BigRat f = A[i][col];
                for (uint32_t j = col; j <= k; ++j)
                    A[i][j] = A[i][j] - f * A[rank][j];
            }
            pivot_col[rank] = static_cast<int>(col);
            ++rank;
        }
        // inconsistent rows mean no fit at these bounds
        for (uint32_t i = rank; i < k; ++i)
            if (!A[i][k].is_zero())
                throw NoRationalFit("denominator system inconsistent");
        for (uint32_t i = 0; i < rank; ++i) d[pivot_col[i] + 1] = A[i][k];
    }

    // numerator by truncated product, then clear denominators
    std::vector<BigRat> n(d_num + 1, BigRat(0));
    for (uint32_t m = 0; m <= d_num; ++m)
        for (uint32_t i = 0; i <= std::min(m, k); ++i)
            n[m] = n[m] + d[i] * BigRat(c(static_cast<int>(m - i)));

    BigInt L(1);
    for (const auto& x : d) L = lcm(L, x.den());
    for (const auto& x : n) L = lcm(L, x.den());
    std::vector<BigInt> ni, di;
    for (const auto& x : n)
        ni.push_back((x * BigRat(L)).num());
    for (const auto& x : d)
        di.push_back((x * BigRat(L)).num());
    IntPoly Num(std::move(ni)), Den(std::move(di));

    // reduce to lowest terms; Fatou: the reduced pair has constant terms +-1
    IntPoly G = IntPoly::gcd_primitive(Num, Den);
    if (G.degree() > 0) {
        Num = Num.divide_exact(G);
        Den = Den.divide_exact(G);
    }
    Num = Num.is_zero() ? Num : Num.primitive_part();
    Den = Den.primitive_part();
    if (Den.coeff(0).is_negative()) {
        Den = -Den;
        Num = -Num;
    }
    if (Den.coeff(0) != BigInt(1) || (!Num.is_zero() && Num.coeff(0) != BigInt(1)))
        throw NoRationalFit("reduced fraction does not normalize to 1 + ...");

    // every supplied term, including the spare ones, must reproduce
    if (!reproduces(series, Num, Den))
        throw NoRationalFit("reconstruction fails the series check terms");

    RationalZeta z;
    z.num = std::move(Num);
    z.den = std::move(Den);
    z.q = series.q;
    return z;
}

RationalZeta reconstruct_rational_auto(const ZetaSeries& series) {
    uint32_t M = series.order();
    if (M < 2) throw InsufficientTerms("auto reconstruction needs M >= 2");
    for (uint32_t total = 0; total + 2 <= M; ++total) {
        for (int dd = static_cast<int>(total); dd >= 0; --dd) {
            uint32_t d_den = static_cast<uint32_t>(dd);
            uint32_t d_num = total - d_den;
            try {
                return reconstruct_rational(series, d_num, d_den);
            } catch (const NoRationalFit&) {
                continue;
            }
        }
    }
    throw NoRationalFit("no rational function fits within the available terms");
}

CountTable counts_from_rational(const RationalZeta& Z, uint32_t R) {
    auto pd = IntPoly::inverse_root_power_sums(Z.den, static_cast<int>(R));
    auto pn = IntPoly::inverse_root_power_sums(Z.num.is_zero() ? IntPoly::of({1})
                                                               : Z.num,
                                               static_cast<int>(R));
    CountTable t;
    t.q = Z.q;
    for (uint32_t r = 1; r <= R; ++r) t.counts.push_back(pd[r - 1] - pn[r - 1]);
    return t;
}

RationalZeta make_rational_zeta(IntPoly num, IntPoly den, BigInt q) {
    if (num.coeff(0) != BigInt(1) || den.coeff(0) != BigInt(1))
        throw BadNormalization("zeta fraction needs constant terms 1");
    IntPoly G = IntPoly::gcd_primitive(num, den);
    if (G.degree() > 0) {
        num = num.divide_exact(G);
        den = den.divide_exact(G);
        // gcd normalization keeps the lowest coefficient positive, so the
        // quotients still have constant term 1
    }
    RationalZeta z;
    z.num = std::move(num);
    z.den = std::move(den);
    z.q = std::move(q);
    return z;
}

IntPoly composed_product(const IntPoly& f, const IntPoly& g) {
    if (f.coeff(0) != BigInt(1) || g.coeff(0) != BigInt(1))
        throw ZeroConstantTerm("composed product needs constant terms 1");
    int df = f.degree(), dg = g.degree();
    if (df == 0 || dg == 0) return IntPoly::of({1});
    // A(x) = x^df f(1/x), monic with the inverse roots of f as roots
    std::vector<IntPoly> A;
    for (int i = 0; i <= df; ++i) A.push_back(IntPoly::constant(f.coeff(df - i)));
    // B(x) = g(t x): coefficient of x^j is g_j t^j
    std::vector<IntPoly> B;
    for (int j = 0; j <= dg; ++j) {
        std::vector<BigInt> cs(static_cast<size_t>(j) + 1, BigInt(0));
        cs[j] = g.coeff(j);
        B.push_back(IntPoly(std::move(cs)));
    }
    IntPoly h = resultant_x(A, B);
    if (h.coeff(0) == BigInt(-1)) h = -h;
    if (h.coeff(0) != BigInt(1))
        throw ZeroConstantTerm("composed product failed to normalize");
    if (h.degree() != df * dg)
        throw InternalInconsistency("composed product degree contract violated");
    return h;
}

RationalZeta elliptic_zeta(const IntPoly& P1, const BigInt& q) {
    IntPoly den = IntPoly::of({1, -1});
    std::vector<BigInt> qt = {BigInt(1), -q};
    den = den * IntPoly(qt);
    return make_rational_zeta(P1, den, q);
}

KunnethSurface kunneth_abelian_surface(const IntPoly& P1_E1,
                                       const IntPoly& P1_E2, const BigInt& q) {
    auto check_shape = [&](const IntPoly& P) {
        if (P.degree() != 2 || P.coeff(0) != BigInt(1) || P.coeff(2) != q)
            throw BadShape("expected a polynomial of shape 1 - a t + q t^2");
    };
    check_shape(P1_E1);
    check_shape(P1_E2);

    KunnethSurface K;
    K.q = q;
    K.P.resize(5);
    K.P[0] = IntPoly::of({1, -1});
    K.P[1] = P1_E1 * P1_E2;
    IntPoly one_minus_qt(std::vector<BigInt>{BigInt(1), -q});
    K.P[2] = one_minus_qt * one_minus_qt * composed_product(P1_E1, P1_E2);
    K.P[3] = P1_E1.compose_scale(q) * P1_E2.compose_scale(q);
    // top cohomology of a surface
    K.P[4] = IntPoly(std::vector<BigInt>{BigInt(1), -(q * q)});

    // cross-check: the alternating product must count like E1 x E2
    RationalZeta zA = kunneth_zeta(K);
    auto NA = counts_from_rational(zA, 4);
    auto N1 = counts_from_rational(elliptic_zeta(P1_E1, q), 4);
    auto N2 = counts_from_rational(elliptic_zeta(P1_E2, q), 4);
    for (uint32_t r = 1; r <= 4; ++r)
        if (NA.N(r) != N1.N(r) * N2.N(r))
            throw InternalInconsistency(
                "Kunneth alternating product disagrees with product counts");
    return K;
}

RationalZeta kunneth_zeta(const KunnethSurface& K) {
    IntPoly num = K.P[1] * K.P[3];
    IntPoly den = K.P[0] * K.P[2] * K.P[4];
    return make_rational_zeta(std::move(num), std::move(den), K.q);
}

}  // namespace wz
