#pragma once

#include <vector>

#include "wz/bigint.hpp"
#include "wz/geom.hpp"
#include "wz/upoly.hpp"

namespace wz {

/// Truncated expansion of exp(sum N_r t^r / r), exact over Z.
struct ZetaSeries {
    BigInt q;
    std::vector<BigInt> c;  // c_0..c_M, c_0 = 1

    uint32_t order() const { return static_cast<uint32_t>(c.size()) - 1; }
};

/// Reduced rational function num/den with num(0) = den(0) = 1, over Z.
struct RationalZeta {
    IntPoly num;
    IntPoly den;
    BigInt q;
};

/// Series coefficients from a count table: c_m = (sum N_r c_{m-r}) / m with
/// exact division. Nonnegative coefficients enforced (they count effective
/// zero-cycles). MissingCounts if the table is shorter than min(M, needed).
ZetaSeries series_from_counts(const CountTable& counts, uint32_t M);

/// Same recursion for an arbitrary integer sequence (divisibility-style
/// sequences may produce negative coefficients; only integrality is
/// enforced).
ZetaSeries series_from_sequence(const std::vector<BigInt>& N, const BigInt& q,
                                uint32_t M);

/// Exact Hankel/Pade reconstruction with the given degree bounds. Requires
/// d_num + d_den + 1 <= M, leaving at least one check term; every supplied
/// series term must be reproduced (NoRationalFit otherwise).
RationalZeta reconstruct_rational(const ZetaSeries& series, uint32_t d_num,
                                  uint32_t d_den);

/// Minimal-degree search: smallest d_num + d_den (denominator-heavy first
/// within a total) that reproduces the series with >= 2 spare terms.
RationalZeta reconstruct_rational_auto(const ZetaSeries& series);

/// N_r = power sums of den's inverse roots minus num's, via Newton's
/// identities; no root extraction.
CountTable counts_from_rational(const RationalZeta& Z, uint32_t R);

/// Validate and normalize an externally assembled fraction (reduces to
/// lowest terms; constant terms must be 1).
RationalZeta make_rational_zeta(IntPoly num, IntPoly den, BigInt q);

/// h with inverse roots all products a_i * b_j, h(0) = 1,
/// deg h = deg f * deg g; computed exactly through a Sylvester resultant.
IntPoly composed_product(const IntPoly& f, const IntPoly& g);

/// Frobenius polynomials P_0..P_4 of a product of two elliptic curves with
/// P1-polynomials of shape 1 - a t + q t^2. The alternating product is
/// cross-checked against the product curve's counts before returning.
struct KunnethSurface {
    std::vector<IntPoly> P;  // P_0..P_4
    BigInt q;
};

KunnethSurface kunneth_abelian_surface(const IntPoly& P1_E1,
                                       const IntPoly& P1_E2, const BigInt& q);

/// The alternating product P_1 P_3 / (P_0 P_2 P_4) as a reduced fraction.
RationalZeta kunneth_zeta(const KunnethSurface& K);

/// Counts of the elliptic curve with the given P1 (num = P1,
/// den = (1-t)(1-qt)).
RationalZeta elliptic_zeta(const IntPoly& P1, const BigInt& q);

}  // namespace wz
