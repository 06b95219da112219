#pragma once

#include <utility>
#include <vector>

#include "wz/bigint.hpp"
#include "wz/upoly.hpp"
#include "wz/zeta.hpp"

namespace wz {

/// Scalar known mod p^M with the q-normalized valuation v_q(q) = 1 for
/// q = p^a. A residue divisible by p^M counts as zero at this precision.
struct PadicScalar {
    uint32_t p = 0;
    uint32_t a = 1;
    uint32_t M = 0;
    BigInt value;  // canonical residue in [0, p^M)

    PadicScalar() = default;
    PadicScalar(uint32_t p_, uint32_t a_, uint32_t M_, BigInt v);

    bool zero_at_precision() const;
    /// v_p of the residue; M when zero at precision.
    int vp() const;
    /// v_q = v_p / a as an exact rational.
    BigRat vq() const;
};

/// Polynomial with coefficients known mod p^M, canonical residues in
/// [0, p^M). Constant terms are 1 for every factor this library produces.
struct PadicPoly {
    uint32_t p = 0;
    uint32_t M = 0;
    std::vector<BigInt> c;

    int degree() const { return static_cast<int>(c.size()) - 1; }
    bool is_one() const;
    std::string to_string() const;
};

/// Newton polygon of a polynomial with f(0) = 1, in the q-normalized
/// valuation v_q = v_p / a. Vertices are the lattice points of the lower
/// convex hull; slopes come with multiplicities and ascend strictly.
struct NewtonPolygon {
    std::vector<std::pair<int, BigRat>> vertices;   // (i, v_q(a_i))
    std::vector<std::pair<BigRat, int>> slopes;     // ascending

    bool single_slope() const { return slopes.size() == 1; }
    /// x-coordinates of the interior vertices (split points).
    std::vector<int> interior_vertices() const;
};

NewtonPolygon newton_polygon(const IntPoly& f, uint32_t p, uint32_t a);
/// Polygon of residues mod p^M (coefficients that vanish at precision are
/// skipped; the leading coefficient must survive).
NewtonPolygon newton_polygon_residues(const PadicPoly& f, uint32_t a);

/// Split f = g * h mod p^M at polygon vertex k: g of degree k carries the
/// left part of the polygon, h the right, both with constant term 1.
/// The result is recomputed at precision 2M and compared mod p^M;
/// PrecisionLoss if the two runs disagree or the iteration stalls.
std::pair<PadicPoly, PadicPoly> slope_split(const IntPoly& f, uint32_t k,
                                            uint32_t p, uint32_t a, uint32_t M);

struct SlopeFactorization {
    uint32_t M = 0;
    std::vector<std::pair<BigRat, PadicPoly>> factors;  // ascending slopes
};

/// Full slope factorization by repeated splits at every polygon vertex.
/// Each factor has a single-slope polygon; the product reproduces f mod
/// p^M. Retries internally at doubled precision (at most twice) before
/// letting PrecisionLoss escape.
SlopeFactorization slope_factorization(const IntPoly& f, uint32_t p, uint32_t a,
                                       uint32_t M);

/// Product of all slope factors with slope < rho (1 when none).
PadicPoly slope_lt_factor(const IntPoly& f, const BigRat& rho, uint32_t p,
                          uint32_t a, uint32_t M);

/// Slope-< rho part of a rational function, numerator and denominator
/// split separately. `trivial` when both parts are 1 mod p^M.
struct ZetaSlopeLt {
    PadicPoly num;
    PadicPoly den;
    bool trivial = false;
};

ZetaSlopeLt zeta_slope_lt(const RationalZeta& Z, const BigRat& rho, uint32_t p,
                          uint32_t a, uint32_t M);

/// Equality of two slope-< rho parts as rational functions mod p^M
/// (cross-multiplied coefficient comparison).
bool zeta_slope_parts_equal(const ZetaSlopeLt& x, const ZetaSlopeLt& y);

PadicPoly padic_one(uint32_t p, uint32_t M);
PadicPoly padic_mul(const PadicPoly& a, const PadicPoly& b);

}  // namespace wz
