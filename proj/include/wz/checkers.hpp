#pragma once

#include <optional>
#include <string>
#include <vector>

#include "wz/geom.hpp"
#include "wz/padic.hpp"
#include "wz/zeta.hpp"

namespace wz {

/// Structured verdict of one congruence / identity check. The verdict is
/// pass only when every listed assertion holds; when two independent
/// computation routes disagree, internal_inconsistency marks the report
/// (a bug indicator, never a counterexample claim).
struct CheckReport {
    std::string check_name;
    std::vector<std::pair<std::string, std::string>> inputs;

    struct Residue {
        uint32_t r;
        BigInt value;    // the quantity that must vanish mod `modulus`
        BigInt modulus;
        bool ok;
    };
    std::vector<Residue> residues;

    std::vector<std::string> slope_notes;
    std::vector<std::string> assumptions;

    struct CrossCheck {
        std::string name;
        bool agree;
    };
    std::vector<CrossCheck> cross_checks;

    bool pass = false;
    bool internal_inconsistency = false;

    // payload for report emission
    std::vector<BigInt> counts;
    std::optional<RationalZeta> zeta;
    std::optional<ZetaSlopeLt> slope_part;
    uint32_t precision = 0;

    void note_input(const std::string& k, const std::string& v) {
        inputs.emplace_back(k, v);
    }
};

struct ReconOptions {
    std::optional<std::pair<uint32_t, uint32_t>> deg_bounds;  // else auto
};

/// Prop.-style divisibility check: (i) N_r = 0 mod q^{kappa r} for r <= R,
/// and (iv) the slope-< kappa part of the reconstructed rational function
/// is trivial. The two routes must agree.
CheckReport check_divis(const CountTable& counts, uint32_t kappa, uint32_t R,
                        uint32_t M, const ReconOptions& recon = {});

/// Intersections of hypersurfaces of total degree <= n in P^n:
/// |Z(F_{q^r})| = 1 mod q^r, cross-checked through the divisibility route
/// on N_r - 1.
CheckReport check_ax_katz(const VarietySpec& Z, uint32_t R, uint32_t M,
                          const ReconOptions& recon = {},
                          const GeomBudget& budget = GeomBudget{});

/// The slope-<1 identity zeta^{<1}(A) = zeta^{<1}(Theta) P_2^{<1}(A)^{-1}
/// on A = E1 x E2 with Theta the wedge of translated axes. Both sides are
/// computed along independent routes and compared mod p^M.
CheckReport check_general_serre(const VarietySpec& E1, const VarietySpec& E2,
                                uint32_t R, uint32_t M,
                                const GeomBudget& budget = GeomBudget{});

/// Counts of two declared theta divisors agree mod q^r for r <= R.
CheckReport check_serre_theta(const VarietySpec& theta1,
                              const VarietySpec& theta2, bool declared,
                              uint32_t R, const GeomBudget& budget = GeomBudget{});

/// Per-r residues of |X| - |Y| mod q^r.
CheckReport check_congruence_pair(const VarietySpec& X, const VarietySpec& Y,
                                  uint32_t R,
                                  const GeomBudget& budget = GeomBudget{});

/// The quotient surface Y = (E1 x E2)/G under (x, y) -> (x + t, -y) in
/// characteristic 2: some r <= R has N_r(X) != N_r(Y) mod q^r, and the
/// slope-<1 zeta parts differ mod p^M.
CheckReport check_igusa(const VarietySpec& X, const GroupAction& action,
                        uint32_t torsion_slot, uint32_t R, uint32_t M,
                        const GeomBudget& budget = GeomBudget{});

/// Purity of the slope-<1 zeta part of U = X \ D: it concentrates in a
/// single polynomial (numerator for odd n, denominator for even n).
CheckReport check_vanish_purity(const VarietySpec& X, const VarietySpec& D,
                                uint32_t n, uint32_t R, uint32_t M,
                                const ReconOptions& recon = {},
                                const GeomBudget& budget = GeomBudget{});

}  // namespace wz
