#pragma once

#include <memory>
#include <optional>
#include <utility>
#include <vector>

#include "tropamalg/flag_fan.hpp"
#include "tropamalg/matroid.hpp"

namespace tropamalg {

// Two matroids with an agreeing restriction to their common groundset T.
// N is derived from M1 and cross-checked against M2's restriction; a
// mismatch poisons everything downstream and is rejected here.
struct AmalgamProblem {
  Matroid m1, m2, n;  // n lives on the common labels T

  static AmalgamProblem make(Matroid m1, Matroid m2);  // RestrictionMismatch
};

// The r cut functions slicing the diagonal out of B(N) x B(N), bound to that
// product fan (left copy tagged @L, right copy @R).
struct DiagonalSystem {
  std::shared_ptr<FlagFan> fan;
  std::vector<CutFunction> cuts;  // in application order (values non-increasing in i)
};
DiagonalSystem diagonal_functions(const Matroid& n);

// Product of the Bergman fans of the two (tagged) factors cut by the
// pulled-back diagonal functions, in non-increasing value order. The result
// lives on the tagged disjoint union E1@L u E2@R.
FlagFan fibre_product(const AmalgamProblem& p);

// eta(F) = rk_M1(F n E1) + rk_M2(F n E2) - rk_N(F n T) for F inside E1 u E2.
int amalgam_eta(const AmalgamProblem& p, const std::vector<std::string>& subset_labels);

// Brute-force existence check straight from the definition of the proper
// amalgam: zeta(X) = min {eta(Y) : Y >= X} over all subsets, accepted iff
// zeta is a matroid rank function whose matroid restricts to M1 and M2 and
// whose flats all satisfy zeta = eta. Capped by TROPAMALG_MAX_GROUNDSET
// (default 20); GroundsetTooLarge beyond.
std::optional<Matroid> oracle_proper_amalgam(const AmalgamProblem& p, int jobs = 1);

// Exactly one branch is populated: the proper amalgam on E1 u E2 (after
// fusing the doubled T elements), or the negative-weight chains of the fibre
// product as a non-existence certificate.
struct AmalgamVerdict {
  std::optional<Matroid> matroid;
  GroundSet certificate_gs;  // groundset of the certificate chains (tagged)
  std::vector<std::pair<std::vector<SubsetBits>, Weight>> negative_chains;
};
AmalgamVerdict decide_amalgam(const AmalgamProblem& p);

}  // namespace tropamalg
