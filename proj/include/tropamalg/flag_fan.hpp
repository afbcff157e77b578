#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "tropamalg/matroid.hpp"
#include "tropamalg/poset.hpp"
#include "tropamalg/weight.hpp"

namespace tropamalg {

// Weighted ranked poset of subsets encoding a tropical fan: cones are flags
// of pairwise comparable vertices, the weight of a maximal cone is the
// product of the edge weights along its flag, and the copies of cones with
// e_E replaced by -e_E are implicit with the same weights. The zero fan is
// represented by an empty poset.
class FlagFan {
 public:
  using Edge = std::tuple<SubsetBits, SubsetBits, Weight>;

  // Drops zero-weight edges, prunes vertices off every empty-to-E cover path
  // and rederives ranks. Returns the zero fan when nothing spans.
  static FlagFan make(GroundSet gs, const std::vector<SubsetBits>& vertices,
                      const std::vector<Edge>& edges);
  static FlagFan zero(GroundSet gs);

  const GroundSet& groundset() const { return gs_; }
  const RankedPoset& poset() const { return poset_; }
  bool is_zero() const { return poset_.empty(); }

  // Rank of the top vertex E (the dimension of the affine fan, counting the
  // e_E ray); -1 for the zero fan.
  int dimension() const;

  const Weight& edge_weight(int from, int to) const;
  // Edges in canonical order, as (from-index, to-index).
  std::vector<std::pair<int, int>> edges() const;

  int bottom() const { return poset_.index_of(SubsetBits{}); }
  int top() const { return poset_.index_of(gs_.full()); }

 private:
  GroundSet gs_;
  RankedPoset poset_;
  std::vector<std::vector<Weight>> up_weight_;  // parallel to poset_.up_covers()
};

// Multiset of maximal flags with integer weights: the chain-level canonical
// form of a cycle, used for push-forward outputs and cycle equality. Chains
// run from the empty set to the full groundset and share a common length;
// zero-weight chains are removed on normalization.
class WeightedChainFan {
 public:
  using ChainMap = std::map<std::vector<SubsetBits>, Weight>;

  static WeightedChainFan make(GroundSet gs, ChainMap chains);
  const GroundSet& groundset() const { return gs_; }
  const ChainMap& chains() const { return chains_; }
  bool is_zero() const { return chains_.empty(); }
  int levels() const;  // number of levels per chain; 0 for the zero fan

 private:
  GroundSet gs_;
  ChainMap chains_;
};

// Piecewise-linear continuation of -1 on an upward-closed vertex set A of a
// specific fan (0 elsewhere, linear on the lineality). NotACut if A is not
// upward-closed or contains the empty set.
class CutFunction {
 public:
  CutFunction(const FlagFan& fan, const std::vector<SubsetBits>& members);
  static CutFunction from_predicate(const FlagFan& fan,
                                    const std::function<bool(SubsetBits)>& in_cut);
  static CutFunction alpha(const FlagFan& fan);  // A = {E}, the truncation function

  const FlagFan& fan() const { return *fan_; }
  bool in_cut(int v) const { return flags_[v]; }
  int value(int v) const { return flags_[v] ? -1 : 0; }

 private:
  CutFunction(const FlagFan& fan, std::vector<bool> flags);
  const FlagFan* fan_;
  std::vector<bool> flags_;
};

FlagFan bergman_fan(const Matroid& m);

// LabelClash unless the groundsets are disjoint.
FlagFan product(const FlagFan& x, const FlagFan& y);

// Weil divisor of a cut function via the poset rewrite: delete covers where
// the value jumps, bridge unbalanced rank-2 segments, prune. LocallyUnbalanced
// when a segment sum is not a multiple of the segment's top difference.
FlagFan weil_divisor(const FlagFan& x, const CutFunction& phi);

// Weil divisor computed directly from the cone-level weight formula on the
// chain expansion. Same contract; used as the independent route.
WeightedChainFan weil_divisor_chains(const WeightedChainFan& x,
                                     const std::vector<SubsetBits>& cut_members);

// Weight of the ray through e_E after cutting dimension-1 truncation
// divisors; 0 for fans that collapse to zero.
Weight degree(const FlagFan& x);

struct BalanceViolation {
  std::vector<SubsetBits> face;  // levels of the offending hyperface
  std::string detail;
};
struct BalanceReport {
  bool balanced = true;
  std::vector<BalanceViolation> violations;
};
BalanceReport check_balancing(const FlagFan& x);
BalanceReport check_balancing(const WeightedChainFan& x);

WeightedChainFan expand_chains(const FlagFan& x);

// Chain-level product: staircase shuffles of the two chain sets with product
// weights. LabelClash unless the groundsets are disjoint.
WeightedChainFan product_chains(const WeightedChainFan& x, const WeightedChainFan& y);

// Projection onto the coordinates in `keep` (labels of the source
// groundset). Cones with non-injective image are dropped, weights of equal
// image chains add up, the lattice index of each surviving cone is computed
// and must be 1 (UnexpectedIndex otherwise).
WeightedChainFan pushforward(const WeightedChainFan& x, const std::vector<std::string>& keep);
WeightedChainFan pushforward(const FlagFan& x, const std::vector<std::string>& keep);

// Star of the Bergman fan of `m` at (an interior point of the cone of) the
// given flag of flats from empty to E: the product of the Bergman fans of
// the minors between consecutive flag members.
FlagFan star(const Matroid& m, const std::vector<SubsetBits>& flag);

// Constructive direction of the degree-1 extraction: positive weights plus
// unit edge weights yield the matroid of the vertex poset. NegativeWeight
// (with a witness chain) when a cone weight is negative;
// AxiomsFailDespitePositivity when positivity holds but the result is not a
// Bergman fan (that would contradict the theory and is surfaced, never
// swallowed).
Matroid matroid_from_degree1_fan(const FlagFan& x);

// Chain-level cycle equality. GroundsetMismatch unless the labels agree.
bool fans_equal(const WeightedChainFan& a, const WeightedChainFan& b);
bool fans_equal(const FlagFan& a, const FlagFan& b);
bool fans_equal(const FlagFan& a, const WeightedChainFan& b);

// First maximal flag with negative cone weight, if any (sign propagation,
// no full expansion).
std::optional<std::vector<SubsetBits>> find_negative_chain(const FlagFan& x);

FlagFan relabel_fan(const FlagFan& x, const std::function<std::string(const std::string&)>& f);

}  // namespace tropamalg
