#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "tropamalg/flag_fan.hpp"
#include "tropamalg/matroid.hpp"

namespace tropamalg {

// Total map between two flat lattices, order-preserving by construction.
// Source and target keep disjoint label sets wherever a correspondence fan is
// built from the map.
class LatticeMap {
 public:
  static LatticeMap make(Matroid source, Matroid target,
                         const std::vector<std::pair<SubsetBits, SubsetBits>>& assignments);

  const Matroid& source() const { return source_; }
  const Matroid& target() const { return target_; }
  SubsetBits apply(SubsetBits source_flat) const;
  int apply_index(int source_flat_index) const { return image_[source_flat_index]; }

 private:
  LatticeMap(Matroid source, Matroid target)
      : source_(std::move(source)), target_(std::move(target)) {}

  Matroid source_, target_;
  std::vector<int> image_;  // source flat index -> target flat index
};

bool is_weak_lattice_map(const LatticeMap& f);
bool is_covering_lattice_map(const LatticeMap& f);
// Exhaustive rank comparison of an element map over all subsets of E1.
bool is_weak_groundset_map(const Matroid& m1, const Matroid& m2,
                           const std::map<std::string, std::string>& g);

// Pt(f): x -> the element of f({x}); needs simple source and target.
std::map<std::string, std::string> pt(const LatticeMap& f);

// Graph rank function and its {0,-1} slices, 1 <= i <= rk(source).
int gamma(const LatticeMap& f, SubsetBits f1, SubsetBits f2);
int gamma_i(const LatticeMap& f, int i, SubsetBits f1, SubsetBits f2);

// Tropical subcycle of B(left) x B(right) playing the role of a graph.
struct Correspondence {
  Matroid left, right;
  FlagFan fan;
};

// Divisor pipeline: gamma_i cuts on the product of Bergman fans, in
// non-increasing value order. NotWeak for non-weak maps; for non-covering
// weak maps a non-monotone slice surfaces as NotACut (and local imbalance as
// LocallyUnbalanced), never silently repaired.
Correspondence graph_correspondence(const LatticeMap& f);

// Independent combinatorial construction for covering maps: vertices
// {(X, Y) : f(X) <= Y}, edges along target covers, weights given by the
// Möbius eta of the subposet {F : X1 <= F <= X2, f(F) <= Y1}.
Correspondence graph_correspondence_direct(const LatticeMap& f);

// Composition with the left factor given as a lattice map (its gamma_i cuts
// are pulled back onto B(source) x gamma_g and the middle coordinates are
// projected away). MiddleMismatch unless gamma_g's groundset contains the
// target labels of f.
WeightedChainFan compose(const LatticeMap& f, const FlagFan& gamma_g);

LatticeMap compose_maps(const LatticeMap& f, const LatticeMap& g);  // g after f

// min-formula for the composed graph rank function.
bool gamma_min_compose_check(const LatticeMap& f, const LatticeMap& g, SubsetBits fx,
                             SubsetBits fz);

// Corpus machinery: all total order-preserving flat maps between the two
// lattices, optionally filtered to weak / covering ones.
std::vector<LatticeMap> enumerate_lattice_maps(const Matroid& m1, const Matroid& m2,
                                               bool require_weak, bool require_covering);

// All modular cuts of m, optionally without rank-1 flats. Each cut is listed
// as its member flats.
std::vector<std::vector<SubsetBits>> enumerate_modular_cuts(const Matroid& m,
                                                            bool exclude_rank1);

}  // namespace tropamalg
