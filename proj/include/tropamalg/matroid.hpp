#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "tropamalg/subset.hpp"

namespace tropamalg {

// Loopless matroid given by its full lattice of flats. Ranks and covers are
// recomputed from cover-chain lengths at construction; nothing is trusted
// from input.
class Matroid {
 public:
  // Validates the three flat axioms (top present, intersection-closed,
  // covering partition) plus looplessness, then precomputes covers and ranks.
  static Matroid from_flats(GroundSet gs, std::vector<SubsetBits> flats);

  const GroundSet& groundset() const { return gs_; }
  int size() const { return gs_.size(); }
  int rank() const { return rank_; }

  const std::vector<SubsetBits>& flats() const { return flats_; }
  int num_flats() const { return static_cast<int>(flats_.size()); }
  SubsetBits flat(int i) const { return flats_[i]; }

  bool is_flat(SubsetBits s) const { return index_.count(s.bits) != 0; }
  int flat_index(SubsetBits s) const;  // NotAFlat if absent
  int rank_of_flat(SubsetBits f) const { return rank_by_index_[flat_index(f)]; }
  int rank_of_flat_index(int i) const { return rank_by_index_[i]; }

  // Smallest flat containing X.
  SubsetBits closure(SubsetBits x) const;
  // rk(X) = rank of closure(X), for arbitrary X inside the groundset.
  int rank_of(SubsetBits x) const { return rank_by_index_[index_.at(closure(x).bits)]; }

  SubsetBits join(SubsetBits f1, SubsetBits f2) const;  // closure of the union
  SubsetBits meet(SubsetBits f1, SubsetBits f2) const;  // intersection

  // Flats covering the given flat, as indices into flats().
  const std::vector<int>& covers_above(int flat_idx) const { return covers_[flat_idx]; }
  std::vector<SubsetBits> covers_of(SubsetBits f) const;

  bool is_simple() const;

  bool operator==(const Matroid& other) const {
    return gs_ == other.gs_ && flats_ == other.flats_;
  }
  bool operator!=(const Matroid& other) const { return !(*this == other); }

 private:
  Matroid() = default;

  GroundSet gs_;
  std::vector<SubsetBits> flats_;  // sorted by (cardinality, bits)
  std::unordered_map<std::uint64_t, int> index_;
  std::vector<int> rank_by_index_;
  std::vector<std::vector<int>> covers_;  // up-covers by flat index
  int rank_ = 0;
};

// Standard constructions. Each result is re-validated through from_flats.
Matroid restriction(const Matroid& m, SubsetBits t);
Matroid contraction(const Matroid& m, SubsetBits f);  // NotAFlat; contraction by E gives the rank-0 matroid on the empty groundset
Matroid direct_sum(const Matroid& a, const Matroid& b);  // LabelClash on overlap
Matroid truncation(const Matroid& m);                    // RankZero below rank 2

bool is_modular_pair(const Matroid& m, SubsetBits f1, SubsetBits f2);
bool is_modular_flat(const Matroid& m, SubsetBits f);
bool is_modular_cut(const Matroid& m, const std::vector<SubsetBits>& cut);

// Replaces each rank-1 flat by its lexicographically smallest element.
// Returns the simple matroid and the label map original -> representative.
std::pair<Matroid, std::map<std::string, std::string>> simplify(const Matroid& m);

// Quotients each named pair (a, b) of parallel elements (a kept, b dropped).
// NotParallel if some pair has no common rank-1 flat.
Matroid fuse_parallel(const Matroid& m,
                      const std::vector<std::pair<std::string, std::string>>& pairs);

Matroid relabel(const Matroid& m, const std::function<std::string(const std::string&)>& f);

// Convenience builders used throughout tests and tools.
Matroid uniform_matroid(int rank, const std::vector<std::string>& labels);

}  // namespace tropamalg
