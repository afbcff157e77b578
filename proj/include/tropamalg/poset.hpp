#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <utility>
#include <vector>

#include "tropamalg/subset.hpp"
#include "tropamalg/weight.hpp"

namespace tropamalg {

// Finite ranked poset of subsets. Covers are stored explicitly; the full
// order is their reflexive-transitive closure, derived lazily and cached.
// Invariants: acyclic, every cover raises the rank by exactly 1, and
// x <= y implies x is a subset of y (the converse may fail: a Flag fan may
// keep nested sets incomparable).
class RankedPoset {
 public:
  RankedPoset() = default;

  // Covers given explicitly, ranks derived from chain lengths (minimal
  // vertices get rank 0). PosetNotGraded if some cover skips a rank.
  static RankedPoset from_covers(std::vector<SubsetBits> vertices,
                                 const std::vector<std::pair<SubsetBits, SubsetBits>>& covers);

  // Induced subposet of the inclusion order on the given vertices; covers are
  // the transitive reduction.
  static RankedPoset from_inclusion(std::vector<SubsetBits> vertices);

  int size() const { return static_cast<int>(verts_.size()); }
  bool empty() const { return verts_.empty(); }
  SubsetBits vertex(int i) const { return verts_[i]; }
  const std::vector<SubsetBits>& vertices() const { return verts_; }
  bool has_vertex(SubsetBits v) const { return index_.count(v.bits) != 0; }
  int index_of(SubsetBits v) const;  // UnknownLabel-style lookup failure -> NotAFlat

  const std::vector<std::vector<int>>& up_covers() const { return up_; }
  const std::vector<std::vector<int>>& down_covers() const { return down_; }
  int rank_of(int v) const { return rank_[v]; }
  int max_rank() const;

  // Reflexive order from the cover closure.
  bool leq(int a, int b) const;

  // Möbius function of the order; NotComparable unless a <= b.
  Weight mobius(int a, int b) const;

  // eta(x) = sum of mobius(x, b) over all b >= x.
  Weight mobius_eta(int x) const;

  // Induced subposet on {c : a <= c <= b}; NotComparable unless a <= b.
  RankedPoset interval(int a, int b) const;

 private:
  void finalize();  // builds index, down-covers, ranks
  const std::vector<std::vector<bool>>& closure() const;

  std::vector<SubsetBits> verts_;
  std::unordered_map<std::uint64_t, int> index_;
  std::vector<std::vector<int>> up_, down_;
  std::vector<int> rank_;

  struct Cache {
    std::mutex mu;
    std::vector<std::vector<bool>> reach;  // reach[a][b] <=> a <= b
    std::map<std::pair<int, int>, Weight> mobius;
  };
  std::shared_ptr<Cache> cache_ = std::make_shared<Cache>();
};

}  // namespace tropamalg
