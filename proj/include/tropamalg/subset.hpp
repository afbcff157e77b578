#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "tropamalg/errors.hpp"

namespace tropamalg {

// Subset of a groundset as a fixed-width bit vector. The width (and the
// meaning of each bit) comes from the GroundSet the value is used with;
// groundsets are capped at 64 elements.
struct SubsetBits {
  std::uint64_t bits = 0;

  constexpr SubsetBits() = default;
  constexpr explicit SubsetBits(std::uint64_t b) : bits(b) {}

  constexpr bool test(int i) const { return (bits >> i) & 1u; }
  constexpr SubsetBits with(int i) const { return SubsetBits{bits | (std::uint64_t{1} << i)}; }
  constexpr SubsetBits without(int i) const { return SubsetBits{bits & ~(std::uint64_t{1} << i)}; }
  constexpr int count() const { return std::popcount(bits); }
  constexpr bool empty() const { return bits == 0; }
  constexpr bool subset_of(SubsetBits other) const { return (bits & ~other.bits) == 0; }

  friend constexpr SubsetBits operator|(SubsetBits a, SubsetBits b) { return SubsetBits{a.bits | b.bits}; }
  friend constexpr SubsetBits operator&(SubsetBits a, SubsetBits b) { return SubsetBits{a.bits & b.bits}; }
  friend constexpr SubsetBits operator-(SubsetBits a, SubsetBits b) { return SubsetBits{a.bits & ~b.bits}; }
  friend constexpr auto operator<=>(SubsetBits a, SubsetBits b) = default;
};

// Order used for canonical vertex/flat listings: by cardinality, then by bits.
struct SubsetCardLess {
  bool operator()(SubsetBits a, SubsetBits b) const {
    if (a.count() != b.count()) return a.count() < b.count();
    return a.bits < b.bits;
  }
};

inline std::vector<int> elements_of(SubsetBits s) {
  std::vector<int> out;
  for (std::uint64_t b = s.bits; b;) {
    int i = std::countr_zero(b);
    out.push_back(i);
    b &= b - 1;
  }
  return out;
}

// Ordered set of distinct element names. Labels are sorted at construction so
// that bit positions (and every serialized form) are canonical.
class GroundSet {
 public:
  GroundSet() = default;

  explicit GroundSet(std::vector<std::string> labels);

  int size() const { return static_cast<int>(labels_.size()); }
  const std::string& label(int i) const { return labels_[i]; }
  const std::vector<std::string>& labels() const { return labels_; }

  bool has(const std::string& label) const { return index_.count(label) != 0; }
  int index(const std::string& label) const;

  SubsetBits full() const {
    return size() == 64 ? SubsetBits{~std::uint64_t{0}}
                        : SubsetBits{(std::uint64_t{1} << size()) - 1};
  }

  SubsetBits subset(const std::vector<std::string>& labels) const;
  std::vector<std::string> labels_of(SubsetBits s) const;

  bool operator==(const GroundSet& other) const { return labels_ == other.labels_; }
  bool operator!=(const GroundSet& other) const { return !(*this == other); }

 private:
  std::vector<std::string> labels_;
  std::unordered_map<std::string, int> index_;
};

// Moves a subset between groundsets by label. Every element of `s` must be
// present in `to`.
SubsetBits transfer(SubsetBits s, const GroundSet& from, const GroundSet& to);

// Labels present in both.
std::vector<std::string> common_labels(const GroundSet& a, const GroundSet& b);

// Union of label sets (overlap allowed).
GroundSet union_groundset(const GroundSet& a, const GroundSet& b);

// Disjoint-union tagging used when the same label must appear on two sides
// of a product ("1" -> "1@L" / "1@R").
std::string tag_label(const std::string& label, char side);
std::string strip_tag(const std::string& label);
GroundSet tagged(const GroundSet& gs, char side);

}  // namespace tropamalg
