#include "tropamalg/subset.hpp"

#include <algorithm>

namespace tropamalg {

GroundSet::GroundSet(std::vector<std::string> labels) : labels_(std::move(labels)) {
  std::sort(labels_.begin(), labels_.end());
  for (std::size_t i = 0; i + 1 < labels_.size(); ++i) {
    if (labels_[i] == labels_[i + 1]) {
      throw DomainError("LabelClash", "duplicate label in groundset", {{"label", labels_[i]}});
    }
  }
  if (labels_.size() > 64) {
    throw DomainError("GroundsetTooLarge", "groundsets are capped at 64 elements",
                      {{"size", labels_.size()}});
  }
  for (std::size_t i = 0; i < labels_.size(); ++i) index_[labels_[i]] = static_cast<int>(i);
}

int GroundSet::index(const std::string& label) const {
  auto it = index_.find(label);
  if (it == index_.end()) {
    throw DomainError("UnknownLabel", "label not in groundset", {{"label", label}});
  }
  return it->second;
}

SubsetBits GroundSet::subset(const std::vector<std::string>& labels) const {
  SubsetBits s;
  for (const auto& l : labels) s = s.with(index(l));
  return s;
}

std::vector<std::string> GroundSet::labels_of(SubsetBits s) const {
  if (!s.subset_of(full())) {
    throw DomainError("UnknownLabel", "subset has bits outside the groundset",
                      {{"bits", s.bits}});
  }
  std::vector<std::string> out;
  for (int i : elements_of(s)) out.push_back(labels_[i]);
  return out;
}

SubsetBits transfer(SubsetBits s, const GroundSet& from, const GroundSet& to) {
  SubsetBits out;
  for (int i : elements_of(s)) out = out.with(to.index(from.label(i)));
  return out;
}

std::vector<std::string> common_labels(const GroundSet& a, const GroundSet& b) {
  std::vector<std::string> out;
  for (const auto& l : a.labels()) {
    if (b.has(l)) out.push_back(l);
  }
  return out;
}

GroundSet union_groundset(const GroundSet& a, const GroundSet& b) {
  std::vector<std::string> labels = a.labels();
  for (const auto& l : b.labels()) {
    if (!a.has(l)) labels.push_back(l);
  }
  return GroundSet(labels);
}

std::string tag_label(const std::string& label, char side) {
  return label + "@" + side;
}

std::string strip_tag(const std::string& label) {
  auto pos = label.rfind('@');
  if (pos == std::string::npos) return label;
  return label.substr(0, pos);
}

GroundSet tagged(const GroundSet& gs, char side) {
  std::vector<std::string> labels;
  labels.reserve(gs.size());
  for (const auto& l : gs.labels()) labels.push_back(tag_label(l, side));
  return GroundSet(labels);
}

}  // namespace tropamalg
