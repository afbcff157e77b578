#include <map>

#include "tropamalg/errors.hpp"
#include "tropamalg/flag_fan.hpp"
#include "tropamalg/linalg.hpp"

namespace tropamalg {

WeightedChainFan pushforward(const WeightedChainFan& x, const std::vector<std::string>& keep) {
  GroundSet target(keep);
  for (const auto& l : target.labels()) x.groundset().index(l);
  SubsetBits keep_mask = x.groundset().subset(target.labels());

  WeightedChainFan::ChainMap out;
  std::map<std::vector<SubsetBits>, bool> index_checked;
  for (const auto& [levels, w] : x.chains()) {
    std::vector<SubsetBits> image;
    image.reserve(levels.size());
    bool injective = true;
    for (SubsetBits lvl : levels) {
      SubsetBits img = transfer(lvl & keep_mask, x.groundset(), target);
      if (!image.empty() && image.back() == img) {
        injective = false;  // repeated level: the projection collapses this cone
        break;
      }
      image.push_back(img);
    }
    if (!injective) continue;

    // lambda(sigma', sigma): index of the image of the cone lattice inside
    // the target cone lattice. Both are spanned by the image levels here, so
    // the index must come out 1; anything else means we left the setting
    // where generators map to generators.
    auto [it, fresh] = index_checked.try_emplace(image, false);
    if (fresh) {
      IntMat rows;
      for (SubsetBits lvl : image) {
        if (lvl.empty()) continue;
        IntVec row(target.size(), 0);
        for (int e : elements_of(lvl)) row[e] = 1;
        rows.push_back(std::move(row));
      }
      auto lambda = lattice_index(rows, rows);
      if (!lambda || *lambda != 1) {
        nlohmann::json jchain = nlohmann::json::array();
        for (SubsetBits lvl : image) jchain.push_back(target.labels_of(lvl));
        throw DomainError("UnexpectedIndex", "push-forward lattice index is not 1",
                          {{"chain", jchain}});
      }
    }
    out[image] += w;
  }
  return WeightedChainFan::make(std::move(target), std::move(out));
}

WeightedChainFan pushforward(const FlagFan& x, const std::vector<std::string>& keep) {
  return pushforward(expand_chains(x), keep);
}

}  // namespace tropamalg
