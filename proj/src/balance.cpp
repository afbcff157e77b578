#include <map>

#include "tropamalg/flag_fan.hpp"
#include "tropamalg/linalg.hpp"

namespace tropamalg {

// Balancing at a hyperface: the weighted sum of the normal representatives
// must lie in the face's span. Only faces obtained by removing an interior
// level are checked: faces missing the e_E level are shared by exactly the
// +e_E / -e_E pair of cones and cancel, and the -e_E mirror of each checked
// face carries the same data by the linearity of every function on the
// lineality space.
BalanceReport check_balancing(const WeightedChainFan& x) {
  BalanceReport report;
  const int n = x.groundset().size();
  std::map<std::vector<SubsetBits>, IntVec> faces;
  for (const auto& [levels, w] : x.chains()) {
    for (std::size_t j = 1; j + 1 < levels.size(); ++j) {
      std::vector<SubsetBits> face = levels;
      face.erase(face.begin() + j);
      auto& sum = faces[face];
      if (sum.empty()) sum.assign(n, 0);
      for (int e : elements_of(levels[j])) sum[e] += w;
    }
  }
  for (const auto& [face, sum] : faces) {
    IntMat basis;
    for (SubsetBits lvl : face) {
      if (lvl.empty()) continue;
      IntVec row(n, 0);
      for (int e : elements_of(lvl)) row[e] = 1;
      basis.push_back(std::move(row));
    }
    if (!in_span(basis, sum)) {
      report.balanced = false;
      report.violations.push_back({face, "weighted normal sum outside the face span"});
    }
  }
  return report;
}

BalanceReport check_balancing(const FlagFan& x) { return check_balancing(expand_chains(x)); }

}  // namespace tropamalg
