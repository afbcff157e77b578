#include <map>
#include <set>

#include "tropamalg/errors.hpp"
#include "tropamalg/flag_fan.hpp"
#include "tropamalg/linalg.hpp"

namespace tropamalg {

namespace {

nlohmann::json segment_witness(const FlagFan& x, int lo, int hi) {
  return {{"lower", x.groundset().labels_of(x.poset().vertex(lo))},
          {"upper", x.groundset().labels_of(x.poset().vertex(hi))}};
}

}  // namespace

FlagFan weil_divisor(const FlagFan& x, const CutFunction& phi) {
  if (&phi.fan() != &x) {
    throw DomainError("NotACut", "cut function is bound to a different fan");
  }
  if (x.is_zero()) return x;
  const auto& p = x.poset();

  // Globally zero function: linear, zero correction.
  bool any = false;
  for (int v = 0; v < p.size() && !any; ++v) any = phi.in_cut(v);
  if (!any) return x;

  std::vector<FlagFan::Edge> edges;
  // Step 1: keep only covers along which the function is constant.
  for (auto [a, b] : x.edges()) {
    if (phi.in_cut(a) == phi.in_cut(b)) {
      edges.emplace_back(p.vertex(a), p.vertex(b), x.edge_weight(a, b));
    }
  }

  // Step 2: bridge every rank-2 segment across which the value jumps. The
  // new weight is deg(phi|segment . X|segment) in closed form: c minus the
  // weight of the middles already in the cut.
  std::set<std::pair<int, int>> seen;
  for (int u = 0; u < p.size(); ++u) {
    if (phi.in_cut(u)) continue;
    for (int v : p.up_covers()[u]) {
      for (int w : p.up_covers()[v]) {
        if (!phi.in_cut(w) || !seen.insert({u, w}).second) continue;
        std::vector<int> middles;
        for (int mid : p.up_covers()[u]) {
          const auto& ups = p.up_covers()[mid];
          if (std::find(ups.begin(), ups.end(), w) != ups.end()) middles.push_back(mid);
        }
        SubsetBits diff = p.vertex(w) - p.vertex(u);
        // The weighted middle sum must be a multiple of e_{W \ U}.
        std::optional<Weight> c;
        for (int e : elements_of(diff)) {
          Weight coord = 0;
          for (int mid : middles) {
            if (p.vertex(mid).test(e)) coord += x.edge_weight(u, mid) * x.edge_weight(mid, w);
          }
          if (!c) {
            c = coord;
          } else if (*c != coord) {
            throw DomainError("LocallyUnbalanced",
                              "segment sum is not a multiple of the segment difference",
                              segment_witness(x, u, w));
          }
        }
        Weight in_cut_sum = 0;
        for (int mid : middles) {
          if (phi.in_cut(mid)) in_cut_sum += x.edge_weight(u, mid) * x.edge_weight(mid, w);
        }
        Weight weight = *c - in_cut_sum;
        if (weight != 0) edges.emplace_back(p.vertex(u), p.vertex(w), weight);
      }
    }
  }

  // Step 3 (pruning) happens inside make().
  return FlagFan::make(x.groundset(), p.vertices(), edges);
}

Weight degree(const FlagFan& x) {
  if (x.is_zero()) return 0;
  FlagFan cur = x;
  int k = cur.dimension();
  if (k == 0) return 1;  // single-vertex fan on the empty groundset
  for (int i = 0; i + 1 < k; ++i) {
    cur = weil_divisor(cur, CutFunction::alpha(cur));
    if (cur.is_zero()) return 0;
  }
  return cur.edge_weight(cur.bottom(), cur.top());
}

WeightedChainFan weil_divisor_chains(const WeightedChainFan& x,
                                     const std::vector<SubsetBits>& cut_members) {
  std::set<SubsetBits> cut(cut_members.begin(), cut_members.end());
  if (cut.count(SubsetBits{})) {
    throw DomainError("NotACut", "the empty set cannot be in a cut");
  }
  auto value = [&](SubsetBits s) { return cut.count(s) ? Weight{-1} : Weight{0}; };
  for (const auto& [levels, w] : x.chains()) {
    for (std::size_t i = 0; i + 1 < levels.size(); ++i) {
      if (value(levels[i]) == -1 && value(levels[i + 1]) == 0) {
        throw DomainError("NotACut", "cut is not upward-closed along a chain",
                          {{"member", x.groundset().labels_of(levels[i])},
                           {"above", x.groundset().labels_of(levels[i + 1])}});
      }
    }
  }

  const int n = x.groundset().size();
  struct FaceData {
    Weight term1 = 0;      // sum of w(sigma) * phi(v_{sigma/tau})
    IntVec sum;            // sum of w(sigma) * v_{sigma/tau}
  };
  std::map<std::vector<SubsetBits>, FaceData> faces;
  for (const auto& [levels, w] : x.chains()) {
    for (std::size_t j = 1; j + 1 < levels.size(); ++j) {
      std::vector<SubsetBits> face = levels;
      face.erase(face.begin() + j);
      auto& data = faces[face];
      if (data.sum.empty()) data.sum.assign(n, 0);
      data.term1 += w * value(levels[j]);
      for (int e : elements_of(levels[j])) data.sum[e] += w;
    }
  }

  WeightedChainFan::ChainMap out;
  for (const auto& [face, data] : faces) {
    IntMat basis;
    std::vector<Weight> basis_values;
    for (SubsetBits lvl : face) {
      if (lvl.empty()) continue;
      IntVec row(n, 0);
      for (int e : elements_of(lvl)) row[e] = 1;
      basis.push_back(std::move(row));
      basis_values.push_back(value(lvl));
    }
    auto sol = solve_in_basis(basis, data.sum);
    if (!sol) {
      nlohmann::json jface = nlohmann::json::array();
      for (SubsetBits lvl : face) jface.push_back(x.groundset().labels_of(lvl));
      throw DomainError("LocallyUnbalanced", "face sum lies outside the face span",
                        {{"face", jface}});
    }
    // phi evaluated at the face sum via the linear extension on the face.
    Weight num = 0, den = 1;
    for (std::size_t i = 0; i < sol->size(); ++i) {
      num = num * (*sol)[i].den + (*sol)[i].num * basis_values[i] * den;
      den = den * (*sol)[i].den;
    }
    if (num % den != 0) {
      throw DomainError("LocallyUnbalanced", "face sum has non-integral coordinates",
                        {{"num", weight_to_string(num)}, {"den", weight_to_string(den)}});
    }
    Weight weight = data.term1 - num / den;
    if (weight != 0) out[face] = weight;
  }
  return WeightedChainFan::make(x.groundset(), std::move(out));
}

}  // namespace tropamalg
