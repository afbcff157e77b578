#include "tropamalg/flag_fan.hpp"

#include <algorithm>
#include <set>

#include "tropamalg/errors.hpp"

namespace tropamalg {

FlagFan FlagFan::zero(GroundSet gs) {
  FlagFan f;
  f.gs_ = std::move(gs);
  return f;
}

FlagFan FlagFan::make(GroundSet gs, const std::vector<SubsetBits>& vertices,
                      const std::vector<Edge>& edges) {
  // Prune to the union of empty-to-E cover paths before building the poset.
  std::vector<SubsetBits> verts = vertices;
  std::sort(verts.begin(), verts.end(), SubsetCardLess{});
  verts.erase(std::unique(verts.begin(), verts.end()), verts.end());

  std::map<SubsetBits, int> idx;
  for (std::size_t i = 0; i < verts.size(); ++i) idx[verts[i]] = static_cast<int>(i);

  const int n = static_cast<int>(verts.size());
  std::vector<std::vector<int>> up(n), down(n);
  std::map<std::pair<int, int>, Weight> wt;
  for (const auto& [lo, hi, w] : edges) {
    if (w == 0) continue;
    auto a = idx.find(lo), b = idx.find(hi);
    if (a == idx.end() || b == idx.end()) {
      throw DomainError("BadFile", "edge endpoint is not a listed vertex");
    }
    auto key = std::make_pair(a->second, b->second);
    if (wt.count(key)) throw DomainError("BadFile", "duplicate edge");
    wt[key] = w;
    up[a->second].push_back(b->second);
    down[b->second].push_back(a->second);
  }

  SubsetBits top = gs.full();
  if (!idx.count(SubsetBits{}) || !idx.count(top)) return zero(std::move(gs));

  auto reach = [&](int start, const std::vector<std::vector<int>>& adj) {
    std::vector<bool> seen(n, false);
    std::vector<int> stack{start};
    seen[start] = true;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int u : adj[v]) {
        if (!seen[u]) {
          seen[u] = true;
          stack.push_back(u);
        }
      }
    }
    return seen;
  };
  std::vector<bool> from_bottom = reach(idx.at(SubsetBits{}), up);
  std::vector<bool> to_top = reach(idx.at(top), down);
  std::vector<bool> keep(n);
  for (int i = 0; i < n; ++i) keep[i] = from_bottom[i] && to_top[i];
  if (!keep[idx.at(top)] || !keep[idx.at(SubsetBits{})]) return zero(std::move(gs));

  std::vector<SubsetBits> kept_verts;
  for (int i = 0; i < n; ++i) {
    if (keep[i]) kept_verts.push_back(verts[i]);
  }
  std::vector<std::pair<SubsetBits, SubsetBits>> kept_covers;
  std::vector<Weight> kept_weights;
  for (const auto& [key, w] : wt) {
    if (keep[key.first] && keep[key.second]) {
      kept_covers.emplace_back(verts[key.first], verts[key.second]);
      kept_weights.push_back(w);
    }
  }

  FlagFan f;
  f.gs_ = std::move(gs);
  f.poset_ = RankedPoset::from_covers(kept_verts, kept_covers);
  f.up_weight_.assign(f.poset_.size(), {});
  for (int v = 0; v < f.poset_.size(); ++v) {
    f.up_weight_[v].resize(f.poset_.up_covers()[v].size());
  }
  for (std::size_t e = 0; e < kept_covers.size(); ++e) {
    int a = f.poset_.index_of(kept_covers[e].first);
    int b = f.poset_.index_of(kept_covers[e].second);
    const auto& ups = f.poset_.up_covers()[a];
    auto it = std::find(ups.begin(), ups.end(), b);
    f.up_weight_[a][it - ups.begin()] = kept_weights[e];
  }
  return f;
}

int FlagFan::dimension() const {
  if (is_zero()) return -1;
  return poset_.rank_of(top());
}

const Weight& FlagFan::edge_weight(int from, int to) const {
  const auto& ups = poset_.up_covers()[from];
  auto it = std::find(ups.begin(), ups.end(), to);
  if (it == ups.end()) {
    throw DomainError("NotAFlag", "no cover edge between the given vertices");
  }
  return up_weight_[from][it - ups.begin()];
}

std::vector<std::pair<int, int>> FlagFan::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int v = 0; v < poset_.size(); ++v) {
    for (int u : poset_.up_covers()[v]) out.emplace_back(v, u);
  }
  return out;
}

WeightedChainFan WeightedChainFan::make(GroundSet gs, ChainMap chains) {
  for (auto it = chains.begin(); it != chains.end();) {
    if (it->second == 0) {
      it = chains.erase(it);
    } else {
      ++it;
    }
  }
  std::size_t len = 0;
  for (const auto& [levels, w] : chains) {
    if (len == 0) len = levels.size();
    if (levels.size() != len || levels.empty() || !levels.front().empty() ||
        levels.back() != gs.full()) {
      throw DomainError("BadFile", "chain must run from the empty set to the full groundset");
    }
    for (std::size_t i = 0; i + 1 < levels.size(); ++i) {
      if (!(levels[i].subset_of(levels[i + 1]) && levels[i] != levels[i + 1])) {
        throw DomainError("BadFile", "chain levels must be strictly nested");
      }
    }
  }
  WeightedChainFan f;
  f.gs_ = std::move(gs);
  f.chains_ = std::move(chains);
  return f;
}

int WeightedChainFan::levels() const {
  return chains_.empty() ? 0 : static_cast<int>(chains_.begin()->first.size());
}

CutFunction::CutFunction(const FlagFan& fan, std::vector<bool> flags)
    : fan_(&fan), flags_(std::move(flags)) {
  const auto& poset = fan.poset();
  if (!fan.is_zero() && flags_[fan.bottom()]) {
    throw DomainError("NotACut", "the empty set cannot be in a cut");
  }
  for (int v = 0; v < poset.size(); ++v) {
    if (!flags_[v]) continue;
    for (int u : poset.up_covers()[v]) {
      if (!flags_[u]) {
        throw DomainError("NotACut", "cut is not upward-closed",
                          {{"member", fan.groundset().labels_of(poset.vertex(v))},
                           {"above", fan.groundset().labels_of(poset.vertex(u))}});
      }
    }
  }
}

CutFunction::CutFunction(const FlagFan& fan, const std::vector<SubsetBits>& members)
    : CutFunction(fan, [&] {
        std::vector<bool> flags(fan.poset().size(), false);
        for (SubsetBits m : members) flags[fan.poset().index_of(m)] = true;
        return flags;
      }()) {}

CutFunction CutFunction::from_predicate(const FlagFan& fan,
                                        const std::function<bool(SubsetBits)>& in_cut) {
  std::vector<bool> flags(fan.poset().size(), false);
  for (int v = 0; v < fan.poset().size(); ++v) flags[v] = in_cut(fan.poset().vertex(v));
  return CutFunction(fan, std::move(flags));
}

CutFunction CutFunction::alpha(const FlagFan& fan) {
  return CutFunction(fan, std::vector<SubsetBits>{fan.groundset().full()});
}

FlagFan bergman_fan(const Matroid& m) {
  std::vector<FlagFan::Edge> edges;
  for (int i = 0; i < m.num_flats(); ++i) {
    for (int j : m.covers_above(i)) edges.emplace_back(m.flat(i), m.flat(j), 1);
  }
  return FlagFan::make(m.groundset(), m.flats(), edges);
}

FlagFan product(const FlagFan& x, const FlagFan& y) {
  for (const auto& l : x.groundset().labels()) {
    if (y.groundset().has(l)) {
      throw DomainError("LabelClash", "product needs disjoint groundsets", {{"label", l}});
    }
  }
  GroundSet gs = union_groundset(x.groundset(), y.groundset());
  if (x.is_zero() || y.is_zero()) return FlagFan::zero(std::move(gs));

  const auto& px = x.poset();
  const auto& py = y.poset();
  std::vector<SubsetBits> verts;
  std::vector<FlagFan::Edge> edges;
  auto emb = [&](SubsetBits g, SubsetBits h) {
    return transfer(g, x.groundset(), gs) | transfer(h, y.groundset(), gs);
  };
  for (int g = 0; g < px.size(); ++g) {
    for (int h = 0; h < py.size(); ++h) {
      verts.push_back(emb(px.vertex(g), py.vertex(h)));
      for (std::size_t e = 0; e < px.up_covers()[g].size(); ++e) {
        int g2 = px.up_covers()[g][e];
        edges.emplace_back(emb(px.vertex(g), py.vertex(h)), emb(px.vertex(g2), py.vertex(h)),
                           x.edge_weight(g, g2));
      }
      for (std::size_t e = 0; e < py.up_covers()[h].size(); ++e) {
        int h2 = py.up_covers()[h][e];
        edges.emplace_back(emb(px.vertex(g), py.vertex(h)), emb(px.vertex(g), py.vertex(h2)),
                           y.edge_weight(h, h2));
      }
    }
  }
  return FlagFan::make(std::move(gs), verts, edges);
}

WeightedChainFan expand_chains(const FlagFan& x) {
  WeightedChainFan::ChainMap chains;
  if (x.is_zero()) return WeightedChainFan::make(x.groundset(), std::move(chains));
  const auto& p = x.poset();
  std::vector<SubsetBits> levels;
  Weight w = 1;
  std::function<void(int)> dfs = [&](int v) {
    levels.push_back(p.vertex(v));
    if (p.up_covers()[v].empty()) {
      chains[levels] += w;
    } else {
      for (int u : p.up_covers()[v]) {
        Weight saved = w;
        w *= x.edge_weight(v, u);
        dfs(u);
        w = saved;
      }
    }
    levels.pop_back();
  };
  dfs(x.bottom());
  return WeightedChainFan::make(x.groundset(), std::move(chains));
}

WeightedChainFan product_chains(const WeightedChainFan& x, const WeightedChainFan& y) {
  for (const auto& l : x.groundset().labels()) {
    if (y.groundset().has(l)) {
      throw DomainError("LabelClash", "product needs disjoint groundsets", {{"label", l}});
    }
  }
  GroundSet gs = union_groundset(x.groundset(), y.groundset());
  WeightedChainFan::ChainMap out;
  for (const auto& [ca, wa] : x.chains()) {
    std::vector<SubsetBits> ea;
    for (SubsetBits s : ca) ea.push_back(transfer(s, x.groundset(), gs));
    for (const auto& [cb, wb] : y.chains()) {
      std::vector<SubsetBits> eb;
      for (SubsetBits s : cb) eb.push_back(transfer(s, y.groundset(), gs));
      // Every monotone staircase through the grid of level pairs.
      std::vector<SubsetBits> levels{SubsetBits{}};
      Weight w = wa * wb;
      std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t i, std::size_t j) {
        if (i + 1 == ea.size() && j + 1 == eb.size()) {
          out[levels] += w;
          return;
        }
        if (i + 1 < ea.size()) {
          levels.push_back(ea[i + 1] | eb[j]);
          rec(i + 1, j);
          levels.pop_back();
        }
        if (j + 1 < eb.size()) {
          levels.push_back(ea[i] | eb[j + 1]);
          rec(i, j + 1);
          levels.pop_back();
        }
      };
      rec(0, 0);
    }
  }
  return WeightedChainFan::make(std::move(gs), std::move(out));
}

bool fans_equal(const WeightedChainFan& a, const WeightedChainFan& b) {
  if (a.groundset() != b.groundset()) {
    throw DomainError("GroundsetMismatch", "cycle comparison needs equal groundsets");
  }
  return a.chains() == b.chains();
}

bool fans_equal(const FlagFan& a, const FlagFan& b) {
  return fans_equal(expand_chains(a), expand_chains(b));
}

bool fans_equal(const FlagFan& a, const WeightedChainFan& b) {
  return fans_equal(expand_chains(a), b);
}

std::optional<std::vector<SubsetBits>> find_negative_chain(const FlagFan& x) {
  if (x.is_zero()) return std::nullopt;
  const auto& p = x.poset();
  const int n = p.size();
  // Possible signs of partial products from the bottom, then one backwards
  // walk to materialize a witness.
  std::vector<char> pos(n, 0), neg(n, 0);
  pos[x.bottom()] = 1;
  for (int v = 0; v < n; ++v) {
    for (std::size_t e = 0; e < p.up_covers()[v].size(); ++e) {
      int u = p.up_covers()[v][e];
      bool edge_neg = x.edge_weight(v, u) < 0;
      if (pos[v]) (edge_neg ? neg[u] : pos[u]) = 1;
      if (neg[v]) (edge_neg ? pos[u] : neg[u]) = 1;
    }
  }
  if (!neg[x.top()]) return std::nullopt;
  // Walk down from E keeping the target sign reachable.
  std::vector<SubsetBits> chain;
  int v = x.top();
  bool want_neg = true;
  while (true) {
    chain.push_back(p.vertex(v));
    if (v == x.bottom()) break;
    for (int d : p.down_covers()[v]) {
      bool edge_neg = x.edge_weight(d, v) < 0;
      bool need_neg = (want_neg != edge_neg);
      if ((need_neg && neg[d]) || (!need_neg && pos[d])) {
        v = d;
        want_neg = need_neg;
        break;
      }
    }
  }
  std::reverse(chain.begin(), chain.end());
  return chain;
}

Matroid matroid_from_degree1_fan(const FlagFan& x) {
  if (x.is_zero()) {
    throw DomainError("AxiomsFailDespitePositivity", "the zero fan is not a Bergman fan");
  }
  if (auto witness = find_negative_chain(x)) {
    nlohmann::json levels = nlohmann::json::array();
    for (SubsetBits s : *witness) levels.push_back(x.groundset().labels_of(s));
    throw DomainError("NegativeWeight", "fan has a cone of negative weight", {{"chain", levels}});
  }
  const auto& p = x.poset();
  for (int v = 0; v < p.size(); ++v) {
    for (int u : p.up_covers()[v]) {
      if (x.edge_weight(v, u) != 1) {
        throw DomainError("AxiomsFailDespitePositivity",
                          "positive fan with non-unit edge weight",
                          {{"from", x.groundset().labels_of(p.vertex(v))},
                           {"to", x.groundset().labels_of(p.vertex(u))},
                           {"weight", weight_to_string(x.edge_weight(v, u))}});
      }
    }
  }
  Matroid m = [&] {
    try {
      return Matroid::from_flats(x.groundset(), p.vertices());
    } catch (const DomainError& e) {
      throw DomainError("AxiomsFailDespitePositivity",
                        std::string("vertex poset fails the flat axioms: ") + e.what(),
                        e.witness());
    }
  }();
  // The poset must carry every cover of the flat lattice, else the cycle is
  // not the Bergman fan it claims to be.
  for (int i = 0; i < m.num_flats(); ++i) {
    int v = p.index_of(m.flat(i));
    std::set<SubsetBits> poset_covers;
    for (int u : p.up_covers()[v]) poset_covers.insert(p.vertex(u));
    std::set<SubsetBits> flat_covers;
    for (int j : m.covers_above(i)) flat_covers.insert(m.flat(j));
    if (poset_covers != flat_covers) {
      throw DomainError("AxiomsFailDespitePositivity",
                        "vertex poset disagrees with the flat lattice covers",
                        {{"flat", x.groundset().labels_of(m.flat(i))}});
    }
  }
  return m;
}

FlagFan star(const Matroid& m, const std::vector<SubsetBits>& flag) {
  if (flag.size() < 2 || !flag.front().empty() || flag.back() != m.groundset().full()) {
    throw DomainError("NotAFlag", "flag must run from the empty set to the groundset");
  }
  for (std::size_t i = 0; i < flag.size(); ++i) {
    m.flat_index(flag[i]);
    if (i > 0 && !(flag[i - 1].subset_of(flag[i]) && flag[i - 1] != flag[i])) {
      throw DomainError("NotAFlag", "flag members must strictly increase");
    }
  }
  std::optional<FlagFan> acc;
  for (std::size_t i = 1; i < flag.size(); ++i) {
    Matroid minor = contraction(restriction(m, flag[i]), flag[i - 1]);
    FlagFan piece = bergman_fan(minor);
    acc = acc ? product(*acc, piece) : piece;
  }
  return *acc;
}

FlagFan relabel_fan(const FlagFan& x, const std::function<std::string(const std::string&)>& f) {
  std::vector<std::string> labels;
  for (const auto& l : x.groundset().labels()) labels.push_back(f(l));
  GroundSet gs(labels);
  auto conv = [&](SubsetBits s) {
    SubsetBits out;
    for (int e : elements_of(s)) out = out.with(gs.index(f(x.groundset().label(e))));
    return out;
  };
  if (x.is_zero()) return FlagFan::zero(gs);
  std::vector<SubsetBits> verts;
  for (SubsetBits v : x.poset().vertices()) verts.push_back(conv(v));
  std::vector<FlagFan::Edge> edges;
  for (auto [a, b] : x.edges()) {
    edges.emplace_back(conv(x.poset().vertex(a)), conv(x.poset().vertex(b)), x.edge_weight(a, b));
  }
  return FlagFan::make(std::move(gs), verts, edges);
}

}  // namespace tropamalg
