#include "tropamalg/correspondence.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "tropamalg/errors.hpp"

namespace tropamalg {

LatticeMap LatticeMap::make(Matroid source, Matroid target,
                            const std::vector<std::pair<SubsetBits, SubsetBits>>& assignments) {
  LatticeMap f(std::move(source), std::move(target));
  f.image_.assign(f.source_.num_flats(), -1);
  for (const auto& [flat, image] : assignments) {
    int s = f.source_.flat_index(flat);
    int t = f.target_.flat_index(image);
    if (f.image_[s] != -1) {
      throw DomainError("BadFile", "source flat assigned twice",
                        {{"flat", f.source_.groundset().labels_of(flat)}});
    }
    f.image_[s] = t;
  }
  for (int i = 0; i < f.source_.num_flats(); ++i) {
    if (f.image_[i] == -1) {
      throw DomainError("BadFile", "lattice map must cover every source flat",
                        {{"flat", f.source_.groundset().labels_of(f.source_.flat(i))}});
    }
  }
  for (int i = 0; i < f.source_.num_flats(); ++i) {
    for (int j : f.source_.covers_above(i)) {
      if (!f.target_.flat(f.image_[i]).subset_of(f.target_.flat(f.image_[j]))) {
        throw DomainError("BadFile", "lattice map is not order-preserving",
                          {{"flat", f.source_.groundset().labels_of(f.source_.flat(i))},
                           {"above", f.source_.groundset().labels_of(f.source_.flat(j))}});
      }
    }
  }
  return f;
}

SubsetBits LatticeMap::apply(SubsetBits source_flat) const {
  return target_.flat(image_[source_.flat_index(source_flat)]);
}

bool is_weak_lattice_map(const LatticeMap& f) {
  for (int i = 0; i < f.source().num_flats(); ++i) {
    SubsetBits flat = f.source().flat(i);
    SubsetBits image = f.target().flat(f.apply_index(i));
    if (!flat.empty() && image.empty()) return false;
    if (f.target().rank_of_flat(image) > f.source().rank_of_flat(flat)) return false;
  }
  return true;
}

bool is_covering_lattice_map(const LatticeMap& f) {
  if (!is_weak_lattice_map(f)) return false;
  for (int i = 0; i < f.source().num_flats(); ++i) {
    SubsetBits lo = f.target().flat(f.apply_index(i));
    for (int j : f.source().covers_above(i)) {
      SubsetBits hi = f.target().flat(f.apply_index(j));
      if (hi == lo) continue;
      auto covers = f.target().covers_of(lo);
      if (std::find(covers.begin(), covers.end(), hi) == covers.end()) return false;
    }
  }
  return true;
}

bool is_weak_groundset_map(const Matroid& m1, const Matroid& m2,
                           const std::map<std::string, std::string>& g) {
  std::vector<int> image(m1.size());
  for (int i = 0; i < m1.size(); ++i) {
    auto it = g.find(m1.groundset().label(i));
    if (it == g.end()) {
      throw DomainError("UnknownLabel", "element map must cover every element",
                        {{"label", m1.groundset().label(i)}});
    }
    image[i] = m2.groundset().index(it->second);
  }
  for (std::uint64_t x = 0; x < (std::uint64_t{1} << m1.size()); ++x) {
    SubsetBits img;
    for (int e : elements_of(SubsetBits{x})) img = img.with(image[e]);
    if (m2.rank_of(img) > m1.rank_of(SubsetBits{x})) return false;
  }
  return true;
}

std::map<std::string, std::string> pt(const LatticeMap& f) {
  if (!f.source().is_simple() || !f.target().is_simple()) {
    throw DomainError("NotSimple", "Pt needs simple source and target");
  }
  std::map<std::string, std::string> out;
  for (int i = 0; i < f.source().size(); ++i) {
    SubsetBits x = SubsetBits{}.with(i);
    SubsetBits image = f.apply(x);  // singletons are flats of a simple matroid
    if (image.count() != 1) {
      throw DomainError("NotWeak", "image of an atom is not an atom",
                        {{"element", f.source().groundset().label(i)}});
    }
    out[f.source().groundset().label(i)] =
        f.target().groundset().label(elements_of(image).front());
  }
  return out;
}

int gamma(const LatticeMap& f, SubsetBits f1, SubsetBits f2) {
  SubsetBits image = f.apply(f1);
  return f.target().rank_of(image | f2) - f.source().rank_of_flat(f1) -
         f.target().rank_of_flat(f2);
}

int gamma_i(const LatticeMap& f, int i, SubsetBits f1, SubsetBits f2) {
  if (i < 1 || i > f.source().rank()) {
    throw DomainError("BadFile", "gamma slice index out of range", {{"i", i}});
  }
  SubsetBits image = f.apply(f1);
  bool zero = f.target().rank_of(image | f2) + f.source().rank() - i >=
              f.source().rank_of_flat(f1) + f.target().rank_of_flat(f2);
  return zero ? 0 : -1;
}

namespace {

void require_disjoint(const Matroid& a, const Matroid& b) {
  for (const auto& l : a.groundset().labels()) {
    if (b.groundset().has(l)) {
      throw DomainError("LabelClash", "correspondence needs disjoint groundsets",
                        {{"label", l}});
    }
  }
}

// Coordinate split of a fan vertex into the source part (a flat of m1) and
// the part living on m2's labels.
struct PartDecoder {
  std::vector<int> left, right;

  PartDecoder(const GroundSet& fan_gs, const GroundSet& gs1, const GroundSet& gs2)
      : left(fan_gs.size(), -1), right(fan_gs.size(), -1) {
    for (int i = 0; i < fan_gs.size(); ++i) {
      const std::string& l = fan_gs.label(i);
      if (gs1.has(l)) left[i] = gs1.index(l);
      if (gs2.has(l)) right[i] = gs2.index(l);
    }
  }

  std::pair<SubsetBits, SubsetBits> split(SubsetBits v) const {
    SubsetBits a, b;
    for (int e : elements_of(v)) {
      if (left[e] >= 0) a = a.with(left[e]);
      if (right[e] >= 0) b = b.with(right[e]);
    }
    return {a, b};
  }
};

}  // namespace

Correspondence graph_correspondence(const LatticeMap& f) {
  if (!is_weak_lattice_map(f)) {
    throw DomainError("NotWeak", "graph correspondence needs a weak lattice map");
  }
  require_disjoint(f.source(), f.target());
  FlagFan fan = product(bergman_fan(f.source()), bergman_fan(f.target()));
  const int r1 = f.source().rank();
  for (int i = 1; i <= r1; ++i) {
    PartDecoder dec(fan.groundset(), f.source().groundset(), f.target().groundset());
    CutFunction cut = CutFunction::from_predicate(fan, [&](SubsetBits v) {
      auto [x, y] = dec.split(v);
      return gamma_i(f, i, x, y) == -1;
    });
    fan = weil_divisor(fan, cut);
  }
  return Correspondence{f.source(), f.target(), std::move(fan)};
}

Correspondence graph_correspondence_direct(const LatticeMap& f) {
  if (!is_covering_lattice_map(f)) {
    throw DomainError("NotCovering", "direct construction needs a covering lattice map");
  }
  require_disjoint(f.source(), f.target());
  const Matroid& m1 = f.source();
  const Matroid& m2 = f.target();
  GroundSet gs = union_groundset(m1.groundset(), m2.groundset());
  auto emb = [&](SubsetBits x, SubsetBits y) {
    return transfer(x, m1.groundset(), gs) | transfer(y, m2.groundset(), gs);
  };

  // Vertices (X, Y) with f(X) <= Y.
  std::vector<std::pair<int, int>> verts;
  for (int x = 0; x < m1.num_flats(); ++x) {
    for (int y = 0; y < m2.num_flats(); ++y) {
      if (m2.flat(f.apply_index(x)).subset_of(m2.flat(y))) verts.emplace_back(x, y);
    }
  }
  std::vector<SubsetBits> vert_masks;
  for (auto [x, y] : verts) vert_masks.push_back(emb(m1.flat(x), m2.flat(y)));

  // eta of the subposet {F : X1 <= F <= X2, f(F) <= Y1} at its bottom X1.
  auto edge_weight = [&](int x1, int x2, int y1) -> Weight {
    std::vector<SubsetBits> members;
    for (int x = 0; x < m1.num_flats(); ++x) {
      if (m1.flat(x1).subset_of(m1.flat(x)) && m1.flat(x).subset_of(m1.flat(x2)) &&
          m2.flat(f.apply_index(x)).subset_of(m2.flat(y1))) {
        members.push_back(m1.flat(x));
      }
    }
    RankedPoset sub = RankedPoset::from_inclusion(members);
    return sub.mobius_eta(sub.index_of(m1.flat(x1)));
  };

  std::vector<FlagFan::Edge> edges;
  for (auto [x1, y1] : verts) {
    for (SubsetBits y2f : m2.covers_of(m2.flat(y1))) {
      int y2 = m2.flat_index(y2f);
      for (auto [x2, y2v] : verts) {
        if (y2v != y2 || !m1.flat(x1).subset_of(m1.flat(x2))) continue;
        Weight w = edge_weight(x1, x2, y1);
        if (w != 0) {
          edges.emplace_back(emb(m1.flat(x1), m2.flat(y1)), emb(m1.flat(x2), m2.flat(y2)), w);
        }
      }
    }
  }
  return Correspondence{m1, m2, FlagFan::make(std::move(gs), vert_masks, edges)};
}

WeightedChainFan compose(const LatticeMap& f, const FlagFan& gamma_g) {
  if (!is_weak_lattice_map(f)) {
    throw DomainError("NotWeak", "composition needs a weak left factor");
  }
  for (const auto& l : f.target().groundset().labels()) {
    if (!gamma_g.groundset().has(l)) {
      throw DomainError("MiddleMismatch", "right fan does not contain the middle groundset",
                        {{"label", l}});
    }
  }
  FlagFan fan = product(bergman_fan(f.source()), gamma_g);
  const int r1 = f.source().rank();
  for (int i = 1; i <= r1; ++i) {
    PartDecoder dec(fan.groundset(), f.source().groundset(), f.target().groundset());
    CutFunction cut = CutFunction::from_predicate(fan, [&](SubsetBits v) {
      auto [x, y] = dec.split(v);
      SubsetBits image = f.apply(x);
      bool zero = f.target().rank_of(image | y) + r1 - i >=
                  f.source().rank_of_flat(x) + f.target().rank_of(y);
      return !zero;
    });
    fan = weil_divisor(fan, cut);
  }
  std::vector<std::string> keep;
  for (const auto& l : f.source().groundset().labels()) keep.push_back(l);
  for (const auto& l : gamma_g.groundset().labels()) {
    if (!f.target().groundset().has(l)) keep.push_back(l);
  }
  return pushforward(fan, keep);
}

LatticeMap compose_maps(const LatticeMap& f, const LatticeMap& g) {
  if (f.target() != g.source()) {
    throw DomainError("MiddleMismatch", "maps are not composable");
  }
  std::vector<std::pair<SubsetBits, SubsetBits>> assignments;
  for (int i = 0; i < f.source().num_flats(); ++i) {
    assignments.emplace_back(f.source().flat(i),
                             g.target().flat(g.apply_index(f.apply_index(i))));
  }
  return LatticeMap::make(f.source(), g.target(), assignments);
}

bool gamma_min_compose_check(const LatticeMap& f, const LatticeMap& g, SubsetBits fx,
                             SubsetBits fz) {
  LatticeMap gf = compose_maps(f, g);
  int lhs = gamma(gf, fx, fz);
  bool found = false;
  int best = 0;
  for (int y = 0; y < g.source().num_flats(); ++y) {
    SubsetBits fy = g.source().flat(y);
    int value = gamma(g, fy, fz) + gamma(f, fx, fy) + g.source().rank_of_flat(fy);
    if (!found || value < best) {
      best = value;
      found = true;
    }
  }
  return found && lhs == best;
}

std::vector<LatticeMap> enumerate_lattice_maps(const Matroid& m1, const Matroid& m2,
                                               bool require_weak, bool require_covering) {
  std::vector<LatticeMap> out;
  const int n = m1.num_flats();
  std::vector<int> img(n, -1);
  // Flats are in (cardinality, bits) order, so all lower covers of a flat
  // are assigned before the flat itself.
  std::vector<std::vector<int>> below(n);
  for (int i = 0; i < n; ++i) {
    for (int j : m1.covers_above(i)) below[j].push_back(i);
  }
  std::function<void(int)> rec = [&](int k) {
    if (k == n) {
      std::vector<std::pair<SubsetBits, SubsetBits>> assignments;
      for (int i = 0; i < n; ++i) assignments.emplace_back(m1.flat(i), m2.flat(img[i]));
      out.push_back(LatticeMap::make(m1, m2, assignments));
      return;
    }
    for (int t = 0; t < m2.num_flats(); ++t) {
      SubsetBits tf = m2.flat(t);
      if (require_weak) {
        if (m2.rank_of_flat(tf) > m1.rank_of_flat(m1.flat(k))) continue;
        if (!m1.flat(k).empty() && tf.empty()) continue;
        if (m1.flat(k).empty() && !tf.empty()) continue;
      }
      bool ok = true;
      for (int d : below[k]) {
        SubsetBits df = m2.flat(img[d]);
        if (!df.subset_of(tf)) {
          ok = false;
          break;
        }
        if (require_covering && df != tf) {
          auto covers = m2.covers_of(df);
          if (std::find(covers.begin(), covers.end(), tf) == covers.end()) {
            ok = false;
            break;
          }
        }
      }
      if (!ok) continue;
      img[k] = t;
      rec(k + 1);
      img[k] = -1;
    }
  };
  rec(0);
  if (require_covering) {
    std::erase_if(out, [](const LatticeMap& f) { return !is_covering_lattice_map(f); });
  } else if (require_weak) {
    std::erase_if(out, [](const LatticeMap& f) { return !is_weak_lattice_map(f); });
  }
  return out;
}

std::vector<std::vector<SubsetBits>> enumerate_modular_cuts(const Matroid& m,
                                                            bool exclude_rank1) {
  // Flats in decreasing (cardinality, bits) order: every superset of a flat
  // is decided before the flat itself.
  std::vector<int> order(m.num_flats());
  for (int i = 0; i < m.num_flats(); ++i) order[i] = m.num_flats() - 1 - i;

  std::vector<std::vector<SubsetBits>> out;
  std::vector<bool> in(m.num_flats(), false);
  std::vector<int> chosen;
  std::multiset<SubsetBits> forced;

  std::function<void(std::size_t)> rec = [&](std::size_t k) {
    if (k == order.size()) {
      std::vector<SubsetBits> cut;
      for (int i : chosen) cut.push_back(m.flat(i));
      std::sort(cut.begin(), cut.end(), SubsetCardLess{});
      out.push_back(std::move(cut));
      return;
    }
    int i = order[k];
    SubsetBits flat = m.flat(i);
    bool forced_in = forced.count(flat) > 0;

    bool can_in = true;
    if (exclude_rank1 && m.rank_of_flat_index(i) <= 1) can_in = false;
    if (flat == m.groundset().full()) {
      // E is always a member.
    } else {
      for (int j : m.covers_above(i)) {
        if (!in[j]) {
          can_in = false;
          break;
        }
      }
    }

    auto enter = [&] {
      in[i] = true;
      std::vector<SubsetBits> added;
      for (int j : chosen) {
        if (is_modular_pair(m, flat, m.flat(j))) {
          added.push_back(flat & m.flat(j));
          forced.insert(added.back());
        }
      }
      chosen.push_back(i);
      rec(k + 1);
      chosen.pop_back();
      for (SubsetBits s : added) forced.erase(forced.find(s));
      in[i] = false;
    };

    if (flat == m.groundset().full()) {
      if (can_in) enter();  // E is mandatory; rank-1 exclusion can void everything
      return;
    }
    if (forced_in) {
      if (can_in) enter();
      return;
    }
    rec(k + 1);  // out-branch
    if (can_in) enter();
  };
  rec(0);
  return out;
}

}  // namespace tropamalg
