#include "tropamalg/matroid.hpp"

#include <algorithm>
#include <set>

namespace tropamalg {

namespace {

std::vector<SubsetBits> sorted_unique(std::vector<SubsetBits> flats) {
  std::sort(flats.begin(), flats.end(), SubsetCardLess{});
  flats.erase(std::unique(flats.begin(), flats.end()), flats.end());
  return flats;
}

}  // namespace

Matroid Matroid::from_flats(GroundSet gs, std::vector<SubsetBits> flats) {
  Matroid m;
  m.gs_ = std::move(gs);
  const SubsetBits top = m.gs_.full();

  for (SubsetBits f : flats) {
    if (!f.subset_of(top)) {
      throw DomainError("BadFile", "flat contains elements outside the groundset",
                        {{"flat_bits", f.bits}});
    }
  }
  m.flats_ = sorted_unique(std::move(flats));
  if (m.flats_.empty()) throw DomainError("MissingTop", "no flats given");

  for (std::size_t i = 0; i < m.flats_.size(); ++i) m.index_[m.flats_[i].bits] = static_cast<int>(i);
  auto labels = [&](SubsetBits s) { return m.gs_.labels_of(s); };

  if (!m.index_.count(top.bits)) {
    throw DomainError("MissingTop", "the full groundset is not a flat");
  }
  if (!m.index_.count(0)) {
    throw DomainError("NotLoopless", "the empty set is not a flat");
  }

  const int n = m.num_flats();
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      SubsetBits meet = m.flats_[i] & m.flats_[j];
      if (!m.index_.count(meet.bits)) {
        throw DomainError("NotIntersectionClosed", "intersection of two flats is not a flat",
                          {{"flat1", labels(m.flats_[i])}, {"flat2", labels(m.flats_[j])}});
      }
    }
  }

  // Covers: minimal flats strictly above each flat. flats_ is sorted by
  // cardinality, so scanning in order keeps the minimality test simple.
  m.covers_.assign(n, {});
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i == j || !m.flats_[i].subset_of(m.flats_[j])) continue;
      bool minimal = true;
      for (int c : m.covers_[i]) {
        if (m.flats_[c].subset_of(m.flats_[j])) {
          minimal = false;
          break;
        }
      }
      if (minimal) m.covers_[i].push_back(j);
    }
  }

  // Covering-partition axiom: the cover differences tile E \ F.
  for (int i = 0; i < n; ++i) {
    SubsetBits seen;
    for (int c : m.covers_[i]) {
      SubsetBits diff = m.flats_[c] - m.flats_[i];
      if (!(diff & seen).empty()) {
        int witness = elements_of(diff & seen).front();
        throw DomainError("CoveringAxiomViolated",
                          "element lies in two cover differences above a flat",
                          {{"flat", labels(m.flats_[i])}, {"element", m.gs_.label(witness)}});
      }
      seen = seen | diff;
    }
    if (seen != top - m.flats_[i]) {
      int witness = elements_of((top - m.flats_[i]) - seen).front();
      throw DomainError("CoveringAxiomViolated", "element lies in no cover difference above a flat",
                        {{"flat", labels(m.flats_[i])}, {"element", m.gs_.label(witness)}});
    }
  }

  // Ranks from cover-chain lengths. The flat axioms force gradedness, so any
  // inconsistency here indicates a bug above.
  m.rank_by_index_.assign(n, -1);
  m.rank_by_index_[m.index_.at(0)] = 0;
  for (int i = 0; i < n; ++i) {  // (card, bits) order is a linear extension
    if (m.rank_by_index_[i] < 0) {
      throw DomainError("CoveringAxiomViolated", "flat unreachable from the empty flat",
                        {{"flat", labels(m.flats_[i])}});
    }
    for (int c : m.covers_[i]) {
      int r = m.rank_by_index_[i] + 1;
      if (m.rank_by_index_[c] == -1) {
        m.rank_by_index_[c] = r;
      } else if (m.rank_by_index_[c] != r) {
        throw DomainError("CoveringAxiomViolated", "maximal chains of unequal length",
                          {{"flat", labels(m.flats_[c])}});
      }
    }
  }
  m.rank_ = m.rank_by_index_[m.index_.at(top.bits)];
  return m;
}

int Matroid::flat_index(SubsetBits s) const {
  auto it = index_.find(s.bits);
  if (it == index_.end()) {
    nlohmann::json witness;
    if (s.subset_of(gs_.full())) witness["subset"] = gs_.labels_of(s);
    throw DomainError("NotAFlat", "subset is not a flat", witness);
  }
  return it->second;
}

SubsetBits Matroid::closure(SubsetBits x) const {
  SubsetBits acc = gs_.full();
  for (SubsetBits f : flats_) {
    if (x.subset_of(f)) acc = acc & f;
  }
  return acc;
}

SubsetBits Matroid::join(SubsetBits f1, SubsetBits f2) const {
  flat_index(f1);
  flat_index(f2);
  return closure(f1 | f2);
}

SubsetBits Matroid::meet(SubsetBits f1, SubsetBits f2) const {
  flat_index(f1);
  flat_index(f2);
  return f1 & f2;
}

std::vector<SubsetBits> Matroid::covers_of(SubsetBits f) const {
  std::vector<SubsetBits> out;
  for (int c : covers_[flat_index(f)]) out.push_back(flats_[c]);
  return out;
}

bool Matroid::is_simple() const {
  for (int i = 0; i < num_flats(); ++i) {
    if (rank_by_index_[i] == 1 && flats_[i].count() != 1) return false;
  }
  return true;
}

Matroid restriction(const Matroid& m, SubsetBits t) {
  GroundSet sub(m.groundset().labels_of(t));
  std::vector<SubsetBits> flats;
  flats.reserve(m.num_flats());
  for (SubsetBits f : m.flats()) flats.push_back(transfer(f & t, m.groundset(), sub));
  return Matroid::from_flats(std::move(sub), std::move(flats));
}

Matroid contraction(const Matroid& m, SubsetBits f) {
  m.flat_index(f);
  GroundSet sub(m.groundset().labels_of(m.groundset().full() - f));
  std::vector<SubsetBits> flats;
  for (SubsetBits g : m.flats()) {
    if (f.subset_of(g)) flats.push_back(transfer(g - f, m.groundset(), sub));
  }
  return Matroid::from_flats(std::move(sub), std::move(flats));
}

Matroid direct_sum(const Matroid& a, const Matroid& b) {
  for (const auto& l : a.groundset().labels()) {
    if (b.groundset().has(l)) {
      throw DomainError("LabelClash", "direct sum needs disjoint groundsets", {{"label", l}});
    }
  }
  GroundSet gs = union_groundset(a.groundset(), b.groundset());
  std::vector<SubsetBits> flats;
  flats.reserve(a.num_flats() * b.num_flats());
  for (SubsetBits fa : a.flats()) {
    SubsetBits ta = transfer(fa, a.groundset(), gs);
    for (SubsetBits fb : b.flats()) {
      flats.push_back(ta | transfer(fb, b.groundset(), gs));
    }
  }
  return Matroid::from_flats(std::move(gs), std::move(flats));
}

Matroid truncation(const Matroid& m) {
  if (m.rank() < 2) {
    throw DomainError("RankZero", "truncation would drop below rank 1", {{"rank", m.rank()}});
  }
  std::vector<SubsetBits> flats;
  for (int i = 0; i < m.num_flats(); ++i) {
    if (m.rank_of_flat_index(i) != m.rank() - 1) flats.push_back(m.flat(i));
  }
  return Matroid::from_flats(m.groundset(), std::move(flats));
}

bool is_modular_pair(const Matroid& m, SubsetBits f1, SubsetBits f2) {
  int lhs = m.rank_of_flat(f1) + m.rank_of_flat(f2);
  int rhs = m.rank_of_flat(m.join(f1, f2)) + m.rank_of_flat(m.meet(f1, f2));
  return lhs == rhs;
}

bool is_modular_flat(const Matroid& m, SubsetBits f) {
  m.flat_index(f);
  for (SubsetBits g : m.flats()) {
    if (!is_modular_pair(m, f, g)) return false;
  }
  return true;
}

bool is_modular_cut(const Matroid& m, const std::vector<SubsetBits>& cut) {
  std::set<SubsetBits> in(cut.begin(), cut.end());
  for (SubsetBits f : cut) m.flat_index(f);
  if (!in.count(m.groundset().full())) return false;
  for (SubsetBits f : cut) {
    for (SubsetBits g : m.flats()) {
      if (f.subset_of(g) && !in.count(g)) return false;
    }
  }
  for (SubsetBits f1 : cut) {
    for (SubsetBits f2 : cut) {
      if (is_modular_pair(m, f1, f2) && !in.count(f1 & f2)) return false;
    }
  }
  return true;
}

std::pair<Matroid, std::map<std::string, std::string>> simplify(const Matroid& m) {
  std::map<std::string, std::string> label_map;
  SubsetBits reps;
  for (int i = 0; i < m.num_flats(); ++i) {
    if (m.rank_of_flat_index(i) != 1) continue;
    SubsetBits f = m.flat(i);
    int rep = elements_of(f).front();
    reps = reps.with(rep);
    for (int e : elements_of(f)) label_map[m.groundset().label(e)] = m.groundset().label(rep);
  }
  return {restriction(m, reps), label_map};
}

Matroid fuse_parallel(const Matroid& m,
                      const std::vector<std::pair<std::string, std::string>>& pairs) {
  SubsetBits keep = m.groundset().full();
  for (const auto& [a, b] : pairs) {
    int ia = m.groundset().index(a);
    int ib = m.groundset().index(b);
    SubsetBits cl = m.closure(SubsetBits{}.with(ia));
    if (m.rank_of_flat(cl) != 1 || !cl.test(ib)) {
      throw DomainError("NotParallel", "pair does not share a rank-1 flat",
                        {{"pair", {a, b}}});
    }
    keep = keep.without(ib);
  }
  return restriction(m, keep);
}

Matroid relabel(const Matroid& m, const std::function<std::string(const std::string&)>& f) {
  std::vector<std::string> labels;
  for (const auto& l : m.groundset().labels()) labels.push_back(f(l));
  GroundSet gs(labels);
  std::vector<SubsetBits> flats;
  for (SubsetBits fl : m.flats()) {
    SubsetBits out;
    for (int e : elements_of(fl)) out = out.with(gs.index(f(m.groundset().label(e))));
    flats.push_back(out);
  }
  return Matroid::from_flats(std::move(gs), std::move(flats));
}

Matroid uniform_matroid(int rank, const std::vector<std::string>& labels) {
  GroundSet gs(labels);
  const int n = gs.size();
  if (rank < 0 || rank > n || (rank == 0 && n > 0)) {
    throw DomainError("RankZero", "uniform matroid needs 1 <= rank <= n", {{"rank", rank}});
  }
  std::vector<SubsetBits> flats;
  for (std::uint64_t b = 0; b < (std::uint64_t{1} << n); ++b) {
    if (std::popcount(b) < rank) flats.push_back(SubsetBits{b});
  }
  flats.push_back(gs.full());
  return Matroid::from_flats(std::move(gs), std::move(flats));
}

}  // namespace tropamalg
