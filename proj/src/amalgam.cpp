#include "tropamalg/amalgam.hpp"

#include <algorithm>
#include <cstdlib>
#include <thread>

#include "tropamalg/errors.hpp"

namespace tropamalg {

namespace {

constexpr char kLeft = 'L';
constexpr char kRight = 'R';

// Per-coordinate decoding of a tagged product groundset: for each bit of the
// fan groundset, which side it came from and its index in N's groundset (or
// -1 when the stripped label is outside T).
struct TagDecoder {
  std::vector<int> n_index_left, n_index_right;

  TagDecoder(const GroundSet& fan_gs, const GroundSet& n_gs)
      : n_index_left(fan_gs.size(), -1), n_index_right(fan_gs.size(), -1) {
    for (int i = 0; i < fan_gs.size(); ++i) {
      const std::string& l = fan_gs.label(i);
      std::string bare = strip_tag(l);
      if (!n_gs.has(bare)) continue;
      if (l.size() >= 2 && l[l.size() - 2] == '@') {
        (l.back() == kLeft ? n_index_left : n_index_right)[i] = n_gs.index(bare);
      }
    }
  }

  // T-part of each side of a product vertex, as subsets of N's groundset.
  std::pair<SubsetBits, SubsetBits> split(SubsetBits v) const {
    SubsetBits y1, y2;
    for (int e : elements_of(v)) {
      if (n_index_left[e] >= 0) y1 = y1.with(n_index_left[e]);
      if (n_index_right[e] >= 0) y2 = y2.with(n_index_right[e]);
    }
    return {y1, y2};
  }
};

std::vector<int> subset_rank_table(const Matroid& m) {
  std::vector<int> table(std::size_t{1} << m.size());
  for (std::size_t x = 0; x < table.size(); ++x) table[x] = m.rank_of(SubsetBits{x});
  return table;
}

}  // namespace

AmalgamProblem AmalgamProblem::make(Matroid m1, Matroid m2) {
  std::vector<std::string> t = common_labels(m1.groundset(), m2.groundset());
  Matroid n = restriction(m1, m1.groundset().subset(t));
  Matroid n2 = restriction(m2, m2.groundset().subset(t));
  if (n != n2) {
    throw DomainError("RestrictionMismatch", "the two restrictions to T differ",
                      {{"T", t}});
  }
  return AmalgamProblem{std::move(m1), std::move(m2), std::move(n)};
}

DiagonalSystem diagonal_functions(const Matroid& n) {
  Matroid left = relabel(n, [](const std::string& l) { return tag_label(l, kLeft); });
  Matroid right = relabel(n, [](const std::string& l) { return tag_label(l, kRight); });
  DiagonalSystem sys;
  sys.fan = std::make_shared<FlagFan>(product(bergman_fan(left), bergman_fan(right)));
  TagDecoder dec(sys.fan->groundset(), n.groundset());
  std::vector<int> rk = subset_rank_table(n);
  const int r = n.rank();
  for (int i = 1; i <= r; ++i) {
    sys.cuts.push_back(CutFunction::from_predicate(*sys.fan, [&, i](SubsetBits v) {
      auto [y1, y2] = dec.split(v);
      return rk[(y1 | y2).bits] + r - i < rk[y1.bits] + rk[y2.bits];
    }));
  }
  return sys;
}

FlagFan fibre_product(const AmalgamProblem& p) {
  Matroid left = relabel(p.m1, [](const std::string& l) { return tag_label(l, kLeft); });
  Matroid right = relabel(p.m2, [](const std::string& l) { return tag_label(l, kRight); });
  FlagFan fan = product(bergman_fan(left), bergman_fan(right));
  std::vector<int> rk = subset_rank_table(p.n);
  const int r0 = p.n.rank();
  for (int i = 1; i <= r0; ++i) {
    TagDecoder dec(fan.groundset(), p.n.groundset());
    CutFunction cut = CutFunction::from_predicate(fan, [&](SubsetBits v) {
      auto [y1, y2] = dec.split(v);
      return rk[(y1 | y2).bits] + r0 - i < rk[y1.bits] + rk[y2.bits];
    });
    fan = weil_divisor(fan, cut);
  }
  return fan;
}

int amalgam_eta(const AmalgamProblem& p, const std::vector<std::string>& subset_labels) {
  SubsetBits f1, f2, ft;
  for (const auto& l : subset_labels) {
    bool known = false;
    if (p.m1.groundset().has(l)) {
      f1 = f1.with(p.m1.groundset().index(l));
      known = true;
    }
    if (p.m2.groundset().has(l)) {
      f2 = f2.with(p.m2.groundset().index(l));
      known = true;
    }
    if (p.n.groundset().has(l)) ft = ft.with(p.n.groundset().index(l));
    if (!known) throw DomainError("UnknownLabel", "label outside E1 u E2", {{"label", l}});
  }
  return p.m1.rank_of(f1) + p.m2.rank_of(f2) - p.n.rank_of(ft);
}

std::optional<Matroid> oracle_proper_amalgam(const AmalgamProblem& p, int jobs) {
  GroundSet e = union_groundset(p.m1.groundset(), p.m2.groundset());
  const int n = e.size();
  int cap = 20;
  if (const char* env = std::getenv("TROPAMALG_MAX_GROUNDSET")) cap = std::atoi(env);
  if (n > cap) {
    throw DomainError("GroundsetTooLarge", "oracle enumeration capped",
                      {{"size", n}, {"cap", cap}});
  }

  // Coordinate split of E into the three groundsets.
  std::vector<int> in1(n, -1), in2(n, -1), int_(n, -1);
  for (int i = 0; i < n; ++i) {
    const std::string& l = e.label(i);
    if (p.m1.groundset().has(l)) in1[i] = p.m1.groundset().index(l);
    if (p.m2.groundset().has(l)) in2[i] = p.m2.groundset().index(l);
    if (p.n.groundset().has(l)) int_[i] = p.n.groundset().index(l);
  }
  std::vector<int> rk1 = subset_rank_table(p.m1);
  std::vector<int> rk2 = subset_rank_table(p.m2);
  std::vector<int> rkn = subset_rank_table(p.n);

  const std::size_t total = std::size_t{1} << n;
  std::vector<int> zeta(total);
  auto fill = [&](std::size_t lo, std::size_t hi) {
    for (std::size_t x = lo; x < hi; ++x) {
      std::uint64_t x1 = 0, x2 = 0, xt = 0;
      for (int i : elements_of(SubsetBits{x})) {
        if (in1[i] >= 0) x1 |= std::uint64_t{1} << in1[i];
        if (in2[i] >= 0) x2 |= std::uint64_t{1} << in2[i];
        if (int_[i] >= 0) xt |= std::uint64_t{1} << int_[i];
      }
      zeta[x] = rk1[x1] + rk2[x2] - rkn[xt];
    }
  };
  if (jobs > 1 && n >= 16) {
    std::vector<std::thread> threads;
    std::size_t chunk = total / jobs + 1;
    for (int j = 0; j < jobs; ++j) {
      std::size_t lo = j * chunk, hi = std::min(total, lo + chunk);
      if (lo < hi) threads.emplace_back(fill, lo, hi);
    }
    for (auto& t : threads) t.join();
  } else {
    fill(0, total);
  }
  std::vector<int> eta = zeta;

  // Superset-min transform: zeta(X) = min {eta(Y) : Y >= X}.
  for (int b = 0; b < n; ++b) {
    const std::uint64_t bit = std::uint64_t{1} << b;
    for (std::size_t x = 0; x < total; ++x) {
      if (!(x & bit)) zeta[x] = std::min(zeta[x], zeta[x | bit]);
    }
  }

  // zeta must be a matroid rank function: normalized, unit-increasing,
  // submodular (checked locally, which suffices together with unit increase).
  if (zeta[0] != 0) return std::nullopt;
  for (std::size_t x = 0; x < total; ++x) {
    for (int a = 0; a < n; ++a) {
      const std::uint64_t abit = std::uint64_t{1} << a;
      if (x & abit) continue;
      int da = zeta[x | abit] - zeta[x];
      if (da < 0 || da > 1) return std::nullopt;
      for (int b = a + 1; b < n; ++b) {
        const std::uint64_t bbit = std::uint64_t{1} << b;
        if (x & bbit) continue;
        if (zeta[x | abit | bbit] + zeta[x] > zeta[x | abit] + zeta[x | bbit]) {
          return std::nullopt;
        }
      }
    }
  }

  std::vector<SubsetBits> flats;
  for (std::size_t x = 0; x < total; ++x) {
    bool closed = true;
    for (int a = 0; a < n && closed; ++a) {
      const std::uint64_t abit = std::uint64_t{1} << a;
      if (!(x & abit) && zeta[x | abit] == zeta[x]) closed = false;
    }
    if (closed) flats.push_back(SubsetBits{x});
  }
  Matroid m = Matroid::from_flats(e, flats);

  // Amalgam condition: the candidate restricts to the two factors.
  SubsetBits e1_mask = e.subset(p.m1.groundset().labels());
  SubsetBits e2_mask = e.subset(p.m2.groundset().labels());
  if (restriction(m, e1_mask) != p.m1 || restriction(m, e2_mask) != p.m2) return std::nullopt;

  // Proper condition: rank equals eta on every flat.
  for (SubsetBits f : m.flats()) {
    if (zeta[f.bits] != eta[f.bits]) return std::nullopt;
  }
  return m;
}

AmalgamVerdict decide_amalgam(const AmalgamProblem& p) {
  FlagFan x = fibre_product(p);
  AmalgamVerdict verdict;
  verdict.certificate_gs = x.groundset();
  if (find_negative_chain(x)) {
    WeightedChainFan chains = expand_chains(x);
    for (const auto& [levels, w] : chains.chains()) {
      if (w < 0) verdict.negative_chains.emplace_back(levels, w);
    }
    return verdict;
  }
  Matroid doubled = matroid_from_degree1_fan(x);
  std::vector<std::pair<std::string, std::string>> pairs;
  for (const auto& t : p.n.groundset().labels()) {
    pairs.emplace_back(tag_label(t, kLeft), tag_label(t, kRight));
  }
  Matroid fused = fuse_parallel(doubled, pairs);
  verdict.matroid = relabel(fused, strip_tag);
  return verdict;
}

}  // namespace tropamalg
