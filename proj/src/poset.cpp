#include "tropamalg/poset.hpp"

#include <algorithm>

#include "tropamalg/errors.hpp"

namespace tropamalg {

RankedPoset RankedPoset::from_covers(
    std::vector<SubsetBits> vertices,
    const std::vector<std::pair<SubsetBits, SubsetBits>>& covers) {
  RankedPoset p;
  std::sort(vertices.begin(), vertices.end(), SubsetCardLess{});
  vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
  p.verts_ = std::move(vertices);
  for (std::size_t i = 0; i < p.verts_.size(); ++i) p.index_[p.verts_[i].bits] = static_cast<int>(i);
  p.up_.assign(p.verts_.size(), {});
  for (const auto& [lo, hi] : covers) {
    int a = p.index_of(lo), b = p.index_of(hi);
    if (!(lo.subset_of(hi)) || lo == hi) {
      throw DomainError("PosetNotGraded", "cover does not go strictly upward in inclusion",
                        {{"from_bits", lo.bits}, {"to_bits", hi.bits}});
    }
    if (std::find(p.up_[a].begin(), p.up_[a].end(), b) == p.up_[a].end()) p.up_[a].push_back(b);
  }
  p.finalize();
  return p;
}

RankedPoset RankedPoset::from_inclusion(std::vector<SubsetBits> vertices) {
  RankedPoset p;
  std::sort(vertices.begin(), vertices.end(), SubsetCardLess{});
  vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
  p.verts_ = std::move(vertices);
  for (std::size_t i = 0; i < p.verts_.size(); ++i) p.index_[p.verts_[i].bits] = static_cast<int>(i);
  const int n = p.size();
  p.up_.assign(n, {});
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i == j || !p.verts_[i].subset_of(p.verts_[j])) continue;
      bool minimal = true;
      for (int c : p.up_[i]) {
        if (p.verts_[c].subset_of(p.verts_[j])) {
          minimal = false;
          break;
        }
      }
      if (minimal) p.up_[i].push_back(j);
    }
  }
  p.finalize();
  return p;
}

void RankedPoset::finalize() {
  const int n = size();
  down_.assign(n, {});
  for (int i = 0; i < n; ++i) {
    std::sort(up_[i].begin(), up_[i].end());
    for (int j : up_[i]) down_[j].push_back(i);
  }
  // Vertices are in (cardinality, bits) order, a linear extension of the
  // cover relation; one pass settles all ranks.
  rank_.assign(n, -1);
  for (int i = 0; i < n; ++i) {
    if (down_[i].empty()) rank_[i] = 0;
  }
  for (int i = 0; i < n; ++i) {
    for (int j : up_[i]) {
      if (rank_[j] == -1) {
        rank_[j] = rank_[i] + 1;
      } else if (rank_[j] != rank_[i] + 1) {
        throw DomainError("PosetNotGraded", "cover relation skips a rank",
                          {{"from_bits", verts_[i].bits}, {"to_bits", verts_[j].bits}});
      }
    }
  }
}

int RankedPoset::index_of(SubsetBits v) const {
  auto it = index_.find(v.bits);
  if (it == index_.end()) {
    throw DomainError("NotAFlat", "subset is not a vertex of the poset", {{"bits", v.bits}});
  }
  return it->second;
}

int RankedPoset::max_rank() const {
  int r = 0;
  for (int x : rank_) r = std::max(r, x);
  return r;
}

const std::vector<std::vector<bool>>& RankedPoset::closure() const {
  std::lock_guard<std::mutex> lock(cache_->mu);
  if (cache_->reach.empty() && size() > 0) {
    const int n = size();
    cache_->reach.assign(n, std::vector<bool>(n, false));
    // Vertices are topologically ordered, so accumulate from the top down.
    for (int i = n - 1; i >= 0; --i) {
      cache_->reach[i][i] = true;
      for (int j : up_[i]) {
        for (int k = 0; k < n; ++k) {
          if (cache_->reach[j][k]) cache_->reach[i][k] = true;
        }
      }
    }
  }
  return cache_->reach;
}

bool RankedPoset::leq(int a, int b) const { return closure()[a][b]; }

Weight RankedPoset::mobius(int a, int b) const {
  if (!leq(a, b)) {
    throw DomainError("NotComparable", "mobius needs comparable arguments",
                      {{"a_bits", verts_[a].bits}, {"b_bits", verts_[b].bits}});
  }
  const auto& reach = closure();
  std::lock_guard<std::mutex> lock(cache_->mu);
  // mu(a, c) for all c in [a, b], in rank order; vertices are rank-sorted.
  std::vector<int> between;
  for (int c = a; c <= b; ++c) {
    if (reach[a][c] && reach[c][b]) between.push_back(c);
  }
  for (int c : between) {
    auto key = std::make_pair(a, c);
    if (cache_->mobius.count(key)) continue;
    if (c == a) {
      cache_->mobius[key] = 1;
      continue;
    }
    Weight acc = 0;
    for (int d : between) {
      if (d != c && reach[d][c]) acc += cache_->mobius.at(std::make_pair(a, d));
    }
    cache_->mobius[key] = -acc;
  }
  return cache_->mobius.at(std::make_pair(a, b));
}

Weight RankedPoset::mobius_eta(int x) const {
  Weight acc = 0;
  for (int b = 0; b < size(); ++b) {
    if (leq(x, b)) acc += mobius(x, b);
  }
  return acc;
}

RankedPoset RankedPoset::interval(int a, int b) const {
  if (!leq(a, b)) {
    throw DomainError("NotComparable", "interval needs comparable endpoints",
                      {{"a_bits", verts_[a].bits}, {"b_bits", verts_[b].bits}});
  }
  std::vector<int> keep;
  for (int c = 0; c < size(); ++c) {
    if (leq(a, c) && leq(c, b)) keep.push_back(c);
  }
  std::vector<bool> in(size(), false);
  for (int c : keep) in[c] = true;
  std::vector<SubsetBits> verts;
  std::vector<std::pair<SubsetBits, SubsetBits>> covers;
  for (int c : keep) {
    verts.push_back(verts_[c]);
    for (int d : up_[c]) {
      if (in[d]) covers.emplace_back(verts_[c], verts_[d]);
    }
  }
  return from_covers(std::move(verts), covers);
}

}  // namespace tropamalg
