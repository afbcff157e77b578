#include <doctest.h>

#include <algorithm>
#include <set>

#include "support/corpus.hpp"
#include "tropamalg/matroid.hpp"

using namespace tropamalg;

namespace {

Matroid three_point_line() {
  GroundSet gs({"1", "2", "3"});
  return Matroid::from_flats(gs, {SubsetBits{0}, gs.subset({"1"}), gs.subset({"2"}),
                                  gs.subset({"3"}), gs.full()});
}

// Independent closure: scan the raw flat list for the smallest superset.
SubsetBits closure_by_scan(const std::vector<SubsetBits>& flats, SubsetBits x) {
  SubsetBits best;
  bool found = false;
  for (SubsetBits f : flats) {
    if (x.subset_of(f) && (!found || f.count() < best.count())) {
      best = f;
      found = true;
    }
  }
  return best;
}

}  // namespace

TEST_CASE("matroid_from_flats validates the flat axioms") {
  GroundSet gs({"1", "2", "3"});

  Matroid u23 = three_point_line();
  CHECK(u23.rank() == 2);
  CHECK(u23.num_flats() == 5);

  Matroid u13 = Matroid::from_flats(gs, {SubsetBits{0}, gs.full()});
  CHECK(u13.rank() == 1);

  CHECK_THROWS_WITH_AS(Matroid::from_flats(gs, {SubsetBits{0}, gs.subset({"1"})}),
                       doctest::Contains("MissingTop"), DomainError);
  CHECK_THROWS_WITH_AS(Matroid::from_flats(gs, {gs.subset({"1"}), gs.full()}),
                       doctest::Contains("NotLoopless"), DomainError);

  // {∅,{1},{1,2,3}} on {1,2,3}: 2 and 3 are not partitioned above ∅.
  try {
    Matroid::from_flats(gs, {SubsetBits{0}, gs.subset({"1"}), gs.full()});
    FAIL("expected CoveringAxiomViolated");
  } catch (const DomainError& e) {
    CHECK(e.kind() == "CoveringAxiomViolated");
    CHECK(e.witness().contains("element"));
  }

  // Intersection-closure violation: two lines meeting in a non-flat pair.
  GroundSet gs4({"1", "2", "3", "4"});
  CHECK_THROWS_WITH_AS(
      Matroid::from_flats(gs4, {SubsetBits{0}, gs4.subset({"1", "2", "3"}),
                                gs4.subset({"2", "3", "4"}), gs4.full()}),
      doctest::Contains("NotIntersectionClosed"), DomainError);
}

TEST_CASE("closure, rank, join and meet") {
  Matroid u23 = three_point_line();
  const GroundSet& gs = u23.groundset();

  CHECK(u23.closure(gs.subset({"1", "2"})) == gs.full());
  CHECK(u23.closure(SubsetBits{0}) == SubsetBits{0});
  for (SubsetBits f : u23.flats()) CHECK(u23.closure(f) == f);

  CHECK(u23.rank_of(gs.full()) == 2);
  CHECK(u23.rank_of(SubsetBits{0}) == 0);

  // rank via independent scan over the flat list
  Matroid u13 = Matroid::from_flats(gs, {SubsetBits{0}, gs.full()});
  SubsetBits x = gs.subset({"1", "2"});
  CHECK(u13.closure(x) == closure_by_scan(u13.flats(), x));
  CHECK(u13.rank_of(x) == 1);

  CHECK(u23.join(gs.subset({"1"}), gs.subset({"2"})) == gs.full());
  CHECK(u23.meet(gs.subset({"1"}), gs.subset({"2"})) == SubsetBits{0});
  for (SubsetBits f : u23.flats()) CHECK(u23.join(f, SubsetBits{0}) == f);
  CHECK_THROWS_AS((void)u23.join(gs.subset({"1", "2"}), SubsetBits{0}), DomainError);
}

TEST_CASE("restriction") {
  Matroid u23 = three_point_line();
  const GroundSet& gs = u23.groundset();

  Matroid r = restriction(u23, gs.subset({"1", "2"}));
  CHECK(r.rank() == 2);
  CHECK(r.num_flats() == 4);  // free on two elements

  CHECK(restriction(u23, gs.full()) == u23);

  Matroid u13 = Matroid::from_flats(gs, {SubsetBits{0}, gs.full()});
  Matroid r2 = restriction(u13, gs.subset({"1", "2"}));
  // Image of the flat map: {∅, {1,2}}.
  CHECK(r2.rank() == 1);
  CHECK(r2.num_flats() == 2);
}

TEST_CASE("contraction") {
  Matroid u23 = three_point_line();
  const GroundSet& gs = u23.groundset();

  CHECK(contraction(u23, SubsetBits{0}) == u23);

  // Flats above {1}: {1} and E; contraction is U_{1,2} on {2,3}.
  Matroid c = contraction(u23, gs.subset({"1"}));
  CHECK(c.groundset().labels() == std::vector<std::string>{"2", "3"});
  CHECK(c.rank() == 1);
  CHECK(c.num_flats() == 2);

  Matroid all = contraction(u23, gs.full());
  CHECK(all.size() == 0);
  CHECK(all.rank() == 0);

  CHECK_THROWS_WITH_AS(contraction(u23, gs.subset({"1", "2"})), doctest::Contains("NotAFlat"),
                       DomainError);
}

TEST_CASE("direct sum") {
  Matroid a = uniform_matroid(1, {"1"});
  Matroid b = uniform_matroid(1, {"2"});
  Matroid s = direct_sum(a, b);
  CHECK(s.rank() == 2);
  CHECK(s.num_flats() == 4);

  Matroid u23 = three_point_line();
  CHECK_THROWS_WITH_AS(direct_sum(u23, u23), doctest::Contains("LabelClash"), DomainError);

  Matroid u23b = relabel(u23, [](const std::string& l) { return l + "b"; });
  Matroid sum = direct_sum(u23, u23b);
  CHECK(sum.rank() == 4);
  CHECK(sum.num_flats() == 25);  // 5 x 5 product lattice
}

TEST_CASE("truncation") {
  Matroid u34 = corpus::uniform(3, 4);
  Matroid t = truncation(u34);
  CHECK(t == corpus::uniform(2, 4));

  CHECK(truncation(three_point_line()) ==
        Matroid::from_flats(GroundSet({"1", "2", "3"}), {SubsetBits{0}, GroundSet({"1", "2", "3"}).full()}));

  Matroid u13 = Matroid::from_flats(GroundSet({"1", "2", "3"}),
                                    {SubsetBits{0}, GroundSet({"1", "2", "3"}).full()});
  CHECK_THROWS_WITH_AS(truncation(u13), doctest::Contains("RankZero"), DomainError);
}

TEST_CASE("modular predicates") {
  Matroid u23 = three_point_line();
  const GroundSet& gs = u23.groundset();

  CHECK(is_modular_pair(u23, gs.subset({"1"}), gs.subset({"2"})));  // 1+1 = 2+0
  CHECK(is_modular_flat(u23, gs.full()));
  CHECK(is_modular_cut(u23, {gs.full()}));

  // In U_{3,4} two disjoint rank-2 lines are not a modular pair, so they can
  // share a cut; two meeting lines form a modular pair and force their meet in.
  Matroid u34 = corpus::uniform(3, 4);
  const GroundSet& g4 = u34.groundset();
  CHECK_FALSE(is_modular_pair(u34, g4.subset({"1", "2"}), g4.subset({"3", "4"})));
  CHECK(is_modular_cut(u34, {g4.full(), g4.subset({"1", "2"}), g4.subset({"3", "4"})}));
  CHECK(is_modular_pair(u34, g4.subset({"1", "2"}), g4.subset({"1", "3"})));
  CHECK_FALSE(is_modular_cut(u34, {g4.full(), g4.subset({"1", "2"}), g4.subset({"1", "3"})}));
}

TEST_CASE("simplify and fuse_parallel") {
  GroundSet gs({"1", "2", "3"});
  Matroid u13 = Matroid::from_flats(gs, {SubsetBits{0}, gs.full()});
  auto [simple, label_map] = simplify(u13);
  CHECK(simple.size() == 1);
  CHECK(simple.rank() == 1);
  CHECK(label_map.at("3") == "1");

  Matroid u23 = three_point_line();
  auto [same, id_map] = simplify(u23);
  CHECK(same == u23);

  Matroid fused = fuse_parallel(u13, {{"1", "2"}});
  CHECK(fused.size() == 2);
  CHECK(fused.rank() == 1);

  CHECK_THROWS_WITH_AS(fuse_parallel(u23, {{"1", "2"}}), doctest::Contains("NotParallel"),
                       DomainError);
}

TEST_CASE("validation is idempotent on every corpus construction") {
  for (const Matroid& m : corpus::correspondence_corpus()) {
    CHECK_NOTHROW(Matroid::from_flats(m.groundset(), m.flats()));
    if (m.rank() >= 2) CHECK_NOTHROW(Matroid::from_flats(truncation(m).groundset(), truncation(m).flats()));
  }
}

TEST_CASE("rank unit increase and the rank-difference lemma") {
  // Exhaustive over small corpus matroids with |E| <= 6: for A >= B and any C,
  // rk(A u C) - rk(B u C) <= rk(A) - rk(B).
  std::vector<Matroid> ms{three_point_line(), corpus::uniform(3, 5),
                          corpus::uniform(2, 4), corpus::graphic(4, 6).back()};
  for (const Matroid& m : ms) {
    const int n = m.size();
    REQUIRE(n <= 6);
    const std::uint64_t full = (std::uint64_t{1} << n) - 1;
    for (std::uint64_t f = 0; f <= full; ++f) {
      int rf = m.rank_of(SubsetBits{f});
      for (int x = 0; x < n; ++x) {
        int rfx = m.rank_of(SubsetBits{f}.with(x));
        CHECK((rfx - rf == 0 || rfx - rf == 1));
      }
    }
    for (std::uint64_t b = 0; b <= full; ++b) {
      for (std::uint64_t a = b; a <= full; ++a) {
        if ((a & b) != b) continue;
        for (std::uint64_t c = 0; c <= full; ++c) {
          int lhs = m.rank_of(SubsetBits{a | c}) - m.rank_of(SubsetBits{b | c});
          int rhs = m.rank_of(SubsetBits{a}) - m.rank_of(SubsetBits{b});
          CHECK(lhs <= rhs);
        }
      }
    }
  }
}

TEST_CASE("restriction composes and commutes with contraction") {
  Matroid m = corpus::uniform(3, 5);
  const GroundSet& gs = m.groundset();
  SubsetBits t = gs.subset({"1", "2", "3", "4"});
  SubsetBits t2 = gs.subset({"1", "2"});

  Matroid r1 = restriction(restriction(m, t), restriction(m, t).groundset().subset({"1", "2"}));
  CHECK(r1 == restriction(m, t2));

  // contraction then restriction vs restriction then contraction, where both
  // are defined: contract {5}, restrict to {1,2} of the result.
  Matroid c = contraction(m, gs.subset({"5"}));
  Matroid path1 = restriction(c, c.groundset().subset({"1", "2"}));
  Matroid r = restriction(m, gs.subset({"1", "2", "5"}));
  Matroid path2 = contraction(r, r.groundset().subset({"5"}));
  CHECK(path1 == path2);
}

TEST_CASE("uniform corpus sanity") {
  CHECK(corpus::uniform(2, 3) == three_point_line());
  CHECK(corpus::fano().num_flats() == 1 + 7 + 7 + 1);
  CHECK(corpus::non_fano().num_flats() == 1 + 7 + 6 + 3 + 1);
  CHECK(corpus::fano().is_simple());
}
