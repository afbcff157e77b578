#include <doctest.h>

#include <algorithm>
#include <cstdlib>
#include <set>

#include "support/corpus.hpp"
#include "tropamalg/amalgam.hpp"
#include "tropamalg/io.hpp"

using namespace tropamalg;

namespace {

// Rank-3 matroid on five points with the fifth point on two lines; the
// classical no-proper-amalgam pattern glues two of these over U_{3,4}.
Matroid cross_matroid(const std::string& apex) {
  GroundSet gs({"1", "2", "3", "4", apex});
  std::vector<SubsetBits> flats{SubsetBits{}, gs.full()};
  for (int i = 0; i < 5; ++i) flats.push_back(SubsetBits{}.with(i));
  auto line = [&](std::vector<std::string> pts) { return gs.subset(pts); };
  std::vector<SubsetBits> lines{line({"1", "2", apex}), line({"3", "4", apex}),
                                line({"1", "3"}), line({"1", "4"}), line({"2", "3"}),
                                line({"2", "4"})};
  for (SubsetBits l : lines) flats.push_back(l);
  return Matroid::from_flats(gs, flats);
}

// Same crossing point seen from the other side: in any amalgam both apexes
// are forced into cl{1,2} and cl{3,4}, hence parallel, while eta asks for 2.
Matroid cross_partner(const std::string& apex) { return cross_matroid(apex); }

Matroid doubled_along(const Matroid& n) {
  // Each element t of N replaced by the parallel pair {t@L, t@R}.
  std::vector<std::string> labels;
  for (const auto& l : n.groundset().labels()) {
    labels.push_back(tag_label(l, 'L'));
    labels.push_back(tag_label(l, 'R'));
  }
  GroundSet gs(labels);
  std::vector<SubsetBits> flats;
  for (SubsetBits f : n.flats()) {
    SubsetBits d;
    for (int e : elements_of(f)) {
      d = d.with(gs.index(tag_label(n.groundset().label(e), 'L')));
      d = d.with(gs.index(tag_label(n.groundset().label(e), 'R')));
    }
    flats.push_back(d);
  }
  return Matroid::from_flats(gs, flats);
}

}  // namespace

TEST_CASE("amalgam problem construction") {
  Matroid m1 = corpus::uniform(3, 4);
  Matroid m2 = relabel(corpus::uniform(3, 4), [](const std::string& l) {
    return l == "4" ? std::string("5") : l;
  });
  AmalgamProblem p = AmalgamProblem::make(m1, m2);
  CHECK(p.n == corpus::uniform(3, 3));

  // Mismatched restrictions: U_{3,4} vs U_{2,4} over three common labels.
  Matroid low = relabel(corpus::uniform(2, 4), [](const std::string& l) {
    return l == "4" ? std::string("5") : l;
  });
  CHECK_THROWS_WITH_AS(AmalgamProblem::make(m1, low), doctest::Contains("RestrictionMismatch"),
                       DomainError);
}

TEST_CASE("diagonal cut functions") {
  Matroid u11 = corpus::uniform(1, 1);
  DiagonalSystem sys = diagonal_functions(u11);
  REQUIRE(sys.cuts.size() == 1);
  // Only the top vertex {1@L, 1@R} has value -1.
  for (int v = 0; v < sys.fan->poset().size(); ++v) {
    bool is_top = sys.fan->poset().vertex(v) == sys.fan->groundset().full();
    CHECK(sys.cuts[0].in_cut(v) == is_top);
  }

  // On diagonal-type vertices (F, F) the i-th value fires iff rk F > r - i.
  Matroid n = corpus::uniform(2, 3);
  DiagonalSystem d = diagonal_functions(n);
  const GroundSet& pg = d.fan->groundset();
  for (SubsetBits f : n.flats()) {
    SubsetBits v;
    for (int e : elements_of(f)) {
      v = v.with(pg.index(tag_label(n.groundset().label(e), 'L')));
      v = v.with(pg.index(tag_label(n.groundset().label(e), 'R')));
    }
    int rk = n.rank_of_flat(f);
    for (std::size_t i = 0; i < d.cuts.size(); ++i) {
      CHECK(d.cuts[i].in_cut(d.fan->poset().index_of(v)) ==
            (rk > n.rank() - static_cast<int>(i + 1)));
    }
  }
}

TEST_CASE("the diagonal is cut out of the product") {
  Matroid n = corpus::uniform(2, 3);
  AmalgamProblem p = AmalgamProblem::make(n, n);  // T = E1 = E2
  FlagFan delta = fibre_product(p);
  CHECK(fans_equal(delta, bergman_fan(doubled_along(n))));

  // Push-forward to either factor returns the Bergman fan.
  std::vector<std::string> left, right;
  for (const auto& l : n.groundset().labels()) {
    left.push_back(tag_label(l, 'L'));
    right.push_back(tag_label(l, 'R'));
  }
  Matroid n_left = relabel(n, [](const std::string& l) { return tag_label(l, 'L'); });
  Matroid n_right = relabel(n, [](const std::string& l) { return tag_label(l, 'R'); });
  CHECK(fans_equal(expand_chains(bergman_fan(n_left)), pushforward(delta, left)));
  CHECK(fans_equal(expand_chains(bergman_fan(n_right)), pushforward(delta, right)));

  // Every vertex agrees on the two T-copies.
  for (SubsetBits v : delta.poset().vertices()) {
    SubsetBits y1, y2;
    for (int e : elements_of(v)) {
      std::string l = delta.groundset().label(e);
      if (l.back() == 'L') y1 = y1.with(n.groundset().index(strip_tag(l)));
      if (l.back() == 'R') y2 = y2.with(n.groundset().index(strip_tag(l)));
    }
    CHECK(y1 == y2);
  }
}

TEST_CASE("golden fibre product of two uniform extensions") {
  Matroid m1 = corpus::uniform(3, 4);  // on {1,2,3,4}
  Matroid m2 = relabel(corpus::uniform(3, 4), [](const std::string& l) {
    return l == "4" ? std::string("5") : l;
  });
  AmalgamProblem p = AmalgamProblem::make(m1, m2);

  FlagFan x = fibre_product(p);
  CHECK(check_balancing(x).balanced);
  CHECK(degree(x) == 1);

  // Expected cycle: B(U_{3,5}) with the shared points 1,2,3 doubled into
  // parallel pairs, living on the fibre product's tagged groundset.
  Matroid u35 = corpus::uniform(3, 5);
  const GroundSet& fan_gs = x.groundset();
  std::vector<SubsetBits> flats;
  for (SubsetBits f : u35.flats()) {
    SubsetBits d;
    for (int e : elements_of(f)) {
      std::string l = u35.groundset().label(e);
      if (l == "4") {
        d = d.with(fan_gs.index(tag_label(l, 'L')));
      } else if (l == "5") {
        d = d.with(fan_gs.index(tag_label(l, 'R')));
      } else {
        d = d.with(fan_gs.index(tag_label(l, 'L'))).with(fan_gs.index(tag_label(l, 'R')));
      }
    }
    flats.push_back(d);
  }
  Matroid doubled = Matroid::from_flats(fan_gs, flats);
  CHECK(fans_equal(x, bergman_fan(doubled)));

  AmalgamVerdict v = decide_amalgam(p);
  REQUIRE(v.matroid.has_value());
  CHECK(*v.matroid == u35);

  auto oracle = oracle_proper_amalgam(p);
  REQUIRE(oracle.has_value());
  CHECK(*oracle == u35);
}

TEST_CASE("identity gluing returns the common matroid") {
  for (const Matroid& n : {corpus::uniform(2, 3), corpus::uniform(3, 4)}) {
    AmalgamProblem p = AmalgamProblem::make(n, n);
    AmalgamVerdict v = decide_amalgam(p);
    REQUIRE(v.matroid.has_value());
    CHECK(*v.matroid == n);
    auto o = oracle_proper_amalgam(p);
    REQUIRE(o.has_value());
    CHECK(*o == n);
  }
}

TEST_CASE("amalgam eta") {
  Matroid m1 = cross_matroid("5");
  Matroid m2 = cross_partner("6");
  AmalgamProblem p = AmalgamProblem::make(m1, m2);
  CHECK(p.n == corpus::uniform(3, 4));

  CHECK(amalgam_eta(p, {}) == 0);
  CHECK(amalgam_eta(p, {"1", "2", "3", "4", "5", "6"}) == 3 + 3 - 3);
  // The classical obstruction: two private points over an empty trace.
  CHECK(amalgam_eta(p, {"5", "6"}) == 2);
}

TEST_CASE("no proper amalgam for the crossing pattern") {
  Matroid m1 = cross_matroid("5");
  Matroid m2 = cross_partner("6");
  AmalgamProblem p = AmalgamProblem::make(m1, m2);

  CHECK_FALSE(oracle_proper_amalgam(p).has_value());

  AmalgamVerdict v = decide_amalgam(p);
  CHECK_FALSE(v.matroid.has_value());

  // The certificate is exactly the two weight -1 flags through the apexes.
  REQUIRE(v.negative_chains.size() == 2);
  const GroundSet& gs = v.certificate_gs;
  SubsetBits apex5 = gs.subset({"5@L"});
  SubsetBits apex6 = gs.subset({"6@R"});
  SubsetBits both = gs.subset({"5@L", "6@R"});
  CHECK(v.negative_chains[0].second == -1);
  CHECK(v.negative_chains[1].second == -1);
  CHECK(v.negative_chains[0].first ==
        std::vector<SubsetBits>{SubsetBits{}, apex5, both, gs.full()});
  CHECK(v.negative_chains[1].first ==
        std::vector<SubsetBits>{SubsetBits{}, apex6, both, gs.full()});

  // Degree is 1 regardless of the negative cones.
  CHECK(degree(fibre_product(p)) == 1);
}

TEST_CASE("modular T keeps all weights positive") {
  // T is a line of the Fano plane, hence modular; the partner extends the
  // line by a free point.
  Matroid fano = corpus::fano();
  Matroid partner = relabel(corpus::uniform(2, 4), [](const std::string& l) {
    return l == "4" ? std::string("8") : l;
  });
  // partner restricted to {1,2,3} must equal fano restricted there: U_{2,3}.
  AmalgamProblem p = AmalgamProblem::make(fano, partner);
  CHECK(p.n == corpus::uniform(2, 3));

  FlagFan x = fibre_product(p);
  CHECK_FALSE(find_negative_chain(x).has_value());
  AmalgamVerdict v = decide_amalgam(p);
  CHECK(v.matroid.has_value());
  auto o = oracle_proper_amalgam(p);
  REQUIRE(o.has_value());
  CHECK(*o == *v.matroid);
}

TEST_CASE("oracle cap") {
  Matroid big = corpus::uniform(3, 8);
  Matroid big2 = relabel(big, [](const std::string& l) { return l + "y"; });
  // 16 shared-nothing elements exceed a cap of 10.
  setenv("TROPAMALG_MAX_GROUNDSET", "10", 1);
  AmalgamProblem p = AmalgamProblem::make(big, big2);
  CHECK_THROWS_WITH_AS(oracle_proper_amalgam(p), doctest::Contains("GroundsetTooLarge"),
                       DomainError);
  unsetenv("TROPAMALG_MAX_GROUNDSET");
}

TEST_CASE("empty intersection gives the direct sum") {
  Matroid a = corpus::uniform(2, 3);
  Matroid b = relabel(corpus::uniform(1, 1), [](const std::string&) { return std::string("z"); });
  AmalgamProblem p = AmalgamProblem::make(a, b);
  AmalgamVerdict v = decide_amalgam(p);
  REQUIRE(v.matroid.has_value());
  CHECK(*v.matroid == direct_sum(a, b));
  auto o = oracle_proper_amalgam(p);
  REQUIRE(o.has_value());
  CHECK(*o == *v.matroid);
}
