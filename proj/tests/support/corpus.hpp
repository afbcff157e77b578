#pragma once

#include <string>
#include <vector>

#include "tropamalg/amalgam.hpp"
#include "tropamalg/matroid.hpp"

// Deterministic desk-scale corpora shared by the unit and acceptance suites.
namespace tropamalg::corpus {

std::vector<std::string> labels(int n);                    // "1".."n"
Matroid uniform(int rank, int n);                          // on labels(n)
Matroid fano();
Matroid non_fano();

// Canonical form under label permutations (sorted flat masks, minimized).
std::vector<std::uint64_t> canonical_key(const Matroid& m);
std::vector<Matroid> dedupe_isomorphic(std::vector<Matroid> ms);

// All simple matroids of rank <= 3 on at most max_n elements, up to
// isomorphism (enumerated through their line families).
std::vector<Matroid> simple_rank_le3(int max_n);

// Cycle matroids of connected simple graphs on 3..max_vertices vertices with
// at most max_edges edges, up to isomorphism.
std::vector<Matroid> graphic(int max_vertices, int max_edges);

// Base corpora for the sweeps.
std::vector<Matroid> amalgam_base_corpus();        // simple, for the gluing sweep
std::vector<Matroid> modular_cut_corpus();         // |E| <= 7
std::vector<Matroid> correspondence_corpus();      // simple, |E| <= 5, rank <= 3

// Every way to identify a k-subset of E(a) with a k-subset of E(b) such that
// the restrictions agree, materialized as an AmalgamProblem over shared
// labels t1..tk (plus x*/y* for the private parts). Deduplicated by the
// exact relabeled flat families; the union size is capped.
std::vector<AmalgamProblem> glue_problems(const std::vector<Matroid>& corpus, int max_union);

// Relabel with a prime suffix ("1" -> "1'").
Matroid primed(const Matroid& m);

}  // namespace tropamalg::corpus
