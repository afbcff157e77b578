#pragma once

#include <optional>
#include <vector>

#include "tropamalg/weight.hpp"

namespace tropamalg {

// Exact integer linear algebra on tiny matrices (rows = vectors over the
// groundset coordinates). Fraction-free Gaussian elimination throughout.
using IntVec = std::vector<Weight>;
using IntMat = std::vector<IntVec>;

struct Rational {
  Weight num;
  Weight den;  // > 0
};

// Rank of the row space.
int int_rank(IntMat m);

// True iff v lies in the rational span of the rows of `basis`.
bool in_span(const IntMat& basis, const IntVec& v);

// Solves sum_i x_i * basis[i] = v exactly over the rationals. Returns nullopt
// if v is outside the span. Requires the rows of `basis` to be linearly
// independent.
std::optional<std::vector<Rational>> solve_in_basis(const IntMat& basis, const IntVec& v);

// Index of the sublattice spanned by `sub` inside the lattice spanned by the
// rows of `lattice`: |det| of the coordinate matrix of `sub` in that basis.
// Returns nullopt when some row of `sub` falls outside the span or the
// coordinate matrix is not square/integral.
std::optional<Weight> lattice_index(const IntMat& lattice, const IntMat& sub);

}  // namespace tropamalg
