#include "tropamalg/linalg.hpp"

#include <cstddef>

namespace tropamalg {

namespace {

// Fraction-free (Bareiss) forward elimination. Returns the list of pivot
// column indices; `m` ends in row echelon form with exact integer entries.
std::vector<int> bareiss(IntMat& m) {
  std::vector<int> pivots;
  if (m.empty()) return pivots;
  const std::size_t rows = m.size(), cols = m[0].size();
  Weight prev = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && m[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[r]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        m[i][j] = (m[r][c] * m[i][j] - m[i][c] * m[r][j]) / prev;
      }
      m[i][c] = 0;
    }
    prev = m[r][c];
    pivots.push_back(static_cast<int>(c));
    ++r;
  }
  return pivots;
}

}  // namespace

int int_rank(IntMat m) { return static_cast<int>(bareiss(m).size()); }

bool in_span(const IntMat& basis, const IntVec& v) {
  IntMat m = basis;
  int rank_basis = int_rank(m);
  m = basis;
  m.push_back(v);
  return int_rank(m) == rank_basis;
}

std::optional<std::vector<Rational>> solve_in_basis(const IntMat& basis, const IntVec& v) {
  const std::size_t k = basis.size();
  if (k == 0) {
    for (const auto& x : v) {
      if (x != 0) return std::nullopt;
    }
    return std::vector<Rational>{};
  }
  const std::size_t n = basis[0].size();
  // Augmented system A x = v with columns of A the basis vectors.
  IntMat m(n, IntVec(k + 1, 0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < k; ++j) m[i][j] = basis[j][i];
    m[i][k] = v[i];
  }
  std::vector<int> pivots = bareiss(m);
  for (int p : pivots) {
    if (p == static_cast<int>(k)) return std::nullopt;  // inconsistent row
  }
  // Independent basis rows: every column 0..k-1 is a pivot column.
  if (pivots.size() != k) return std::nullopt;
  // Back substitution over rationals kept as num/den pairs.
  std::vector<Rational> x(k, Rational{0, 1});
  for (int i = static_cast<int>(k) - 1; i >= 0; --i) {
    // Row i: m[i][i] * x_i + sum_{j>i} m[i][j] * x_j = m[i][k].
    Weight num = m[i][k];
    Weight den = 1;
    for (std::size_t j = i + 1; j < k; ++j) {
      // num/den -= m[i][j] * x_j
      num = num * x[j].den - m[i][j] * x[j].num * den;
      den = den * x[j].den;
    }
    den = den * m[i][i];
    if (den < 0) {
      num = -num;
      den = -den;
    }
    Weight g = gcd(abs(num), den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
    x[i] = Rational{num, den};
  }
  return x;
}

std::optional<Weight> lattice_index(const IntMat& lattice, const IntMat& sub) {
  if (lattice.size() != sub.size()) return std::nullopt;
  const std::size_t k = lattice.size();
  IntMat coords(k, IntVec(k, 0));
  for (std::size_t i = 0; i < k; ++i) {
    auto sol = solve_in_basis(lattice, sub[i]);
    if (!sol) return std::nullopt;
    for (std::size_t j = 0; j < k; ++j) {
      if ((*sol)[j].den != 1) return std::nullopt;
      coords[i][j] = (*sol)[j].num;
    }
  }
  // |det| by Bareiss: the last pivot equals the determinant.
  std::vector<int> pivots = bareiss(coords);
  if (pivots.size() != k) return Weight{0};
  Weight det = coords[k - 1][k - 1];
  return det < 0 ? Weight{-det} : det;
}

}  // namespace tropamalg
