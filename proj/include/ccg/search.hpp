#pragma once

#include <functional>
#include <optional>
#include <random>
#include <vector>

#include "ccg/forms.hpp"

namespace ccg {

// base + span(dirs), with dirs in reduced echelon form over row-major
// coordinates and base reduced against them.
struct AffineSpace {
  Matrix base;
  std::vector<Matrix> dirs;
  std::vector<int> pivots;

  static AffineSpace make(const Matrix& base, const std::vector<Matrix>& spanning);
  static AffineSpace all(int r, int c, const FieldPtr& F);
  static AffineSpace upper_unitriangular(int n, const FieldPtr& F);
  int dim() const { return static_cast<int>(dirs.size()); }
};

// Basis of {Y : a Y = Y b}.
std::vector<Matrix> intertwiners(const Matrix& a, const Matrix& b);
std::vector<Matrix> commutant_basis(const Matrix& x);

// Solutions Z of Z src Z* = tgt inside an affine space, found by assigning the
// coordinates row by row and checking the form equations after each row.
struct SearchProblem {
  Form src, tgt;
  AffineSpace space;
  std::function<bool(const Matrix&)> accept = {};
  long long node_limit = 50'000'000;
};

// Visits solutions in lexicographic order of their entries, or in a shuffled
// order when rng is given; the visitor returns false to stop.
void search_each(const SearchProblem& p, const std::function<bool(const Matrix&)>& visit, std::mt19937* rng = nullptr);
std::optional<Matrix> search_first(const SearchProblem& p, std::mt19937* rng = nullptr);

}  // namespace ccg
