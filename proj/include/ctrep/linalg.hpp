#pragma once

// Exact Gaussian elimination over Q.

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "ctrep/rational.hpp"

namespace ctrep {

using RationalRows = std::vector<std::vector<Rational>>;

/// Reduces rows in place to row-echelon form and returns the rank.
inline std::size_t row_reduce(RationalRows& rows) {
  if (rows.empty()) return 0;
  const std::size_t cols = rows[0].size();
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < rows.size(); ++col) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && rows[pivot][col].is_zero()) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[rank], rows[pivot]);
    const Rational inv = Rational(1) / rows[rank][col];
    for (std::size_t j = col; j < cols; ++j) rows[rank][j] *= inv;
    for (std::size_t i = rank + 1; i < rows.size(); ++i) {
      if (rows[i][col].is_zero()) continue;
      const Rational f = rows[i][col];
      for (std::size_t j = col; j < cols; ++j) rows[i][j] -= f * rows[rank][j];
    }
    ++rank;
  }
  return rank;
}

inline std::size_t exact_rank(RationalRows rows) { return row_reduce(rows); }

/// Solvability of A x = b given as augmented rows [A | b]. Returns nullopt if
/// consistent, else the index of an original row that already reads 0 = b
/// (if any) or rows.size() when the inconsistency only appears after
/// elimination.
inline std::optional<std::size_t> inconsistent_row(const RationalRows& augmented) {
  if (augmented.empty()) return std::nullopt;
  const std::size_t cols = augmented[0].size();
  RationalRows coeffs;
  coeffs.reserve(augmented.size());
  for (const auto& row : augmented) coeffs.emplace_back(row.begin(), row.end() - 1);
  if (exact_rank(coeffs) == exact_rank(augmented)) return std::nullopt;
  for (std::size_t i = 0; i < augmented.size(); ++i) {
    bool all_zero = true;
    for (std::size_t j = 0; j + 1 < cols; ++j) all_zero = all_zero && augmented[i][j].is_zero();
    if (all_zero && !augmented[i][cols - 1].is_zero()) return i;
  }
  return augmented.size();
}

}  // namespace ctrep
