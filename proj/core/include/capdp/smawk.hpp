#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <utility>
#include <vector>

#include "capdp/ext_value.hpp"

namespace capdp {

/// Implicit matrix: entries are produced on demand and never stored.
struct MatrixOracle {
  std::size_t nrows = 0;
  std::size_t ncols = 0;
  std::function<ExtValue(std::size_t, std::size_t)> eval;
};

struct RowMax {
  std::size_t col = 0;
  ExtValue value;

  friend bool operator==(const RowMax&, const RowMax&) = default;
};

namespace detail {

// better(r, c1, c2) with c1 < c2 answers "is column c2 strictly better than
// c1 in row r". Total monotonicity means that answer, as a function of r, is
// false on a prefix of rows and true afterwards.
template <class Better>
void smawk_rec(std::span<const std::size_t> rows, std::span<const std::size_t> cols,
               Better& better, std::vector<std::size_t>& argmax) {
  if (rows.empty()) return;

  // REDUCE: keep at most |rows| columns that can still hold a leftmost
  // maximum of some row.
  std::vector<std::size_t> kept;
  kept.reserve(std::min(rows.size(), cols.size()));
  for (std::size_t c : cols) {
    while (!kept.empty() && better(rows[kept.size() - 1], kept.back(), c)) {
      kept.pop_back();
    }
    if (kept.size() < rows.size()) kept.push_back(c);
  }

  std::vector<std::size_t> odd;
  odd.reserve(rows.size() / 2);
  for (std::size_t i = 1; i < rows.size(); i += 2) odd.push_back(rows[i]);
  smawk_rec(std::span<const std::size_t>(odd), std::span<const std::size_t>(kept), better, argmax);

  // INTERPOLATE: even rows scan between the neighbouring odd-row answers.
  std::size_t pos = 0;
  for (std::size_t i = 0; i < rows.size(); i += 2) {
    const std::size_t stop = i + 1 < rows.size() ? argmax[rows[i + 1]] : kept.back();
    std::size_t best = kept[pos];
    while (kept[pos] != stop) {
      ++pos;
      if (better(rows[i], best, kept[pos])) best = kept[pos];
    }
    argmax[rows[i]] = best;
  }
}

}  // namespace detail

/// Leftmost row argmax of a totally monotone matrix given only through a
/// strict column comparator. `cols` must be increasing and non-empty.
/// Returns one column per row 0..nrows-1. O(nrows + |cols|) comparator calls.
template <class Better>
std::vector<std::size_t> smawk_argmax(std::size_t nrows, std::span<const std::size_t> cols,
                                      Better&& better) {
  std::vector<std::size_t> argmax(nrows, 0);
  if (nrows == 0 || cols.empty()) return argmax;
  std::vector<std::size_t> rows(nrows);
  for (std::size_t i = 0; i < nrows; ++i) rows[i] = i;
  detail::smawk_rec(std::span<const std::size_t>(rows), cols, better, argmax);
  return argmax;
}

/// Row maxima of a totally monotone matrix. BOTTOM ranks below every finite
/// value; ties go to the smallest column.
std::vector<RowMax> smawk_row_maxima(const MatrixOracle& m);

/// Brute-force row scan with the same tie rule; reference for tests.
std::vector<RowMax> brute_row_maxima(const MatrixOracle& m);

/// A(i,j) + A(i+1,j+1) >= A(i+1,j) + A(i,j+1) on every adjacent 2x2 block.
/// O(nrows * ncols); entries must be finite.
bool is_monge(const MatrixOracle& m);

}  // namespace capdp
