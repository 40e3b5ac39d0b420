#include "capdp/smawk.hpp"

#include <numeric>

namespace capdp {

std::vector<RowMax> smawk_row_maxima(const MatrixOracle& m) {
  std::vector<RowMax> out(m.nrows);
  if (m.nrows == 0 || m.ncols == 0) return out;
  std::vector<std::size_t> cols(m.ncols);
  std::iota(cols.begin(), cols.end(), std::size_t{0});
  const auto argmax = smawk_argmax(m.nrows, std::span<const std::size_t>(cols),
                                   [&m](std::size_t r, std::size_t c1, std::size_t c2) {
                                     return m.eval(r, c1) < m.eval(r, c2);
                                   });
  for (std::size_t r = 0; r < m.nrows; ++r) out[r] = {argmax[r], m.eval(r, argmax[r])};
  return out;
}

std::vector<RowMax> brute_row_maxima(const MatrixOracle& m) {
  std::vector<RowMax> out(m.nrows);
  if (m.ncols == 0) return out;
  for (std::size_t r = 0; r < m.nrows; ++r) {
    RowMax best{0, m.eval(r, 0)};
    for (std::size_t c = 1; c < m.ncols; ++c) {
      const ExtValue v = m.eval(r, c);
      if (best.value < v) best = {c, v};
    }
    out[r] = best;
  }
  return out;
}

bool is_monge(const MatrixOracle& m) {
  for (std::size_t i = 0; i + 1 < m.nrows; ++i) {
    for (std::size_t j = 0; j + 1 < m.ncols; ++j) {
      const __int128 lhs = static_cast<__int128>(m.eval(i, j).value()) + m.eval(i + 1, j + 1).value();
      const __int128 rhs = static_cast<__int128>(m.eval(i + 1, j).value()) + m.eval(i, j + 1).value();
      if (lhs < rhs) return false;
    }
  }
  return true;
}

}  // namespace capdp
