#pragma once

#include <cassert>
#include <cstdint>
#include <cstdlib>
#include <vector>

namespace znspec {

// Smith normal form over the integers, tracking the right (column) transform
// so callers can push coordinates through the same change of basis. Row
// operations change the presentation of the relation lattice only, so they
// are not recorded.
struct SmithResult {
  std::vector<std::int64_t> diagonal;       // s_0 | s_1 | ..., nonnegative
  std::vector<std::int64_t> col_transform;  // cols x cols, row-major; y = x * V
  std::size_t cols = 0;
};

inline SmithResult smith_normal_form(std::vector<std::vector<std::int64_t>> a,
                                     std::size_t cols) {
  const std::size_t rows = a.size();
  SmithResult out;
  out.cols = cols;
  out.col_transform.assign(cols * cols, 0);
  for (std::size_t i = 0; i < cols; ++i) out.col_transform[i * cols + i] = 1;
  auto& v = out.col_transform;

  auto row_sub = [&](std::size_t i, std::size_t j, std::int64_t q) {
    for (std::size_t x = 0; x < cols; ++x) a[i][x] -= q * a[j][x];
  };
  auto row_add = [&](std::size_t i, std::size_t j) {
    for (std::size_t x = 0; x < cols; ++x) a[i][x] += a[j][x];
  };
  auto col_sub = [&](std::size_t i, std::size_t j, std::int64_t q) {
    for (std::size_t r = 0; r < rows; ++r) a[r][i] -= q * a[r][j];
    for (std::size_t x = 0; x < cols; ++x) v[x * cols + i] -= q * v[x * cols + j];
  };
  auto col_swap = [&](std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t r = 0; r < rows; ++r) std::swap(a[r][i], a[r][j]);
    for (std::size_t x = 0; x < cols; ++x)
      std::swap(v[x * cols + i], v[x * cols + j]);
  };
  auto col_negate = [&](std::size_t i) {
    for (std::size_t r = 0; r < rows; ++r) a[r][i] = -a[r][i];
    for (std::size_t x = 0; x < cols; ++x) v[x * cols + i] = -v[x * cols + i];
  };

  const std::size_t lim = rows < cols ? rows : cols;
  std::size_t t = 0;
  for (; t < lim; ++t) {
    bool have_pivot = false;
    while (true) {
      // Minimal nonzero entry of the trailing submatrix becomes the pivot.
      std::size_t pi = 0, pj = 0;
      std::int64_t best = 0;
      for (std::size_t i = t; i < rows; ++i)
        for (std::size_t j = t; j < cols; ++j) {
          std::int64_t m = a[i][j] < 0 ? -a[i][j] : a[i][j];
          if (m != 0 && (best == 0 || m < best)) {
            best = m;
            pi = i;
            pj = j;
          }
        }
      if (best == 0) break;
      have_pivot = true;
      std::swap(a[t], a[pi]);
      col_swap(t, pj);

      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i)
        if (a[i][t] != 0) {
          row_sub(i, t, a[i][t] / a[t][t]);
          if (a[i][t] != 0) clean = false;
        }
      for (std::size_t j = t + 1; j < cols; ++j)
        if (a[t][j] != 0) {
          col_sub(j, t, a[t][j] / a[t][t]);
          if (a[t][j] != 0) clean = false;
        }
      if (!clean) continue;

      // Divisibility fix-up: fold a bad row into row t and keep reducing.
      bool fixed = false;
      for (std::size_t i = t + 1; i < rows && !fixed; ++i)
        for (std::size_t j = t + 1; j < cols && !fixed; ++j)
          if (a[i][j] % a[t][t] != 0) {
            row_add(t, i);
            fixed = true;
          }
      if (fixed) continue;
      break;
    }
    if (!have_pivot) break;
    if (a[t][t] < 0) col_negate(t);
  }

  out.diagonal.assign(lim, 0);
  for (std::size_t i = 0; i < t; ++i) out.diagonal[i] = a[i][i];
  return out;
}

}  // namespace znspec
