#include "dforge/fq_linalg.hpp"

#include <algorithm>

namespace dforge {

std::vector<FqVector> fq_nullspace(const FqField& F, const std::vector<FqVector>& columns) {
  const std::size_t n = columns.size();
  std::size_t rows = 0;
  for (const auto& c : columns) rows = std::max(rows, c.size());
  // row-major copy so elimination walks contiguous memory
  std::vector<FqVector> m(rows, FqVector(n, 0));
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < columns[j].size(); ++i) m[i][j] = columns[j][i];

  std::vector<std::size_t> pivot_col;
  std::size_t r = 0;
  for (std::size_t j = 0; j < n && r < rows; ++j) {
    std::size_t piv = r;
    while (piv < rows && m[piv][j] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(m[r], m[piv]);
    const auto inv = F.inv(m[r][j]);
    for (auto& x : m[r]) x = F.mul(x, inv);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m[i][j] == 0) continue;
      const auto f = F.neg(m[i][j]);
      for (std::size_t k = j; k < n; ++k)
        if (m[r][k] != 0) m[i][k] = F.add(m[i][k], F.mul(f, m[r][k]));
    }
    pivot_col.push_back(j);
    ++r;
  }

  std::vector<FqVector> basis;
  std::size_t next_pivot = 0;
  for (std::size_t j = 0; j < n; ++j) {
    if (next_pivot < pivot_col.size() && pivot_col[next_pivot] == j) {
      ++next_pivot;
      continue;
    }
    FqVector v(n, 0);
    v[j] = 1;
    for (std::size_t k = 0; k < pivot_col.size(); ++k) v[pivot_col[k]] = F.neg(m[k][j]);
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace dforge
