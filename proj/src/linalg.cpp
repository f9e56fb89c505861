#include "ffs/linalg.hpp"

#include <utility>

#include "ffs/error.hpp"

namespace fqg {

std::size_t rank(const Field& f, std::vector<Row> rows) {
  if (rows.empty()) return 0;
  const std::size_t width = rows.front().size();
  for (const auto& r : rows)
    if (r.size() != width) throw InvalidArgument("rank: rows of unequal length");

  std::size_t r = 0;
  for (std::size_t col = 0; col < width && r < rows.size(); ++col) {
    std::size_t pivot = r;
    while (pivot < rows.size() && rows[pivot][col] == f.zero()) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[r], rows[pivot]);
    const Elem inv = f.inv(rows[r][col]);
    for (auto& x : rows[r]) x = f.mul(x, inv);
    for (std::size_t i = r + 1; i < rows.size(); ++i) {
      const Elem factor = rows[i][col];
      if (factor == f.zero()) continue;
      for (std::size_t j = col; j < width; ++j)
        rows[i][j] = f.sub(rows[i][j], f.mul(factor, rows[r][j]));
    }
    ++r;
  }
  return r;
}

bool EchelonBasis::insert(Row v) {
  if (v.size() != width_) throw InvalidArgument("EchelonBasis: vector width mismatch");
  const Field& f = *field_;
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    const Elem factor = v[pivots_[i]];
    if (factor == f.zero()) continue;
    for (std::size_t j = 0; j < width_; ++j) v[j] = f.sub(v[j], f.mul(factor, rows_[i][j]));
  }
  std::size_t pivot = 0;
  while (pivot < width_ && v[pivot] == f.zero()) ++pivot;
  if (pivot == width_) return false;
  const Elem inv = f.inv(v[pivot]);
  for (auto& x : v) x = f.mul(x, inv);
  // Keep existing rows reduced at the new pivot column.
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    const Elem factor = rows_[i][pivot];
    if (factor == f.zero()) continue;
    for (std::size_t j = 0; j < width_; ++j)
      rows_[i][j] = f.sub(rows_[i][j], f.mul(factor, v[j]));
  }
  rows_.push_back(std::move(v));
  pivots_.push_back(pivot);
  return true;
}

}  // namespace fqg
