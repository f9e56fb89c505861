#pragma once

#include <cstddef>
#include <vector>

#include "ffs/ffield.hpp"

namespace fqg {

using Row = std::vector<Elem>;

/// Rank of the given rows over F_q by Gaussian elimination.
std::size_t rank(const Field& f, std::vector<Row> rows);

/// Reduced row-echelon basis that grows one vector at a time. Used to track
/// affine independence while a simplex is extended vertex by vertex.
class EchelonBasis {
 public:
  EchelonBasis(const Field& f, std::size_t width) : field_(&f), width_(width) {}

  /// Adds v if it is independent of the current rows; returns whether it was.
  bool insert(Row v);
  std::size_t size() const { return rows_.size(); }

 private:
  const Field* field_;
  std::size_t width_;
  std::vector<Row> rows_;
  std::vector<std::size_t> pivots_;
};

}  // namespace fqg
