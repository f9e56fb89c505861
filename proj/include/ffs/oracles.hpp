#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "ffs/ffield.hpp"
#include "ffs/geometry.hpp"
#include "ffs/mixing.hpp"

// Deliberately slow reference computations. They share only Field arithmetic
// with the library and walk every candidate instead of pruning or bucketing.
namespace fqg::oracle {

/// Coordinates of the i-th point of F_q^d, digit by digit.
std::vector<Elem> coordinates(std::uint64_t index, std::uint32_t q, int d);

/// |S_t| for every t by scanning all q^d points.
std::vector<std::uint64_t> sphere_sizes(const Field& f, int d);

/// Lines [x] of F_q^d, d odd, with x.x a nonzero square: nonzero points with
/// square norm divided by q - 1.
std::uint64_t omega_size(const Field& f, int d);

/// Every d x d matrix with M^T M = I, scanning all q^{d^2} matrices.
std::vector<std::vector<Elem>> orthogonal_matrices(const Field& f, int d, bool special);

/// Ordered stars: centers in E_0, leaf i in E_i with color(center, leaf) = colors[i].
template <EdgeColoring C>
std::uint64_t star_count(const C& coloring, const VertexSet& center, std::span<const VertexSet> leaves,
                         std::span<const int> colors) {
  std::uint64_t total = 0;
  std::vector<VertexId> x(leaves.size() + 1);
  auto rec = [&](auto&& self, std::size_t i) -> void {
    if (i == leaves.size()) {
      ++total;
      return;
    }
    for (auto v : leaves[i].members) {
      if (coloring.color(x[0], v) != colors[i]) continue;
      self(self, i + 1);
    }
  };
  for (auto c : center.members) {
    x[0] = c;
    rec(rec, 0);
  }
  return total;
}

/// Ordered tuples x_i in E_i matching every colored edge of H, by scanning
/// the full product E_0 x ... x E_{s-1}.
template <EdgeColoring C>
std::uint64_t copy_count(const C& coloring, const PatternGraph& h, std::span<const VertexSet> sets) {
  std::uint64_t total = 0;
  std::vector<VertexId> x(h.vertices);
  auto rec = [&](auto&& self, int i) -> void {
    if (i == h.vertices) {
      for (const auto& e : h.edges)
        if (coloring.color(x[e.u], x[e.v]) != e.color) return;
      ++total;
      return;
    }
    for (auto v : sets[i].members) {
      x[i] = v;
      self(self, i + 1);
    }
  };
  rec(rec, 0);
  return total;
}

struct CensusOracle {
  std::vector<std::uint64_t> realized;  // ascending edge-norm codes
  std::uint64_t nondegenerate = 0;
};

/// Every (k+1)-tuple of E; nondegeneracy by full Gaussian elimination on the
/// difference matrix, edge norms from coordinates.
CensusOracle census(const Field& f, int d, std::span<const std::uint32_t> e, int k);

}  // namespace fqg::oracle
