#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "ffs/geometry.hpp"

namespace fqg {

inline constexpr std::size_t kDenseSpectrumCap = 4096;
inline constexpr double kImaginaryTolerance = 1e-9;

/// The finite Euclidean graph G_q(a): vertices F_q^d, x ~ y iff x != y and
/// ||x - y|| = a. A Cayley graph on the additive group, so adjacency is a
/// membership test on the difference.
class EuclideanGraph {
 public:
  EuclideanGraph(SpacePtr space, Elem a);

  const Space& space() const { return *space_; }
  const SpacePtr& space_ptr() const { return space_; }
  Elem a() const { return a_; }
  std::size_t vertex_count() const { return space_->size(); }
  std::size_t valency() const { return connection_.size(); }
  std::span<const PointId> connection_set() const { return connection_; }

  bool adjacent(PointId x, PointId y) const { return in_connection_[space_->sub(x, y)] != 0; }

  template <class F>
  void for_each_neighbor(PointId x, F&& f) const {
    for (auto s : connection_) f(space_->add(x, s));
  }

 private:
  SpacePtr space_;
  Elem a_;
  std::vector<PointId> connection_;
  std::vector<std::uint8_t> in_connection_;
};

/// Requires d >= 2.
EuclideanGraph build_graph(SpacePtr space, Elem a);

/// Colors each pair x != y of F_q^d by ||x - y||; class c is exactly G_q(c).
class NormColoring {
 public:
  explicit NormColoring(SpacePtr space);

  const Space& space() const { return *space_; }
  std::size_t vertex_count() const { return space_->size(); }
  int color_count() const { return static_cast<int>(space_->q()); }
  /// Colors are canonical field indices; -1 on the diagonal.
  int color(PointId x, PointId y) const {
    return x == y ? -1 : static_cast<int>(space_->norm(space_->sub(x, y)).v);
  }
  std::size_t valency(int c) const { return offsets_[c].size(); }
  std::span<const PointId> offsets(int c) const { return offsets_[c]; }

  template <class F>
  void for_each_neighbor(PointId x, int c, F&& f) const {
    for (auto s : offsets_[c]) f(space_->add(x, s));
  }

 private:
  SpacePtr space_;
  std::vector<std::vector<PointId>> offsets_;
};

enum class SpectrumMethod { character_sum, dense };

std::string to_string(SpectrumMethod m);

struct SpectrumReport {
  std::size_t n = 0;
  std::vector<double> eigenvalues;  // ascending
  double trivial_eigenvalue = 0;
  double max_nontrivial_abs = 0;
  double bound = 0;  // 2 q^{(d-1)/2}
  SpectrumMethod method = SpectrumMethod::character_sum;
  double max_imaginary_residual = 0;  // character_sum only
};

/// lambda_m = sum_{s in S} psi(m . s) with psi(t) = exp(2 pi i Tr(t) / p), for
/// every m in F_q^d. Each sum is first reduced to an integer histogram over
/// the values of m . s, so only q complex terms are evaluated per m.
/// Throws ConsistencyError if an imaginary part exceeds kImaginaryTolerance.
SpectrumReport character_spectrum(const EuclideanGraph& g, unsigned workers = 1);

/// Eigenvalues of the explicit adjacency matrix; n <= kDenseSpectrumCap.
SpectrumReport dense_spectrum(const EuclideanGraph& g);

/// Dense spectrum of any regular graph given as adjacency lists. The trivial
/// eigenvalue is taken to be `valency` and one copy of it is removed before
/// measuring the nontrivial maximum.
SpectrumReport dense_spectrum(const std::vector<std::vector<std::uint32_t>>& adjacency,
                              std::size_t valency, double bound);

struct RamanujanCheck {
  bool holds = false;
  double margin = 0;  // bound - max_nontrivial_abs
};

RamanujanCheck check_ramanujan_bound(const SpectrumReport& report);

}  // namespace fqg
