#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "ffs/euclid_graph.hpp"
#include "ffs/geometry.hpp"

namespace fqg {

/// A square-type non-isotropic line [x] of F_q^d, stored through its unit
/// point of smaller canonical index (the other one is -rep).
struct OmegaLine {
  PointId rep = 0;
  std::uint32_t id = 0;
};

/// The set of square-type non-isotropic lines with respect to
/// Q(x) = x_1^2 + ... + x_d^2, d odd. Lines are numbered by ascending rep.
class Omega {
 public:
  explicit Omega(SpacePtr space);

  const Space& space() const { return *space_; }
  const SpacePtr& space_ptr() const { return space_; }
  std::size_t size() const { return lines_.size(); }
  const std::vector<OmegaLine>& lines() const { return lines_; }
  PointId rep(std::uint32_t line) const { return lines_[line].rep; }

  /// Line through a nonzero point whose norm is a nonzero square.
  std::optional<std::uint32_t> line_of(PointId x) const;

 private:
  SpacePtr space_;
  std::vector<OmegaLine> lines_;
  std::vector<std::int32_t> unit_to_line_;  // indexed by point; -1 off the unit sphere
};

Omega build_omega(SpacePtr space);

/// Number of non-identity relations, (q+1)/2.
int relation_count(std::uint32_t q);

/// alpha_l = 2 nu^{-(l-1)} for 2 <= l <= (q-1)/2; nothing otherwise.
std::optional<Elem> relation_alpha(const Field& f, int l);

/// 0 for u = v; otherwise the unique l in 1..(q+1)/2 whose defining value
/// lies in {(U+V).(U+V), (U-V).(U-V)}, which makes the answer independent
/// of the sign of either representative. Throws ConsistencyError if no
/// relation or more than one relation matches.
int relation_index(const Omega& omega, std::uint32_t u, std::uint32_t v);

/// Colors pairs of distinct lines by relation index (1..(q+1)/2).
class SchemeColoring {
 public:
  explicit SchemeColoring(const Omega& omega, unsigned workers = 1);

  std::size_t vertex_count() const { return n_; }
  int color_count() const { return classes_ + 1; }
  int color(std::uint32_t u, std::uint32_t v) const {
    return u == v ? -1 : matrix_[static_cast<std::size_t>(u) * n_ + v];
  }
  /// Degree of line 0; see is_regular().
  std::size_t valency(int c) const { return n_ == 0 ? 0 : adjacency_[c][0].size(); }
  bool is_regular(int c) const;
  bool is_symmetric() const { return symmetric_; }
  const std::vector<std::vector<std::uint32_t>>& adjacency(int c) const { return adjacency_[c]; }

  template <class F>
  void for_each_neighbor(std::uint32_t u, int c, F&& f) const {
    for (auto v : adjacency_[c][u]) f(v);
  }

 private:
  std::size_t n_;
  int classes_;
  bool symmetric_ = true;
  std::vector<std::uint8_t> matrix_;
  std::vector<std::vector<std::vector<std::uint32_t>>> adjacency_;  // [color][vertex]
};

struct DistanceRelationReport {
  bool ok = true;
  std::uint64_t pairs_checked = 0;
  std::optional<std::pair<std::uint32_t, std::uint32_t>> witness;
};

/// For pairs in R_l, 2 <= l <= (q-1)/2, checks that ||U - V|| lies in
/// {2 + alpha_l, 2 - alpha_l} for both sign choices of the representatives.
DistanceRelationReport verify_distance_relation(const Omega& omega, const SchemeColoring& coloring);
DistanceRelationReport verify_distance_relation(const Omega& omega);

struct RelationReport {
  int l = 0;
  std::optional<Elem> alpha;
  bool regular = false;
  std::size_t valency = 0;
  SpectrumReport spectrum;
  double certified_c = 0;    // max nontrivial |lambda| / q^{(d-2)/2}
  double valency_ratio = 0;  // valency / q^{d-2}
};

struct SchemeReport {
  std::uint32_t q = 0;
  int dim = 0;
  std::size_t omega_size = 0;
  double omega_ratio = 0;  // |Omega| / (q^{d-1}/2)
  std::vector<RelationReport> relations;
  bool symmetric = false;
  bool partition_ok = false;
  std::uint64_t ordered_pairs = 0;
  DistanceRelationReport distance;
};

/// Regularity, dense spectra and measured constants of every relation graph.
/// Requires |Omega| <= kDenseSpectrumCap.
SchemeReport scheme_report(const Omega& omega, unsigned workers = 1);

}  // namespace fqg
