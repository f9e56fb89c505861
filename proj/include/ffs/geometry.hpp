#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <span>
#include <vector>

#include "ffs/ffield.hpp"

namespace fqg {

/// Canonical index of a point of F_q^d: sum_i coords[i].v * q^i.
using PointId = std::uint32_t;

inline constexpr std::uint64_t kDefaultEnumerationCap = std::uint64_t{1} << 24;

struct Point {
  std::vector<Elem> coords;

  std::size_t dim() const { return coords.size(); }
  friend bool operator==(const Point&, const Point&) = default;
  friend auto operator<=>(const Point&, const Point&) = default;
};

/// The ambient space F_q^d with point arithmetic on canonical indices.
///
/// Construction requires q^d to fit under the enumeration cap; everything
/// that walks the whole space (spheres, graphs, censuses) goes through here.
class Space {
 public:
  Space(Field field, int dim, std::uint64_t enumeration_cap = kDefaultEnumerationCap);

  const Field& field() const { return field_; }
  int dim() const { return dim_; }
  std::uint32_t q() const { return field_.q(); }
  std::uint64_t size() const { return size_; }

  Point point(PointId x) const;
  PointId id(const Point& x) const;
  Elem coord(PointId x, int i) const;

  PointId add(PointId x, PointId y) const;
  PointId sub(PointId x, PointId y) const;
  PointId neg(PointId x) const;
  PointId scale(Elem c, PointId x) const;

  Elem norm(PointId x) const { return norms_.empty() ? norm_slow(x) : Elem{norms_[x]}; }
  Elem dot(PointId x, PointId y) const;

 private:
  Elem norm_slow(PointId x) const;
  std::uint32_t digit(PointId x, int i) const {
    return digits_.empty() ? static_cast<std::uint32_t>(x / powers_[i] % field_.q())
                           : digits_[std::size_t{x} * dim_ + i];
  }

  Field field_;
  int dim_;
  std::uint64_t size_;
  std::vector<std::uint64_t> powers_;
  std::vector<std::uint32_t> digits_;
  std::vector<std::uint32_t> norms_;
};

using SpacePtr = std::shared_ptr<const Space>;

SpacePtr make_space(std::uint64_t q, int dim, std::uint64_t enumeration_cap = kDefaultEnumerationCap);

/// ||x|| = sum x_i^2 for a free-standing point.
Elem norm(const Field& f, const Point& x);

struct Sphere {
  Elem radius;
  std::vector<PointId> points;  // ascending canonical index
  std::uint32_t q = 0;
  int dim = 0;

  std::size_t size() const { return points.size(); }
};

/// All x with ||x|| = t. Coordinates are split in two halves whose
/// norm-bucketed half vectors are paired, so only points on the sphere
/// are ever generated.
Sphere sphere(const Space& space, Elem t);

/// |S_t| for every t, by convolving the two half-space norm histograms.
std::vector<std::uint64_t> sphere_size_histogram(const Space& space);

/// Closed-form |S_t| in F_q^d, with signs fixed against exhaustive counts:
///   d odd,  t != 0: q^{d-1} + chi((-1)^{(d-1)/2} t) q^{(d-1)/2}
///   d odd,  t == 0: q^{d-1}
///   d even, t != 0: q^{d-1} - chi((-1)^{d/2}) q^{(d-2)/2}
///   d even, t == 0: q^{d-1} + chi((-1)^{d/2}) (q-1) q^{(d-2)/2}
std::int64_t sphere_size_formula(const Field& f, int dim, Elem t);

struct OrthogonalMatrix {
  int dim = 0;
  std::vector<Elem> entries;  // row-major
  bool special = false;

  Elem at(int r, int c) const { return entries[static_cast<std::size_t>(r) * dim + c]; }
  friend bool operator==(const OrthogonalMatrix&, const OrthogonalMatrix&) = default;
};

/// Every M with M^T M = I (and det M = 1 when special), built column by
/// column from unit vectors orthogonal to the columns already chosen.
/// Gated to d in {2, 3} and q <= 7.
std::vector<OrthogonalMatrix> enumerate_orthogonal(const Space& space, bool special);

Point apply(const Field& f, const OrthogonalMatrix& m, const Point& x);
PointId apply(const Space& space, const OrthogonalMatrix& m, PointId x);
Elem determinant(const Field& f, const OrthogonalMatrix& m);

/// True iff the k difference vectors V_i - V_0 have rank k.
bool is_nondegenerate(const Field& f, std::span<const Point> vertices);
bool is_nondegenerate(const Space& space, std::span<const PointId> vertices);

}  // namespace fqg
