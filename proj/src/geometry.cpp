#include "ffs/geometry.hpp"

#include <algorithm>
#include <string>

#include "ffs/error.hpp"
#include "ffs/linalg.hpp"

namespace fqg {
namespace {

constexpr std::uint64_t kTableLimit = std::uint64_t{1} << 20;

std::int64_t checked_pow(std::int64_t base, int exp) {
  std::int64_t out = 1;
  for (int i = 0; i < exp; ++i) {
    if (__builtin_mul_overflow(out, base, &out))
      throw InvalidArgument("sphere size overflows 64-bit integers");
  }
  return out;
}

}  // namespace

Space::Space(Field field, int dim, std::uint64_t enumeration_cap)
    : field_(std::move(field)), dim_(dim), size_(1) {
  if (dim < 1) throw InvalidArgument("dimension must be at least 1");
  for (int i = 0; i < dim; ++i) {
    powers_.push_back(size_);
    size_ *= field_.q();
    if (size_ > enumeration_cap || size_ > UINT32_MAX)
      throw CapExceeded("q^d = " + std::to_string(field_.q()) + "^" + std::to_string(dim) +
                        " exceeds the enumeration cap " + std::to_string(enumeration_cap) +
                        "; use formula mode");
  }
  if (size_ <= kTableLimit) {
    digits_.resize(size_ * dim_);
    norms_.resize(size_);
    for (std::uint64_t x = 0; x < size_; ++x) {
      std::uint64_t rest = x;
      Elem n = field_.zero();
      for (int i = 0; i < dim_; ++i) {
        const auto c = static_cast<std::uint32_t>(rest % field_.q());
        rest /= field_.q();
        digits_[x * dim_ + i] = c;
        n = field_.add(n, field_.mul({c}, {c}));
      }
      norms_[x] = n.v;
    }
  }
}

Point Space::point(PointId x) const {
  Point p;
  p.coords.reserve(dim_);
  for (int i = 0; i < dim_; ++i) p.coords.push_back({digit(x, i)});
  return p;
}

PointId Space::id(const Point& x) const {
  if (static_cast<int>(x.dim()) != dim_) throw InvalidArgument("point dimension does not match the space");
  std::uint64_t out = 0;
  for (int i = 0; i < dim_; ++i) {
    if (!field_.valid(x.coords[i])) throw InvalidArgument("coordinate outside the field");
    out += x.coords[i].v * powers_[i];
  }
  return static_cast<PointId>(out);
}

Elem Space::coord(PointId x, int i) const { return {digit(x, i)}; }

PointId Space::add(PointId x, PointId y) const {
  std::uint64_t out = 0;
  for (int i = 0; i < dim_; ++i) out += field_.add({digit(x, i)}, {digit(y, i)}).v * powers_[i];
  return static_cast<PointId>(out);
}

PointId Space::sub(PointId x, PointId y) const {
  std::uint64_t out = 0;
  for (int i = 0; i < dim_; ++i) out += field_.sub({digit(x, i)}, {digit(y, i)}).v * powers_[i];
  return static_cast<PointId>(out);
}

PointId Space::neg(PointId x) const {
  std::uint64_t out = 0;
  for (int i = 0; i < dim_; ++i) out += field_.neg({digit(x, i)}).v * powers_[i];
  return static_cast<PointId>(out);
}

PointId Space::scale(Elem c, PointId x) const {
  std::uint64_t out = 0;
  for (int i = 0; i < dim_; ++i) out += field_.mul(c, {digit(x, i)}).v * powers_[i];
  return static_cast<PointId>(out);
}

Elem Space::dot(PointId x, PointId y) const {
  Elem s = field_.zero();
  for (int i = 0; i < dim_; ++i) s = field_.add(s, field_.mul({digit(x, i)}, {digit(y, i)}));
  return s;
}

Elem Space::norm_slow(PointId x) const { return dot(x, x); }

SpacePtr make_space(std::uint64_t q, int dim, std::uint64_t enumeration_cap) {
  return std::make_shared<const Space>(Field::of_order(q), dim, enumeration_cap);
}

Elem norm(const Field& f, const Point& x) {
  Elem s = f.zero();
  for (auto c : x.coords) s = f.add(s, f.mul(c, c));
  return s;
}

namespace {

// Half-space vectors bucketed by norm: buckets[t] lists indices in F_q^len.
std::vector<std::vector<PointId>> half_buckets(const Field& f, int len) {
  std::vector<std::vector<PointId>> buckets(f.q());
  std::uint64_t count = 1;
  for (int i = 0; i < len; ++i) count *= f.q();
  for (std::uint64_t x = 0; x < count; ++x) {
    std::uint64_t rest = x;
    Elem n = f.zero();
    for (int i = 0; i < len; ++i) {
      const Elem c{static_cast<std::uint32_t>(rest % f.q())};
      rest /= f.q();
      n = f.add(n, f.mul(c, c));
    }
    buckets[n.v].push_back(static_cast<PointId>(x));
  }
  return buckets;
}

}  // namespace

Sphere sphere(const Space& space, Elem t) {
  const Field& f = space.field();
  if (!f.valid(t)) throw InvalidArgument("radius outside the field");
  const int low_len = space.dim() / 2;
  const int high_len = space.dim() - low_len;
  const auto low = half_buckets(f, low_len);
  const auto high = half_buckets(f, high_len);
  std::uint64_t shift = 1;
  for (int i = 0; i < low_len; ++i) shift *= f.q();

  Sphere out{t, {}, f.q(), space.dim()};
  for (std::uint32_t u = 0; u < f.q(); ++u) {
    const Elem rest = f.sub(t, {u});
    for (auto a : low[u])
      for (auto b : high[rest.v]) out.points.push_back(static_cast<PointId>(a + b * shift));
  }
  std::sort(out.points.begin(), out.points.end());
  return out;
}

std::vector<std::uint64_t> sphere_size_histogram(const Space& space) {
  const Field& f = space.field();
  const int low_len = space.dim() / 2;
  const auto low = half_buckets(f, low_len);
  const auto high = half_buckets(f, space.dim() - low_len);
  std::vector<std::uint64_t> sizes(f.q(), 0);
  for (std::uint32_t u = 0; u < f.q(); ++u)
    for (std::uint32_t w = 0; w < f.q(); ++w)
      sizes[f.add({u}, {w}).v] += std::uint64_t{low[u].size()} * high[w].size();
  return sizes;
}

std::int64_t sphere_size_formula(const Field& f, int dim, Elem t) {
  if (dim < 1) throw InvalidArgument("dimension must be at least 1");
  if (!f.valid(t)) throw InvalidArgument("radius outside the field");
  const std::int64_t q = f.q();
  const Elem minus_one = f.neg(f.one());
  const std::int64_t lead = checked_pow(q, dim - 1);
  if (dim % 2 == 1) {
    if (t == f.zero()) return lead;
    const Elem sign = f.pow(minus_one, (dim - 1) / 2);
    return lead + f.chi(f.mul(sign, t)) * checked_pow(q, (dim - 1) / 2);
  }
  const int c = f.chi(f.pow(minus_one, dim / 2));
  if (t == f.zero()) return lead + c * (q - 1) * checked_pow(q, (dim - 2) / 2);
  return lead - c * checked_pow(q, (dim - 2) / 2);
}

Point apply(const Field& f, const OrthogonalMatrix& m, const Point& x) {
  if (static_cast<int>(x.dim()) != m.dim) throw InvalidArgument("matrix and point dimensions differ");
  Point out;
  out.coords.resize(m.dim, f.zero());
  for (int r = 0; r < m.dim; ++r)
    for (int c = 0; c < m.dim; ++c)
      out.coords[r] = f.add(out.coords[r], f.mul(m.at(r, c), x.coords[c]));
  return out;
}

PointId apply(const Space& space, const OrthogonalMatrix& m, PointId x) {
  return space.id(apply(space.field(), m, space.point(x)));
}

Elem determinant(const Field& f, const OrthogonalMatrix& m) {
  // Cofactor expansion; matrices here are at most 3x3.
  auto at = [&](int r, int c) { return m.at(r, c); };
  if (m.dim == 1) return at(0, 0);
  if (m.dim == 2) return f.sub(f.mul(at(0, 0), at(1, 1)), f.mul(at(0, 1), at(1, 0)));
  if (m.dim == 3) {
    Elem det = f.zero();
    for (int c = 0; c < 3; ++c) {
      const int c1 = (c + 1) % 3, c2 = (c + 2) % 3;
      const Elem minor = f.sub(f.mul(at(1, c1), at(2, c2)), f.mul(at(1, c2), at(2, c1)));
      det = f.add(det, f.mul(at(0, c), minor));
    }
    return det;
  }
  throw InvalidArgument("determinant implemented for d <= 3 only");
}

std::vector<OrthogonalMatrix> enumerate_orthogonal(const Space& space, bool special) {
  const Field& f = space.field();
  const int d = space.dim();
  if (d < 2 || d > 3 || f.q() > 7)
    throw InvalidArgument("orthogonal enumeration requires d in {2, 3} and q <= 7");

  const auto unit = sphere(space, f.one()).points;
  std::vector<OrthogonalMatrix> out;
  std::vector<PointId> columns;
  auto extend = [&](auto&& self) -> void {
    if (static_cast<int>(columns.size()) == d) {
      OrthogonalMatrix m{d, std::vector<Elem>(static_cast<std::size_t>(d) * d), false};
      for (int c = 0; c < d; ++c)
        for (int r = 0; r < d; ++r) m.entries[static_cast<std::size_t>(r) * d + c] = space.coord(columns[c], r);
      m.special = determinant(f, m) == f.one();
      if (!special || m.special) out.push_back(std::move(m));
      return;
    }
    for (auto u : unit) {
      bool orthogonal = true;
      for (auto c : columns) {
        if (space.dot(u, c) != f.zero()) {
          orthogonal = false;
          break;
        }
      }
      if (!orthogonal) continue;
      columns.push_back(u);
      self(self);
      columns.pop_back();
    }
  };
  extend(extend);
  return out;
}

bool is_nondegenerate(const Field& f, std::span<const Point> vertices) {
  if (vertices.empty()) throw InvalidArgument("simplex needs at least one vertex");
  const std::size_t d = vertices.front().dim();
  for (const auto& v : vertices)
    if (v.dim() != d) throw InvalidArgument("simplex vertices have mismatched dimensions");
  if (vertices.size() > d + 1) return false;
  std::vector<Row> rows;
  for (std::size_t i = 1; i < vertices.size(); ++i) {
    Row r(d);
    for (std::size_t j = 0; j < d; ++j) r[j] = f.sub(vertices[i].coords[j], vertices[0].coords[j]);
    rows.push_back(std::move(r));
  }
  return rank(f, std::move(rows)) == vertices.size() - 1;
}

bool is_nondegenerate(const Space& space, std::span<const PointId> vertices) {
  std::vector<Point> pts;
  pts.reserve(vertices.size());
  for (auto v : vertices) pts.push_back(space.point(v));
  return is_nondegenerate(space.field(), pts);
}

}  // namespace fqg
