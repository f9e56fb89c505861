#include "ffs/euclid_graph.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "ffs/error.hpp"
#include "ffs/parallel.hpp"
#include "ffs/spectral.hpp"

namespace fqg {

EuclideanGraph::EuclideanGraph(SpacePtr space, Elem a) : space_(std::move(space)), a_(a) {
  if (!space_->field().valid(a)) throw InvalidArgument("edge norm outside the field");
  in_connection_.assign(space_->size(), 0);
  for (auto s : sphere(*space_, a).points) {
    if (s == 0) continue;
    connection_.push_back(s);
    in_connection_[s] = 1;
  }
}

EuclideanGraph build_graph(SpacePtr space, Elem a) {
  if (space->dim() < 2) throw InvalidArgument("Euclidean graphs need d >= 2");
  return EuclideanGraph(std::move(space), a);
}

NormColoring::NormColoring(SpacePtr space) : space_(std::move(space)), offsets_(space_->q()) {
  for (PointId x = 1; x < space_->size(); ++x) offsets_[space_->norm(x).v].push_back(x);
}

std::string to_string(SpectrumMethod m) {
  return m == SpectrumMethod::character_sum ? "character_sum" : "dense";
}

SpectrumReport character_spectrum(const EuclideanGraph& g, unsigned workers) {
  const Space& space = g.space();
  const Field& f = space.field();
  const std::uint32_t q = f.q();
  const int d = space.dim();
  const std::size_t n = g.vertex_count();

  std::vector<double> re_of(q), im_of(q);
  for (std::uint32_t t = 0; t < q; ++t) {
    const double angle = 2.0 * std::numbers::pi * f.trace({t}) / f.p();
    re_of[t] = std::cos(angle);
    im_of[t] = std::sin(angle);
  }

  const auto conn = g.connection_set();
  std::vector<std::uint32_t> conn_digits;
  conn_digits.reserve(conn.size() * d);
  for (auto s : conn)
    for (int i = 0; i < d; ++i) conn_digits.push_back(space.coord(s, i).v);

  std::vector<double> lambda(n);
  std::vector<double> residual(std::max(1u, workers), 0.0);
  parallel_for(n, workers, [&](unsigned w, std::size_t begin, std::size_t end) {
    std::vector<std::uint64_t> hist(q);
    std::vector<std::uint32_t> m(d);
    for (std::size_t idx = begin; idx < end; ++idx) {
      const auto mid = static_cast<PointId>(idx);
      for (int i = 0; i < d; ++i) m[i] = space.coord(mid, i).v;
      std::fill(hist.begin(), hist.end(), 0);
      for (std::size_t s = 0; s < conn.size(); ++s) {
        const std::uint32_t* sd = &conn_digits[s * d];
        if (f.e() == 1) {
          std::uint64_t acc = 0;
          for (int i = 0; i < d; ++i) acc += std::uint64_t{m[i]} * sd[i];
          ++hist[acc % q];
        } else {
          Elem acc = f.zero();
          for (int i = 0; i < d; ++i) acc = f.add(acc, f.mul({m[i]}, {sd[i]}));
          ++hist[acc.v];
        }
      }
      double re = 0, im = 0;
      for (std::uint32_t t = 0; t < q; ++t) {
        if (hist[t] == 0) continue;
        re += static_cast<double>(hist[t]) * re_of[t];
        im += static_cast<double>(hist[t]) * im_of[t];
      }
      lambda[idx] = re;
      residual[w] = std::max(residual[w], std::abs(im));
    }
  });

  SpectrumReport r;
  r.n = n;
  r.method = SpectrumMethod::character_sum;
  r.max_imaginary_residual = *std::max_element(residual.begin(), residual.end());
  if (r.max_imaginary_residual > kImaginaryTolerance)
    throw ConsistencyError("character sum has imaginary residual " +
                           std::to_string(r.max_imaginary_residual));
  r.trivial_eigenvalue = lambda[0];
  for (std::size_t m = 1; m < n; ++m) r.max_nontrivial_abs = std::max(r.max_nontrivial_abs, std::abs(lambda[m]));
  r.bound = 2.0 * std::pow(static_cast<double>(q), (d - 1) / 2.0);
  r.eigenvalues = std::move(lambda);
  std::sort(r.eigenvalues.begin(), r.eigenvalues.end());
  return r;
}

SpectrumReport dense_spectrum(const std::vector<std::vector<std::uint32_t>>& adjacency,
                              std::size_t valency, double bound) {
  const std::size_t n = adjacency.size();
  if (n > kDenseSpectrumCap)
    throw CapExceeded("dense spectrum needs n <= " + std::to_string(kDenseSpectrumCap) + ", got " +
                      std::to_string(n) + "; use the character-sum method");
  std::vector<double> matrix(n * n, 0.0);
  for (std::size_t u = 0; u < n; ++u)
    for (auto v : adjacency[u]) matrix[u * n + v] = 1.0;

  SpectrumReport r;
  r.n = n;
  r.method = SpectrumMethod::dense;
  r.bound = bound;
  r.eigenvalues = symmetric_eigenvalues(matrix, n);
  r.trivial_eigenvalue = static_cast<double>(valency);
  if (n == 0) return r;
  std::size_t trivial_at = 0;
  for (std::size_t i = 1; i < n; ++i)
    if (std::abs(r.eigenvalues[i] - r.trivial_eigenvalue) < std::abs(r.eigenvalues[trivial_at] - r.trivial_eigenvalue))
      trivial_at = i;
  for (std::size_t i = 0; i < n; ++i)
    if (i != trivial_at) r.max_nontrivial_abs = std::max(r.max_nontrivial_abs, std::abs(r.eigenvalues[i]));
  return r;
}

SpectrumReport dense_spectrum(const EuclideanGraph& g) {
  const std::size_t n = g.vertex_count();
  if (n > kDenseSpectrumCap)
    throw CapExceeded("dense spectrum needs n <= " + std::to_string(kDenseSpectrumCap) + ", got " +
                      std::to_string(n) + "; use the character-sum method");
  std::vector<std::vector<std::uint32_t>> adjacency(n);
  for (PointId x = 0; x < n; ++x) g.for_each_neighbor(x, [&](PointId y) { adjacency[x].push_back(y); });
  const double bound = 2.0 * std::pow(static_cast<double>(g.space().q()), (g.space().dim() - 1) / 2.0);
  return dense_spectrum(adjacency, g.valency(), bound);
}

RamanujanCheck check_ramanujan_bound(const SpectrumReport& report) {
  // Slack absorbs floating rounding when an eigenvalue sits exactly on the bound.
  const double slack = 1e-9 * std::max(1.0, report.bound);
  return {report.max_nontrivial_abs <= report.bound + slack, report.bound - report.max_nontrivial_abs};
}

}  // namespace fqg
