#include "ffs/scheme.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "ffs/error.hpp"
#include "ffs/parallel.hpp"

namespace fqg {

Omega::Omega(SpacePtr space) : space_(std::move(space)) {
  const Space& s = *space_;
  const Field& f = s.field();
  if (s.dim() % 2 == 0) throw InvalidArgument("Omega is defined for odd dimension d = 2k - 1");
  unit_to_line_.assign(s.size(), -1);

  std::vector<PointId> reps;
  for (PointId x = 1; x < s.size(); ++x) {
    // One projective representative per line: first nonzero coordinate is 1.
    int lead = 0;
    while (s.coord(x, lead) == f.zero()) ++lead;
    if (s.coord(x, lead) != f.one()) continue;
    const Elem qx = s.norm(x);
    if (f.chi(qx) != 1) continue;
    const PointId unit = s.scale(f.inv(*f.sqrt(qx)), x);
    if (s.norm(unit) != f.one()) throw ConsistencyError("rescaled line representative is not a unit vector");
    reps.push_back(std::min(unit, s.neg(unit)));
  }
  std::sort(reps.begin(), reps.end());
  for (std::uint32_t id = 0; id < reps.size(); ++id) {
    lines_.push_back({reps[id], id});
    unit_to_line_[reps[id]] = static_cast<std::int32_t>(id);
    unit_to_line_[s.neg(reps[id])] = static_cast<std::int32_t>(id);
  }
}

std::optional<std::uint32_t> Omega::line_of(PointId x) const {
  const Field& f = space_->field();
  if (x == 0 || x >= space_->size()) return std::nullopt;
  const Elem qx = space_->norm(x);
  if (f.chi(qx) != 1) return std::nullopt;
  const PointId unit = space_->scale(f.inv(*f.sqrt(qx)), x);
  const auto id = unit_to_line_[unit];
  if (id < 0) throw ConsistencyError("unit point missing from Omega");
  return static_cast<std::uint32_t>(id);
}

Omega build_omega(SpacePtr space) { return Omega(std::move(space)); }

int relation_count(std::uint32_t q) { return static_cast<int>((q + 1) / 2); }

std::optional<Elem> relation_alpha(const Field& f, int l) {
  if (l < 2 || l > static_cast<int>((f.q() - 1) / 2)) return std::nullopt;
  const Elem two = f.from_int(2);
  return f.mul(two, f.inv(f.exp(static_cast<std::uint64_t>(l - 1))));
}

namespace {

// Relation(s) whose defining value set intersects {plus, minus}.
int classify(const Field& f, Elem plus, Elem minus) {
  const Elem two = f.from_int(2);
  const int top = relation_count(f.q());
  int found = 0, matches = 0;
  auto has = [&](Elem v) { return plus == v || minus == v; };
  if (has(f.zero())) {
    found = 1;
    ++matches;
  }
  if (plus == two && minus == two) {
    found = top;
    ++matches;
  }
  for (int l = 2; l <= top - 1; ++l) {
    if (has(f.add(two, *relation_alpha(f, l)))) {
      found = l;
      ++matches;
    }
  }
  if (matches != 1)
    throw ConsistencyError("line pair matches " + std::to_string(matches) + " scheme relations");
  return found;
}

}  // namespace

int relation_index(const Omega& omega, std::uint32_t u, std::uint32_t v) {
  if (u >= omega.size() || v >= omega.size()) throw InvalidArgument("line id outside Omega");
  if (u == v) return 0;
  const Space& s = omega.space();
  const PointId a = omega.rep(u), b = omega.rep(v);
  return classify(s.field(), s.norm(s.add(a, b)), s.norm(s.sub(a, b)));
}

SchemeColoring::SchemeColoring(const Omega& omega, unsigned workers)
    : n_(omega.size()), classes_(relation_count(omega.space().q())) {
  matrix_.assign(n_ * n_, 0);
  parallel_for(n_, workers, [&](unsigned, std::size_t begin, std::size_t end) {
    for (std::size_t u = begin; u < end; ++u)
      for (std::size_t v = 0; v < n_; ++v)
        if (u != v)
          matrix_[u * n_ + v] = static_cast<std::uint8_t>(
              relation_index(omega, static_cast<std::uint32_t>(u), static_cast<std::uint32_t>(v)));
  });
  adjacency_.assign(classes_ + 1, std::vector<std::vector<std::uint32_t>>(n_));
  for (std::size_t u = 0; u < n_; ++u) {
    for (std::size_t v = 0; v < n_; ++v) {
      if (u == v) continue;
      const int c = matrix_[u * n_ + v];
      if (c != matrix_[v * n_ + u]) symmetric_ = false;
      adjacency_[c][u].push_back(static_cast<std::uint32_t>(v));
    }
  }
}

bool SchemeColoring::is_regular(int c) const {
  if (n_ == 0) return true;
  for (const auto& row : adjacency_[c])
    if (row.size() != adjacency_[c][0].size()) return false;
  return true;
}

DistanceRelationReport verify_distance_relation(const Omega& omega, const SchemeColoring& coloring) {
  const Space& s = omega.space();
  const Field& f = s.field();
  const Elem two = f.from_int(2);
  DistanceRelationReport r;
  for (std::uint32_t u = 0; u < omega.size(); ++u) {
    for (std::uint32_t v = u + 1; v < omega.size(); ++v) {
      const int l = coloring.color(u, v);
      const auto alpha = relation_alpha(f, l);
      if (!alpha) continue;
      ++r.pairs_checked;
      const Elem hi = f.add(two, *alpha), lo = f.sub(two, *alpha);
      const PointId a = omega.rep(u), b = omega.rep(v);
      // ||U - V|| and ||U - (-V)||: both sign choices of V.
      for (const Elem dist : {s.norm(s.sub(a, b)), s.norm(s.add(a, b))}) {
        if (dist != hi && dist != lo && r.ok) {
          r.ok = false;
          r.witness = {u, v};
        }
      }
    }
  }
  return r;
}

DistanceRelationReport verify_distance_relation(const Omega& omega) {
  return verify_distance_relation(omega, SchemeColoring(omega));
}

SchemeReport scheme_report(const Omega& omega, unsigned workers) {
  const Space& s = omega.space();
  const double q = s.q();
  const int d = s.dim();
  if (omega.size() > kDenseSpectrumCap)
    throw CapExceeded("scheme spectra need |Omega| <= " + std::to_string(kDenseSpectrumCap));
  const SchemeColoring coloring(omega, workers);

  SchemeReport r;
  r.q = s.q();
  r.dim = d;
  r.omega_size = omega.size();
  r.omega_ratio = omega.size() / (std::pow(q, d - 1) / 2.0);
  r.symmetric = coloring.is_symmetric();

  std::uint64_t pair_total = 0;
  std::size_t valency_total = 0;
  bool all_regular = true;
  for (int l = 1; l < coloring.color_count(); ++l) {
    RelationReport rel;
    rel.l = l;
    rel.alpha = relation_alpha(s.field(), l);
    rel.regular = coloring.is_regular(l);
    all_regular = all_regular && rel.regular;
    rel.valency = coloring.valency(l);
    for (const auto& row : coloring.adjacency(l)) pair_total += row.size();
    valency_total += rel.valency;
    rel.spectrum = dense_spectrum(coloring.adjacency(l), rel.valency, 0.0);
    rel.certified_c = rel.spectrum.max_nontrivial_abs / std::pow(q, (d - 2) / 2.0);
    rel.valency_ratio = rel.valency / std::pow(q, d - 2);
    r.relations.push_back(std::move(rel));
  }
  const std::uint64_t n = omega.size();
  r.ordered_pairs = pair_total;
  r.partition_ok = all_regular && pair_total == n * (n - 1) && valency_total + 1 == n;
  r.distance = verify_distance_relation(omega, coloring);
  return r;
}

}  // namespace fqg
