#include "ffs/simplex.hpp"

#include <array>
#include <cmath>
#include <unordered_set>

#include "ffs/error.hpp"
#include "ffs/euclid_graph.hpp"
#include "ffs/parallel.hpp"
#include "ffs/scheme.hpp"

namespace fqg {

namespace {

constexpr int kMaxDim = 16;
constexpr std::uint64_t kBitmapClasses = std::uint64_t{1} << 26;

// q^{C(k+1,2)}, or nothing if it does not fit in 63 bits.
std::optional<std::uint64_t> class_count(std::uint32_t q, int k) {
  unsigned __int128 c = 1;
  for (int i = 0; i < pair_count(k); ++i) {
    c *= q;
    if (c >> 63) return std::nullopt;
  }
  return static_cast<std::uint64_t>(c);
}

int pair_index(int i, int j, int k) { return i * (k + 1) - i * (i + 1) / 2 + (j - i - 1); }

// Row-echelon basis of the differences x_j - x_0 seen so far. Rows are kept
// in insertion order with unit pivots; each later row is zero at every
// earlier pivot, so one forward pass reduces a new vector.
struct SmallBasis {
  int size = 0;
  std::array<int, kMaxDim> pivot{};
  std::array<std::array<Elem, kMaxDim>, kMaxDim> rows{};

  bool insert(const Field& f, int width, std::array<Elem, kMaxDim> v) {
    for (int r = 0; r < size; ++r) {
      const Elem c = v[pivot[r]];
      if (c == f.zero()) continue;
      for (int j = 0; j < width; ++j) v[j] = f.sub(v[j], f.mul(c, rows[r][j]));
    }
    int p = 0;
    while (p < width && v[p] == f.zero()) ++p;
    if (p == width) return false;
    const Elem inv = f.inv(v[p]);
    for (int j = 0; j < width; ++j) v[j] = f.mul(inv, v[j]);
    rows[size] = v;
    pivot[size] = p;
    ++size;
    return true;
  }
  void pop() { --size; }
};

std::array<Elem, kMaxDim> difference(const Space& s, PointId x, PointId base) {
  std::array<Elem, kMaxDim> v{};
  const PointId diff = s.sub(x, base);
  for (int i = 0; i < s.dim(); ++i) v[i] = s.coord(diff, i);
  return v;
}

// Realized codes, as a bitmap when the class space is small enough.
class CodeSet {
 public:
  explicit CodeSet(std::uint64_t classes) : bitmap_(classes <= kBitmapClasses ? classes : 0, 0) {}

  void insert(std::uint64_t code) {
    if (!bitmap_.empty()) {
      bitmap_[code] = 1;
    } else {
      hashed_.insert(code);
    }
  }
  void merge(const CodeSet& o) {
    for (std::size_t i = 0; i < o.bitmap_.size(); ++i) bitmap_[i] |= o.bitmap_[i];
    hashed_.insert(o.hashed_.begin(), o.hashed_.end());
  }
  std::vector<std::uint64_t> sorted() const {
    std::vector<std::uint64_t> out;
    for (std::size_t i = 0; i < bitmap_.size(); ++i)
      if (bitmap_[i]) out.push_back(i);
    out.insert(out.end(), hashed_.begin(), hashed_.end());
    std::sort(out.begin(), out.end());
    return out;
  }

 private:
  std::vector<std::uint8_t> bitmap_;
  std::unordered_set<std::uint64_t> hashed_;
};

struct CensusSetup {
  std::uint64_t classes;
  std::vector<std::uint64_t> weight;  // q^{pair index}
};

CensusSetup census_setup(const Space& space, const VertexSet& e, int k) {
  if (k < 1) throw InvalidArgument("census needs k >= 1");
  if (space.dim() > kMaxDim) throw InvalidArgument("census supports d <= 16");
  for (auto v : e.members)
    if (v >= space.size()) throw InvalidArgument("census set contains a point outside F_q^d");
  const auto classes = class_count(space.q(), k);
  if (!classes) throw InvalidArgument("edge-norm vectors for this (q, k) do not fit in 64-bit codes");
  CensusSetup s{*classes, std::vector<std::uint64_t>(pair_count(k))};
  std::uint64_t w = 1;
  for (auto& x : s.weight) {
    x = w;
    w *= space.q();
  }
  return s;
}

void finish(CensusResult& r, const CodeSet& codes) {
  r.realized = codes.sorted();
  r.count = r.realized.size();
  r.lower_bound_fraction = static_cast<double>(r.count) / static_cast<double>(r.classes);
}

}  // namespace

std::uint64_t EdgeNormVector::encode(std::uint32_t q) const {
  if (!class_count(q, k)) throw InvalidArgument("edge-norm vector code does not fit in 64 bits");
  std::uint64_t code = 0, w = 1;
  for (auto a : entries) {
    code += a.v * w;
    w *= q;
  }
  return code;
}

EdgeNormVector EdgeNormVector::decode(std::uint64_t code, int k, std::uint32_t q) {
  EdgeNormVector v{k, {}};
  for (int i = 0; i < pair_count(k); ++i) {
    v.entries.push_back({static_cast<std::uint32_t>(code % q)});
    code /= q;
  }
  return v;
}

EdgeNormVector edge_norm_vector(const Field& f, std::span<const Point> tuple) {
  if (tuple.empty()) throw InvalidArgument("edge-norm vector needs at least one point");
  EdgeNormVector v{static_cast<int>(tuple.size()) - 1, {}};
  for (std::size_t i = 0; i < tuple.size(); ++i) {
    if (tuple[i].dim() != tuple[0].dim()) throw InvalidArgument("tuple points have mismatched dimensions");
    for (std::size_t j = i + 1; j < tuple.size(); ++j) {
      Point diff{std::vector<Elem>(tuple[0].dim())};
      for (std::size_t c = 0; c < tuple[0].dim(); ++c)
        diff.coords[c] = f.sub(tuple[i].coords[c], tuple[j].coords[c]);
      v.entries.push_back(norm(f, diff));
    }
  }
  return v;
}

EdgeNormVector edge_norm_vector(const Space& space, std::span<const PointId> tuple) {
  if (tuple.empty()) throw InvalidArgument("edge-norm vector needs at least one point");
  EdgeNormVector v{static_cast<int>(tuple.size()) - 1, {}};
  for (std::size_t i = 0; i < tuple.size(); ++i)
    for (std::size_t j = i + 1; j < tuple.size(); ++j) v.entries.push_back(space.norm(space.sub(tuple[i], tuple[j])));
  return v;
}

std::optional<Congruence> find_congruence(const Space& space, std::span<const OrthogonalMatrix> group,
                                          std::span<const PointId> p, std::span<const PointId> p2) {
  if (p.size() != p2.size() || p.empty()) throw InvalidArgument("congruence needs two tuples of equal length");
  for (const auto& o : group) {
    const PointId tau = space.sub(p2[0], apply(space, o, p[0]));
    bool ok = true;
    for (std::size_t i = 1; i < p.size() && ok; ++i) ok = space.add(apply(space, o, p[i]), tau) == p2[i];
    if (ok) return Congruence{o, tau};
  }
  return std::nullopt;
}

bool verify_congruence_lemma(const Space& space, std::span<const PointId> p, std::span<const PointId> p2) {
  if (p.size() != p2.size()) throw InvalidArgument("congruence needs two tuples of equal length");
  if (!is_nondegenerate(space, p) || !is_nondegenerate(space, p2))
    throw InvalidArgument("congruence lemma applies to nondegenerate simplexes only");
  const auto group = enumerate_orthogonal(space, true);
  return find_congruence(space, group, p, p2).has_value();
}

CongruenceCheckReport congruence_check(const Space& space, std::uint64_t trials, std::uint64_t seed) {
  const auto full = enumerate_orthogonal(space, false);
  std::vector<OrthogonalMatrix> special;
  for (const auto& o : full)
    if (o.special) special.push_back(o);

  CongruenceCheckReport r;
  r.q = space.q();
  r.dim = space.dim();
  r.trials = trials;
  r.seed = seed;
  CounterRng rng(seed, 0x636f6e67);
  const int d = space.dim();
  auto random_simplex = [&](int k) {
    std::vector<PointId> t(k + 1);
    do {
      for (auto& x : t) x = static_cast<PointId>(rng.uniform(space.size()));
    } while (!is_nondegenerate(space, t));
    return t;
  };
  for (std::uint64_t trial = 0; trial < trials; ++trial) {
    CongruenceTrial t;
    t.k = 1 + static_cast<int>(rng.uniform(d));
    t.p = random_simplex(t.k);
    t.image = rng.uniform(2) == 0;
    if (t.image) {
      const auto& o = full[rng.uniform(full.size())];
      const auto tau = static_cast<PointId>(rng.uniform(space.size()));
      for (auto x : t.p) t.p2.push_back(space.add(apply(space, o, x), tau));
    } else {
      t.p2 = random_simplex(t.k);
    }
    t.norms_equal = edge_norm_vector(space, t.p) == edge_norm_vector(space, t.p2);
    t.special = find_congruence(space, special, t.p, t.p2).has_value();
    t.full = find_congruence(space, full, t.p, t.p2).has_value();
    r.image_pairs += t.image;
    r.norms_equal += t.norms_equal;
    if (t.special == t.norms_equal) {
      ++r.agree_special;
    } else if (!r.first_special_mismatch) {
      r.first_special_mismatch = t;
    }
    if (t.full == t.norms_equal) {
      ++r.agree_full;
    } else if (!r.first_full_mismatch) {
      r.first_full_mismatch = t;
    }
  }
  return r;
}

std::string to_string(CensusMode m) { return m == CensusMode::exact ? "exact" : "sampled"; }

CensusResult census_exact(const Space& space, const VertexSet& e, int k, std::uint64_t work_cap, unsigned workers) {
  const auto setup = census_setup(space, e, k);
  const Field& f = space.field();
  const std::size_t m = e.size();

  // |E|^j for the degenerate completions of a cut prefix.
  std::vector<std::uint64_t> power(k + 2, 1);
  for (int j = 1; j <= k + 1; ++j) {
    const unsigned __int128 next = static_cast<unsigned __int128>(power[j - 1]) * m;
    if (next > work_cap)
      throw CapExceeded("exact census needs |E|^(k+1) <= " + std::to_string(work_cap) + "; use sampling mode");
    power[j] = static_cast<std::uint64_t>(next);
  }

  CensusResult r;
  r.k = k;
  r.mode = CensusMode::exact;
  r.classes = setup.classes;
  r.tuples = power[k + 1];
  r.workers = std::max(1u, workers);

  std::vector<CodeSet> codes(r.workers, CodeSet(setup.classes));
  std::vector<std::uint64_t> nondeg(r.workers, 0);
  parallel_for(m, workers, [&](unsigned w, std::size_t begin, std::size_t end) {
    std::vector<PointId> x(k + 1);
    SmallBasis basis;
    std::vector<std::uint64_t> code(k + 1, 0);
    auto extend = [&](auto&& self, int j) -> void {
      if (j == k + 1) {
        codes[w].insert(code[k]);
        ++nondeg[w];
        return;
      }
      for (auto v : e.members) {
        if (!basis.insert(f, space.dim(), difference(space, v, x[0]))) continue;
        x[j] = v;
        std::uint64_t c = code[j - 1];
        for (int i = 0; i < j; ++i) c += space.norm(space.sub(x[i], v)).v * setup.weight[pair_index(i, j, k)];
        code[j] = c;
        self(self, j + 1);
        basis.pop();
      }
    };
    for (std::size_t i = begin; i < end; ++i) {
      x[0] = e.members[i];
      code[0] = 0;
      extend(extend, 1);
    }
  });

  for (unsigned w = 1; w < r.workers; ++w) codes[0].merge(codes[w]);
  for (auto c : nondeg) r.nondegenerate += c;
  r.degenerate = r.tuples - r.nondegenerate;
  finish(r, codes[0]);
  return r;
}

CensusResult census_sampled(const Space& space, const VertexSet& e, int k, std::uint64_t samples,
                            std::uint64_t seed, unsigned workers) {
  const auto setup = census_setup(space, e, k);
  const Field& f = space.field();
  CensusResult r;
  r.k = k;
  r.mode = CensusMode::sampled;
  r.classes = setup.classes;
  r.tuples = samples;
  r.sample_size = samples;
  r.workers = std::max(1u, workers);

  std::vector<CodeSet> codes(r.workers, CodeSet(setup.classes));
  std::vector<std::uint64_t> nondeg(r.workers, 0);
  if (!e.empty()) {
    parallel_for(r.workers, r.workers, [&](unsigned, std::size_t begin, std::size_t end) {
      for (std::size_t w = begin; w < end; ++w) {
        const std::uint64_t share = samples / r.workers + (w < samples % r.workers ? 1 : 0);
        CounterRng rng(seed, w);
        std::vector<PointId> x(k + 1);
        for (std::uint64_t t = 0; t < share; ++t) {
          for (auto& v : x) v = e.members[rng.uniform(e.size())];
          SmallBasis basis;
          std::uint64_t code = 0;
          bool ok = true;
          for (int j = 1; j <= k && ok; ++j) {
            ok = basis.insert(f, space.dim(), difference(space, x[j], x[0]));
            for (int i = 0; i < j && ok; ++i)
              code += space.norm(space.sub(x[i], x[j])).v * setup.weight[pair_index(i, j, k)];
          }
          if (!ok) continue;
          codes[w].insert(code);
          ++nondeg[w];
        }
      }
    });
  }
  for (unsigned w = 1; w < r.workers; ++w) codes[0].merge(codes[w]);
  for (auto c : nondeg) r.nondegenerate += c;
  r.degenerate = e.empty() ? 0 : samples - r.nondegenerate;
  finish(r, codes[0]);
  return r;
}

MainTheoremReport main_theorem_experiment(std::uint64_t q, int k, double density, std::uint64_t seed,
                                          std::uint64_t samples, unsigned workers, std::uint64_t enumeration_cap) {
  if (k < 1) throw InvalidArgument("main-theorem experiment needs k >= 1");
  const auto space = make_space(q, 2 * k - 1, enumeration_cap);
  CounterRng rng(seed, kSetStream);
  const auto e = density_subset(space->size(), density, rng, "E");

  MainTheoremReport r;
  r.q = space->q();
  r.k = k;
  r.dim = space->dim();
  r.density = density;
  r.set_size = e.size();
  r.hypothesis_ratio = e.size() / std::pow(static_cast<double>(q), 2 * k - 1 - 1.0 / (2 * k));
  r.below_hypothesis = r.hypothesis_ratio < 1.0;
  r.census = census_sampled(*space, e, k, samples, seed, workers);
  r.measured_c = r.census.lower_bound_fraction;
  return r;
}

PipelineReport proof_pipeline(const SpacePtr& space_ptr, const VertexSet& e, int k, std::span<const Elem> type,
                              std::uint64_t work_cap, unsigned workers) {
  const Space& space = *space_ptr;
  const Field& f = space.field();
  if (k < 2) throw InvalidArgument("pipeline needs k >= 2");
  if (space.dim() != 2 * k - 1) throw InvalidArgument("pipeline runs in F_q^(2k-1)");
  if (static_cast<int>(type.size()) != k) throw InvalidArgument("star type needs k values a_12..a_1(k+1)");
  for (auto a : type)
    if (!f.valid(a) || f.chi(a) != 1) throw InvalidArgument("star type entries must be nonzero squares");
  if (e.empty()) throw InvalidArgument("pipeline needs a nonempty set E");

  PipelineReport r;
  r.q = space.q();
  r.k = k;
  r.dim = space.dim();
  r.set_size = e.size();
  r.type.assign(type.begin(), type.end());

  // Stars of the requested type with every vertex in E.
  const NormColoring coloring(space_ptr);
  StarType star;
  for (auto a : type) {
    star.colors.push_back(static_cast<int>(a.v));
    const auto spec = character_spectrum(EuclideanGraph(space_ptr, a), workers);
    r.lambda = std::max(r.lambda, spec.max_nontrivial_abs);
  }
  const std::vector<VertexSet> leaves(k, e);
  const auto per_center = star_counts_per_center(coloring, e, leaves, star, workers);
  r.stars = count_colored_stars(coloring, e, leaves, star, r.lambda, workers);
  std::size_t best = 0;
  for (std::size_t i = 1; i < per_center.size(); ++i)
    if (per_center[i] > per_center[best]) best = i;
  r.center = e.members[best];
  r.center_stars = per_center[best];
  r.pigeonhole_bound = static_cast<double>(r.stars.exact_count) / e.size();

  // Sphere slices around the center, pushed to the unit sphere and to lines.
  const Omega omega(space_ptr);
  r.omega_size = omega.size();
  std::vector<VertexSet> line_sets;
  std::uint64_t slice_product = 1;
  bool invariants = true;
  for (auto a : type) {
    PipelineSphere ps;
    ps.a = a;
    const Elem scale = f.inv(*f.sqrt(a));
    std::vector<VertexId> lines;
    for (auto v : e.members) {
      if (coloring.color(r.center, v) != static_cast<int>(a.v)) continue;
      ++ps.sphere_subset;
      const PointId moved = space.sub(v, r.center);
      ps.on_sphere = ps.on_sphere && space.norm(moved) == a;
      const PointId unit = space.scale(scale, moved);
      ps.unit_norm = ps.unit_norm && space.norm(unit) == f.one();
      const auto line = omega.line_of(unit);
      if (!line) throw ConsistencyError("rescaled sphere point has no line in Omega");
      lines.push_back(*line);
    }
    auto set = VertexSet::of(std::move(lines));
    ps.lines = set.size();
    ps.half_bound = 2 * ps.lines >= ps.sphere_subset;
    invariants = invariants && ps.on_sphere && ps.unit_norm && ps.half_bound;
    slice_product *= ps.sphere_subset;
    line_sets.push_back(std::move(set));
    r.spheres.push_back(ps);
  }
  r.slices_match_center = slice_product == r.center_stars;
  invariants = invariants && r.slices_match_center;

  // Colored complete graphs across E'_2..E'_{k+1}, one count per color pattern.
  const SchemeColoring scheme(omega, workers);
  const int classes = relation_count(space.q());
  const int pairs = k * (k - 1) / 2;
  std::vector<int> colors(pairs, 1);
  r.patterns = 1;
  for (int i = 0; i < pairs; ++i) r.patterns *= classes;
  for (std::uint64_t p = 0; p < r.patterns; ++p) {
    std::uint64_t rest = p;
    for (int i = 0; i < pairs; ++i) {
      colors[i] = 1 + static_cast<int>(rest % classes);
      rest /= classes;
    }
    const auto h = PatternGraph::complete(k, colors);
    const auto count = count_colored_copies(scheme, h, line_sets, work_cap, 0.0, workers);
    r.pattern_counts.push_back(count.exact_count);
    r.end_count += count.exact_count;
    r.patterns_realized += count.exact_count > 0;
  }
  r.invariants_hold = invariants && r.end_count > 0;
  return r;
}

}  // namespace fqg
