#pragma once

#include <algorithm>
#include <atomic>
#include <cmath>
#include <concepts>
#include <cstdint>
#include <limits>
#include <span>
#include <string>
#include <vector>

#include "ffs/error.hpp"
#include "ffs/parallel.hpp"
#include "ffs/rng.hpp"

namespace fqg {

using VertexId = std::uint32_t;

inline constexpr std::uint64_t kDefaultWorkCap = 1'000'000'000;

/// A d-regular graph exposing neighbor iteration.
template <class G>
concept RegularGraph = requires(const G& g, VertexId v) {
  { g.vertex_count() } -> std::convertible_to<std::size_t>;
  { g.valency() } -> std::convertible_to<std::size_t>;
  g.for_each_neighbor(v, [](VertexId) {});
};

/// An edge coloring of the complete graph whose color classes are regular.
/// color(u, u) is negative; colors are in [0, color_count()).
template <class C>
concept EdgeColoring = requires(const C& c, VertexId v, int color) {
  { c.vertex_count() } -> std::convertible_to<std::size_t>;
  { c.color_count() } -> std::convertible_to<int>;
  { c.color(v, v) } -> std::convertible_to<int>;
  { c.valency(color) } -> std::convertible_to<std::size_t>;
  c.for_each_neighbor(v, color, [](VertexId) {});
};

/// One color class of a coloring, viewed as a graph.
template <EdgeColoring C>
class ColorClass {
 public:
  ColorClass(const C& coloring, int color) : coloring_(&coloring), color_(color) {}
  std::size_t vertex_count() const { return coloring_->vertex_count(); }
  std::size_t valency() const { return coloring_->valency(color_); }
  template <class F>
  void for_each_neighbor(VertexId v, F&& f) const {
    coloring_->for_each_neighbor(v, color_, std::forward<F>(f));
  }

 private:
  const C* coloring_;
  int color_;
};

struct VertexSet {
  std::vector<VertexId> members;  // ascending, unique
  std::string label;

  std::size_t size() const { return members.size(); }
  bool empty() const { return members.empty(); }

  static VertexSet all(std::size_t n, std::string label = "V");
  /// Sorts and deduplicates.
  static VertexSet of(std::vector<VertexId> members, std::string label = {});
};

std::vector<std::uint8_t> membership(const VertexSet& s, std::size_t n);
VertexSet random_subset(std::size_t n, std::size_t size, CounterRng& rng, std::string label = {});
/// round(rho * n) distinct vertices.
VertexSet density_subset(std::size_t n, double rho, CounterRng& rng, std::string label = {});

struct VarianceResult {
  double lhs = 0;
  double rhs = 0;
  bool holds = false;
};

struct DiscrepancyResult {
  std::uint64_t edges = 0;
  double expected = 0;
  double deviation = 0;
  double bound = 0;
  bool holds = false;
};

/// Comparison slack for inequalities that can hold with equality.
inline bool within(double lhs, double rhs) { return lhs <= rhs + 1e-9 * std::max(1.0, std::abs(rhs)); }

/// sum_v (|N_B(v)| - (valency/n)|B|)^2 against (lambda^2/n)|B|(n - |B|).
template <RegularGraph G>
VarianceResult neighborhood_variance(const G& g, const VertexSet& b, double lambda) {
  if (b.empty()) throw InvalidArgument("neighborhood_variance: B must be nonempty");
  const std::size_t n = g.vertex_count();
  std::vector<std::uint32_t> hits(n, 0);
  for (auto u : b.members) g.for_each_neighbor(u, [&](VertexId v) { ++hits[v]; });
  const double mean = static_cast<double>(g.valency()) / n * b.size();
  VarianceResult r;
  for (std::size_t v = 0; v < n; ++v) {
    const double dev = hits[v] - mean;
    r.lhs += dev * dev;
  }
  r.rhs = lambda * lambda / n * b.size() * (static_cast<double>(n) - b.size());
  r.holds = within(r.lhs, r.rhs);
  return r;
}

/// Ordered pairs (u, v) in B x C with uv an edge, against lambda sqrt(|B||C|).
template <RegularGraph G>
DiscrepancyResult edge_discrepancy(const G& g, const VertexSet& b, const VertexSet& c, double lambda) {
  if (b.empty() || c.empty()) throw InvalidArgument("edge_discrepancy: B and C must be nonempty");
  const std::size_t n = g.vertex_count();
  const auto in_c = membership(c, n);
  DiscrepancyResult r;
  for (auto u : b.members) g.for_each_neighbor(u, [&](VertexId v) { r.edges += in_c[v]; });
  r.expected = static_cast<double>(g.valency()) / n * b.size() * c.size();
  r.deviation = std::abs(static_cast<double>(r.edges) - r.expected);
  r.bound = lambda * std::sqrt(static_cast<double>(b.size()) * c.size());
  r.holds = within(r.deviation, r.bound);
  return r;
}

struct StarType {
  std::vector<int> colors;
};

struct CountReport {
  std::uint64_t exact_count = 0;
  double predicted = 0;
  double relative_deviation = 0;
  bool hypothesis_satisfied = false;
  /// Smallest lhs/rhs over the size hypotheses (>= 1 means satisfied).
  double hypothesis_ratio = 0;
};

double relative_deviation(double exact, double predicted);

/// Size hypotheses for star counts, with D = (n/valency) * lambda:
///   |E_0|^2 prod_{i in I} |E_i| >= D^{2|I|} for all I, |I| >= 2
///   |E_0| |E_i| >= D^2 for all i
/// Returns the smallest lhs/rhs ratio over all conditions.
double star_hypothesis_ratio(std::size_t center_size, std::span<const std::size_t> leaf_sizes,
                             double n, double valency, double lambda);

/// Per-center star counts prod_i |N^{r_i}_{E_i}(v)|, in the order of center.members.
template <EdgeColoring C>
std::vector<std::uint64_t> star_counts_per_center(const C& coloring, const VertexSet& center,
                                                  std::span<const VertexSet> leaves, const StarType& type,
                                                  unsigned workers = 1) {
  const std::size_t k = type.colors.size();
  if (leaves.size() != k || k == 0) throw InvalidArgument("star counting needs k >= 1 leaf sets, one per color");
  const std::size_t n = coloring.vertex_count();
  for (int c : type.colors)
    if (c < 0 || c >= coloring.color_count()) throw InvalidArgument("star color outside the palette");
  std::vector<std::vector<std::uint8_t>> in_leaf;
  for (const auto& e : leaves) in_leaf.push_back(membership(e, n));

  std::vector<std::uint64_t> out(center.size(), 0);
  parallel_for(center.size(), workers, [&](unsigned, std::size_t begin, std::size_t end) {
    for (std::size_t idx = begin; idx < end; ++idx) {
      const VertexId v = center.members[idx];
      unsigned __int128 prod = 1;
      for (std::size_t i = 0; i < k && prod != 0; ++i) {
        std::uint64_t cnt = 0;
        if (leaves[i].size() < coloring.valency(type.colors[i])) {
          for (auto u : leaves[i].members) cnt += coloring.color(v, u) == type.colors[i];
        } else {
          coloring.for_each_neighbor(v, type.colors[i], [&](VertexId u) { cnt += in_leaf[i][u]; });
        }
        prod *= cnt;
        if (prod > std::numeric_limits<std::uint64_t>::max())
          throw InvalidArgument("star count overflows 64 bits");
      }
      out[idx] = static_cast<std::uint64_t>(prod);
    }
  });
  return out;
}

/// Number of k-stars of the given type with center in E_0 and the i-th leaf
/// in E_i, compared against (prod_i valency_{r_i}/n) prod_{i=0..k} |E_i|.
/// Hypotheses use the smallest valency among the colors and the supplied
/// lambda; they are reported, not enforced.
template <EdgeColoring C>
CountReport count_colored_stars(const C& coloring, const VertexSet& center, std::span<const VertexSet> leaves,
                                const StarType& type, double lambda, unsigned workers = 1) {
  const auto per_center = star_counts_per_center(coloring, center, leaves, type, workers);
  CountReport r;
  unsigned __int128 total = 0;
  for (auto c : per_center) total += c;
  if (total > std::numeric_limits<std::uint64_t>::max()) throw InvalidArgument("star count overflows 64 bits");
  r.exact_count = static_cast<std::uint64_t>(total);

  const double n = static_cast<double>(coloring.vertex_count());
  r.predicted = static_cast<double>(center.size());
  double min_valency = std::numeric_limits<double>::infinity();
  std::vector<std::size_t> sizes;
  for (std::size_t i = 0; i < leaves.size(); ++i) {
    const double val = static_cast<double>(coloring.valency(type.colors[i]));
    r.predicted *= val / n * leaves[i].size();
    min_valency = std::min(min_valency, val);
    sizes.push_back(leaves[i].size());
  }
  r.relative_deviation = relative_deviation(static_cast<double>(r.exact_count), r.predicted);
  r.hypothesis_ratio = star_hypothesis_ratio(center.size(), sizes, n, min_valency, lambda);
  r.hypothesis_satisfied = r.hypothesis_ratio >= 1.0;
  return r;
}

struct PatternEdge {
  int u = 0;
  int v = 0;
  int color = 0;
  friend bool operator==(const PatternEdge&, const PatternEdge&) = default;
};

/// A small colored pattern graph H on ordered vertices 0..s-1.
struct PatternGraph {
  int vertices = 0;
  std::vector<PatternEdge> edges;

  std::vector<int> degrees() const;
  int max_degree() const;
  /// Throws InvalidArgument on loops, repeated edges or out-of-range vertices.
  void validate() const;

  /// Center 0 joined to leaf i+1 by colors[i].
  static PatternGraph star(std::span<const int> colors);
  /// K_k; pair (i, j), i < j, in lexicographic order takes colors[pair index].
  static PatternGraph complete(int k, std::span<const int> colors);
  /// {"s": S, "edges": [[i, j, color], ...]}
  static PatternGraph from_json(const std::string& text);
  std::string to_json() const;
};

/// Color-preserving automorphisms, by brute force over vertex permutations.
std::uint64_t automorphism_count(const PatternGraph& h);

/// Size hypothesis for copies: min_i |E_i| / (lambda (n/valency)^Delta).
double copy_hypothesis_ratio(std::span<const VertexSet> sets, double n, double valency, double lambda,
                             int max_degree);

namespace detail {

struct CopyPlan {
  std::vector<int> order;                              // pattern vertices in placement order
  std::vector<std::vector<std::pair<int, int>>> back;  // per position: (earlier position, color)
};

CopyPlan plan_copies(const PatternGraph& h);

}  // namespace detail

/// Ordered tuples (x_1..x_s), x_i in E_i, such that every edge (i, j) of H
/// has color(x_i, x_j) equal to its prescribed color. Backtracking places
/// pattern vertices by decreasing degree and draws candidates from the
/// colored neighborhood of an already placed neighbor. Throws CapExceeded
/// once more than work_cap candidate tests are needed.
template <EdgeColoring C>
CountReport count_colored_copies(const C& coloring, const PatternGraph& h, std::span<const VertexSet> sets,
                                 std::uint64_t work_cap, double lambda, unsigned workers = 1) {
  h.validate();
  if (static_cast<int>(sets.size()) != h.vertices)
    throw InvalidArgument("count_colored_copies needs one vertex set per pattern vertex");
  if (h.vertices > 6) throw InvalidArgument("patterns are limited to 6 vertices");
  for (const auto& e : h.edges)
    if (e.color < 0 || e.color >= coloring.color_count()) throw InvalidArgument("pattern color outside the palette");

  const std::size_t n = coloring.vertex_count();
  const auto plan = detail::plan_copies(h);
  const int s = h.vertices;
  std::vector<std::vector<std::uint8_t>> in_set;
  for (int pos = 0; pos < s; ++pos) in_set.push_back(membership(sets[plan.order[pos]], n));

  std::atomic<std::uint64_t> work{0};
  std::vector<std::uint64_t> partial(std::max(1u, workers), 0);
  const auto& first = sets[plan.order[0]].members;

  parallel_for(first.size(), workers, [&](unsigned w, std::size_t begin, std::size_t end) {
    std::vector<VertexId> x(s);
    std::uint64_t local_work = 0, count = 0;
    auto flush = [&] {
      if (work.fetch_add(local_work) + local_work > work_cap)
        throw CapExceeded("copy counting exceeded the work cap of " + std::to_string(work_cap) +
                          " tuple tests; use sampling mode");
      local_work = 0;
    };
    auto accepts = [&](int pos, VertexId cand) {
      for (auto [prev, color] : plan.back[pos])
        if (coloring.color(x[prev], cand) != color) return false;
      return true;
    };
    auto place = [&](auto&& self, int pos) -> void {
      if (pos == s) {
        ++count;
        return;
      }
      auto try_candidate = [&](VertexId cand) {
        if (++local_work >= 4096) flush();
        if (!in_set[pos][cand] || !accepts(pos, cand)) return;
        x[pos] = cand;
        self(self, pos + 1);
      };
      if (plan.back[pos].empty()) {
        for (auto cand : sets[plan.order[pos]].members) try_candidate(cand);
      } else {
        const auto [anchor, color] = plan.back[pos].front();
        coloring.for_each_neighbor(x[anchor], color, try_candidate);
      }
    };
    for (std::size_t i = begin; i < end; ++i) {
      x[0] = first[i];
      place(place, 1);
      ++local_work;
    }
    flush();
    partial[w] = count;
  });

  CountReport r;
  for (auto c : partial) r.exact_count += c;
  const double nn = static_cast<double>(n);
  r.predicted = 1.0;
  double min_valency = std::numeric_limits<double>::infinity();
  for (const auto& e : sets) r.predicted *= static_cast<double>(e.size());
  for (const auto& e : h.edges) {
    const double val = static_cast<double>(coloring.valency(e.color));
    r.predicted *= val / nn;
    min_valency = std::min(min_valency, val);
  }
  if (h.edges.empty()) min_valency = nn;
  r.relative_deviation = relative_deviation(static_cast<double>(r.exact_count), r.predicted);
  r.hypothesis_ratio = copy_hypothesis_ratio(sets, nn, min_valency, lambda, h.max_degree());
  r.hypothesis_satisfied = r.hypothesis_ratio >= 1.0;
  return r;
}

struct SampledCount {
  double estimate = 0;
  double std_error = 0;
  std::uint64_t samples = 0;
  std::uint64_t hits = 0;
  double predicted = 0;
};

/// Unbiased estimate of count_colored_copies from uniformly drawn tuples.
template <EdgeColoring C>
SampledCount sample_colored_copies(const C& coloring, const PatternGraph& h, std::span<const VertexSet> sets,
                                   std::uint64_t samples, std::uint64_t seed) {
  h.validate();
  if (static_cast<int>(sets.size()) != h.vertices)
    throw InvalidArgument("sample_colored_copies needs one vertex set per pattern vertex");
  if (samples == 0) throw InvalidArgument("sampling needs at least one sample");
  SampledCount r;
  r.samples = samples;
  double space_size = 1.0;
  for (const auto& e : sets) space_size *= static_cast<double>(e.size());
  r.predicted = space_size;
  for (const auto& e : h.edges)
    r.predicted *= static_cast<double>(coloring.valency(e.color)) / coloring.vertex_count();
  for (const auto& e : sets)
    if (e.empty()) return r;

  CounterRng rng(seed, 0x636f70696573ULL);
  std::vector<VertexId> x(h.vertices);
  for (std::uint64_t t = 0; t < samples; ++t) {
    for (int i = 0; i < h.vertices; ++i) x[i] = sets[i].members[rng.uniform(sets[i].size())];
    bool ok = true;
    for (const auto& e : h.edges) {
      if (coloring.color(x[e.u], x[e.v]) != e.color) {
        ok = false;
        break;
      }
    }
    r.hits += ok;
  }
  const double frac = static_cast<double>(r.hits) / samples;
  r.estimate = frac * space_size;
  r.std_error = space_size * std::sqrt(frac * (1 - frac) / samples);
  return r;
}

/// Single-set variant: copies with every set equal to U, divided by |Aut(H)|.
/// Approximate whenever pattern vertices may coincide.
template <EdgeColoring C>
double unordered_copies(const C& coloring, const PatternGraph& h, const VertexSet& u, std::uint64_t work_cap,
                        double lambda) {
  std::vector<VertexSet> sets(h.vertices, u);
  const auto r = count_colored_copies(coloring, h, sets, work_cap, lambda);
  return static_cast<double>(r.exact_count) / static_cast<double>(automorphism_count(h));
}

}  // namespace fqg
