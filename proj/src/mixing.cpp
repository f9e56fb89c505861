#include "ffs/mixing.hpp"

#include <bit>
#include <json.hpp>
#include <numeric>
#include <set>

namespace fqg {

VertexSet VertexSet::all(std::size_t n, std::string label) {
  VertexSet s;
  s.members.resize(n);
  std::iota(s.members.begin(), s.members.end(), VertexId{0});
  s.label = std::move(label);
  return s;
}

VertexSet VertexSet::of(std::vector<VertexId> members, std::string label) {
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  return {std::move(members), std::move(label)};
}

std::vector<std::uint8_t> membership(const VertexSet& s, std::size_t n) {
  std::vector<std::uint8_t> in(n, 0);
  for (auto v : s.members) {
    if (v >= n) throw InvalidArgument("vertex set member outside the vertex universe");
    in[v] = 1;
  }
  return in;
}

VertexSet random_subset(std::size_t n, std::size_t size, CounterRng& rng, std::string label) {
  return {sample_without_replacement(n, size, rng), std::move(label)};
}

VertexSet density_subset(std::size_t n, double rho, CounterRng& rng, std::string label) {
  if (!(rho > 0.0 && rho <= 1.0)) throw InvalidArgument("density must lie in (0, 1]");
  const auto size = static_cast<std::size_t>(std::llround(rho * static_cast<double>(n)));
  return random_subset(n, size, rng, std::move(label));
}

double relative_deviation(double exact, double predicted) {
  if (predicted > 0) return std::abs(exact - predicted) / predicted;
  return exact == 0 ? 0.0 : std::numeric_limits<double>::infinity();
}

double star_hypothesis_ratio(std::size_t center_size, std::span<const std::size_t> leaf_sizes, double n,
                             double valency, double lambda) {
  if (center_size == 0) return 0.0;
  for (auto s : leaf_sizes)
    if (s == 0) return 0.0;
  if (lambda <= 0) return std::numeric_limits<double>::infinity();
  if (valency <= 0) return 0.0;
  const double log_d = std::log(n / valency * lambda);
  const double log_e0 = std::log(static_cast<double>(center_size));
  const std::size_t k = leaf_sizes.size();
  double worst = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < k; ++i)
    worst = std::min(worst, log_e0 + std::log(static_cast<double>(leaf_sizes[i])) - 2 * log_d);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << k); ++mask) {
    const int bits = std::popcount(mask);
    if (bits < 2) continue;
    double lhs = 2 * log_e0;
    for (std::size_t i = 0; i < k; ++i)
      if (mask >> i & 1) lhs += std::log(static_cast<double>(leaf_sizes[i]));
    worst = std::min(worst, lhs - 2.0 * bits * log_d);
  }
  return std::exp(worst);
}

double copy_hypothesis_ratio(std::span<const VertexSet> sets, double n, double valency, double lambda,
                             int max_degree) {
  std::size_t smallest = std::numeric_limits<std::size_t>::max();
  for (const auto& s : sets) smallest = std::min(smallest, s.size());
  if (sets.empty() || smallest == 0) return 0.0;
  if (lambda <= 0) return std::numeric_limits<double>::infinity();
  if (valency <= 0) return 0.0;
  return std::exp(std::log(static_cast<double>(smallest)) - std::log(lambda) - max_degree * std::log(n / valency));
}

std::vector<int> PatternGraph::degrees() const {
  std::vector<int> deg(vertices, 0);
  for (const auto& e : edges) {
    ++deg[e.u];
    ++deg[e.v];
  }
  return deg;
}

int PatternGraph::max_degree() const {
  const auto deg = degrees();
  return deg.empty() ? 0 : *std::max_element(deg.begin(), deg.end());
}

void PatternGraph::validate() const {
  if (vertices < 1) throw InvalidArgument("pattern needs at least one vertex");
  std::set<std::pair<int, int>> seen;
  for (const auto& e : edges) {
    if (e.u < 0 || e.v < 0 || e.u >= vertices || e.v >= vertices)
      throw InvalidArgument("pattern edge endpoint out of range");
    if (e.u == e.v) throw InvalidArgument("pattern graphs must not contain loops");
    if (!seen.insert(std::minmax(e.u, e.v)).second) throw InvalidArgument("pattern graphs must be simple");
  }
}

PatternGraph PatternGraph::star(std::span<const int> colors) {
  PatternGraph h{static_cast<int>(colors.size()) + 1, {}};
  for (std::size_t i = 0; i < colors.size(); ++i) h.edges.push_back({0, static_cast<int>(i) + 1, colors[i]});
  return h;
}

PatternGraph PatternGraph::complete(int k, std::span<const int> colors) {
  if (colors.size() != static_cast<std::size_t>(k * (k - 1) / 2))
    throw InvalidArgument("complete pattern needs one color per vertex pair");
  PatternGraph h{k, {}};
  std::size_t idx = 0;
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j) h.edges.push_back({i, j, colors[idx++]});
  return h;
}

PatternGraph PatternGraph::from_json(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw InvalidArgument(std::string("pattern file is not valid JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("s") || !doc.contains("edges"))
    throw InvalidArgument("pattern file must be an object with keys \"s\" and \"edges\"");
  PatternGraph h;
  try {
    h.vertices = doc.at("s").get<int>();
    for (const auto& e : doc.at("edges")) {
      if (!e.is_array() || e.size() != 3) throw InvalidArgument("each pattern edge must be [i, j, color]");
      h.edges.push_back({e[0].get<int>(), e[1].get<int>(), e[2].get<int>()});
    }
  } catch (const nlohmann::json::exception& e) {
    throw InvalidArgument(std::string("malformed pattern file: ") + e.what());
  }
  h.validate();
  return h;
}

std::string PatternGraph::to_json() const {
  nlohmann::json doc;
  doc["s"] = vertices;
  doc["edges"] = nlohmann::json::array();
  for (const auto& e : edges) doc["edges"].push_back({e.u, e.v, e.color});
  return doc.dump();
}

std::uint64_t automorphism_count(const PatternGraph& h) {
  h.validate();
  std::vector<std::vector<int>> color(h.vertices, std::vector<int>(h.vertices, -1));
  for (const auto& e : h.edges) color[e.u][e.v] = color[e.v][e.u] = e.color;
  std::vector<int> perm(h.vertices);
  std::iota(perm.begin(), perm.end(), 0);
  std::uint64_t count = 0;
  do {
    bool ok = true;
    for (int i = 0; i < h.vertices && ok; ++i)
      for (int j = 0; j < h.vertices && ok; ++j) ok = color[i][j] == color[perm[i]][perm[j]];
    count += ok;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return count;
}

namespace detail {

CopyPlan plan_copies(const PatternGraph& h) {
  CopyPlan plan;
  const auto deg = h.degrees();
  plan.order.resize(h.vertices);
  std::iota(plan.order.begin(), plan.order.end(), 0);
  std::stable_sort(plan.order.begin(), plan.order.end(), [&](int a, int b) { return deg[a] > deg[b]; });
  std::vector<int> pos(h.vertices);
  for (int i = 0; i < h.vertices; ++i) pos[plan.order[i]] = i;
  plan.back.resize(h.vertices);
  for (const auto& e : h.edges) {
    const int pu = pos[e.u], pv = pos[e.v];
    if (pu < pv) {
      plan.back[pv].emplace_back(pu, e.color);
    } else {
      plan.back[pu].emplace_back(pv, e.color);
    }
  }
  for (auto& b : plan.back) std::sort(b.begin(), b.end());
  return plan;
}

}  // namespace detail
}  // namespace fqg
