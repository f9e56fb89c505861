#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ffs/geometry.hpp"
#include "ffs/mixing.hpp"

namespace fqg {

/// The C(k+1,2) norms a_ij = ||x_i - x_j||, i < j, in row-major pair order
/// (0,1), (0,2), ..., (0,k), (1,2), ...
struct EdgeNormVector {
  int k = 0;
  std::vector<Elem> entries;

  /// sum_idx entries[idx] * q^idx. Requires q^{C(k+1,2)} < 2^64.
  std::uint64_t encode(std::uint32_t q) const;
  static EdgeNormVector decode(std::uint64_t code, int k, std::uint32_t q);
  friend bool operator==(const EdgeNormVector&, const EdgeNormVector&) = default;
};

/// Stream used to draw the point set E in experiments.
inline constexpr std::uint64_t kSetStream = 0x736574;

inline int pair_count(int k) { return k * (k + 1) / 2; }

EdgeNormVector edge_norm_vector(const Field& f, std::span<const Point> tuple);
EdgeNormVector edge_norm_vector(const Space& space, std::span<const PointId> tuple);

struct Congruence {
  OrthogonalMatrix o;
  PointId tau = 0;
};

/// First O in `group` (in enumeration order) with O(P_i) + tau = P'_i for
/// all i, where tau = P'_0 - O(P_0).
std::optional<Congruence> find_congruence(const Space& space, std::span<const OrthogonalMatrix> group,
                                          std::span<const PointId> p, std::span<const PointId> p2);

/// Whether P' = O(P) + tau for some translation tau and O in SO_d(F_q).
/// Both tuples must be nondegenerate and of equal length; d in {2, 3}, q <= 7.
bool verify_congruence_lemma(const Space& space, std::span<const PointId> p, std::span<const PointId> p2);

struct CongruenceTrial {
  int k = 0;
  bool image = false;  // P' was built as an isometric image of P
  bool norms_equal = false;
  bool special = false;  // congruent under SO_d
  bool full = false;     // congruent under O_d
  std::vector<PointId> p, p2;
};

struct CongruenceCheckReport {
  std::uint32_t q = 0;
  int dim = 0;
  std::uint64_t trials = 0;
  std::uint64_t seed = 0;
  std::uint64_t image_pairs = 0;
  std::uint64_t norms_equal = 0;
  std::uint64_t agree_special = 0;
  std::uint64_t agree_full = 0;
  std::optional<CongruenceTrial> first_special_mismatch;
  std::optional<CongruenceTrial> first_full_mismatch;
};

/// Seeded nondegenerate pairs: k uniform in [1, d], P uniform nondegenerate,
/// and P' either O(P) + tau for uniform O in O_d(F_q) and tau in F_q^d, or an
/// independent uniform nondegenerate tuple, with probability 1/2 each. Every
/// pair compares isometry search (SO_d and O_d) with edge-norm equality.
CongruenceCheckReport congruence_check(const Space& space, std::uint64_t trials, std::uint64_t seed);

enum class CensusMode { exact, sampled };

std::string to_string(CensusMode m);

struct CensusResult {
  int k = 0;
  CensusMode mode = CensusMode::exact;
  std::vector<std::uint64_t> realized;  // ascending EdgeNormVector codes
  std::uint64_t count = 0;
  std::uint64_t classes = 0;  // q^{C(k+1,2)}
  double lower_bound_fraction = 0;
  std::uint64_t tuples = 0;          // exact: |E|^{k+1}; sampled: draws
  std::uint64_t nondegenerate = 0;   // tuples with full-rank differences
  std::uint64_t degenerate = 0;
  std::uint64_t sample_size = 0;     // sampled mode only
  unsigned workers = 1;
};

/// Every (k+1)-tuple of E, extended vertex by vertex; prefixes whose
/// differences lose rank are cut and their completions counted as degenerate
/// without being visited. Gated by |E|^{k+1} <= work_cap (CapExceeded).
/// Workers split the first vertex; realized sets are merged at the end.
CensusResult census_exact(const Space& space, const VertexSet& e, int k, std::uint64_t work_cap,
                          unsigned workers = 1);

/// `samples` tuples drawn uniformly with replacement from E^{k+1}. Worker w
/// takes its share of the budget from CounterRng(seed, w), so the result is
/// fixed for a given worker count and only grows with the budget. The
/// realized set is a certified lower bound.
CensusResult census_sampled(const Space& space, const VertexSet& e, int k, std::uint64_t samples,
                            std::uint64_t seed, unsigned workers = 1);

struct MainTheoremReport {
  std::uint32_t q = 0;
  int k = 0;
  int dim = 0;
  double density = 0;
  std::uint64_t set_size = 0;
  double hypothesis_ratio = 0;  // |E| / q^{2k-1-1/(2k)}
  bool below_hypothesis = false;
  CensusResult census;
  double measured_c = 0;
};

/// E is round(rho q^{2k-1}) points of F_q^{2k-1} drawn without replacement
/// from CounterRng(seed, kSetStream), followed by a sampled census.
MainTheoremReport main_theorem_experiment(std::uint64_t q, int k, double density, std::uint64_t seed,
                                          std::uint64_t samples, unsigned workers = 1,
                                          std::uint64_t enumeration_cap = kDefaultEnumerationCap);

struct PipelineSphere {
  Elem a;
  std::uint64_t sphere_subset = 0;  // |E_i|
  std::uint64_t lines = 0;          // |E'_i|
  bool on_sphere = true;
  bool unit_norm = true;
  bool half_bound = true;  // |E'_i| >= |E_i| / 2
};

struct PipelineReport {
  std::uint32_t q = 0;
  int k = 0;
  int dim = 0;
  std::uint64_t set_size = 0;
  std::vector<Elem> type;
  CountReport stars;
  double lambda = 0;
  PointId center = 0;
  std::uint64_t center_stars = 0;
  double pigeonhole_bound = 0;  // total stars / |E|
  std::vector<PipelineSphere> spheres;
  bool slices_match_center = false;  // prod |E_i| equals the star count at x_1
  std::uint64_t omega_size = 0;
  std::uint64_t patterns = 0;           // ((q+1)/2)^{C(k,2)} colorings of K_k
  std::uint64_t patterns_realized = 0;
  std::uint64_t end_count = 0;          // colored K_k copies over all patterns
  std::vector<std::uint64_t> pattern_counts;
  bool invariants_hold = false;
};

/// Follows the counting argument for simplexes in F_q^{2k-1}: k-stars of the
/// given type in E, the best center x_1 (smallest index on ties), the sphere
/// slices E_i = {v in E : ||x_1 - v|| = a_1i} moved to the origin, their
/// rescaling by sqrt(a_1i)^{-1} onto the unit sphere and the lines E'_i in
/// Omega, and finally colored K_k copies across E'_2..E'_{k+1} in the scheme
/// coloring for every color pattern. Every a_1i must be a nonzero square.
PipelineReport proof_pipeline(const SpacePtr& space, const VertexSet& e, int k, std::span<const Elem> type,
                              std::uint64_t work_cap = kDefaultWorkCap, unsigned workers = 1);

}  // namespace fqg
