#pragma once

#include <cstdint>
#include <limits>
#include <vector>

namespace fqg {

/// Counter-based 64-bit generator ("splitmix64 counter mode").
///
///   key      = mix(seed ^ mix(stream + 0x632BE59BD9B4E019))
///   output_i = mix(key + i * 0x9E3779B97F4A7C15),  i = 1, 2, ...
///
/// where mix is the splitmix64 finalizer. Output i depends only on
/// (seed, stream, i), so streams can be re-derived in any language.
class CounterRng {
 public:
  using result_type = std::uint64_t;

  explicit CounterRng(std::uint64_t seed, std::uint64_t stream = 0);

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() { return std::numeric_limits<result_type>::max(); }
  result_type operator()();

  /// Uniform integer in [0, bound) by multiply-shift with rejection.
  std::uint64_t uniform(std::uint64_t bound);
  /// Uniform double in [0, 1) with 53 random bits.
  double unit();

  std::uint64_t counter() const { return counter_; }

 private:
  std::uint64_t key_;
  std::uint64_t counter_ = 0;
};

std::uint64_t splitmix64_mix(std::uint64_t z);

/// `count` distinct values from [0, n), ascending (partial Fisher-Yates).
std::vector<std::uint32_t> sample_without_replacement(std::uint64_t n, std::uint64_t count, CounterRng& rng);

}  // namespace fqg
