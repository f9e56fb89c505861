#include "ffs/rng.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_map>

#include "ffs/error.hpp"

namespace fqg {

std::uint64_t splitmix64_mix(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

CounterRng::CounterRng(std::uint64_t seed, std::uint64_t stream)
    : key_(splitmix64_mix(seed ^ splitmix64_mix(stream + 0x632BE59BD9B4E019ULL))) {}

CounterRng::result_type CounterRng::operator()() {
  ++counter_;
  return splitmix64_mix(key_ + counter_ * 0x9E3779B97F4A7C15ULL);
}

std::uint64_t CounterRng::uniform(std::uint64_t bound) {
  if (bound == 0) throw InvalidArgument("uniform: empty range");
  // Lemire's nearly-divisionless method.
  unsigned __int128 m = static_cast<unsigned __int128>((*this)()) * bound;
  auto low = static_cast<std::uint64_t>(m);
  if (low < bound) {
    const std::uint64_t threshold = (0 - bound) % bound;
    while (low < threshold) {
      m = static_cast<unsigned __int128>((*this)()) * bound;
      low = static_cast<std::uint64_t>(m);
    }
  }
  return static_cast<std::uint64_t>(m >> 64);
}

double CounterRng::unit() { return static_cast<double>((*this)() >> 11) * 0x1.0p-53; }

std::vector<std::uint32_t> sample_without_replacement(std::uint64_t n, std::uint64_t count, CounterRng& rng) {
  if (count > n) throw InvalidArgument("cannot sample more elements than the population holds");
  // Sparse Fisher-Yates: only displaced slots are stored.
  std::unordered_map<std::uint64_t, std::uint64_t> moved;
  auto slot = [&](std::uint64_t i) {
    auto it = moved.find(i);
    return it == moved.end() ? i : it->second;
  };
  std::vector<std::uint32_t> out;
  out.reserve(count);
  for (std::uint64_t i = 0; i < count; ++i) {
    const std::uint64_t j = i + rng.uniform(n - i);
    const std::uint64_t vi = slot(i), vj = slot(j);
    out.push_back(static_cast<std::uint32_t>(vj));
    moved[j] = vi;
    moved[i] = vj;
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace fqg
