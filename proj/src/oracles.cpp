#include "ffs/oracles.hpp"

#include <algorithm>
#include <set>

#include "ffs/error.hpp"
#include "ffs/linalg.hpp"

namespace fqg::oracle {

std::vector<Elem> coordinates(std::uint64_t index, std::uint32_t q, int d) {
  std::vector<Elem> c(d);
  for (int i = 0; i < d; ++i) {
    c[i] = {static_cast<std::uint32_t>(index % q)};
    index /= q;
  }
  return c;
}

namespace {

std::uint64_t power(std::uint64_t b, int e) {
  std::uint64_t r = 1;
  while (e-- > 0) r *= b;
  return r;
}

Elem sum_of_squares(const Field& f, const std::vector<Elem>& x) {
  Elem s = f.zero();
  for (auto c : x) s = f.add(s, f.mul(c, c));
  return s;
}

}  // namespace

std::vector<std::uint64_t> sphere_sizes(const Field& f, int d) {
  std::vector<std::uint64_t> sizes(f.q(), 0);
  const std::uint64_t n = power(f.q(), d);
  for (std::uint64_t i = 0; i < n; ++i) ++sizes[sum_of_squares(f, coordinates(i, f.q(), d)).v];
  return sizes;
}

std::uint64_t omega_size(const Field& f, int d) {
  const std::uint64_t n = power(f.q(), d);
  std::uint64_t square_points = 0;
  for (std::uint64_t i = 1; i < n; ++i) square_points += f.chi(sum_of_squares(f, coordinates(i, f.q(), d))) == 1;
  return square_points / (f.q() - 1);
}

std::vector<std::vector<Elem>> orthogonal_matrices(const Field& f, int d, bool special) {
  const std::uint64_t total = power(f.q(), d * d);
  if (total > 50'000'000) throw InvalidArgument("orthogonal matrix scan is too large");
  std::vector<std::vector<Elem>> out;
  for (std::uint64_t i = 0; i < total; ++i) {
    const auto m = coordinates(i, f.q(), d * d);  // row-major
    bool ok = true;
    for (int a = 0; a < d && ok; ++a) {
      for (int b = 0; b < d && ok; ++b) {
        Elem dot = f.zero();
        for (int r = 0; r < d; ++r) dot = f.add(dot, f.mul(m[r * d + a], m[r * d + b]));
        ok = dot == (a == b ? f.one() : f.zero());
      }
    }
    if (!ok) continue;
    if (special) {
      // Leibniz expansion over permutations.
      std::vector<int> perm(d);
      for (int j = 0; j < d; ++j) perm[j] = j;
      Elem det = f.zero();
      do {
        int inversions = 0;
        for (int a = 0; a < d; ++a)
          for (int b = a + 1; b < d; ++b) inversions += perm[a] > perm[b];
        Elem term = f.one();
        for (int r = 0; r < d; ++r) term = f.mul(term, m[r * d + perm[r]]);
        det = inversions % 2 ? f.sub(det, term) : f.add(det, term);
      } while (std::next_permutation(perm.begin(), perm.end()));
      if (det != f.one()) continue;
    }
    out.push_back(m);
  }
  return out;
}

CensusOracle census(const Field& f, int d, std::span<const std::uint32_t> e, int k) {
  std::set<std::uint64_t> realized;
  CensusOracle r;
  const std::size_t m = e.size();
  std::vector<std::size_t> idx(k + 1, 0);
  std::vector<std::vector<Elem>> pts(m);
  for (std::size_t i = 0; i < m; ++i) pts[i] = coordinates(e[i], f.q(), d);
  if (m == 0) return r;
  while (true) {
    std::vector<Row> rows;
    for (int j = 1; j <= k; ++j) {
      Row row(d);
      for (int c = 0; c < d; ++c) row[c] = f.sub(pts[idx[j]][c], pts[idx[0]][c]);
      rows.push_back(row);
    }
    if (rank(f, rows) == static_cast<std::size_t>(k)) {
      ++r.nondegenerate;
      std::uint64_t code = 0, w = 1;
      for (int i = 0; i <= k; ++i) {
        for (int j = i + 1; j <= k; ++j) {
          std::vector<Elem> diff(d);
          for (int c = 0; c < d; ++c) diff[c] = f.sub(pts[idx[i]][c], pts[idx[j]][c]);
          code += sum_of_squares(f, diff).v * w;
          w *= f.q();
        }
      }
      realized.insert(code);
    }
    int pos = k;
    while (pos >= 0 && ++idx[pos] == m) idx[pos--] = 0;
    if (pos < 0) break;
  }
  r.realized.assign(realized.begin(), realized.end());
  return r;
}

}  // namespace fqg::oracle
