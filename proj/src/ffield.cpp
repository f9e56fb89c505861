#include "ffs/ffield.hpp"

#include <algorithm>
#include <string>
#include <utility>

#include "ffs/error.hpp"

namespace fqg {
namespace {

using Poly = std::vector<std::uint32_t>;  // constant term first

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

std::uint32_t inv_mod_prime(std::uint32_t a, std::uint32_t p) {
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = p, new_r = a;
  while (new_r != 0) {
    const std::int64_t quot = r / new_r;
    t = std::exchange(new_t, t - quot * new_t);
    r = std::exchange(new_r, r - quot * new_r);
  }
  if (t < 0) t += p;
  return static_cast<std::uint32_t>(t);
}

// Remainder of a modulo b over F_p; b must be nonzero.
Poly poly_rem(Poly a, const Poly& b, std::uint32_t p, Poly* quotient = nullptr) {
  trim(a);
  const std::size_t db = b.size() - 1;
  const std::uint32_t lead_inv = inv_mod_prime(b.back(), p);
  if (quotient) quotient->assign(a.size() >= b.size() ? a.size() - db : 1, 0);
  while (!a.empty() && a.size() >= b.size()) {
    const std::size_t shift = a.size() - b.size();
    const std::uint64_t factor = std::uint64_t{a.back()} * lead_inv % p;
    if (quotient) (*quotient)[shift] = static_cast<std::uint32_t>(factor);
    for (std::size_t i = 0; i <= db; ++i) {
      const std::uint64_t sub = factor * b[i] % p;
      a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + p - sub) % p);
    }
    trim(a);
  }
  if (quotient) trim(*quotient);
  return a;
}

Poly poly_mul(const Poly& a, const Poly& b, std::uint32_t p) {
  if (a.empty() || b.empty()) return {};
  Poly out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j)
      out[i + j] = static_cast<std::uint32_t>((out[i + j] + std::uint64_t{a[i]} * b[j]) % p);
  trim(out);
  return out;
}

Poly poly_sub(Poly a, const Poly& b, std::uint32_t p) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i] = (a[i] + p - b[i]) % p;
  trim(a);
  return a;
}

Poly digits_of(std::uint64_t idx, std::uint32_t p, std::uint32_t e) {
  Poly out(e);
  for (std::uint32_t i = 0; i < e; ++i) {
    out[i] = static_cast<std::uint32_t>(idx % p);
    idx /= p;
  }
  return out;
}

std::uint32_t index_of(const Poly& c, std::uint32_t p) {
  std::uint64_t idx = 0;
  for (std::size_t i = c.size(); i-- > 0;) idx = idx * p + c[i];
  return static_cast<std::uint32_t>(idx);
}

bool is_irreducible(const Poly& f, std::uint32_t p) {
  const std::uint32_t e = static_cast<std::uint32_t>(f.size() - 1);
  for (std::uint32_t deg = 1; deg <= e / 2; ++deg) {
    std::uint64_t count = 1;
    for (std::uint32_t i = 0; i < deg; ++i) count *= p;
    for (std::uint64_t n = 0; n < count; ++n) {
      Poly g = digits_of(n, p, deg);
      g.push_back(1);
      if (poly_rem(f, g, p).empty()) return false;
    }
  }
  return true;
}

// Smallest monic irreducible of degree e with c_0 compared first.
Poly smallest_irreducible(std::uint32_t p, std::uint32_t e) {
  std::uint64_t count = 1;
  for (std::uint32_t i = 0; i < e; ++i) count *= p;
  for (std::uint64_t n = 0; n < count; ++n) {
    Poly f(e + 1, 0);
    std::uint64_t rest = n;
    for (std::uint32_t i = e; i-- > 0;) {
      f[i] = static_cast<std::uint32_t>(rest % p);
      rest /= p;
    }
    f[e] = 1;
    if (is_irreducible(f, p)) return f;
  }
  throw ConsistencyError("no irreducible polynomial found");
}

// Inverse of a modulo f over F_p via the extended Euclidean algorithm.
Poly poly_inverse(const Poly& a, const Poly& f, std::uint32_t p) {
  Poly r0 = f, r1 = a, s0, s1{1};
  trim(r1);
  while (!r1.empty()) {
    Poly quot;
    Poly rem = poly_rem(r0, r1, p, &quot);
    Poly s2 = poly_sub(s0, poly_mul(quot, s1, p), p);
    r0 = std::move(r1);
    r1 = std::move(rem);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  if (r0.size() != 1) throw ConsistencyError("element not invertible modulo the field polynomial");
  const std::uint64_t c = inv_mod_prime(r0[0], p);
  for (auto& x : s0) x = static_cast<std::uint32_t>(x * c % p);
  return poly_rem(s0, f, p);
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

Field Field::make(std::uint32_t p, std::uint32_t e, std::uint64_t max_order) {
  if (!is_prime(p)) throw InvalidArgument("characteristic " + std::to_string(p) + " is not prime");
  if (p == 2) throw InvalidArgument("characteristic 2 is not supported; q must be odd");
  if (e < 1) throw InvalidArgument("extension degree must be at least 1");
  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < e; ++i) {
    q *= p;
    if (q > max_order)
      throw InvalidArgument("field order " + std::to_string(p) + "^" + std::to_string(e) +
                            " exceeds the maximum " + std::to_string(max_order));
  }

  Field f;
  f.p_ = p;
  f.e_ = e;
  f.q_ = static_cast<std::uint32_t>(q);
  f.modulus_ = e == 1 ? Poly{0, 1} : smallest_irreducible(p, e);

  // Multiplication without tables, used to find nu and build the tables.
  auto slow_mul = [&f](std::uint32_t a, std::uint32_t b) -> std::uint32_t {
    if (f.e_ == 1) return static_cast<std::uint32_t>(std::uint64_t{a} * b % f.p_);
    Poly prod = poly_mul(digits_of(a, f.p_, f.e_), digits_of(b, f.p_, f.e_), f.p_);
    return index_of(poly_rem(prod, f.modulus_, f.p_), f.p_);
  };
  auto slow_pow = [&](std::uint32_t a, std::uint64_t n) {
    std::uint32_t result = 1;
    while (n) {
      if (n & 1) result = slow_mul(result, a);
      a = slow_mul(a, a);
      n >>= 1;
    }
    return result;
  };

  const auto factors = prime_factors(q - 1);
  std::uint32_t gen = 0;
  for (std::uint32_t cand = 1; cand < q; ++cand) {
    bool full = true;
    for (auto r : factors) {
      if (slow_pow(cand, (q - 1) / r) == 1) {
        full = false;
        break;
      }
    }
    if (full) {
      gen = cand;
      break;
    }
  }
  if (gen == 0) throw ConsistencyError("no multiplicative generator found");
  f.nu_ = {gen};

  f.exp_.assign(2 * (q - 1), 0);
  f.log_.assign(q, 0);
  std::uint32_t x = 1;
  for (std::uint64_t k = 0; k < q - 1; ++k) {
    f.exp_[k] = f.exp_[k + q - 1] = x;
    f.log_[x] = static_cast<std::uint32_t>(k);
    x = slow_mul(x, gen);
  }
  if (x != 1) throw ConsistencyError("generator power cycle does not close");

  f.neg_.assign(q, 0);
  for (std::uint32_t a = 0; a < q; ++a) {
    Poly c = digits_of(a, p, e);
    for (auto& ci : c) ci = (p - ci) % p;
    f.neg_[a] = index_of(c, p);
  }

  if (e > 1 && q <= 256) {
    f.add_.assign(std::size_t{q} * q, 0);
    for (std::uint32_t a = 0; a < q; ++a) {
      for (std::uint32_t b = 0; b < q; ++b) {
        Poly ca = digits_of(a, p, e), cb = digits_of(b, p, e);
        for (std::uint32_t i = 0; i < e; ++i) ca[i] = (ca[i] + cb[i]) % p;
        f.add_[std::size_t{a} * q + b] = index_of(ca, p);
      }
    }
  }

  f.inv_.assign(q, 0);
  for (std::uint32_t a = 1; a < q; ++a) {
    if (e == 1) {
      f.inv_[a] = inv_mod_prime(a, p);
    } else {
      Poly r = poly_inverse(digits_of(a, p, e), f.modulus_, p);
      r.resize(e, 0);
      f.inv_[a] = index_of(r, p);
    }
  }

  f.chi_.assign(q, 0);
  const Elem minus_one = f.neg(f.one());
  for (std::uint32_t a = 1; a < q; ++a) {
    const Elem r = f.pow({a}, (q - 1) / 2);
    if (r == f.one()) {
      f.chi_[a] = 1;
    } else if (r == minus_one) {
      f.chi_[a] = -1;
    } else {
      throw ConsistencyError("Euler criterion produced a value other than +-1");
    }
  }
  return f;
}

Field Field::of_order(std::uint64_t q, std::uint64_t max_order) {
  if (q < 3) throw InvalidArgument("field order must be an odd prime power >= 3");
  const auto factors = prime_factors(q);
  if (factors.size() != 1)
    throw InvalidArgument(std::to_string(q) + " is not a prime power");
  const std::uint64_t p = factors.front();
  std::uint32_t e = 0;
  for (std::uint64_t r = q; r > 1; r /= p) ++e;
  return make(static_cast<std::uint32_t>(p), e, max_order);
}

Elem Field::add(Elem a, Elem b) const {
  if (e_ == 1) {
    std::uint32_t s = a.v + b.v;
    return {s >= p_ ? s - p_ : s};
  }
  if (!add_.empty()) return {add_[std::size_t{a.v} * q_ + b.v]};
  std::uint32_t out = 0, place = 1, x = a.v, y = b.v;
  for (std::uint32_t i = 0; i < e_; ++i) {
    std::uint32_t s = x % p_ + y % p_;
    if (s >= p_) s -= p_;
    out += s * place;
    place *= p_;
    x /= p_;
    y /= p_;
  }
  return {out};
}

Elem Field::neg(Elem a) const { return {neg_[a.v]}; }

Elem Field::mul(Elem a, Elem b) const {
  if (a.v == 0 || b.v == 0) return zero();
  if (e_ == 1) return {static_cast<std::uint32_t>(std::uint64_t{a.v} * b.v % p_)};
  return {exp_[log_[a.v] + log_[b.v]]};
}

Elem Field::inv(Elem a) const {
  if (a.v == 0) throw InvalidArgument("division by zero in F_" + std::to_string(q_));
  return {inv_[a.v]};
}

Elem Field::div(Elem a, Elem b) const { return mul(a, inv(b)); }

Elem Field::pow(Elem a, std::uint64_t n) const {
  Elem result = one();
  while (n) {
    if (n & 1) result = mul(result, a);
    a = mul(a, a);
    n >>= 1;
  }
  return result;
}

Elem Field::arith(Elem a, Elem b, ArithOp op) const {
  switch (op) {
    case ArithOp::add: return add(a, b);
    case ArithOp::sub: return sub(a, b);
    case ArithOp::mul: return mul(a, b);
    case ArithOp::div: return div(a, b);
  }
  throw InvalidArgument("unknown arithmetic operation");
}

Elem Field::from_int(std::int64_t n) const {
  std::int64_t r = n % static_cast<std::int64_t>(p_);
  if (r < 0) r += p_;
  return {static_cast<std::uint32_t>(r)};
}

std::optional<Elem> Field::sqrt(Elem a) const {
  if (a.v == 0) return zero();
  if (chi(a) < 0) return std::nullopt;
  const Elem r = exp(log(a) / 2);
  const Elem other = neg(r);
  return std::min(r, other);
}

std::uint32_t Field::trace(Elem a) const {
  Elem sum = zero();
  Elem term = a;
  for (std::uint32_t i = 0; i < e_; ++i) {
    sum = add(sum, term);
    term = pow(term, p_);
  }
  if (sum.v >= p_) throw ConsistencyError("trace left the prime subfield");
  return sum.v;
}

std::vector<std::uint32_t> Field::coeffs(Elem a) const { return digits_of(a.v, p_, e_); }

Elem Field::from_coeffs(std::span<const std::uint32_t> c) const {
  if (c.size() != e_) throw InvalidArgument("coefficient vector length must equal the extension degree");
  for (auto x : c)
    if (x >= p_) throw InvalidArgument("coefficient out of range [0, p)");
  return {index_of(Poly(c.begin(), c.end()), p_)};
}

}  // namespace fqg
