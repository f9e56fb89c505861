#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace fqg {

/// An element of F_q, identified by its canonical index
/// sum_i coeffs[i] * p^i in [0, q).
struct Elem {
  std::uint32_t v = 0;

  friend constexpr bool operator==(Elem, Elem) = default;
  friend constexpr auto operator<=>(Elem, Elem) = default;
};

enum class ArithOp { add, sub, mul, div };

inline constexpr std::uint64_t kDefaultMaxFieldOrder = std::uint64_t{1} << 20;

/// Finite field F_q, q = p^e with p an odd prime.
///
/// Elements of extension fields are polynomials over F_p reduced modulo the
/// lexicographically smallest monic irreducible of degree e (coefficients
/// compared constant term first). The multiplicative generator is the
/// full-order element of smallest index. Instances are immutable.
class Field {
 public:
  static Field make(std::uint32_t p, std::uint32_t e,
                    std::uint64_t max_order = kDefaultMaxFieldOrder);
  /// Factors q as p^e and forwards to make().
  static Field of_order(std::uint64_t q,
                        std::uint64_t max_order = kDefaultMaxFieldOrder);

  std::uint32_t p() const { return p_; }
  std::uint32_t e() const { return e_; }
  std::uint32_t q() const { return q_; }
  /// e+1 coefficients, constant term first; {0, 1} for prime fields.
  const std::vector<std::uint32_t>& modulus() const { return modulus_; }
  Elem nu() const { return nu_; }

  Elem zero() const { return {0}; }
  Elem one() const { return {1}; }
  bool valid(Elem a) const { return a.v < q_; }

  Elem add(Elem a, Elem b) const;
  Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }
  Elem neg(Elem a) const;
  Elem mul(Elem a, Elem b) const;
  /// Throws InvalidArgument on b = 0.
  Elem div(Elem a, Elem b) const;
  Elem inv(Elem a) const;
  Elem pow(Elem a, std::uint64_t n) const;
  Elem arith(Elem a, Elem b, ArithOp op) const;

  /// Image of an integer under Z -> F_p -> F_q.
  Elem from_int(std::int64_t n) const;

  /// Quadratic character: 0, +1 (nonzero square), -1 (non-square).
  int chi(Elem a) const { return chi_[a.v]; }
  /// The root of smaller index, or nothing for non-squares.
  std::optional<Elem> sqrt(Elem a) const;
  /// Absolute trace to F_p, returned as an integer in [0, p).
  std::uint32_t trace(Elem a) const;

  /// Discrete log base nu; a must be nonzero.
  std::uint32_t log(Elem a) const { return log_[a.v]; }
  /// nu^k for any k.
  Elem exp(std::uint64_t k) const { return {exp_[k % (q_ - 1)]}; }

  std::vector<std::uint32_t> coeffs(Elem a) const;
  Elem from_coeffs(std::span<const std::uint32_t> c) const;

 private:
  Field() = default;

  std::uint32_t p_ = 0;
  std::uint32_t e_ = 0;
  std::uint32_t q_ = 0;
  std::vector<std::uint32_t> modulus_;
  Elem nu_;
  std::vector<std::uint32_t> exp_;  // 2(q-1) entries, so log sums need no reduction
  std::vector<std::uint32_t> log_;
  std::vector<std::uint32_t> inv_;
  std::vector<std::uint32_t> neg_;
  std::vector<std::uint32_t> add_;  // q*q table for small extension fields
  std::vector<std::int8_t> chi_;
};

bool is_prime(std::uint64_t n);

}  // namespace fqg
