// Copyright 2026 The cubicpair Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef CUBICPAIR_FIELD_HPP_
#define CUBICPAIR_FIELD_HPP_

#include <cstdint>
#include <iosfwd>
#include <limits>

#include <Eigen/Core>

namespace cubicpair {

inline constexpr std::uint32_t kDefaultPrime = 31991;

/**
 * Element of a prime field Z/p.
 *
 * Each element carries its modulus so that Eigen expressions (products,
 * sums, block assignments) evaluate without any external context. A
 * modulus of zero marks an untagged small integer literal; Eigen creates
 * these for Scalar(0) and Scalar(1). Literals adopt the modulus of the
 * other operand on first contact.
 */
class Fp {
 public:
  constexpr Fp() = default;
  constexpr Fp(int literal)  // NOLINT(google-explicit-constructor)
      : v_(static_cast<std::uint32_t>(literal < 0 ? 0 : literal)) {}
  constexpr Fp(std::uint32_t residue, std::uint32_t modulus)
      : v_(residue), p_(modulus) {}

  constexpr std::uint32_t value() const { return v_; }
  constexpr std::uint32_t modulus() const { return p_; }
  constexpr bool is_zero() const { return v_ == 0; }

  friend Fp operator+(Fp a, Fp b) {
    const std::uint32_t p = join(a, b);
    if (p == 0) return Fp(static_cast<int>(a.v_ + b.v_));
    std::uint32_t s = a.residue(p) + b.residue(p);
    if (s >= p) s -= p;
    return {s, p};
  }
  friend Fp operator-(Fp a, Fp b) {
    const std::uint32_t p = join(a, b);
    const std::uint32_t x = a.residue(p);
    const std::uint32_t y = b.residue(p);
    return {x >= y ? x - y : x + p - y, p};
  }
  friend Fp operator*(Fp a, Fp b) {
    const std::uint32_t p = join(a, b);
    if (p == 0) return Fp(static_cast<int>(a.v_ * b.v_));
    return {static_cast<std::uint32_t>(std::uint64_t{a.residue(p)} * b.residue(p) % p), p};
  }
  friend Fp operator/(Fp a, Fp b) { return a * b.inverse(); }
  Fp operator-() const { return Fp(0, p_) - *this; }

  Fp& operator+=(Fp o) { return *this = *this + o; }
  Fp& operator-=(Fp o) { return *this = *this - o; }
  Fp& operator*=(Fp o) { return *this = *this * o; }
  Fp& operator/=(Fp o) { return *this = *this / o; }

  friend bool operator==(Fp a, Fp b) {
    const std::uint32_t p = join(a, b);
    return p == 0 ? a.v_ == b.v_ : a.residue(p) == b.residue(p);
  }
  friend bool operator!=(Fp a, Fp b) { return !(a == b); }

  /// Multiplicative inverse by Fermat exponentiation. Throws on zero.
  Fp inverse() const;
  Fp pow(std::uint64_t e) const;

 private:
  static std::uint32_t join(Fp a, Fp b);
  constexpr std::uint32_t residue(std::uint32_t p) const { return p_ ? v_ : v_ % p; }

  std::uint32_t v_ = 0;
  std::uint32_t p_ = 0;
};

std::ostream& operator<<(std::ostream& os, Fp x);

/// The prime field Z/p. Validates primality on construction.
class PrimeField {
 public:
  explicit PrimeField(std::uint32_t p = kDefaultPrime);

  std::uint32_t modulus() const { return p_; }
  Fp zero() const { return {0, p_}; }
  Fp one() const { return {1, p_}; }
  /// Canonical residue of an arbitrary signed integer.
  Fp operator()(std::int64_t x) const;

  friend bool operator==(const PrimeField& a, const PrimeField& b) { return a.p_ == b.p_; }

 private:
  std::uint32_t p_;
};

bool is_prime(std::uint64_t n);

}  // namespace cubicpair

namespace Eigen {

template <>
struct NumTraits<cubicpair::Fp> : GenericNumTraits<cubicpair::Fp> {
  using Real = cubicpair::Fp;
  using NonInteger = cubicpair::Fp;
  using Literal = cubicpair::Fp;
  using Nested = cubicpair::Fp;
  enum {
    IsInteger = 1,
    IsSigned = 0,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 1,
    AddCost = 2,
    MulCost = 4
  };
  static inline cubicpair::Fp epsilon() { return 0; }
  static inline cubicpair::Fp dummy_precision() { return 0; }
  static inline int digits10() { return std::numeric_limits<std::uint32_t>::digits10; }
};

}  // namespace Eigen

#endif  // CUBICPAIR_FIELD_HPP_
