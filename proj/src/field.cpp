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

#include "cubicpair/field.hpp"

#include <ostream>
#include <string>

#include "cubicpair/error.hpp"

namespace cubicpair {

std::uint32_t Fp::join(Fp a, Fp b) {
  if (a.p_ == b.p_ || b.p_ == 0) return a.p_;
  if (a.p_ == 0) return b.p_;
  throw Error(Errc::field_mismatch, "mixing Z/" + std::to_string(a.p_) + " and Z/" +
                                        std::to_string(b.p_));
}

Fp Fp::pow(std::uint64_t e) const {
  if (p_ == 0) throw Error(Errc::field_mismatch, "pow on an untagged literal");
  std::uint64_t base = v_ % p_;
  std::uint64_t acc = 1 % p_;
  while (e) {
    if (e & 1) acc = acc * base % p_;
    base = base * base % p_;
    e >>= 1;
  }
  return {static_cast<std::uint32_t>(acc), p_};
}

Fp Fp::inverse() const {
  if (v_ == 0) throw Error(Errc::division_by_zero, "inverse of zero");
  if (p_ == 0) {
    if (v_ == 1) return *this;
    throw Error(Errc::field_mismatch, "inverse of an untagged literal");
  }
  return pow(p_ - 2);
}

std::ostream& operator<<(std::ostream& os, Fp x) { return os << x.value(); }

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

PrimeField::PrimeField(std::uint32_t p) : p_(p) {
  if (!is_prime(p)) throw Error(Errc::invalid_field, std::to_string(p) + " is not prime");
  if (p <= 5) throw Error(Errc::invalid_field, "characteristic must exceed 5");
  if (p >= (1u << 31)) throw Error(Errc::invalid_field, "modulus must fit in 31 bits");
}

Fp PrimeField::operator()(std::int64_t x) const {
  std::int64_t r = x % static_cast<std::int64_t>(p_);
  if (r < 0) r += p_;
  return {static_cast<std::uint32_t>(r), p_};
}

}  // namespace cubicpair
