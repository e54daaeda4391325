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

#ifndef CUBICPAIR_POLYRING_HPP_
#define CUBICPAIR_POLYRING_HPP_

#include <cstdint>
#include <memory>
#include <unordered_map>
#include <vector>

#include "cubicpair/linalg.hpp"

namespace cubicpair {

using Exponents = std::vector<int>;

/// Degree-d monomials in n variables, ordered lexicographically by
/// exponent vector with z_1 largest (z_1^d first, z_n^d last).
class MonomialBasis {
 public:
  MonomialBasis(int nvars, int degree);

  int nvars() const { return nvars_; }
  int degree() const { return degree_; }
  Index size() const { return static_cast<Index>(monomials_.size()); }
  const Exponents& operator[](Index i) const { return monomials_[i]; }
  const std::vector<Exponents>& monomials() const { return monomials_; }

  /// Index of a monomial of this degree; -1 if absent.
  Index find(const Exponents& e) const;
  Index find_key(std::uint64_t key) const;
  std::uint64_t key(Index i) const { return keys_[i]; }

 private:
  int nvars_;
  int degree_;
  std::vector<Exponents> monomials_;
  std::vector<std::uint64_t> keys_;
  std::unordered_map<std::uint64_t, Index> index_;
};

/// Packs exponents into 6-bit digits; the sum of keys is the key of the
/// product, which gives O(1) monomial multiplication.
std::uint64_t monomial_key(const Exponents& e);

std::vector<Exponents> monomial_basis(int nvars, int degree);

/**
 * Graded polynomial ring k[z_1..z_n] over a prime field, together with
 * the monomial bases of its graded pieces up to a fixed maximal degree.
 * Immutable after construction and shared between forms.
 */
class Ring {
 public:
  static std::shared_ptr<const Ring> make(std::uint32_t p = kDefaultPrime, int nvars = 5,
                                          int max_degree = 8);

  Ring(PrimeField field, int nvars, int max_degree);

  const PrimeField& field() const { return field_; }
  int nvars() const { return nvars_; }
  int max_degree() const { return max_degree_; }

  const MonomialBasis& basis(int degree) const;
  Index dim(int degree) const { return basis(degree).size(); }

  /// I! for the i-th monomial of the given degree, as a field element.
  Fp factorial_weight(int degree, Index i) const;
  Fp factorial(int k) const { return factorials_.at(k); }

 private:
  PrimeField field_;
  int nvars_;
  int max_degree_;
  std::vector<MonomialBasis> bases_;
  std::vector<std::vector<Fp>> weights_;
  std::vector<Fp> factorials_;
};

using RingPtr = std::shared_ptr<const Ring>;

/// Primal forms live in S^d V; dual forms in S^d V*.
enum class Side { primal, dual };

constexpr Side opposite(Side s) { return s == Side::primal ? Side::dual : Side::primal; }

/// Homogeneous form with a dense coefficient vector over the monomial basis.
template <Side S>
class Form {
 public:
  Form(RingPtr ring, int degree);  // zero form
  Form(RingPtr ring, int degree, Vec coeffs);

  const RingPtr& ring() const { return ring_; }
  const PrimeField& field() const { return ring_->field(); }
  int degree() const { return degree_; }
  const Vec& coeffs() const { return coeffs_; }
  Vec& coeffs() { return coeffs_; }
  Fp operator[](Index i) const { return coeffs_[i]; }
  Fp& operator[](Index i) { return coeffs_[i]; }

  Fp coeff(const Exponents& e) const;
  void set_coeff(const Exponents& e, Fp c);

  bool is_zero() const { return cubicpair::is_zero(coeffs_); }
  Index num_terms() const;

  /// Index of the first nonzero coefficient in monomial order, or -1.
  Index leading_index() const;

  friend bool operator==(const Form& a, const Form& b) {
    return a.degree_ == b.degree_ && a.coeffs_ == b.coeffs_;
  }

  Form& operator+=(const Form& o);
  Form& operator-=(const Form& o);
  Form& operator*=(Fp s);

 private:
  RingPtr ring_;
  int degree_;
  Vec coeffs_;
};

using HomForm = Form<Side::primal>;
using DualForm = Form<Side::dual>;

template <Side S>
Form<S> operator+(Form<S> a, const Form<S>& b) {
  return a += b;
}
template <Side S>
Form<S> operator-(Form<S> a, const Form<S>& b) {
  return a -= b;
}
template <Side S>
Form<S> operator*(Fp s, Form<S> a) {
  return a *= s;
}

template <Side S>
Form<S> monomial(const RingPtr& ring, const Exponents& e, Fp c);

/// z_i as a degree-one form (0-based index).
template <Side S>
Form<S> variable(const RingPtr& ring, int i);

template <Side S>
Form<S> multiply(const Form<S>& f, const Form<S>& g);

/// Formal partial derivative in the i-th variable (0-based).
template <Side S>
Form<S> partial(const Form<S>& f, int i);

/// Sum_i z_i * d_i f; equals deg(f) * f.
template <Side S>
Form<S> euler(const Form<S>& f);

/// Pairing <z*^I, z^J> = I! delta_{IJ}: the differentiation convention.
/// Throws Errc::degree_mismatch.
Fp apolar_pair(const DualForm& phi, const HomForm& f);

/// q(d) phi: the primal form q acting on phi by differentiation, giving a
/// dual form of degree deg(phi) - deg(q).  <q(d)phi, P> = <phi, q P>.
DualForm contract(const HomForm& q, const DualForm& phi);

/// Same action with the roles of the sides exchanged.
HomForm contract(const DualForm& q, const HomForm& f);

/// Uniform coefficients from a deterministic stream seeded by `seed`.
template <Side S = Side::primal>
Form<S> random_form(const RingPtr& ring, int degree, std::uint64_t seed);

/// f(g z): substitute z_i -> sum_j g(i, j) z_j.
template <Side S>
Form<S> substitute(const Form<S>& f, const Mat& g);

/// Scale so the first nonzero coefficient is 1; the zero form is returned as is.
template <Side S>
Form<S> normalized(const Form<S>& f);

template <Side S>
bool proportional(const Form<S>& a, const Form<S>& b);

/// Row vectors of coefficient vectors, one per form.
template <Side S>
Mat coefficient_matrix(const std::vector<Form<S>>& forms, const RingPtr& ring, int degree);

}  // namespace cubicpair

#endif  // CUBICPAIR_POLYRING_HPP_
