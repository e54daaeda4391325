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

#include "cubicpair/polyring.hpp"

#include <string>
#include <utility>

#include "cubicpair/error.hpp"
#include "cubicpair/rng.hpp"

namespace cubicpair {
namespace {

constexpr int kKeyBits = 6;
constexpr int kMaxVars = 10;

void enumerate(int nvars, int remaining, Exponents& cur, int pos, std::vector<Exponents>& out) {
  if (pos == nvars - 1) {
    cur[pos] = remaining;
    out.push_back(cur);
    return;
  }
  for (int e = remaining; e >= 0; --e) {
    cur[pos] = e;
    enumerate(nvars, remaining - e, cur, pos + 1, out);
  }
}

template <Side S>
void check_same_ring(const Form<S>& a, const Form<S>& b) {
  if (a.ring() != b.ring() && (a.ring()->nvars() != b.ring()->nvars() || !(a.field() == b.field()))) {
    throw Error(Errc::field_mismatch, "forms belong to different rings");
  }
}

}  // namespace

std::uint64_t monomial_key(const Exponents& e) {
  std::uint64_t k = 0;
  for (std::size_t i = 0; i < e.size(); ++i) k |= std::uint64_t(e[i]) << (kKeyBits * i);
  return k;
}

std::vector<Exponents> monomial_basis(int nvars, int degree) {
  std::vector<Exponents> out;
  if (nvars <= 0 || degree < 0) return out;
  Exponents cur(nvars, 0);
  enumerate(nvars, degree, cur, 0, out);
  return out;
}

MonomialBasis::MonomialBasis(int nvars, int degree)
    : nvars_(nvars), degree_(degree), monomials_(monomial_basis(nvars, degree)) {
  keys_.reserve(monomials_.size());
  for (Index i = 0; i < size(); ++i) {
    keys_.push_back(monomial_key(monomials_[i]));
    index_.emplace(keys_.back(), i);
  }
}

Index MonomialBasis::find(const Exponents& e) const {
  if (static_cast<int>(e.size()) != nvars_) return -1;
  int d = 0;
  for (int x : e) {
    if (x < 0) return -1;
    d += x;
  }
  if (d != degree_) return -1;
  return find_key(monomial_key(e));
}

Index MonomialBasis::find_key(std::uint64_t key) const {
  auto it = index_.find(key);
  return it == index_.end() ? -1 : it->second;
}

std::shared_ptr<const Ring> Ring::make(std::uint32_t p, int nvars, int max_degree) {
  return std::make_shared<const Ring>(PrimeField(p), nvars, max_degree);
}

Ring::Ring(PrimeField field, int nvars, int max_degree)
    : field_(field), nvars_(nvars), max_degree_(max_degree) {
  if (nvars < 1 || nvars > kMaxVars) throw Error(Errc::wrong_arity, "unsupported variable count");
  if (max_degree < 0 || max_degree >= (1 << kKeyBits)) {
    throw Error(Errc::degree_out_of_range, "unsupported maximal degree");
  }
  factorials_.push_back(field_.one());
  for (int k = 1; k <= max_degree; ++k) factorials_.push_back(factorials_.back() * field_(k));
  for (int d = 0; d <= max_degree; ++d) {
    bases_.emplace_back(nvars, d);
    std::vector<Fp> w;
    w.reserve(bases_.back().size());
    for (const Exponents& e : bases_.back().monomials()) {
      Fp acc = field_.one();
      for (int x : e) acc *= factorials_[x];
      w.push_back(acc);
    }
    weights_.push_back(std::move(w));
  }
}

const MonomialBasis& Ring::basis(int degree) const {
  if (degree < 0 || degree > max_degree_) {
    throw Error(Errc::degree_out_of_range,
                "degree " + std::to_string(degree) + " outside ring range");
  }
  return bases_[degree];
}

Fp Ring::factorial_weight(int degree, Index i) const {
  basis(degree);
  return weights_[degree][i];
}

// ---------------------------------------------------------------------------

template <Side S>
Form<S>::Form(RingPtr ring, int degree)
    : ring_(std::move(ring)), degree_(degree) {
  coeffs_ = zero_vector(ring_->field(), ring_->dim(degree));
}

template <Side S>
Form<S>::Form(RingPtr ring, int degree, Vec coeffs)
    : ring_(std::move(ring)), degree_(degree), coeffs_(std::move(coeffs)) {
  if (coeffs_.size() != ring_->dim(degree)) {
    throw Error(Errc::shape_mismatch, "coefficient vector does not match the monomial basis");
  }
  for (Index i = 0; i < coeffs_.size(); ++i) coeffs_[i] *= ring_->field().one();
}

template <Side S>
Fp Form<S>::coeff(const Exponents& e) const {
  const Index i = ring_->basis(degree_).find(e);
  return i < 0 ? field().zero() : coeffs_[i];
}

template <Side S>
void Form<S>::set_coeff(const Exponents& e, Fp c) {
  const Index i = ring_->basis(degree_).find(e);
  if (i < 0) throw Error(Errc::degree_mismatch, "monomial does not belong to this degree");
  coeffs_[i] = c * field().one();
}

template <Side S>
Index Form<S>::num_terms() const {
  Index n = 0;
  for (Index i = 0; i < coeffs_.size(); ++i) n += coeffs_[i].is_zero() ? 0 : 1;
  return n;
}

template <Side S>
Index Form<S>::leading_index() const {
  for (Index i = 0; i < coeffs_.size(); ++i) {
    if (!coeffs_[i].is_zero()) return i;
  }
  return -1;
}

template <Side S>
Form<S>& Form<S>::operator+=(const Form& o) {
  check_same_ring(*this, o);
  if (o.degree_ != degree_) throw Error(Errc::degree_mismatch, "adding forms of different degree");
  coeffs_ += o.coeffs_;
  return *this;
}

template <Side S>
Form<S>& Form<S>::operator-=(const Form& o) {
  check_same_ring(*this, o);
  if (o.degree_ != degree_) throw Error(Errc::degree_mismatch, "subtracting forms of different degree");
  coeffs_ -= o.coeffs_;
  return *this;
}

template <Side S>
Form<S>& Form<S>::operator*=(Fp s) {
  coeffs_ *= s;
  return *this;
}

template <Side S>
Form<S> monomial(const RingPtr& ring, const Exponents& e, Fp c) {
  int d = 0;
  for (int x : e) d += x;
  Form<S> f(ring, d);
  f.set_coeff(e, c);
  return f;
}

template <Side S>
Form<S> variable(const RingPtr& ring, int i) {
  Exponents e(ring->nvars(), 0);
  e.at(i) = 1;
  return monomial<S>(ring, e, ring->field().one());
}

template <Side S>
Form<S> multiply(const Form<S>& f, const Form<S>& g) {
  check_same_ring(f, g);
  const Ring& ring = *f.ring();
  const MonomialBasis& bf = ring.basis(f.degree());
  const MonomialBasis& bg = ring.basis(g.degree());
  const MonomialBasis& bh = ring.basis(f.degree() + g.degree());
  Form<S> h(f.ring(), f.degree() + g.degree());
  for (Index i = 0; i < bf.size(); ++i) {
    if (f[i].is_zero()) continue;
    for (Index j = 0; j < bg.size(); ++j) {
      if (g[j].is_zero()) continue;
      h[bh.find_key(bf.key(i) + bg.key(j))] += f[i] * g[j];
    }
  }
  return h;
}

template <Side S>
Form<S> partial(const Form<S>& f, int i) {
  const Ring& ring = *f.ring();
  if (f.degree() < 1) throw Error(Errc::degree_out_of_range, "partial of a constant");
  if (i < 0 || i >= ring.nvars()) throw Error(Errc::wrong_arity, "variable index out of range");
  const MonomialBasis& b = ring.basis(f.degree());
  const MonomialBasis& lo = ring.basis(f.degree() - 1);
  const std::uint64_t unit = std::uint64_t{1} << (kKeyBits * i);
  Form<S> out(f.ring(), f.degree() - 1);
  for (Index k = 0; k < b.size(); ++k) {
    const int e = b[k][i];
    if (e == 0 || f[k].is_zero()) continue;
    out[lo.find_key(b.key(k) - unit)] += ring.field()(e) * f[k];
  }
  return out;
}

template <Side S>
Form<S> euler(const Form<S>& f) {
  Form<S> acc(f.ring(), f.degree());
  if (f.degree() == 0) return acc;
  for (int i = 0; i < f.ring()->nvars(); ++i) {
    acc += multiply(variable<S>(f.ring(), i), partial(f, i));
  }
  return acc;
}

Fp apolar_pair(const DualForm& phi, const HomForm& f) {
  if (phi.degree() != f.degree()) throw Error(Errc::degree_mismatch, "pairing forms of different degree");
  const Ring& ring = *f.ring();
  Fp acc = ring.field().zero();
  for (Index i = 0; i < f.coeffs().size(); ++i) {
    if (phi[i].is_zero() || f[i].is_zero()) continue;
    acc += phi[i] * f[i] * ring.factorial_weight(f.degree(), i);
  }
  return acc;
}

namespace {

// Coefficient of z^{I-J} in d^J z^I is I!/(I-J)!.
template <Side Out, Side In, Side Op>
Form<Out> contract_impl(const Form<Op>& q, const Form<In>& phi) {
  const Ring& ring = *phi.ring();
  if (q.degree() > phi.degree()) {
    throw Error(Errc::degree_mismatch, "operator degree exceeds operand degree");
  }
  const int out_deg = phi.degree() - q.degree();
  const MonomialBasis& bq = ring.basis(q.degree());
  const MonomialBasis& bp = ring.basis(phi.degree());
  const MonomialBasis& bo = ring.basis(out_deg);
  Form<Out> out(phi.ring(), out_deg);
  for (Index o = 0; o < bo.size(); ++o) {
    for (Index j = 0; j < bq.size(); ++j) {
      if (q[j].is_zero()) continue;
      const Index i = bp.find_key(bo.key(o) + bq.key(j));
      if (phi[i].is_zero()) continue;
      // I!/(I-J)! = weight(I) / weight(I-J)
      const Fp w = ring.factorial_weight(phi.degree(), i) / ring.factorial_weight(out_deg, o);
      out[o] += q[j] * phi[i] * w;
    }
  }
  return out;
}

}  // namespace

DualForm contract(const HomForm& q, const DualForm& phi) {
  return contract_impl<Side::dual, Side::dual, Side::primal>(q, phi);
}

HomForm contract(const DualForm& q, const HomForm& f) {
  return contract_impl<Side::primal, Side::primal, Side::dual>(q, f);
}

template <Side S>
Form<S> random_form(const RingPtr& ring, int degree, std::uint64_t seed) {
  Stream stream(seed);
  Form<S> f(ring, degree);
  const std::uint32_t p = ring->field().modulus();
  for (Index i = 0; i < f.coeffs().size(); ++i) {
    f[i] = Fp(static_cast<std::uint32_t>(stream.below(p)), p);
  }
  return f;
}

template <Side S>
Form<S> substitute(const Form<S>& f, const Mat& g) {
  const Ring& ring = *f.ring();
  const int n = ring.nvars();
  if (g.rows() != n || g.cols() != n) throw Error(Errc::shape_mismatch, "substitution must be n x n");
  std::vector<Form<S>> images;
  for (int i = 0; i < n; ++i) {
    Form<S> li(f.ring(), 1);
    for (int j = 0; j < n; ++j) li[j] = g(i, j) * ring.field().one();
    images.push_back(std::move(li));
  }
  const MonomialBasis& b = ring.basis(f.degree());
  Form<S> out(f.ring(), f.degree());
  Vec one = zero_vector(ring.field(), 1);
  one[0] = ring.field().one();
  for (Index k = 0; k < b.size(); ++k) {
    if (f[k].is_zero()) continue;
    Form<S> term(f.ring(), 0, one);
    for (int i = 0; i < n; ++i) {
      for (int e = 0; e < b[k][i]; ++e) term = multiply(term, images[i]);
    }
    out += f[k] * term;
  }
  return out;
}

template <Side S>
Form<S> normalized(const Form<S>& f) {
  const Index lead = f.leading_index();
  if (lead < 0) return f;
  return f[lead].inverse() * f;
}

template <Side S>
bool proportional(const Form<S>& a, const Form<S>& b) {
  if (a.degree() != b.degree()) return false;
  if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
  return normalized(a) == normalized(b);
}

template <Side S>
Mat coefficient_matrix(const std::vector<Form<S>>& forms, const RingPtr& ring, int degree) {
  Mat m = zeros(ring->field(), static_cast<Index>(forms.size()), ring->dim(degree));
  for (std::size_t r = 0; r < forms.size(); ++r) {
    if (forms[r].degree() != degree) throw Error(Errc::degree_mismatch, "mixed degrees in coefficient matrix");
    m.row(static_cast<Index>(r)) = forms[r].coeffs().transpose();
  }
  return m;
}

#define CUBICPAIR_INSTANTIATE(S)                                                     \
  template class Form<S>;                                                            \
  template Form<S> monomial<S>(const RingPtr&, const Exponents&, Fp);                \
  template Form<S> variable<S>(const RingPtr&, int);                                 \
  template Form<S> multiply<S>(const Form<S>&, const Form<S>&);                      \
  template Form<S> partial<S>(const Form<S>&, int);                                  \
  template Form<S> euler<S>(const Form<S>&);                                         \
  template Form<S> random_form<S>(const RingPtr&, int, std::uint64_t);               \
  template Form<S> substitute<S>(const Form<S>&, const Mat&);                        \
  template Form<S> normalized<S>(const Form<S>&);                                    \
  template bool proportional<S>(const Form<S>&, const Form<S>&);                     \
  template Mat coefficient_matrix<S>(const std::vector<Form<S>>&, const RingPtr&, int);

CUBICPAIR_INSTANTIATE(Side::primal)
CUBICPAIR_INSTANTIATE(Side::dual)

#undef CUBICPAIR_INSTANTIATE

}  // namespace cubicpair
