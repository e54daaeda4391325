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

#include "cubicpair/analysis.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <thread>

#include "cubicpair/error.hpp"
#include "cubicpair/rng.hpp"

namespace cubicpair {
namespace {

constexpr int kHilbertTop = 6;

struct GenericProfile {
  Index colon_f5q_3 = 34;
  Index colon_f4q_2 = 10;
  Index j_c2_dim = 5;
  Index quintic_perp_dim = 1;
  Index jc6_codim = 0;
  Index dim_tdef_xy = 24;
  Index dim_h11_new = 19;
  Index dim_ker_alpha = 0;
  Index rank_mq_s3 = 5;
};

void classify(AnalysisReport& r) {
  auto& bad = r.degeneracies;
  if (!r.x_smooth) bad.push_back("x_smooth");
  if (!r.surface.smooth) bad.push_back("y_smooth");
  if (!r.cubic) return;
  const CubicFormResult& c = *r.cubic;
  if (c.is_zero) bad.push_back("is_zero");
  if (!c.is_nondegenerate) bad.push_back("is_nondegenerate");
  if (!c.is_smooth) bad.push_back("is_smooth");
  if (r.quintic_perp_dim.value_or(0) != 1) bad.push_back("quintic_unique");
  if (r.moduli) {
    if (r.moduli->dim_ker_alpha != 0) bad.push_back("ker_alpha_zero");
    if (!r.moduli->delta_b_nonzero) bad.push_back("delta_b_nonzero");
  }
  if (!bad.empty()) return;

  // Certificates all pass; any remaining deviation from the generic
  // dimension vector is reported as one more named failure.
  const GenericProfile g;
  const ModuliReport& m = *r.moduli;
  const bool dims = c.colon_f5q_3 == g.colon_f5q_3 && c.colon_f4q_2 == g.colon_f4q_2 &&
                    c.j_c2_dim == g.j_c2_dim && *r.quintic_perp_dim == g.quintic_perp_dim &&
                    c.jc6_codim == g.jc6_codim && m.dim_tdef_xy == g.dim_tdef_xy &&
                    m.dim_h11_new == g.dim_h11_new && m.dim_ker_alpha == g.dim_ker_alpha &&
                    m.rank_mq_s3 == g.rank_mq_s3;
  if (!dims) bad.push_back("generic_dims");
}

HomForm power_sum(const RingPtr& ring, int degree) {
  HomForm f(ring, degree);
  for (int i = 0; i < ring->nvars(); ++i) {
    Exponents e(ring->nvars(), 0);
    e[i] = degree;
    f.set_coeff(e, ring->field().one());
  }
  return f;
}

// Fermat orbit sample: a diagonal quadric, which lies in J_{F,2}, plus an
// off-diagonal part on roughly half the trials.
HomForm fermat_orbit_quadric(const RingPtr& ring, std::uint64_t seed) {
  Stream s(seed);
  const PrimeField& field = ring->field();
  const std::uint64_t p = field.modulus();
  const bool generic = s.below(2) == 1;
  HomForm Q(ring, 2);
  const MonomialBasis& b = ring->basis(2);
  for (Index i = 0; i < b.size(); ++i) {
    const bool diagonal = std::count(b[i].begin(), b[i].end(), 2) == 1;
    if (diagonal || generic) Q[i] = field(static_cast<std::int64_t>(s.below(p)));
  }
  if (Q.is_zero()) Q = power_sum(ring, 2);
  return Q;
}

}  // namespace

HomForm fermat_cubic(const RingPtr& ring) { return power_sum(ring, 3); }

HomForm fermat_quadric(const RingPtr& ring) { return power_sum(ring, 2); }

AnalysisReport analyze(const PairInput& pair, const AnalyzeOptions& options,
                       std::optional<std::uint64_t> seed) {
  const RingPtr& ring = pair.F.ring();
  if (pair.F.degree() != 3 || pair.Q.degree() != 2) {
    throw Error(Errc::degree_mismatch, "expected a cubic F and a quadric Q");
  }
  if (pair.Q.ring() != ring) {
    throw Error(Errc::shape_mismatch, "F and Q live in different rings");
  }
  AnalysisReport r{seed, pair, false, {}, {}, std::nullopt, std::nullopt, std::nullopt, std::nullopt, std::nullopt, {}};
  r.x_smooth = is_smooth_form(pair.F, options.degree_bound);
  r.hilbert = hilbert_function(ring, jacobian_gens(pair.F), kHilbertTop);
  r.surface = certify_surface(pair.F, pair.Q, options.surface_degree_bound);

  if (r.x_smooth) {
    r.cubic = cubic_form(pair, options.degree_bound);
    if (!r.cubic->is_zero) {
      const int top = ring->nvars() * (r.cubic->C.degree() - 2);
      r.quintic_perp_dim = ring->dim(top) - graded_piece_dim(ring, jacobian_gens(r.cubic->C), top);
      if (options.emit_quintic && *r.quintic_perp_dim == 1) r.quintic = associated_quintic(r.cubic->C);
    } else {
      r.quintic_perp_dim = ring->dim(ring->nvars());
    }
    if (r.surface.smooth) {
      r.moduli = moduli_report(pair, r.surface, options.degree_bound);
    }
    if (options.emit_mf) r.mf = normalized(mf_form(pair.F, MfMode::nullspace));
  }
  classify(r);
  return r;
}

GeneratedPair generate_pair(const RingPtr& ring, std::uint64_t seed, int surface_degree_bound) {
  for (int attempt = 0; attempt < kMaxResamples; ++attempt) {
    const std::uint64_t a = static_cast<std::uint64_t>(attempt);
    HomForm F = random_form(ring, 3, derive_seed(seed, 2 * a));
    HomForm Q = random_form(ring, 2, derive_seed(seed, 2 * a + 1));
    if (is_smooth_form(F) && certify_surface(F, Q, surface_degree_bound).smooth) {
      return {{std::move(F), std::move(Q)}, seed, attempt + 1};
    }
  }
  throw Error(Errc::exhausted_retries, "no smooth pair after " + std::to_string(kMaxResamples) + " samples");
}

SearchSummary search(const RingPtr& ring, const SearchOptions& options) {
  if (options.trials < 1) throw Error(Errc::malformed_input, "trials must be at least 1");
  const std::size_t n = static_cast<std::size_t>(options.trials);
  std::vector<std::optional<SearchTrial>> results(n);
  std::vector<std::exception_ptr> errors(n);
  std::atomic<std::size_t> next{0};

  auto worker = [&] {
    for (std::size_t i = next++; i < n; i = next++) {
      try {
        const std::uint64_t s = derive_seed(options.seed, i);
        PairInput pair = options.fermat
                             ? PairInput{fermat_cubic(ring), fermat_orbit_quadric(ring, s)}
                             : generate_pair(ring, s, options.analyze.surface_degree_bound).pair;
        results[i] = SearchTrial{i, s, analyze(pair, options.analyze, s)};
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  const int jobs = std::clamp(options.jobs, 1, options.trials);
  std::vector<std::thread> pool;
  for (int j = 1; j < jobs; ++j) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  SearchSummary sum;
  sum.trials = options.trials;
  for (std::size_t i = 0; i < n; ++i) {
    if (errors[i]) std::rethrow_exception(errors[i]);
    SearchTrial& t = *results[i];
    const AnalysisReport& r = t.report;
    if (r.generic()) ++sum.generic;
    if (r.cubic) {
      const CubicFormResult& c = *r.cubic;
      sum.smooth += c.is_smooth;
      sum.nondegenerate += c.is_nondegenerate;
      sum.zero += c.is_zero;
      sum.q_in_jf2 += c.q_in_jf2;
      if (c.is_zero != c.q_in_jf2) sum.zero_iff_q_in_jf2 = false;
      if (c.is_smooth && !c.is_nondegenerate) sum.smooth_implies_nondegenerate = false;
    }
    if (!r.generic()) sum.exceptional.push_back(std::move(t));
  }
  return sum;
}

}  // namespace cubicpair
