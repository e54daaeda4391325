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

#ifndef CUBICPAIR_ANALYSIS_HPP_
#define CUBICPAIR_ANALYSIS_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cubicpair/hodge.hpp"

namespace cubicpair {

inline constexpr int kMaxResamples = 100;

struct AnalyzeOptions {
  int degree_bound = kDefaultDegreeBound;         ///< X and C smoothness
  int surface_degree_bound = kSurfaceDegreeBound; ///< Y smoothness
  bool emit_mf = false;
  bool emit_quintic = true;
};

/// Everything the batch pipeline computes for one pair.
struct AnalysisReport {
  std::optional<std::uint64_t> seed;
  PairInput pair;
  bool x_smooth = false;
  SurfaceCertificate surface;
  std::vector<Index> hilbert;  ///< Milnor algebra of F, degrees 0..6
  std::optional<CubicFormResult> cubic;
  std::optional<Index> quintic_perp_dim;
  std::optional<HomForm> quintic;
  std::optional<ModuliReport> moduli;
  std::optional<DualForm> mf;
  /// Names of failed certificates; empty for the generic profile.
  std::vector<std::string> degeneracies;

  bool generic() const { return degeneracies.empty(); }
};

AnalysisReport analyze(const PairInput& pair, const AnalyzeOptions& options = {},
                       std::optional<std::uint64_t> seed = std::nullopt);

/// Seeded random pair, resampled until X and Y pass their smoothness
/// certificates. Errc::exhausted_retries after kMaxResamples attempts.
struct GeneratedPair {
  PairInput pair;
  std::uint64_t seed;
  int attempts;
};

GeneratedPair generate_pair(const RingPtr& ring, std::uint64_t seed,
                            int surface_degree_bound = kSurfaceDegreeBound);

/// z_1^3 + ... + z_n^3 and z_1^2 + ... + z_n^2.
HomForm fermat_cubic(const RingPtr& ring);
HomForm fermat_quadric(const RingPtr& ring);

struct SearchOptions {
  std::uint64_t seed = 0;
  int trials = 1;
  int jobs = 1;
  bool fermat = false;  ///< keep F = sum z_i^3 and vary Q only
  AnalyzeOptions analyze;
};

struct SearchTrial {
  std::uint64_t index;
  std::uint64_t seed;
  AnalysisReport report;
};

struct SearchSummary {
  int trials = 0;
  int smooth = 0;
  int nondegenerate = 0;
  int zero = 0;
  int generic = 0;
  int q_in_jf2 = 0;
  bool zero_iff_q_in_jf2 = true;
  bool smooth_implies_nondegenerate = true;
  std::vector<SearchTrial> exceptional;  ///< non-generic trials, in index order
};

/// Trials fan out over `jobs` worker threads; trial i uses derive_seed(seed, i).
SearchSummary search(const RingPtr& ring, const SearchOptions& options);

}  // namespace cubicpair

#endif  // CUBICPAIR_ANALYSIS_HPP_
