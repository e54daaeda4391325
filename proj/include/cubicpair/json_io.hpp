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

#ifndef CUBICPAIR_JSON_IO_HPP_
#define CUBICPAIR_JSON_IO_HPP_

#include <string>

#include <json.hpp>

#include "cubicpair/analysis.hpp"
#include "cubicpair/torelli.hpp"

namespace cubicpair {

/// Insertion-ordered, so serialization is a pure function of the value.
using Json = nlohmann::ordered_json;

/// Two-space indented text with a trailing newline.
std::string dump(const Json& j);

/// Errc::malformed_input on syntax errors.
Json parse_json(const std::string& text);

/**
 * { "p", "n", "degree", "coeffs": [ { "exps": [...], "c": int } ] }
 *
 * Only nonzero terms, in monomial order. Dual forms carry an extra
 * "side": "dual" entry.
 */
template <Side S>
Json form_to_json(const Form<S>& f);

/// Ring big enough for forms of the given size: max degree at least 8.
RingPtr ring_for(std::uint32_t p, int nvars, int degree = 0);

/// Reads a form into `ring`. Errc::malformed_input on bad exponents,
/// repeated monomials or a prime / arity different from the ring's.
template <Side S>
Form<S> form_from_json(const Json& j, const RingPtr& ring);

/// Reads a form and builds its ring from the "p", "n" and "degree" fields.
HomForm form_from_json(const Json& j);

/// { "seed"?, "p", "n", "F", "Q" }
Json pair_to_json(const PairInput& pair, std::optional<std::uint64_t> seed = std::nullopt);
PairInput pair_from_json(const Json& j);
std::optional<std::uint64_t> seed_from_json(const Json& j);

/// { "p", "n", "T": rows of ints, "c": ints }. "n" defaults to 5 and a
/// missing "c" reads as the zero vector.
Json pairing_data_to_json(const PairData& data);
PairData pairing_data_from_json(const Json& j);

Json report_to_json(const AnalysisReport& report);
Json torelli_to_json(const TorelliResult& result);
Json search_to_json(const SearchSummary& summary, const SearchOptions& options, std::uint32_t p);
Json binary_to_json(const HomForm& F, const BinarySyzygy& result);

}  // namespace cubicpair

#endif  // CUBICPAIR_JSON_IO_HPP_
