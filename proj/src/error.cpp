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

#include "cubicpair/error.hpp"

namespace cubicpair {

std::string_view to_string(Errc code) {
  switch (code) {
    case Errc::invalid_field: return "InvalidField";
    case Errc::field_mismatch: return "FieldMismatch";
    case Errc::division_by_zero: return "DivisionByZero";
    case Errc::non_square: return "NonSquare";
    case Errc::shape_mismatch: return "ShapeMismatch";
    case Errc::degree_mismatch: return "DegreeMismatch";
    case Errc::degree_out_of_range: return "DegreeOutOfRange";
    case Errc::wrong_arity: return "WrongArity";
    case Errc::singular_cubic: return "SingularCubic";
    case Errc::singular_surface: return "SingularSurface";
    case Errc::singular_associated_cubic: return "SingularAssociatedCubic";
    case Errc::genericity_failure: return "GenericityFailure";
    case Errc::non_unique_gradient: return "NonUniqueGradient";
    case Errc::inconsistent_w: return "InconsistentW";
    case Errc::non_unique_q: return "NonUniqueQ";
    case Errc::inconsistent_data: return "InconsistentData";
    case Errc::exhausted_retries: return "ExhaustedRetries";
    case Errc::malformed_input: return "MalformedInput";
  }
  return "Unknown";
}

}  // namespace cubicpair
