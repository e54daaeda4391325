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

#ifndef CUBICPAIR_ERROR_HPP_
#define CUBICPAIR_ERROR_HPP_

#include <stdexcept>
#include <string>
#include <string_view>

namespace cubicpair {

enum class Errc {
  invalid_field,
  field_mismatch,
  division_by_zero,
  non_square,
  shape_mismatch,
  degree_mismatch,
  degree_out_of_range,
  wrong_arity,
  singular_cubic,
  singular_surface,
  singular_associated_cubic,
  genericity_failure,
  non_unique_gradient,
  inconsistent_w,
  non_unique_q,
  inconsistent_data,
  exhausted_retries,
  malformed_input,
};

std::string_view to_string(Errc code);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  Errc code() const { return code_; }

 private:
  Errc code_;
};

}  // namespace cubicpair

#endif  // CUBICPAIR_ERROR_HPP_
