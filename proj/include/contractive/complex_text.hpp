// Copyright 2026 The contractive Authors. All Rights Reserved.
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

#ifndef CONTRACTIVE_COMPLEX_TEXT_HPP_
#define CONTRACTIVE_COMPLEX_TEXT_HPP_

#include <string_view>

#include "contractive/core_matrix.hpp"

namespace contractive {

/// Parses "a", "bi", "a+bi", "a-bi", "i", "-i" (also with j for the
/// imaginary unit). Surrounding whitespace is ignored. Throws InputError.
Complex parse_complex(std::string_view text);

}  // namespace contractive

#endif  // CONTRACTIVE_COMPLEX_TEXT_HPP_
