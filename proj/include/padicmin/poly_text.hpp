// Copyright 2026 The padicmin Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef PADICMIN_POLY_TEXT_HPP
#define PADICMIN_POLY_TEXT_HPP

#include <string>
#include <string_view>

#include "padicmin/arith.hpp"

namespace padicmin {

/// Parses either a coefficient list "a0,a1,...,ad" or an expression such as
/// "5x^5 + 10x^4 - 5x^2 - 4x + 1". Whitespace is ignored, repeated powers are
/// summed. Throws ParseError.
IntPoly parse_poly(std::string_view text);

/// Expression form, highest power first: "5x^5+10x^4-5x^2-4x+1".
std::string format_poly(const IntPoly& f);

/// Coefficient list form, a_0 first: "1,-4,-5,0,10,5".
std::string format_coeff_list(const IntPoly& f);

}  // namespace padicmin

#endif  // PADICMIN_POLY_TEXT_HPP
