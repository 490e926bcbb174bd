// Copyright 2026 The segdecomp Authors
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

#pragma once

// Text literals: a point is `(c0:c1:...:cd)` with decimal element encodings,
// a product point is `(x0:...:xn)x(y0:...:ym)`.

#include <string>
#include <string_view>

#include "segdecomp/product.hpp"

namespace segdecomp {

std::string format_point(const ProjPoint& p);
std::string format_point(const MaybePoint& p);  // "UNDEF" when empty
std::string format_product_point(const ProductPoint& p);

/// Parses and normalizes; throws ParseError (line 0) on malformed input,
/// wrong dimension (when expected_dim >= 0), out-of-range elements or zero.
ProjPoint parse_point(const Field& F, std::string_view text,
                      int expected_dim = -1);
ProductPoint parse_product_point(const Field& F, std::string_view text,
                                 int n = -1, int m = -1);

}  // namespace segdecomp
