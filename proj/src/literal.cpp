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

#include "segdecomp/literal.hpp"

#include <charconv>

#include "segdecomp/error.hpp"

namespace segdecomp {

std::string format_point(const ProjPoint& p) {
  std::string s = "(";
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) s += ':';
    s += std::to_string(p[i]);
  }
  s += ')';
  return s;
}

std::string format_point(const MaybePoint& p) {
  return p ? format_point(*p) : std::string("UNDEF");
}

std::string format_product_point(const ProductPoint& p) {
  return format_point(p.x) + "x" + format_point(p.y);
}

ProjPoint parse_point(const Field& F, std::string_view text, int expected_dim) {
  const std::string shown(text);
  if (text.size() < 3 || text.front() != '(' || text.back() != ')')
    throw ParseError(0, "malformed point literal '" + shown + "'");
  text = text.substr(1, text.size() - 2);
  Vec v;
  while (true) {
    const auto colon = text.find(':');
    const auto tok = text.substr(0, colon);
    unsigned value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (tok.empty() || ec != std::errc() || ptr != tok.data() + tok.size())
      throw ParseError(0, "bad coordinate in '" + shown + "'");
    if (value >= F.order())
      throw ParseError(0, "coordinate out of field range in '" + shown + "'");
    v.push_back(value);
    if (colon == std::string_view::npos) break;
    text = text.substr(colon + 1);
  }
  if (expected_dim >= 0 && v.size() != static_cast<std::size_t>(expected_dim + 1))
    throw ParseError(0, "point '" + shown + "' should have " +
                            std::to_string(expected_dim + 1) + " coordinates");
  if (is_zero(v)) throw ParseError(0, "zero vector '" + shown + "' is not a point");
  return ProjPoint::normalize(F, v);
}

ProductPoint parse_product_point(const Field& F, std::string_view text, int n,
                                 int m) {
  const auto sep = text.find(")x(");
  if (sep == std::string_view::npos)
    throw ParseError(0, "malformed product point '" + std::string(text) + "'");
  return {parse_point(F, text.substr(0, sep + 1), n),
          parse_point(F, text.substr(sep + 2), m)};
}

}  // namespace segdecomp
