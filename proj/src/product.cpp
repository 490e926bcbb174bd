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

#include "segdecomp/product.hpp"

#include <algorithm>

namespace segdecomp {

std::vector<ProductPoint> ProductLine::points() const {
  std::vector<ProductPoint> out;
  for (const auto& p : line.points()) {
    if (kind == LineKind::kFixedFirst)
      out.push_back({fixed, p});
    else
      out.push_back({p, fixed});
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool ProductLine::contains(const ProductPoint& p) const {
  if (kind == LineKind::kFixedFirst) return p.x == fixed && line.contains(p.y);
  return p.y == fixed && line.contains(p.x);
}

Collinearity collinear(const Field& F, const ProductPoint& a,
                       const ProductPoint& b) {
  if (a == b) return {Collinearity::Kind::kEqual, std::nullopt};
  if (a.x == b.x)
    return {Collinearity::Kind::kLine,
            ProductLine{LineKind::kFixedFirst, a.x, line_through(F, a.y, b.y)}};
  if (a.y == b.y)
    return {Collinearity::Kind::kLine,
            ProductLine{LineKind::kFixedSecond, a.y, line_through(F, a.x, b.x)}};
  return {Collinearity::Kind::kNotCollinear, std::nullopt};
}

std::set<ProductPoint> product_join(const Field& F,
                                    const std::set<ProductPoint>& m1,
                                    const std::set<ProductPoint>& m2) {
  std::set<ProductPoint> out = m1;
  out.insert(m2.begin(), m2.end());
  for (const auto& a : m1) {
    for (const auto& b : m2) {
      const auto c = collinear(F, a, b);
      if (c.kind != Collinearity::Kind::kLine) continue;
      for (auto& p : c.line->points()) out.insert(std::move(p));
    }
  }
  return out;
}

std::vector<ProductLine> enumerate_product_lines(const Field& F, int n, int m) {
  std::vector<ProductLine> out;
  const auto pts1 = enumerate_points(F, n);
  const auto pts2 = enumerate_points(F, m);
  const auto lines1 = enumerate_subspaces(F, n, 1);
  const auto lines2 = enumerate_subspaces(F, m, 1);
  for (const auto& x : pts1)
    for (const auto& g : lines2) out.push_back({LineKind::kFixedFirst, x, g});
  for (const auto& g : lines1)
    for (const auto& y : pts2) out.push_back({LineKind::kFixedSecond, y, g});
  return out;
}

std::vector<std::vector<std::size_t>> line_index_lists(const Field& F, int d) {
  std::vector<std::vector<std::size_t>> out;
  for (const auto& g : enumerate_subspaces(F, d, 1)) {
    std::vector<std::size_t> idx;
    for (const auto& p : g.points()) idx.push_back(point_index(F, p));
    std::sort(idx.begin(), idx.end());
    out.push_back(std::move(idx));
  }
  return out;
}

ProductSpace::ProductSpace(Field F, int n, int m)
    : field_(std::move(F)),
      n_(n),
      m_(m),
      first_(enumerate_points(field_, n)),
      second_(enumerate_points(field_, m)),
      first_lines_(line_index_lists(field_, n)),
      second_lines_(line_index_lists(field_, m)) {
  for (std::size_t ix = 0; ix < first_.size(); ++ix) {
    for (const auto& g : second_lines_) {
      std::vector<std::size_t> l;
      for (auto iy : g) l.push_back(index(ix, iy));
      lines_.push_back(std::move(l));
    }
  }
  for (const auto& g : first_lines_) {
    for (std::size_t iy = 0; iy < second_.size(); ++iy) {
      std::vector<std::size_t> l;
      for (auto ix : g) l.push_back(index(ix, iy));
      lines_.push_back(std::move(l));
    }
  }
}

std::size_t ProductSpace::index(const ProductPoint& p) const {
  return index(point_index(field_, p.x), point_index(field_, p.y));
}

ProductPoint ProductSpace::point(std::size_t index) const {
  return {first_[first_index(index)], second_[second_index(index)]};
}

}  // namespace segdecomp
