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

// The product space PG(n,q) x PG(m,q). Its lines are X x g (g a line of the
// second factor) and g x Y (g a line of the first factor).

#include <optional>
#include <set>
#include <vector>

#include "segdecomp/projspace.hpp"

namespace segdecomp {

struct ProductPoint {
  ProjPoint x;
  ProjPoint y;

  auto operator<=>(const ProductPoint&) const = default;
};

enum class LineKind { kFixedFirst, kFixedSecond };

struct ProductLine {
  LineKind kind;
  ProjPoint fixed;
  Subspace line;  // dimension 1, in the other factor

  std::vector<ProductPoint> points() const;
  bool contains(const ProductPoint& p) const;
};

struct Collinearity {
  enum class Kind { kNotCollinear, kEqual, kLine };
  Kind kind;
  std::optional<ProductLine> line;
};

Collinearity collinear(const Field& F, const ProductPoint& a,
                       const ProductPoint& b);

/// M1 u M2 u (the lines X1X2 over collinear X1 in M1, X2 in M2, X1 != X2).
/// A single step; the result is not closed under further joins.
std::set<ProductPoint> product_join(const Field& F,
                                    const std::set<ProductPoint>& m1,
                                    const std::set<ProductPoint>& m2);

std::vector<ProductLine> enumerate_product_lines(const Field& F, int n, int m);

/// Enumerated product space with dense indices: index(x, y) = ix * |P2| + iy,
/// where ix, iy are the point indices in the factors.
class ProductSpace {
 public:
  ProductSpace(Field F, int n, int m);

  const Field& field() const { return field_; }
  int n() const { return n_; }
  int m() const { return m_; }
  std::size_t size() const { return first_.size() * second_.size(); }

  const std::vector<ProjPoint>& first_points() const { return first_; }
  const std::vector<ProjPoint>& second_points() const { return second_; }

  std::size_t index(const ProductPoint& p) const;
  std::size_t index(std::size_t ix, std::size_t iy) const {
    return ix * second_.size() + iy;
  }
  ProductPoint point(std::size_t index) const;
  std::size_t first_index(std::size_t index) const {
    return index / second_.size();
  }
  std::size_t second_index(std::size_t index) const {
    return index % second_.size();
  }

  /// Each product line as the sorted list of its point indices.
  const std::vector<std::vector<std::size_t>>& lines() const { return lines_; }
  /// Lines of each factor as sorted lists of factor point indices.
  const std::vector<std::vector<std::size_t>>& first_lines() const {
    return first_lines_;
  }
  const std::vector<std::vector<std::size_t>>& second_lines() const {
    return second_lines_;
  }

 private:
  Field field_;
  int n_;
  int m_;
  std::vector<ProjPoint> first_;
  std::vector<ProjPoint> second_;
  std::vector<std::vector<std::size_t>> first_lines_;
  std::vector<std::vector<std::size_t>> second_lines_;
  std::vector<std::vector<std::size_t>> lines_;
};

/// Lines of PG(d, F) as sorted lists of point indices.
std::vector<std::vector<std::size_t>> line_index_lists(const Field& F, int d);

}  // namespace segdecomp
