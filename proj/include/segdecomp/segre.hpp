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

#include <span>

#include "segdecomp/product.hpp"

namespace segdecomp {

/// The Segre map PG(n) x PG(m) -> PG(nm+n+m), (x, y) -> x (x) y, with the
/// coordinate x_i y_j stored at index i(m+1) + j.
class SegreEmbedding {
 public:
  SegreEmbedding(Field F, int n, int m);

  const Field& field() const { return field_; }
  int n() const { return n_; }
  int m() const { return m_; }
  int target_dimension() const { return n_ * m_ + n_ + m_; }
  std::size_t coordinate(int i, int j) const {
    return static_cast<std::size_t>(i) * (m_ + 1) + j;
  }

  Vec tensor(std::span<const Elem> x, std::span<const Elem> y) const;
  ProjPoint embed(const ProjPoint& x, const ProjPoint& y) const;
  ProjPoint embed(const ProductPoint& p) const { return embed(p.x, p.y); }

  /// Throws kNotOnVariety unless z reshapes to a rank-1 matrix.
  ProductPoint preimage(const ProjPoint& z) const;

  /// Projective dimension of the span of the whole image.
  int regularity_dimension() const;

 private:
  Field field_;
  int n_;
  int m_;
};

}  // namespace segdecomp
