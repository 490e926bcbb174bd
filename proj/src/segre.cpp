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

#include "segdecomp/segre.hpp"

#include <cassert>

#include "segdecomp/error.hpp"

namespace segdecomp {

SegreEmbedding::SegreEmbedding(Field F, int n, int m)
    : field_(std::move(F)), n_(n), m_(m) {}

Vec SegreEmbedding::tensor(std::span<const Elem> x,
                           std::span<const Elem> y) const {
  assert(x.size() == static_cast<std::size_t>(n_ + 1));
  assert(y.size() == static_cast<std::size_t>(m_ + 1));
  Vec z(x.size() * y.size());
  for (int i = 0; i <= n_; ++i)
    for (int j = 0; j <= m_; ++j) z[coordinate(i, j)] = field_.mul(x[i], y[j]);
  return z;
}

ProjPoint SegreEmbedding::embed(const ProjPoint& x, const ProjPoint& y) const {
  return ProjPoint::normalize(field_, tensor(x.coords(), y.coords()));
}

ProductPoint SegreEmbedding::preimage(const ProjPoint& z) const {
  if (z.dimension() != target_dimension())
    throw Error(ErrorCode::kNotOnVariety, "point has the wrong dimension");
  Matrix r(n_ + 1, m_ + 1);
  for (int i = 0; i <= n_; ++i)
    for (int j = 0; j <= m_; ++j) r(i, j) = z[coordinate(i, j)];
  if (rank(field_, r) != 1)
    throw Error(ErrorCode::kNotOnVariety, "point is not a rank-1 tensor");
  // Any nonzero row is a multiple of y; any nonzero column of x.
  int row = 0;
  while (is_zero(r.row(row))) ++row;
  int col = 0;
  while (r(row, col) == 0) ++col;
  Vec x(n_ + 1);
  for (int i = 0; i <= n_; ++i) x[i] = r(i, col);
  return {ProjPoint::normalize(field_, x), ProjPoint::normalize(field_, r.row(row))};
}

int SegreEmbedding::regularity_dimension() const {
  Matrix m(0, static_cast<std::size_t>(target_dimension() + 1));
  for (const auto& x : enumerate_points(field_, n_))
    for (const auto& y : enumerate_points(field_, m_))
      m.append_row(embed(x, y).coords());
  return static_cast<int>(rank(field_, std::move(m))) - 1;
}

}  // namespace segdecomp
