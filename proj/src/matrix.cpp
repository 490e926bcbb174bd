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

#include "segdecomp/matrix.hpp"

#include <algorithm>
#include <cassert>

namespace segdecomp {

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::from_rows(std::size_t cols, std::span<const Vec> rows) {
  Matrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    assert(rows[r].size() == cols);
    std::copy(rows[r].begin(), rows[r].end(), m.row(r).begin());
  }
  return m;
}

void Matrix::append_row(std::span<const Elem> v) {
  assert(v.size() == cols_ || rows_ == 0);
  if (rows_ == 0) cols_ = v.size();
  data_.insert(data_.end(), v.begin(), v.end());
  ++rows_;
}

bool Matrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](Elem e) { return e == 0; });
}

std::vector<std::size_t> rref(const Field& F, Matrix& m) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t piv = r;
    while (piv < m.rows() && m(piv, c) == 0) ++piv;
    if (piv == m.rows()) continue;
    if (piv != r) {
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(r, j), m(piv, j));
    }
    const Elem inv = F.inv(m(r, c));
    for (std::size_t j = c; j < m.cols(); ++j) m(r, j) = F.mul(m(r, j), inv);
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || m(i, c) == 0) continue;
      const Elem f = m(i, c);
      for (std::size_t j = c; j < m.cols(); ++j)
        m(i, j) = F.sub(m(i, j), F.mul(f, m(r, j)));
    }
    pivots.push_back(c);
    ++r;
  }
  Matrix out(r, m.cols());
  for (std::size_t i = 0; i < r; ++i)
    std::copy(m.row(i).begin(), m.row(i).end(), out.row(i).begin());
  m = std::move(out);
  return pivots;
}

std::size_t rank(const Field& F, Matrix m) { return rref(F, m).size(); }

Vec row_times(const Field& F, std::span<const Elem> v, const Matrix& m) {
  assert(v.size() == m.rows());
  Vec out(m.cols(), 0);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (v[i] == 0) continue;
    for (std::size_t j = 0; j < m.cols(); ++j)
      out[j] = F.add(out[j], F.mul(v[i], m(i, j)));
  }
  return out;
}

Matrix multiply(const Field& F, const Matrix& a, const Matrix& b) {
  assert(a.cols() == b.rows());
  Matrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    const Vec r = row_times(F, a.row(i), b);
    std::copy(r.begin(), r.end(), out.row(i).begin());
  }
  return out;
}

Matrix transpose(const Matrix& m) {
  Matrix t(m.cols(), m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) t(j, i) = m(i, j);
  return t;
}

Matrix left_kernel(const Field& F, const Matrix& m) {
  // u * m = 0  <=>  m^T u^T = 0: null space of m^T from its rref.
  Matrix t = transpose(m);
  const auto pivots = rref(F, t);
  const std::size_t n = m.rows();
  std::vector<bool> is_pivot(n, false);
  for (auto c : pivots) is_pivot[c] = true;
  Matrix basis(0, n);
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    Vec u(n, 0);
    u[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r)
      u[pivots[r]] = F.neg(t(r, free));
    basis.append_row(u);
  }
  if (basis.rows() == 0) return Matrix(0, n);
  rref(F, basis);
  return basis;
}

std::optional<Matrix> inverse(const Field& F, const Matrix& m) {
  if (m.rows() != m.cols()) return std::nullopt;
  const std::size_t n = m.rows();
  if (n == 0) return Matrix();
  Matrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = 1;
  }
  const auto pivots = rref(F, aug);
  if (pivots.size() < n || pivots[n - 1] != n - 1) return std::nullopt;
  Matrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
  return inv;
}

std::optional<Vec> solve_left(const Field& F, const Matrix& a,
                              std::span<const Elem> b) {
  // x * a = b  <=>  a^T x^T = b^T.
  assert(b.size() == a.cols());
  const std::size_t n = a.rows();
  Matrix aug(a.cols(), n + 1);
  for (std::size_t i = 0; i < a.cols(); ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(j, i);
    aug(i, n) = b[i];
  }
  const auto pivots = rref(F, aug);
  if (!pivots.empty() && pivots.back() == n) return std::nullopt;
  Vec x(n, 0);
  for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug(r, n);
  return x;
}

Vec twist(const Field& F, std::span<const Elem> v, FieldAutomorphism sigma) {
  Vec out(v.begin(), v.end());
  if (sigma.is_identity()) return out;
  for (auto& e : out) e = F.apply(sigma, e);
  return out;
}

Matrix twist(const Field& F, const Matrix& m, FieldAutomorphism sigma) {
  Matrix out = m;
  if (sigma.is_identity()) return out;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      out(i, j) = F.apply(sigma, m(i, j));
  return out;
}

Vec scale(const Field& F, std::span<const Elem> v, Elem s) {
  Vec out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = F.mul(v[i], s);
  return out;
}

bool is_zero(std::span<const Elem> v) {
  return std::all_of(v.begin(), v.end(), [](Elem e) { return e == 0; });
}

}  // namespace segdecomp
