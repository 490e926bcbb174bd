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

#include "segdecomp/projspace.hpp"

#include <algorithm>
#include <cassert>
#include <functional>

#include "segdecomp/error.hpp"

namespace segdecomp {

namespace {

std::uint64_t ipow(std::uint64_t b, int e) {
  std::uint64_t r = 1;
  while (e-- > 0) r *= b;
  return r;
}

}  // namespace

ProjPoint ProjPoint::normalize(const Field& F, std::span<const Elem> v) {
  auto lead = std::find_if(v.begin(), v.end(), [](Elem e) { return e != 0; });
  if (lead == v.end())
    throw Error(ErrorCode::kZeroVector, "cannot normalize the zero vector");
  Vec out(v.begin(), v.end());
  if (*lead != 1) {
    const Elem inv = F.inv(*lead);
    for (auto& e : out) e = F.mul(e, inv);
  }
  return ProjPoint(std::move(out));
}

std::uint64_t point_count(const Field& F, int d) {
  if (d < 0) return 0;
  const std::uint64_t q = F.order();
  return (ipow(q, d + 1) - 1) / (q - 1);
}

std::uint64_t point_index(const Field& F, const ProjPoint& p) {
  const int d = p.dimension();
  const std::uint64_t q = F.order();
  int lead = 0;
  while (p[lead] == 0) ++lead;
  std::uint64_t idx = (ipow(q, d - lead) - 1) / (q - 1);
  std::uint64_t tail = 0;
  for (int i = lead + 1; i <= d; ++i) tail = tail * q + p[i];
  return idx + tail;
}

ProjPoint point_at(const Field& F, int d, std::uint64_t index) {
  const std::uint64_t q = F.order();
  int lead = d;
  // Points whose first nonzero coordinate is at `lead` occupy
  // [(q^(d-lead) - 1)/(q - 1), (q^(d-lead+1) - 1)/(q - 1)).
  while (lead > 0 && index >= (ipow(q, d - lead + 1) - 1) / (q - 1)) --lead;
  std::uint64_t tail = index - (ipow(q, d - lead) - 1) / (q - 1);
  Vec v(d + 1, 0);
  v[lead] = 1;
  for (int i = d; i > lead; --i) {
    v[i] = static_cast<Elem>(tail % q);
    tail /= q;
  }
  return ProjPoint::normalize(F, v);
}

std::vector<ProjPoint> enumerate_points(const Field& F, int d) {
  std::vector<ProjPoint> out;
  const std::uint64_t n = point_count(F, d);
  out.reserve(n);
  for (std::uint64_t i = 0; i < n; ++i) out.push_back(point_at(F, d, i));
  return out;
}

Subspace::Subspace(Field F, int ambient_dim)
    : field_(std::move(F)), ambient_(ambient_dim), basis_(0, ambient_dim + 1) {}

Subspace Subspace::whole(const Field& F, int ambient_dim) {
  return from_rows(F, ambient_dim, Matrix::identity(ambient_dim + 1));
}

Subspace Subspace::from_rows(const Field& F, int ambient_dim, Matrix rows) {
  Subspace s(F, ambient_dim);
  if (rows.rows() == 0) return s;
  assert(rows.cols() == static_cast<std::size_t>(ambient_dim + 1));
  s.pivots_ = rref(F, rows);
  s.basis_ = std::move(rows);
  if (s.basis_.rows() == 0) s.basis_ = Matrix(0, ambient_dim + 1);
  return s;
}

Subspace Subspace::span(const Field& F, int ambient_dim,
                        std::span<const ProjPoint> points) {
  Matrix m(0, ambient_dim + 1);
  for (const auto& p : points) m.append_row(p.coords());
  return from_rows(F, ambient_dim, std::move(m));
}

std::vector<ProjPoint> Subspace::basis_points() const {
  std::vector<ProjPoint> out;
  for (std::size_t i = 0; i < basis_.rows(); ++i)
    out.push_back(ProjPoint::normalize(field_, basis_.row(i)));
  return out;
}

bool Subspace::contains(std::span<const Elem> v) const {
  Vec r(v.begin(), v.end());
  for (std::size_t i = 0; i < basis_.rows(); ++i) {
    const Elem c = r[pivots_[i]];
    if (c == 0) continue;
    for (std::size_t j = 0; j < r.size(); ++j)
      r[j] = field_.sub(r[j], field_.mul(c, basis_(i, j)));
  }
  return is_zero(r);
}

bool Subspace::contains(const Subspace& s) const {
  for (std::size_t i = 0; i < s.basis_.rows(); ++i)
    if (!contains(s.basis_.row(i))) return false;
  return true;
}

std::uint64_t Subspace::point_count() const {
  return segdecomp::point_count(field_, dimension());
}

std::vector<ProjPoint> Subspace::points() const {
  std::vector<ProjPoint> out;
  const int r = dimension();
  if (r < 0) return out;
  const std::uint64_t n = segdecomp::point_count(field_, r);
  out.reserve(n);
  for (std::uint64_t i = 0; i < n; ++i) {
    const ProjPoint c = point_at(field_, r, i);
    out.push_back(ProjPoint::normalize(field_, combine(c.coords())));
  }
  std::sort(out.begin(), out.end());
  return out;
}

Vec Subspace::coordinates(std::span<const Elem> v) const {
  Vec c(basis_.rows());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = v[pivots_[i]];
  return c;
}

Vec Subspace::combine(std::span<const Elem> c) const {
  return row_times(field_, c, basis_);
}

Subspace line_through(const Field& F, const ProjPoint& p, const ProjPoint& q) {
  if (p == q) throw Error(ErrorCode::kEqualPoints, "line through equal points");
  const ProjPoint pts[] = {p, q};
  return Subspace::span(F, p.dimension(), pts);
}

Subspace join(const Subspace& s, const Subspace& t) {
  assert(s.ambient_dimension() == t.ambient_dimension());
  Matrix m(0, s.ambient_dimension() + 1);
  for (std::size_t i = 0; i < s.basis().rows(); ++i) m.append_row(s.basis().row(i));
  for (std::size_t i = 0; i < t.basis().rows(); ++i) m.append_row(t.basis().row(i));
  return Subspace::from_rows(s.field(), s.ambient_dimension(), std::move(m));
}

Subspace meet(const Subspace& s, const Subspace& t) {
  const Field& F = s.field();
  const int d = s.ambient_dimension();
  if (s.empty() || t.empty()) return Subspace(F, d);
  Matrix stacked(0, d + 1);
  for (std::size_t i = 0; i < s.basis().rows(); ++i)
    stacked.append_row(s.basis().row(i));
  for (std::size_t i = 0; i < t.basis().rows(); ++i)
    stacked.append_row(t.basis().row(i));
  const Matrix ker = left_kernel(F, stacked);
  Matrix rows(0, d + 1);
  const std::size_t r = s.basis().rows();
  for (std::size_t i = 0; i < ker.rows(); ++i) {
    const Vec a(ker.row(i).begin(), ker.row(i).begin() + r);
    rows.append_row(s.combine(a));
  }
  return Subspace::from_rows(F, d, std::move(rows));
}

Subspace complement_containing(const Subspace& s, const Subspace& seed) {
  const Field& F = s.field();
  const int d = s.ambient_dimension();
  Subspace acc = join(s, seed);
  if (acc.dimension() != s.dimension() + seed.dimension() + 1)
    throw Error(ErrorCode::kInvalidArgument,
                "complement seed meets the subspace");
  Matrix chosen(0, d + 1);
  for (std::size_t i = 0; i < seed.basis().rows(); ++i)
    chosen.append_row(seed.basis().row(i));
  for (int j = 0; j <= d && acc.dimension() < d; ++j) {
    Vec e(d + 1, 0);
    e[j] = 1;
    if (acc.contains(e)) continue;
    chosen.append_row(e);
    Matrix m = acc.basis();
    m.append_row(e);
    acc = Subspace::from_rows(F, d, std::move(m));
  }
  return Subspace::from_rows(F, d, std::move(chosen));
}

Subspace complement(const Subspace& s) {
  return complement_containing(s, Subspace(s.field(), s.ambient_dimension()));
}

MaybePoint project_from(const Subspace& center, const Subspace& target,
                        const ProjPoint& x) {
  const Field& F = center.field();
  const int d = center.ambient_dimension();
  if (center.dimension() + target.dimension() + 1 != d ||
      join(center, target).dimension() != d)
    throw Error(ErrorCode::kNotComplementary,
                "projection center and target are not complementary");
  if (center.contains(x)) return std::nullopt;
  Matrix both(0, d + 1);
  for (std::size_t i = 0; i < center.basis().rows(); ++i)
    both.append_row(center.basis().row(i));
  for (std::size_t i = 0; i < target.basis().rows(); ++i)
    both.append_row(target.basis().row(i));
  const auto c = solve_left(F, both, x.coords());
  assert(c.has_value());
  const std::size_t r = center.basis().rows();
  const Vec tc(c->begin() + r, c->end());
  return ProjPoint::normalize(F, target.combine(tc));
}

std::vector<Subspace> enumerate_subspaces(const Field& F, int d, int k) {
  std::vector<Subspace> out;
  const int n = d + 1;
  const int r = k + 1;
  if (r < 0 || r > n) return out;
  if (r == 0) {
    out.emplace_back(F, d);
    return out;
  }
  const Elem q = F.order();
  std::vector<int> pivots(r);
  std::function<void(int, int)> choose = [&](int idx, int start) {
    if (idx == r) {
      // Free slots: row i, columns after its pivot that are not pivots.
      std::vector<std::pair<int, int>> slots;
      for (int i = 0; i < r; ++i)
        for (int c = pivots[i] + 1; c < n; ++c)
          if (std::find(pivots.begin(), pivots.end(), c) == pivots.end())
            slots.emplace_back(i, c);
      std::vector<Elem> vals(slots.size(), 0);
      while (true) {
        Matrix m(r, n);
        for (int i = 0; i < r; ++i) m(i, pivots[i]) = 1;
        for (std::size_t s = 0; s < slots.size(); ++s)
          m(slots[s].first, slots[s].second) = vals[s];
        out.push_back(Subspace::from_rows(F, d, std::move(m)));
        std::size_t pos = slots.size();
        while (pos > 0) {
          if (++vals[pos - 1] < q) break;
          vals[pos - 1] = 0;
          --pos;
        }
        if (pos == 0) break;
      }
      return;
    }
    for (int c = start; c < n; ++c) {
      pivots[idx] = c;
      choose(idx + 1, c + 1);
    }
  };
  choose(0, 0);
  std::sort(out.begin(), out.end(), [](const Subspace& a, const Subspace& b) {
    return a.basis().data() < b.basis().data();
  });
  return out;
}

}  // namespace segdecomp
