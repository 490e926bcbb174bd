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

/// @file projspace.hpp
/// Points and subspaces of PG(d, q).
///
/// A point is a nonzero coordinate vector scaled so that its first nonzero
/// entry is 1; two points are equal iff their vectors are identical. Points
/// are ordered lexicographically on the canonical element encodings, which is
/// also the order produced by enumerate_points() and the order behind
/// point_index(). A subspace is the row space of a matrix kept in reduced row
/// echelon form, so equal subspaces have identical bases.

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "segdecomp/gf.hpp"
#include "segdecomp/matrix.hpp"

namespace segdecomp {

class ProjPoint {
 public:
  /// Throws kZeroVector.
  static ProjPoint normalize(const Field& F, std::span<const Elem> v);

  std::span<const Elem> coords() const { return coords_; }
  const Vec& vector() const { return coords_; }
  Elem operator[](std::size_t i) const { return coords_[i]; }
  std::size_t size() const { return coords_.size(); }
  int dimension() const { return static_cast<int>(coords_.size()) - 1; }

  auto operator<=>(const ProjPoint&) const = default;

 private:
  explicit ProjPoint(Vec v) : coords_(std::move(v)) {}
  Vec coords_;
};

/// A point, or nothing when a partial map is undefined there.
using MaybePoint = std::optional<ProjPoint>;

/// (q^(d+1) - 1) / (q - 1); 0 for d < 0.
std::uint64_t point_count(const Field& F, int d);
std::uint64_t point_index(const Field& F, const ProjPoint& p);
ProjPoint point_at(const Field& F, int d, std::uint64_t index);
std::vector<ProjPoint> enumerate_points(const Field& F, int d);

class Subspace {
 public:
  /// The empty subspace of PG(ambient_dim, F).
  Subspace(Field F, int ambient_dim);

  static Subspace whole(const Field& F, int ambient_dim);
  static Subspace from_rows(const Field& F, int ambient_dim, Matrix rows);
  static Subspace span(const Field& F, int ambient_dim,
                       std::span<const ProjPoint> points);

  const Field& field() const { return field_; }
  int ambient_dimension() const { return ambient_; }
  /// Projective dimension; -1 for the empty subspace.
  int dimension() const { return static_cast<int>(basis_.rows()) - 1; }
  bool empty() const { return basis_.rows() == 0; }
  const Matrix& basis() const { return basis_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }
  std::vector<ProjPoint> basis_points() const;

  bool contains(std::span<const Elem> v) const;
  bool contains(const ProjPoint& p) const { return contains(p.coords()); }
  bool contains(const Subspace& s) const;

  /// All points, sorted.
  std::vector<ProjPoint> points() const;
  std::uint64_t point_count() const;

  /// c with v = c * basis(); v must lie in the subspace.
  Vec coordinates(std::span<const Elem> v) const;
  /// The vector c * basis().
  Vec combine(std::span<const Elem> c) const;

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
  }

 private:
  Field field_;
  int ambient_;
  Matrix basis_;
  std::vector<std::size_t> pivots_;
};

/// Throws kEqualPoints.
Subspace line_through(const Field& F, const ProjPoint& p, const ProjPoint& q);
Subspace join(const Subspace& s, const Subspace& t);
Subspace meet(const Subspace& s, const Subspace& t);

/// Greedy completion by standard basis vectors in increasing index.
Subspace complement(const Subspace& s);
/// Same, but starting from `seed`, which must be disjoint from `s`.
Subspace complement_containing(const Subspace& s, const Subspace& seed);

/// The point of (center v x) n target; nullopt when x lies in the center.
/// Throws kNotComplementary.
MaybePoint project_from(const Subspace& center, const Subspace& target,
                        const ProjPoint& x);

/// All subspaces of projective dimension k in PG(d, F), sorted by basis.
std::vector<Subspace> enumerate_subspaces(const Field& F, int d, int k);

}  // namespace segdecomp
