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

/// @file linmap.hpp
/// Linear mappings into PG(N, q), in two representations.
///
/// A SemilinearMap is a matrix M together with a field automorphism s; it
/// sends the point v to v^s M, and is undefined where that vector vanishes.
/// Tables (PointMap for maps on PG(d), ProductMapTable for maps on a product
/// space) hold one image or UNDEF per source point. The axiom checkers work
/// on tables: for collinear X != Y,
///   (L1) the image of the line XY equals the join of the images of X and Y,
///   (L2) if X and Y have the same image then some point of XY is undefined.

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "segdecomp/product.hpp"

namespace segdecomp {

class SemilinearMap {
 public:
  SemilinearMap(Field F, Matrix m, FieldAutomorphism sigma = {});

  static SemilinearMap identity(const Field& F, int d);
  static SemilinearMap zero(const Field& F, int source_dim, int target_dim);

  const Field& field() const { return field_; }
  const Matrix& matrix() const { return m_; }
  FieldAutomorphism automorphism() const { return sigma_; }
  int source_dimension() const { return static_cast<int>(m_.rows()) - 1; }
  int target_dimension() const { return static_cast<int>(m_.cols()) - 1; }

  Vec apply_vector(std::span<const Elem> v) const;
  MaybePoint apply(const ProjPoint& x) const;

  /// The points where the map is undefined.
  Subspace exceptional_subspace() const;

  /// Same projective map with the first nonzero entry (row-major) equal to 1.
  SemilinearMap canonical() const;
  bool projectively_equal(const SemilinearMap& other) const;

  bool is_invertible() const;
  std::optional<SemilinearMap> inverse() const;
  /// x -> next(this(x)).
  SemilinearMap then(const SemilinearMap& next) const;

  friend bool operator==(const SemilinearMap& a, const SemilinearMap& b) {
    return a.sigma_ == b.sigma_ && a.m_ == b.m_;
  }

 private:
  Field field_;
  Matrix m_;
  FieldAutomorphism sigma_;
};

/// A partial map PG(d) -> PG(N) in table form, indexed by point_index().
class PointMap {
 public:
  PointMap(Field F, int source_dim, int target_dim);

  static PointMap tabulate(const SemilinearMap& f);

  const Field& field() const { return field_; }
  int source_dimension() const { return source_; }
  int target_dimension() const { return target_; }
  std::size_t size() const { return images_.size(); }

  const MaybePoint& at(std::size_t index) const { return images_[index]; }
  const MaybePoint& at(const ProjPoint& x) const;
  void set(std::size_t index, MaybePoint image);
  void set(const ProjPoint& x, MaybePoint image);

  friend bool operator==(const PointMap&, const PointMap&) = default;

 private:
  Field field_;
  int source_;
  int target_;
  std::vector<MaybePoint> images_;
};

/// A partial map PG(n) x PG(m) -> PG(N) in table form.
class ProductMapTable {
 public:
  ProductMapTable(Field F, int n, int m, int N);

  const Field& field() const { return space_->field(); }
  int n() const { return space_->n(); }
  int m() const { return space_->m(); }
  int target_dimension() const { return target_; }
  const ProductSpace& space() const { return *space_; }
  std::size_t size() const { return images_.size(); }

  const MaybePoint& at(std::size_t index) const { return images_[index]; }
  const MaybePoint& at(const ProductPoint& p) const;
  const MaybePoint& at(const ProjPoint& x, const ProjPoint& y) const {
    return at(ProductPoint{x, y});
  }
  void set(std::size_t index, MaybePoint image);
  void set(const ProductPoint& p, MaybePoint image);

  std::size_t defined_count() const;

  friend bool operator==(const ProductMapTable& a, const ProductMapTable& b) {
    return a.field() == b.field() && a.n() == b.n() && a.m() == b.m() &&
           a.target_ == b.target_ && a.images_ == b.images_;
  }

 private:
  std::shared_ptr<const ProductSpace> space_;
  int target_;
  std::vector<MaybePoint> images_;
};

/// Product spaces are shared between tables of the same shape.
std::shared_ptr<const ProductSpace> shared_product_space(const Field& F, int n,
                                                         int m);

enum class Axiom { kL1, kL2 };

struct Violation {
  Axiom axiom;
  std::string first;   // literal of X
  std::string second;  // literal of Y
  std::string detail;
};

struct AxiomReport {
  std::vector<Violation> violations;
  bool ok() const { return violations.empty(); }
};

AxiomReport check_L1(const ProductMapTable& t, unsigned workers = 1);
AxiomReport check_L2(const ProductMapTable& t, unsigned workers = 1);
AxiomReport check_L1(const PointMap& f);
AxiomReport check_L2(const PointMap& f);

struct Radicals {
  Subspace first;   // X whose whole row X x P2 is undefined
  Subspace second;  // Y whose whole column P1 x Y is undefined
};

/// Throws kRadicalNotSubspace if either point set is not a subspace.
Radicals radicals(const ProductMapTable& t);

/// y -> t(x, y) for fixed x.
PointMap restrict_row(const ProductMapTable& t, const ProjPoint& x);
/// x -> t(x, y) for fixed y.
PointMap restrict_col(const ProductMapTable& t, const ProjPoint& y);

/// Recovers (M, s) with apply == the table on every point, canonically
/// scaled. Automorphisms are tried in order, so a map whose image is a single
/// point comes back with the identity. Throws kNotSemilinear.
SemilinearMap coordinatize(const PointMap& images);
/// Same with the automorphism fixed; nullopt if no matrix fits.
std::optional<SemilinearMap> coordinatize(const PointMap& images,
                                          FieldAutomorphism sigma);

/// The span of the defined images of the given table entries.
Subspace image_span(const Field& F, int target_dim,
                    const std::vector<const MaybePoint*>& images);

}  // namespace segdecomp
