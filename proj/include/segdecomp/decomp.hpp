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

/// @file decomp.hpp
/// Decomposition of a linear mapping chi : PG(n) x PG(m) -> PG(N) through
/// the Segre embedding gamma.
///
/// The goal is a collineation alpha' of PG(m) and a linear mapping phi of
/// PG(nm+n+m) into PG(N) with
///
///     phi(gamma(X, Y)) = chi(X, alpha'(Y))   for every (X, Y),
///
/// both sides possibly undefined. decompose() handles maps satisfying
///
///   (i)  there are a plane E of PG(n) and a basis {A0, ..., Am} of PG(m)
///        such that chi restricted to E x {A0, Ai} is everywhere defined and
///        its image spans a subspace of dimension >= 3, for i = 1..m;
///   (ii) some row A x PG(m) has an image spanning dimension m.
///
/// phi is built block by block: on each row PG(n) x {Aj} the map
/// X -> chi(X, Aj) is coordinatized, and the blocks are glued by a change of
/// basis in the tensor space. alpha' then comes from comparing phi and chi
/// along the row A. decompose_degenerate() first strips the radicals
/// (rows/columns that are entirely undefined), decomposes the remaining core,
/// and extends both maps back; phi vanishes on the span U of the radical
/// rows and columns.
///
/// All witness searches return the lexicographically least candidate, so a
/// given table always yields the same certificate.

#include <optional>
#include <string>
#include <vector>

#include "segdecomp/linmap.hpp"
#include "segdecomp/segre.hpp"

namespace segdecomp {

struct ConditionOneWitness {
  Subspace plane;
  std::vector<ProjPoint> basis;  // A0 first
};

/// First (plane, basis) pair satisfying condition (i); nullopt when n < 2 or
/// no pair exists.
std::optional<ConditionOneWitness> check_condition_i(const ProductMapTable& t);

/// Same search with the basis drawn from the points of `basis_space`, which
/// it must span.
std::optional<ConditionOneWitness> check_condition_i(const ProductMapTable& t,
                                                     const Subspace& basis_space);

/// First A whose row image spans dimension m.
std::optional<ProjPoint> check_condition_ii(const ProductMapTable& t);

/// Throws kRowNotSemilinear or kInconsistentAutomorphisms.
SemilinearMap build_phi(const ProductMapTable& t,
                        std::span<const ProjPoint> basis);

/// Throws kNoUniquePreimage.
SemilinearMap build_alpha(const ProductMapTable& t, const SemilinearMap& phi,
                          const ProjPoint& a);

struct Mismatch {
  ProductPoint point;
  MaybePoint lhs;  // phi(gamma(X, Y))
  MaybePoint rhs;  // chi(X, alpha'(Y))
};

struct VerificationReport {
  std::size_t checked = 0;
  std::vector<Mismatch> mismatches;
  bool ok() const { return mismatches.empty(); }
};

/// Checks phi(gamma(X, Y)) == chi(X, alpha'(Y)) at every product point.
/// Throws kShapeMismatch if the matrices do not fit the table.
VerificationReport verify_decomposition(const ProductMapTable& t,
                                        const SemilinearMap& alpha_prime,
                                        const SemilinearMap& phi,
                                        unsigned workers = 1);

struct DecompositionCertificate {
  SemilinearMap alpha_prime;
  SemilinearMap phi;
  std::optional<ProjPoint> witness_a;
  std::vector<ProjPoint> witness_basis;
  std::optional<Subspace> witness_plane;
  bool verified = false;
};

/// Throws kHypothesisFailure naming the failed condition, or a construction
/// error.
DecompositionCertificate decompose(const ProductMapTable& t,
                                   unsigned workers = 1);

/// Radicals, chosen complements D1, D2 and the restriction of chi to
/// D1 x D2, written in coordinates relative to the complements' bases.
struct NondegenerateReduction {
  Radicals radicals;
  Subspace first_complement;
  Subspace second_complement;
  std::optional<ProductMapTable> core;  // absent if a complement is empty

  MaybePoint project_first(const ProjPoint& x) const;
  MaybePoint project_second(const ProjPoint& y) const;
  ProjPoint first_to_core(const ProjPoint& x) const;
  ProjPoint second_to_core(const ProjPoint& y) const;
  ProjPoint first_from_core(const ProjPoint& c) const;
  ProjPoint second_from_core(const ProjPoint& c) const;

  /// (X pi1 x Y pi2) chi'.
  MaybePoint reduced_image(const ProductPoint& p) const;
};

/// Uses the greedy complements of the radicals.
NondegenerateReduction reduce_nondegenerate(const ProductMapTable& t);
NondegenerateReduction reduce_with_complements(const ProductMapTable& t,
                                               Radicals rads, Subspace d1,
                                               Subspace d2);

/// The span of gamma(rad1 x PG(m)) and gamma(PG(n) x rad2).
Subspace radical_span(const SegreEmbedding& gamma, const Radicals& rads);

/// Decomposition when the radicals may be nonempty. Requires a point A whose
/// row exceptional set has dimension <= m-2 and lies in every other row's
/// exceptional set, plus (i) with the basis taken in a complement of the
/// second radical. `verified` also requires phi to vanish on radical_span().
DecompositionCertificate decompose_degenerate(const ProductMapTable& t,
                                              unsigned workers = 1);

struct GridClassification {
  enum class Kind { kEmpty, kFullLine, kOnePoint, kTwoPoints, kIrregular };
  enum class Subcase { kNone, kOnePointSameRow, kOnePointMeet, kTwoPoints };

  Kind kind = Kind::kEmpty;
  Subcase subcase = Subcase::kNone;
  std::vector<ProductPoint> exceptional;
  /// One-point case: the subcase observed at each X off {A, X1}.
  std::vector<std::pair<ProjPoint, Subcase>> per_point;
  bool conclusions_hold = true;
  std::string violation;
};

/// Classifies the exceptional set of a map on a line x line grid (a table of
/// shape 1 1 N) whose row `a` is everywhere defined. Throws
/// kPreconditionViolated otherwise.
GridClassification classify_line_grid(const ProductMapTable& mu,
                                      const ProjPoint& a);

/// A line l2 of PG(m) is special if gamma-phi and alpha-chi have the same
/// image on every X x l2 and the image of PG(n) x l2 spans dimension >= 2.
bool is_special_line(const ProductMapTable& t, const SemilinearMap& phi,
                     const SemilinearMap& alpha_prime, const Subspace& l2);

std::string_view to_string(GridClassification::Kind kind);
std::string_view to_string(GridClassification::Subcase subcase);

}  // namespace segdecomp
