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

#include "segdecomp/decomp.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "parallel.hpp"
#include "segdecomp/error.hpp"
#include "segdecomp/literal.hpp"

namespace segdecomp {

namespace {

int image_dimension(const ProductMapTable& t,
                    const std::vector<std::size_t>& indices) {
  std::vector<const MaybePoint*> imgs;
  imgs.reserve(indices.size());
  for (auto i : indices) imgs.push_back(&t.at(i));
  return image_span(t.field(), t.target_dimension(), imgs).dimension();
}

ProjPoint point_of(const Field& F, std::span<const Elem> v) {
  return ProjPoint::normalize(F, v);
}

}  // namespace

// ---------------------------------------------------------------------------
// Hypotheses

std::optional<ConditionOneWitness> check_condition_i(const ProductMapTable& t) {
  return check_condition_i(t, Subspace::whole(t.field(), t.m()));
}

std::optional<ConditionOneWitness> check_condition_i(
    const ProductMapTable& t, const Subspace& basis_space) {
  const Field& F = t.field();
  if (t.n() < 2 || basis_space.empty()) return std::nullopt;
  const auto& sp = t.space();
  const auto cand = basis_space.points();
  std::vector<std::size_t> cand_idx;
  for (const auto& c : cand) cand_idx.push_back(point_index(F, c));
  const std::size_t need = basis_space.basis().rows();

  for (const Subspace& plane : enumerate_subspaces(F, t.n(), 2)) {
    std::vector<std::size_t> e_idx;
    for (const auto& x : plane.points()) e_idx.push_back(point_index(F, x));

    std::vector<char> col_ok(cand.size(), 1);
    for (std::size_t c = 0; c < cand.size(); ++c)
      for (auto ix : e_idx)
        if (!t.at(sp.index(ix, cand_idx[c]))) {
          col_ok[c] = 0;
          break;
        }

    for (std::size_t a0 = 0; a0 < cand.size(); ++a0) {
      if (!col_ok[a0]) continue;
      if (need == 1) return ConditionOneWitness{plane, {cand[a0]}};

      std::vector<signed char> good(cand.size(), -1);
      auto is_good = [&](std::size_t c) {
        if (good[c] < 0) {
          bool ok = c != a0 && col_ok[c];
          if (ok) {
            std::vector<std::size_t> idx;
            for (auto ix : e_idx) {
              idx.push_back(sp.index(ix, cand_idx[a0]));
              idx.push_back(sp.index(ix, cand_idx[c]));
            }
            ok = image_dimension(t, idx) >= 3;
          }
          good[c] = ok ? 1 : 0;
        }
        return good[c] == 1;
      };

      // Depth-first over increasing index sequences; the first complete one
      // is the lexicographically least.
      std::vector<std::size_t> chosen{a0};
      auto extend = [&](auto&& self, std::size_t from) -> bool {
        if (chosen.size() == need) return true;
        for (std::size_t c = from; c < cand.size(); ++c) {
          if (!is_good(c)) continue;
          Matrix rows(0, t.m() + 1);
          for (auto k : chosen) rows.append_row(cand[k].coords());
          rows.append_row(cand[c].coords());
          if (rank(F, rows) != chosen.size() + 1) continue;
          chosen.push_back(c);
          if (self(self, c + 1)) return true;
          chosen.pop_back();
        }
        return false;
      };
      if (extend(extend, 0)) {
        ConditionOneWitness w{plane, {}};
        for (auto k : chosen) w.basis.push_back(cand[k]);
        return w;
      }
    }
  }
  return std::nullopt;
}

std::optional<ProjPoint> check_condition_ii(const ProductMapTable& t) {
  const auto& sp = t.space();
  const std::size_t n2 = sp.second_points().size();
  for (std::size_t ix = 0; ix < sp.first_points().size(); ++ix) {
    std::vector<std::size_t> idx;
    for (std::size_t iy = 0; iy < n2; ++iy) idx.push_back(sp.index(ix, iy));
    if (image_dimension(t, idx) >= t.m()) return sp.first_points()[ix];
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Construction

SemilinearMap build_phi(const ProductMapTable& t,
                        std::span<const ProjPoint> basis) {
  const Field& F = t.field();
  const int n = t.n();
  const int m = t.m();
  const int N = t.target_dimension();
  if (basis.size() != static_cast<std::size_t>(m + 1))
    throw Error(ErrorCode::kInvalidArgument, "basis must have m+1 points");

  std::vector<PointMap> rows;
  std::vector<SemilinearMap> blocks;
  std::optional<FieldAutomorphism> sigma;
  for (const auto& b : basis) {
    rows.push_back(restrict_col(t, b));
    try {
      blocks.push_back(coordinatize(rows.back()));
    } catch (const Error& e) {
      if (e.code() != ErrorCode::kNotSemilinear) throw;
      throw Error(ErrorCode::kRowNotSemilinear,
                  "row through " + format_point(b) + " is not semilinear: " +
                      e.what());
    }
    // Images of rank < 2 do not determine the automorphism.
    if (rank(F, blocks.back().matrix()) < 2) continue;
    const auto s = blocks.back().automorphism();
    if (!sigma) {
      sigma = s;
    } else if (*sigma != s) {
      throw Error(ErrorCode::kInconsistentAutomorphisms,
                  "rows carry automorphisms x^p^" +
                      std::to_string(sigma->exponent) + " and x^p^" +
                      std::to_string(s.exponent));
    }
  }
  if (!sigma) sigma = FieldAutomorphism{};
  for (std::size_t j = 0; j < blocks.size(); ++j) {
    if (blocks[j].automorphism() == *sigma) continue;
    auto again = coordinatize(rows[j], *sigma);
    if (!again)
      throw Error(ErrorCode::kInconsistentAutomorphisms,
                  "row through " + format_point(basis[j]) +
                      " does not fit the common automorphism");
    blocks[j] = *again;
  }

  const SegreEmbedding gamma(F, n, m);
  const std::size_t dim = static_cast<std::size_t>((n + 1) * (m + 1));
  Matrix source(0, dim);
  Matrix target(0, N + 1);
  Vec e(n + 1, 0);
  for (int j = 0; j <= m; ++j) {
    const Vec f = twist(F, basis[j].coords(), *sigma);
    for (int i = 0; i <= n; ++i) {
      std::fill(e.begin(), e.end(), 0);
      e[i] = 1;
      source.append_row(gamma.tensor(e, f));
      target.append_row(blocks[j].matrix().row(i));
    }
  }
  const auto inv = inverse(F, source);
  if (!inv)
    throw Error(ErrorCode::kInvalidArgument, "basis points are dependent");
  return SemilinearMap(F, multiply(F, *inv, target), *sigma).canonical();
}

SemilinearMap build_alpha(const ProductMapTable& t, const SemilinearMap& phi,
                          const ProjPoint& a) {
  const Field& F = t.field();
  const auto& sp = t.space();
  const auto& p2 = sp.second_points();
  const std::size_t ia = point_index(F, a);
  constexpr std::size_t kAmbiguous = static_cast<std::size_t>(-1);

  std::map<ProjPoint, std::size_t> preimage;
  for (std::size_t iy = 0; iy < p2.size(); ++iy) {
    const auto& img = t.at(sp.index(ia, iy));
    if (!img) continue;
    auto [it, fresh] = preimage.emplace(*img, iy);
    if (!fresh) it->second = kAmbiguous;
  }

  const SegreEmbedding gamma(F, t.n(), t.m());
  PointMap table(F, t.m(), t.m());
  for (std::size_t ix = 0; ix < p2.size(); ++ix) {
    const auto target = phi.apply(gamma.embed(a, p2[ix]));
    if (!target)
      throw Error(ErrorCode::kNoUniquePreimage,
                  "phi is undefined at gamma(" + format_point(a) + ", " +
                      format_point(p2[ix]) + ")");
    const auto it = preimage.find(*target);
    if (it == preimage.end() || it->second == kAmbiguous)
      throw Error(ErrorCode::kNoUniquePreimage,
                  format_point(*target) + " has no unique preimage on row " +
                      format_point(a));
    table.set(ix, p2[it->second]);
  }
  try {
    auto alpha = coordinatize(table);
    if (!alpha.is_invertible())
      throw Error(ErrorCode::kNoUniquePreimage, "induced map is not bijective");
    return alpha;
  } catch (const Error& e) {
    if (e.code() != ErrorCode::kNotSemilinear) throw;
    throw Error(ErrorCode::kNoUniquePreimage,
                std::string("induced map is not a collineation: ") + e.what());
  }
}

// ---------------------------------------------------------------------------
// Verification

VerificationReport verify_decomposition(const ProductMapTable& t,
                                        const SemilinearMap& alpha_prime,
                                        const SemilinearMap& phi,
                                        unsigned workers) {
  const Field& F = t.field();
  const int n = t.n();
  const int m = t.m();
  if (!(alpha_prime.field() == F) || !(phi.field() == F))
    throw Error(ErrorCode::kShapeMismatch, "certificate field differs");
  if (alpha_prime.matrix().rows() != static_cast<std::size_t>(m + 1) ||
      alpha_prime.matrix().cols() != static_cast<std::size_t>(m + 1))
    throw Error(ErrorCode::kShapeMismatch, "alpha must be (m+1) x (m+1)");
  if (phi.matrix().rows() != static_cast<std::size_t>((n + 1) * (m + 1)) ||
      phi.matrix().cols() != static_cast<std::size_t>(t.target_dimension() + 1))
    throw Error(ErrorCode::kShapeMismatch, "phi must be (nm+n+m+1) x (N+1)");

  const auto& sp = t.space();
  const auto& p1 = sp.first_points();
  const auto& p2 = sp.second_points();
  std::vector<MaybePoint> alpha_img;
  for (const auto& y : p2) alpha_img.push_back(alpha_prime.apply(y));
  const SegreEmbedding gamma(F, n, m);

  auto parts = detail::shard<std::vector<Mismatch>>(
      t.size(), workers, [&](std::size_t begin, std::size_t end) {
        std::vector<Mismatch> out;
        for (std::size_t i = begin; i < end; ++i) {
          const std::size_t ix = sp.first_index(i);
          const std::size_t iy = sp.second_index(i);
          MaybePoint lhs = phi.apply(gamma.embed(p1[ix], p2[iy]));
          MaybePoint rhs;
          if (alpha_img[iy]) rhs = t.at(p1[ix], *alpha_img[iy]);
          if (lhs != rhs)
            out.push_back({{p1[ix], p2[iy]}, std::move(lhs), std::move(rhs)});
        }
        return out;
      });
  VerificationReport report;
  report.checked = t.size();
  for (auto& part : parts)
    for (auto& mm : part) report.mismatches.push_back(std::move(mm));
  return report;
}

DecompositionCertificate decompose(const ProductMapTable& t, unsigned workers) {
  const auto ci = check_condition_i(t);
  if (!ci)
    throw Error(ErrorCode::kHypothesisFailure,
                "condition-i: no plane E and basis B of PG(m) with E x {A0, Ai} "
                "everywhere defined and of image dimension >= 3");
  const auto a = check_condition_ii(t);
  if (!a)
    throw Error(ErrorCode::kHypothesisFailure,
                "condition-ii: no row A x PG(m) whose image spans dimension m");
  SemilinearMap phi = build_phi(t, ci->basis);
  SemilinearMap alpha = build_alpha(t, phi, *a);
  const bool ok = verify_decomposition(t, alpha, phi, workers).ok();
  return {std::move(alpha), std::move(phi), *a, ci->basis, ci->plane, ok};
}

// ---------------------------------------------------------------------------
// Radicals and the reduced map

MaybePoint NondegenerateReduction::project_first(const ProjPoint& x) const {
  return project_from(radicals.first, first_complement, x);
}

MaybePoint NondegenerateReduction::project_second(const ProjPoint& y) const {
  return project_from(radicals.second, second_complement, y);
}

ProjPoint NondegenerateReduction::first_to_core(const ProjPoint& x) const {
  return point_of(first_complement.field(),
                  first_complement.coordinates(x.coords()));
}

ProjPoint NondegenerateReduction::second_to_core(const ProjPoint& y) const {
  return point_of(second_complement.field(),
                  second_complement.coordinates(y.coords()));
}

ProjPoint NondegenerateReduction::first_from_core(const ProjPoint& c) const {
  return point_of(first_complement.field(),
                  first_complement.combine(c.coords()));
}

ProjPoint NondegenerateReduction::second_from_core(const ProjPoint& c) const {
  return point_of(second_complement.field(),
                  second_complement.combine(c.coords()));
}

MaybePoint NondegenerateReduction::reduced_image(const ProductPoint& p) const {
  if (!core) return std::nullopt;
  const auto x = project_first(p.x);
  const auto y = project_second(p.y);
  if (!x || !y) return std::nullopt;
  return core->at(first_to_core(*x), second_to_core(*y));
}

namespace {

void require_complementary(const Subspace& rad, const Subspace& d,
                           const char* which) {
  if (!meet(rad, d).empty() ||
      rad.dimension() + d.dimension() + 1 != rad.ambient_dimension())
    throw Error(ErrorCode::kNotComplementary,
                std::string(which) + " complement does not complement the radical");
}

}  // namespace

NondegenerateReduction reduce_nondegenerate(const ProductMapTable& t) {
  Radicals rads = radicals(t);
  Subspace d1 = complement(rads.first);
  Subspace d2 = complement(rads.second);
  return reduce_with_complements(t, std::move(rads), std::move(d1),
                                 std::move(d2));
}

NondegenerateReduction reduce_with_complements(const ProductMapTable& t,
                                               Radicals rads, Subspace d1,
                                               Subspace d2) {
  require_complementary(rads.first, d1, "first");
  require_complementary(rads.second, d2, "second");
  NondegenerateReduction red{std::move(rads), std::move(d1), std::move(d2),
                             std::nullopt};
  if (red.first_complement.empty() || red.second_complement.empty())
    return red;

  const Field& F = t.field();
  ProductMapTable core(F, red.first_complement.dimension(),
                       red.second_complement.dimension(), t.target_dimension());
  const auto& sp = core.space();
  std::vector<ProjPoint> xs, ys;
  for (const auto& c : sp.first_points()) xs.push_back(red.first_from_core(c));
  for (const auto& c : sp.second_points()) ys.push_back(red.second_from_core(c));
  for (std::size_t i = 0; i < core.size(); ++i)
    core.set(i, t.at(xs[sp.first_index(i)], ys[sp.second_index(i)]));
  red.core = std::move(core);
  return red;
}

Subspace radical_span(const SegreEmbedding& gamma, const Radicals& rads) {
  const Field& F = gamma.field();
  const int n = gamma.n();
  const int m = gamma.m();
  Matrix rows(0, static_cast<std::size_t>((n + 1) * (m + 1)));
  for (std::size_t r = 0; r < rads.first.basis().rows(); ++r) {
    Vec e(m + 1, 0);
    for (int j = 0; j <= m; ++j) {
      std::fill(e.begin(), e.end(), 0);
      e[j] = 1;
      rows.append_row(gamma.tensor(rads.first.basis().row(r), e));
    }
  }
  for (std::size_t r = 0; r < rads.second.basis().rows(); ++r) {
    Vec e(n + 1, 0);
    for (int i = 0; i <= n; ++i) {
      std::fill(e.begin(), e.end(), 0);
      e[i] = 1;
      rows.append_row(gamma.tensor(e, rads.second.basis().row(r)));
    }
  }
  return Subspace::from_rows(F, gamma.target_dimension(), std::move(rows));
}

namespace {

bool vanishes_on(const SemilinearMap& phi, const Subspace& u) {
  for (const auto& z : u.points())
    if (phi.apply(z)) return false;
  return true;
}

// Rows of `top` followed by rows of `bottom`.
Matrix stack(const Matrix& top, const Matrix& bottom) {
  Matrix out = top;
  if (out.cols() == 0) out = Matrix(0, bottom.cols());
  for (std::size_t r = 0; r < bottom.rows(); ++r) out.append_row(bottom.row(r));
  return out;
}

}  // namespace

DecompositionCertificate decompose_degenerate(const ProductMapTable& t,
                                              unsigned workers) {
  const Field& F = t.field();
  const int n = t.n();
  const int m = t.m();
  const int N = t.target_dimension();
  const SegreEmbedding gamma(F, n, m);
  const int nbar = gamma.target_dimension();

  if (t.defined_count() == 0) {
    DecompositionCertificate cert{SemilinearMap::identity(F, m),
                                  SemilinearMap::zero(F, nbar, N),
                                  std::nullopt,
                                  {},
                                  std::nullopt,
                                  false};
    cert.verified =
        verify_decomposition(t, cert.alpha_prime, cert.phi, workers).ok();
    return cert;
  }

  // A point A whose row exceptional set is small and common to all rows.
  const auto& sp = t.space();
  const auto& p1 = sp.first_points();
  const auto& p2 = sp.second_points();
  std::optional<ProjPoint> anchor;
  for (std::size_t ia = 0; ia < p1.size() && !anchor; ++ia) {
    std::vector<ProjPoint> undef;
    std::vector<std::size_t> undef_idx;
    for (std::size_t iy = 0; iy < p2.size(); ++iy)
      if (!t.at(sp.index(ia, iy))) {
        undef.push_back(p2[iy]);
        undef_idx.push_back(iy);
      }
    const Subspace s = Subspace::span(F, m, undef);
    if (s.point_count() != undef.size() || s.dimension() > m - 2) continue;
    bool common = true;
    for (std::size_t ix = 0; ix < p1.size() && common; ++ix)
      for (auto iy : undef_idx)
        if (t.at(sp.index(ix, iy))) {
          common = false;
          break;
        }
    if (common) anchor = p1[ia];
  }
  if (!anchor)
    throw Error(ErrorCode::kHypothesisFailure,
                "degenerate: no point A whose row exceptional set has dimension "
                "<= m-2 and lies in every row's exceptional set");

  Radicals rads = radicals(t);
  Subspace d2 = complement(rads.second);
  const auto ci = check_condition_i(t, d2);
  if (!ci)
    throw Error(ErrorCode::kHypothesisFailure,
                "degenerate: condition-i fails with the basis taken in a "
                "complement of the second radical");
  Subspace d1 = complement_containing(rads.first, ci->plane);
  const Radicals kept = rads;
  const auto red =
      reduce_with_complements(t, std::move(rads), std::move(d1), std::move(d2));
  const ProductMapTable& core = *red.core;

  std::vector<ProjPoint> core_basis;
  for (const auto& b : ci->basis) core_basis.push_back(red.second_to_core(b));
  const SemilinearMap phi_core = build_phi(core, core_basis);
  const auto a_core = check_condition_ii(core);
  if (!a_core)
    throw Error(ErrorCode::kHypothesisFailure,
                "degenerate: condition-ii fails on the reduced map");
  const SemilinearMap alpha_core = build_alpha(core, phi_core, *a_core);

  // alpha': D2 is carried along by the core map, the radical is fixed.
  const Matrix& d2b = red.second_complement.basis();
  const Matrix& r2b = kept.second.basis();
  const auto sa = alpha_core.automorphism();
  Matrix alpha_target = multiply(F, alpha_core.matrix(), d2b);
  alpha_target = stack(alpha_target, r2b);
  const Matrix alpha_source =
      stack(twist(F, d2b, sa), twist(F, r2b, sa));
  const auto alpha_inv = inverse(F, alpha_source);
  SemilinearMap alpha(F, multiply(F, *alpha_inv, alpha_target), sa);

  // phi: u_a (x) w_b goes to the core row when both lie in the complements,
  // to zero otherwise.
  const Matrix u = stack(red.first_complement.basis(), kept.first.basis());
  const Matrix w = stack(d2b, r2b);
  const std::size_t n1 = red.first_complement.basis().rows();
  const std::size_t m1 = d2b.rows();
  const auto sp_phi = phi_core.automorphism();
  Matrix phi_source(0, static_cast<std::size_t>(nbar + 1));
  Matrix phi_target(0, static_cast<std::size_t>(N + 1));
  const Vec zero(N + 1, 0);
  for (std::size_t a = 0; a < u.rows(); ++a)
    for (std::size_t b = 0; b < w.rows(); ++b) {
      phi_source.append_row(twist(F, gamma.tensor(u.row(a), w.row(b)), sp_phi));
      if (a < n1 && b < m1)
        phi_target.append_row(phi_core.matrix().row(a * m1 + b));
      else
        phi_target.append_row(zero);
    }
  const auto phi_inv = inverse(F, phi_source);
  SemilinearMap phi =
      SemilinearMap(F, multiply(F, *phi_inv, phi_target), sp_phi).canonical();
  alpha = alpha.canonical();

  const bool ok = verify_decomposition(t, alpha, phi, workers).ok() &&
                  vanishes_on(phi, radical_span(gamma, kept));
  return {std::move(alpha), std::move(phi), red.first_from_core(*a_core),
          ci->basis, ci->plane, ok};
}

// ---------------------------------------------------------------------------
// Line grids and special lines

namespace {

using PointSet = std::set<ProjPoint>;

PointSet row_image(const ProductMapTable& mu, std::size_t ix) {
  const auto& sp = mu.space();
  PointSet out;
  for (std::size_t iy = 0; iy < sp.second_points().size(); ++iy)
    if (const auto& img = mu.at(sp.index(ix, iy))) out.insert(*img);
  return out;
}

}  // namespace

GridClassification classify_line_grid(const ProductMapTable& mu,
                                      const ProjPoint& a) {
  using Kind = GridClassification::Kind;
  using Subcase = GridClassification::Subcase;
  if (mu.n() != 1 || mu.m() != 1)
    throw Error(ErrorCode::kPreconditionViolated,
                "grid classification needs a table of shape 1 1 N");
  const Field& F = mu.field();
  const auto& sp = mu.space();
  const auto& p1 = sp.first_points();
  const auto& p2 = sp.second_points();
  const std::size_t ia = point_index(F, a);
  for (std::size_t iy = 0; iy < p2.size(); ++iy)
    if (!mu.at(sp.index(ia, iy)))
      throw Error(ErrorCode::kPreconditionViolated,
                  "row " + format_point(a) + " is not everywhere defined");

  GridClassification g;
  std::vector<std::size_t> undefined_in_row(p1.size(), 0);
  for (std::size_t i = 0; i < mu.size(); ++i)
    if (!mu.at(i)) {
      g.exceptional.push_back(sp.point(i));
      ++undefined_in_row[sp.first_index(i)];
    }
  auto fail = [&](std::string why) {
    g.conclusions_hold = false;
    if (g.violation.empty()) g.violation = std::move(why);
  };

  const PointSet image_a = row_image(mu, ia);
  if (g.exceptional.empty()) {
    g.kind = Kind::kEmpty;
    return g;
  }
  const auto full = std::find(undefined_in_row.begin(), undefined_in_row.end(),
                              p2.size());
  if (full != undefined_in_row.end()) {
    if (g.exceptional.size() == p2.size()) {
      g.kind = Kind::kFullLine;
    } else {
      g.kind = Kind::kIrregular;
      fail("exceptional set contains a line and further points");
    }
    return g;
  }

  if (g.exceptional.size() == 1) {
    g.kind = Kind::kOnePoint;
    const auto& [x1, p] = g.exceptional.front();
    const ProjPoint ap = *mu.at(a, p);
    const PointSet image_x1 = row_image(mu, point_index(F, x1));
    bool any_same = false;
    for (std::size_t ix = 0; ix < p1.size(); ++ix) {
      if (ix == ia || p1[ix] == x1) continue;
      const PointSet image_x = row_image(mu, ix);
      if (image_x == image_a) {
        any_same = true;
        g.per_point.emplace_back(p1[ix], Subcase::kOnePointSameRow);
        if (image_x1 != PointSet{ap})
          fail("row " + format_point(x1) + " does not collapse onto " +
               format_point(ap));
      } else {
        g.per_point.emplace_back(p1[ix], Subcase::kOnePointMeet);
        PointSet common;
        std::set_intersection(image_a.begin(), image_a.end(), image_x.begin(),
                              image_x.end(),
                              std::inserter(common, common.begin()));
        if (common != PointSet{ap})
          fail("rows " + format_point(a) + " and " + format_point(p1[ix]) +
               " do not meet exactly in " + format_point(ap));
      }
    }
    g.subcase = any_same ? Subcase::kOnePointSameRow : Subcase::kOnePointMeet;
    return g;
  }

  if (g.exceptional.size() == 2) {
    g.kind = Kind::kTwoPoints;
    g.subcase = Subcase::kTwoPoints;
    const auto& [x1, p] = g.exceptional[0];
    const auto& [x1b, pb] = g.exceptional[1];
    if (x1 == x1b) fail("both exceptional points lie on one row");
    if (p == pb) fail("both exceptional points lie on one column");
    if (!g.conclusions_hold) return g;
    const ProjPoint ap = *mu.at(a, p);
    const ProjPoint apb = *mu.at(a, pb);
    if (row_image(mu, point_index(F, x1b)) != PointSet{ap})
      fail("row " + format_point(x1b) + " does not collapse onto " +
           format_point(ap));
    if (row_image(mu, point_index(F, x1)) != PointSet{apb})
      fail("row " + format_point(x1) + " does not collapse onto " +
           format_point(apb));
    PointSet all;
    for (std::size_t ix = 0; ix < p1.size(); ++ix) {
      const auto r = row_image(mu, ix);
      all.insert(r.begin(), r.end());
    }
    if (all != image_a) fail("image of the grid exceeds the image of row A");
    return g;
  }

  g.kind = Kind::kIrregular;
  fail(std::to_string(g.exceptional.size()) +
       " exceptional points not forming a line");
  return g;
}

bool is_special_line(const ProductMapTable& t, const SemilinearMap& phi,
                     const SemilinearMap& alpha_prime, const Subspace& l2) {
  const Field& F = t.field();
  const SegreEmbedding gamma(F, t.n(), t.m());
  const auto line = l2.points();
  std::vector<MaybePoint> moved;
  for (const auto& y : line) moved.push_back(alpha_prime.apply(y));

  std::vector<const MaybePoint*> all_rhs;
  std::vector<MaybePoint> storage;
  storage.reserve(t.space().first_points().size() * line.size());
  for (const auto& x : t.space().first_points()) {
    PointSet lhs, rhs;
    for (std::size_t k = 0; k < line.size(); ++k) {
      if (auto z = phi.apply(gamma.embed(x, line[k]))) lhs.insert(*z);
      storage.push_back(moved[k] ? t.at(x, *moved[k]) : MaybePoint{});
      all_rhs.push_back(&storage.back());
      if (storage.back()) rhs.insert(*storage.back());
    }
    if (lhs != rhs) return false;
  }
  return image_span(F, t.target_dimension(), all_rhs).dimension() >= 2;
}

std::string_view to_string(GridClassification::Kind kind) {
  switch (kind) {
    case GridClassification::Kind::kEmpty: return "empty";
    case GridClassification::Kind::kFullLine: return "full-line";
    case GridClassification::Kind::kOnePoint: return "one-point";
    case GridClassification::Kind::kTwoPoints: return "two-points";
    case GridClassification::Kind::kIrregular: return "irregular";
  }
  return "?";
}

std::string_view to_string(GridClassification::Subcase subcase) {
  switch (subcase) {
    case GridClassification::Subcase::kNone: return "none";
    case GridClassification::Subcase::kOnePointSameRow: return "i-a";
    case GridClassification::Subcase::kOnePointMeet: return "i-b";
    case GridClassification::Subcase::kTwoPoints: return "ii";
  }
  return "?";
}

}  // namespace segdecomp
