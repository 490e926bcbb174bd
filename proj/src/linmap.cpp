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

#include "segdecomp/linmap.hpp"

#include <algorithm>
#include <cassert>
#include <functional>
#include <map>
#include <mutex>
#include <tuple>

#include "parallel.hpp"
#include "segdecomp/error.hpp"
#include "segdecomp/literal.hpp"

namespace segdecomp {

// ---------------------------------------------------------------------------
// SemilinearMap

SemilinearMap::SemilinearMap(Field F, Matrix m, FieldAutomorphism sigma)
    : field_(std::move(F)), m_(std::move(m)), sigma_(sigma) {}

SemilinearMap SemilinearMap::identity(const Field& F, int d) {
  return SemilinearMap(F, Matrix::identity(d + 1));
}

SemilinearMap SemilinearMap::zero(const Field& F, int source_dim,
                                  int target_dim) {
  return SemilinearMap(F, Matrix(source_dim + 1, target_dim + 1));
}

Vec SemilinearMap::apply_vector(std::span<const Elem> v) const {
  return row_times(field_, twist(field_, v, sigma_), m_);
}

MaybePoint SemilinearMap::apply(const ProjPoint& x) const {
  const Vec w = apply_vector(x.coords());
  if (is_zero(w)) return std::nullopt;
  return ProjPoint::normalize(field_, w);
}

Subspace SemilinearMap::exceptional_subspace() const {
  const Matrix ker = left_kernel(field_, m_);
  return Subspace::from_rows(field_, source_dimension(),
                             twist(field_, ker, field_.inverse(sigma_)));
}

SemilinearMap SemilinearMap::canonical() const {
  const auto& d = m_.data();
  auto lead = std::find_if(d.begin(), d.end(), [](Elem e) { return e != 0; });
  if (lead == d.end() || *lead == 1) return *this;
  const Elem inv = field_.inv(*lead);
  Matrix out = m_;
  for (std::size_t i = 0; i < out.rows(); ++i)
    for (std::size_t j = 0; j < out.cols(); ++j)
      out(i, j) = field_.mul(out(i, j), inv);
  return SemilinearMap(field_, std::move(out), sigma_);
}

bool SemilinearMap::projectively_equal(const SemilinearMap& other) const {
  return canonical() == other.canonical();
}

bool SemilinearMap::is_invertible() const {
  return m_.rows() == m_.cols() && rank(field_, m_) == m_.rows();
}

std::optional<SemilinearMap> SemilinearMap::inverse() const {
  // w = v^s M  =>  v = w^(s^-1) (M^-1)^(s^-1).
  auto inv = segdecomp::inverse(field_, m_);
  if (!inv) return std::nullopt;
  const FieldAutomorphism s = field_.inverse(sigma_);
  return SemilinearMap(field_, twist(field_, *inv, s), s);
}

SemilinearMap SemilinearMap::then(const SemilinearMap& next) const {
  assert(m_.cols() == next.m_.rows());
  // ((v^s1 M1)^s2) M2 = v^(s1 s2) M1^s2 M2.
  return SemilinearMap(
      field_, multiply(field_, twist(field_, m_, next.sigma_), next.m_),
      field_.compose(sigma_, next.sigma_));
}

// ---------------------------------------------------------------------------
// Tables

PointMap::PointMap(Field F, int source_dim, int target_dim)
    : field_(std::move(F)),
      source_(source_dim),
      target_(target_dim),
      images_(point_count(field_, source_dim)) {}

PointMap PointMap::tabulate(const SemilinearMap& f) {
  PointMap out(f.field(), f.source_dimension(), f.target_dimension());
  for (std::size_t i = 0; i < out.size(); ++i)
    out.images_[i] = f.apply(point_at(f.field(), f.source_dimension(), i));
  return out;
}

const MaybePoint& PointMap::at(const ProjPoint& x) const {
  return images_[point_index(field_, x)];
}

void PointMap::set(std::size_t index, MaybePoint image) {
  images_[index] = std::move(image);
}

void PointMap::set(const ProjPoint& x, MaybePoint image) {
  set(point_index(field_, x), std::move(image));
}

std::shared_ptr<const ProductSpace> shared_product_space(const Field& F, int n,
                                                         int m) {
  static std::mutex mu;
  static std::map<std::tuple<unsigned, unsigned, int, int>,
                  std::shared_ptr<const ProductSpace>>
      cache;
  std::lock_guard lock(mu);
  auto& slot = cache[{F.characteristic(), F.degree(), n, m}];
  if (!slot) slot = std::make_shared<const ProductSpace>(F, n, m);
  return slot;
}

ProductMapTable::ProductMapTable(Field F, int n, int m, int N)
    : space_(shared_product_space(F, n, m)), target_(N) {
  images_.resize(space_->size());
}

const MaybePoint& ProductMapTable::at(const ProductPoint& p) const {
  return images_[space_->index(p)];
}

void ProductMapTable::set(std::size_t index, MaybePoint image) {
  assert(!image || image->dimension() == target_);
  images_[index] = std::move(image);
}

void ProductMapTable::set(const ProductPoint& p, MaybePoint image) {
  set(space_->index(p), std::move(image));
}

std::size_t ProductMapTable::defined_count() const {
  return static_cast<std::size_t>(
      std::count_if(images_.begin(), images_.end(),
                    [](const MaybePoint& p) { return p.has_value(); }));
}

// ---------------------------------------------------------------------------
// Axiom checks

namespace {

constexpr std::int64_t kUndef = -1;

// Point indices of the join of two images in PG(N): empty, one point, or a
// full line.
std::vector<std::int64_t> join_indices(const Field& F, const MaybePoint& a,
                                       const MaybePoint& b) {
  std::vector<std::int64_t> out;
  if (!a && !b) return out;
  if (!a || !b || *a == *b) {
    out.push_back(static_cast<std::int64_t>(point_index(F, a ? *a : *b)));
    return out;
  }
  out.push_back(static_cast<std::int64_t>(point_index(F, *b)));
  for (Elem lambda = 0; lambda < F.order(); ++lambda) {
    Vec v(a->coords().begin(), a->coords().end());
    for (std::size_t i = 0; i < v.size(); ++i)
      v[i] = F.add(v[i], F.mul(lambda, (*b)[i]));
    out.push_back(static_cast<std::int64_t>(
        point_index(F, ProjPoint::normalize(F, v))));
  }
  std::sort(out.begin(), out.end());
  return out;
}

struct LineFamily {
  const Field& field;
  const std::vector<std::vector<std::size_t>>& lines;
  std::function<const MaybePoint&(std::size_t)> image;
  std::function<std::string(std::size_t)> label;
};

AxiomReport check_family(const LineFamily& fam, Axiom axiom, unsigned workers) {
  const Field& F = fam.field;
  auto shards = detail::shard<std::vector<Violation>>(
      fam.lines.size(), workers, [&](std::size_t begin, std::size_t end) {
        std::vector<Violation> found;
        for (std::size_t li = begin; li < end; ++li) {
          const auto& line = fam.lines[li];
          std::vector<std::int64_t> idx(line.size());
          bool has_undef = false;
          for (std::size_t i = 0; i < line.size(); ++i) {
            const auto& img = fam.image(line[i]);
            idx[i] = img ? static_cast<std::int64_t>(point_index(F, *img)) : kUndef;
            has_undef = has_undef || !img;
          }
          std::vector<std::int64_t> image_set;
          for (auto v : idx)
            if (v != kUndef) image_set.push_back(v);
          std::sort(image_set.begin(), image_set.end());
          image_set.erase(std::unique(image_set.begin(), image_set.end()),
                          image_set.end());

          for (std::size_t i = 0; i < line.size(); ++i) {
            for (std::size_t j = i + 1; j < line.size(); ++j) {
              if (axiom == Axiom::kL1) {
                const auto joined =
                    join_indices(F, fam.image(line[i]), fam.image(line[j]));
                if (joined != image_set) {
                  found.push_back(
                      {Axiom::kL1, fam.label(line[i]), fam.label(line[j]),
                       "line image has " + std::to_string(image_set.size()) +
                           " points, join of images has " +
                           std::to_string(joined.size())});
                }
              } else if (idx[i] != kUndef && idx[i] == idx[j] && !has_undef) {
                found.push_back({Axiom::kL2, fam.label(line[i]),
                                 fam.label(line[j]),
                                 "equal images " +
                                     format_point(fam.image(line[i])) +
                                     " and no undefined point on the line"});
              }
            }
          }
        }
        return found;
      });
  AxiomReport report;
  for (auto& s : shards)
    report.violations.insert(report.violations.end(),
                             std::make_move_iterator(s.begin()),
                             std::make_move_iterator(s.end()));
  return report;
}

LineFamily product_family(const ProductMapTable& t) {
  return {t.field(), t.space().lines(),
          [&t](std::size_t i) -> const MaybePoint& { return t.at(i); },
          [&t](std::size_t i) {
            return format_product_point(t.space().point(i));
          }};
}

AxiomReport check_point_map(const PointMap& f, Axiom axiom) {
  const auto lines = line_index_lists(f.field(), f.source_dimension());
  const LineFamily fam{
      f.field(), lines,
      [&f](std::size_t i) -> const MaybePoint& { return f.at(i); },
      [&f](std::size_t i) {
        return format_point(point_at(f.field(), f.source_dimension(), i));
      }};
  return check_family(fam, axiom, 1);
}

}  // namespace

AxiomReport check_L1(const ProductMapTable& t, unsigned workers) {
  return check_family(product_family(t), Axiom::kL1, workers);
}

AxiomReport check_L2(const ProductMapTable& t, unsigned workers) {
  return check_family(product_family(t), Axiom::kL2, workers);
}

AxiomReport check_L1(const PointMap& f) { return check_point_map(f, Axiom::kL1); }
AxiomReport check_L2(const PointMap& f) { return check_point_map(f, Axiom::kL2); }

// ---------------------------------------------------------------------------
// Radicals and restrictions

namespace {

Subspace subspace_of_points(const Field& F, int d,
                            const std::vector<ProjPoint>& pts,
                            const char* which) {
  Subspace s = Subspace::span(F, d, pts);
  if (s.point_count() != pts.size())
    throw Error(ErrorCode::kRadicalNotSubspace,
                std::string(which) + " radical is not a subspace (" +
                    std::to_string(pts.size()) + " points span " +
                    std::to_string(s.point_count()) + ")");
  return s;
}

}  // namespace

Radicals radicals(const ProductMapTable& t) {
  const auto& sp = t.space();
  const auto& p1 = sp.first_points();
  const auto& p2 = sp.second_points();
  std::vector<ProjPoint> r1, r2;
  for (std::size_t ix = 0; ix < p1.size(); ++ix) {
    bool all = true;
    for (std::size_t iy = 0; iy < p2.size() && all; ++iy)
      all = !t.at(sp.index(ix, iy));
    if (all) r1.push_back(p1[ix]);
  }
  for (std::size_t iy = 0; iy < p2.size(); ++iy) {
    bool all = true;
    for (std::size_t ix = 0; ix < p1.size() && all; ++ix)
      all = !t.at(sp.index(ix, iy));
    if (all) r2.push_back(p2[iy]);
  }
  return {subspace_of_points(t.field(), t.n(), r1, "first"),
          subspace_of_points(t.field(), t.m(), r2, "second")};
}

PointMap restrict_row(const ProductMapTable& t, const ProjPoint& x) {
  PointMap out(t.field(), t.m(), t.target_dimension());
  const std::size_t ix = point_index(t.field(), x);
  for (std::size_t iy = 0; iy < out.size(); ++iy)
    out.set(iy, t.at(t.space().index(ix, iy)));
  return out;
}

PointMap restrict_col(const ProductMapTable& t, const ProjPoint& y) {
  PointMap out(t.field(), t.n(), t.target_dimension());
  const std::size_t iy = point_index(t.field(), y);
  for (std::size_t ix = 0; ix < out.size(); ++ix)
    out.set(ix, t.at(t.space().index(ix, iy)));
  return out;
}

Subspace image_span(const Field& F, int target_dim,
                    const std::vector<const MaybePoint*>& images) {
  Matrix m(0, target_dim + 1);
  for (const auto* img : images)
    if (*img) m.append_row((*img)->coords());
  return Subspace::from_rows(F, target_dim, std::move(m));
}

// ---------------------------------------------------------------------------
// Coordinatization

namespace {

bool reproduces(const SemilinearMap& f, const PointMap& images) {
  const Field& F = images.field();
  for (std::size_t i = 0; i < images.size(); ++i) {
    if (f.apply(point_at(F, images.source_dimension(), i)) != images.at(i))
      return false;
  }
  return true;
}

// Candidate matrix for a fixed automorphism. The undefined points, twisted by
// sigma, form the kernel K. Complete K by standard basis vectors e_c (fixed by
// sigma); their images w_c are known up to scalars, which the image of
// sum e_c pins down.
std::optional<SemilinearMap> candidate(const PointMap& images,
                                       const Subspace& undefined,
                                       FieldAutomorphism sigma) {
  const Field& F = images.field();
  const int d = images.source_dimension();
  const int N = images.target_dimension();
  const Subspace kernel =
      Subspace::from_rows(F, d, twist(F, undefined.basis(), sigma));
  const Subspace comp = complement(kernel);

  const std::size_t k = kernel.basis().rows();
  const std::size_t r = comp.basis().rows();
  Matrix source(0, d + 1);
  Matrix target(0, N + 1);
  for (std::size_t i = 0; i < k; ++i) {
    source.append_row(kernel.basis().row(i));
    target.append_row(Vec(N + 1, 0));
  }
  if (r > 0) {
    Matrix w(0, N + 1);
    Vec unit_sum(d + 1, 0);
    for (std::size_t i = 0; i < r; ++i) {
      const auto e = comp.basis().row(i);
      const auto& img = images.at(ProjPoint::normalize(F, e));
      if (!img) return std::nullopt;
      w.append_row(img->coords());
      for (int j = 0; j <= d; ++j) unit_sum[j] = F.add(unit_sum[j], e[j]);
    }
    const auto& sum_img = images.at(ProjPoint::normalize(F, unit_sum));
    if (!sum_img) return std::nullopt;
    const auto c = solve_left(F, w, sum_img->coords());
    if (!c) return std::nullopt;
    for (std::size_t i = 0; i < r; ++i) {
      source.append_row(comp.basis().row(i));
      target.append_row(scale(F, w.row(i), (*c)[i]));
    }
  }
  const auto inv = inverse(F, source);
  assert(inv.has_value());
  SemilinearMap f(F, multiply(F, *inv, target), sigma);
  if (!reproduces(f, images)) return std::nullopt;
  return f.canonical();
}

std::optional<Subspace> undefined_subspace(const PointMap& images) {
  const Field& F = images.field();
  const int d = images.source_dimension();
  std::vector<ProjPoint> undefined;
  for (std::size_t i = 0; i < images.size(); ++i)
    if (!images.at(i)) undefined.push_back(point_at(F, d, i));
  Subspace u = Subspace::span(F, d, undefined);
  if (u.point_count() != undefined.size()) return std::nullopt;
  return u;
}

}  // namespace

std::optional<SemilinearMap> coordinatize(const PointMap& images,
                                          FieldAutomorphism sigma) {
  const auto u = undefined_subspace(images);
  if (!u) return std::nullopt;
  return candidate(images, *u, sigma);
}

SemilinearMap coordinatize(const PointMap& images) {
  const Field& F = images.field();
  const auto u_opt = undefined_subspace(images);
  if (!u_opt)
    throw Error(ErrorCode::kNotSemilinear,
                "undefined points do not form a subspace");
  const Subspace& u = *u_opt;
  for (auto sigma : F.automorphisms()) {
    if (auto f = candidate(images, u, sigma)) return *f;
  }
  throw Error(ErrorCode::kNotSemilinear,
              "no matrix and automorphism reproduce the table");
}

}  // namespace segdecomp
