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

#include <doctest.h>

#include <algorithm>
#include <set>

#include "segdecomp/error.hpp"
#include "segdecomp/literal.hpp"
#include "segdecomp/projspace.hpp"

using namespace segdecomp;

namespace {

ProjPoint pt(const Field& F, std::initializer_list<Elem> v) {
  return ProjPoint::normalize(F, Vec(v));
}

std::uint64_t ipow(std::uint64_t b, int e) {
  std::uint64_t r = 1;
  while (e-- > 0) r *= b;
  return r;
}

// Number of (k+1)-dimensional vector subspaces of F^(d+1).
std::uint64_t gaussian_binomial(std::uint64_t q, int d, int k) {
  std::uint64_t num = 1, den = 1;
  for (int i = 0; i <= k; ++i) {
    num *= ipow(q, d + 1 - i) - 1;
    den *= ipow(q, i + 1) - 1;
  }
  return num / den;
}

}  // namespace

TEST_CASE("normalize") {
  const Field F3 = Field::make(3, 1);
  CHECK(pt(F3, {0, 2, 1}).vector() == Vec{0, 1, 2});
  const Field F2 = Field::make(2, 1);
  CHECK(pt(F2, {1, 1, 0}).vector() == Vec{1, 1, 0});
  const Field F4 = Field::make(2, 2);
  CHECK(pt(F4, {2, 1, 0}).vector() == Vec{1, 3, 0});
  CHECK_THROWS_AS(pt(F4, {0, 0}), Error);

  // Scale invariance and idempotence.
  for (Elem l = 1; l < F4.order(); ++l) {
    const Vec v{0, 3, 2};
    CHECK(ProjPoint::normalize(F4, scale(F4, v, l)) == ProjPoint::normalize(F4, v));
  }
  const auto p = pt(F4, {0, 3, 2});
  CHECK(ProjPoint::normalize(F4, p.coords()) == p);
}

TEST_CASE("point enumeration") {
  const Field F2 = Field::make(2, 1);
  const auto line = enumerate_points(F2, 1);
  REQUIRE(line.size() == 3);
  CHECK(line[0].vector() == Vec{0, 1});
  CHECK(line[1].vector() == Vec{1, 0});
  CHECK(line[2].vector() == Vec{1, 1});
  CHECK(enumerate_points(F2, 2).size() == 7);
  CHECK(enumerate_points(Field::make(3, 1), 5).size() == 364);

  for (auto [p, k, d] : {std::tuple{2u, 1u, 3}, {3u, 1u, 2}, {2u, 2u, 2}, {5u, 1u, 1}}) {
    const Field F = Field::make(p, k);
    const auto pts = enumerate_points(F, d);
    CHECK(pts.size() == (ipow(F.order(), d + 1) - 1) / (F.order() - 1));
    CHECK(point_count(F, d) == pts.size());
    CHECK(std::is_sorted(pts.begin(), pts.end()));
    CHECK(std::adjacent_find(pts.begin(), pts.end()) == pts.end());
    for (std::size_t i = 0; i < pts.size(); ++i) {
      CHECK(point_index(F, pts[i]) == i);
      CHECK(point_at(F, d, i) == pts[i]);
    }
  }
}

TEST_CASE("lines") {
  const Field F2 = Field::make(2, 1);
  const auto l = line_through(F2, pt(F2, {1, 0, 0}), pt(F2, {0, 1, 0}));
  CHECK(l.dimension() == 1);
  CHECK(l.points() == std::vector<ProjPoint>{pt(F2, {0, 1, 0}), pt(F2, {1, 0, 0}),
                                             pt(F2, {1, 1, 0})});
  CHECK(line_through(F2, pt(F2, {1, 0, 0}), pt(F2, {1, 1, 1}))
            .contains(pt(F2, {0, 1, 1})));
  const Field F3 = Field::make(3, 1);
  CHECK(line_through(F3, pt(F3, {1, 0}), pt(F3, {0, 1})).point_count() == 4);
  CHECK_THROWS_AS(line_through(F3, pt(F3, {1, 1}), pt(F3, {2, 2})), Error);

  // Every line has q + 1 points.
  for (auto [p, k] : {std::pair{2u, 1u}, {3u, 1u}, {2u, 2u}}) {
    const Field F = Field::make(p, k);
    const auto pts = enumerate_points(F, 2);
    for (std::size_t i = 0; i < pts.size(); ++i)
      for (std::size_t j = i + 1; j < pts.size(); ++j)
        CHECK(line_through(F, pts[i], pts[j]).points().size() == F.order() + 1);
  }
}

TEST_CASE("span, join, meet") {
  const Field F2 = Field::make(2, 1);
  CHECK(Subspace::span(F2, 2, {}).dimension() == -1);
  const auto p = pt(F2, {0, 1, 1});
  CHECK(Subspace::span(F2, 2, std::vector{p}).dimension() == 0);

  // Two skew lines in PG(5,2) join to a solid.
  const auto l1 = line_through(F2, pt(F2, {1, 0, 0, 0, 0, 0}), pt(F2, {0, 1, 0, 0, 0, 0}));
  const auto l2 = line_through(F2, pt(F2, {0, 0, 1, 0, 0, 0}), pt(F2, {0, 0, 0, 1, 1, 0}));
  CHECK(join(l1, l2).dimension() == 3);
  CHECK(meet(l1, l2).empty());
  CHECK(join(l1, Subspace(F2, 5)) == l1);

  // Grassmann identity and commutativity, exhaustive over pairs of lines and
  // planes in PG(3,2).
  const auto lines = enumerate_subspaces(F2, 3, 1);
  const auto planes = enumerate_subspaces(F2, 3, 2);
  for (const auto& a : lines)
    for (const auto& b : planes) {
      CHECK(join(a, b) == join(b, a));
      CHECK(meet(a, b) == meet(b, a));
      CHECK(join(a, b).dimension() + meet(a, b).dimension() ==
            a.dimension() + b.dimension());
      for (const auto& x : meet(a, b).points()) {
        CHECK(a.contains(x));
        CHECK(b.contains(x));
      }
    }
  for (std::size_t i = 0; i + 2 < lines.size(); i += 5) {
    const auto& a = lines[i];
    const auto& b = lines[i + 1];
    const auto& c = lines[i + 2];
    CHECK(join(join(a, b), c) == join(a, join(b, c)));
    CHECK(join(join(a, b), b) == join(a, b));
  }
}

TEST_CASE("subspace enumeration matches gaussian binomials") {
  for (auto [p, k] : {std::pair{2u, 1u}, {3u, 1u}}) {
    const Field F = Field::make(p, k);
    for (int d = 1; d <= 3; ++d)
      for (int s = 0; s <= d; ++s) {
        const auto subs = enumerate_subspaces(F, d, s);
        CHECK(subs.size() == gaussian_binomial(F.order(), d, s));
        std::set<std::vector<Elem>> distinct;
        for (const auto& x : subs) {
          CHECK(x.dimension() == s);
          distinct.insert(x.basis().data());
        }
        CHECK(distinct.size() == subs.size());
      }
  }
}

TEST_CASE("complement and projection") {
  const Field F2 = Field::make(2, 1);
  CHECK(complement(Subspace(F2, 2)) == Subspace::whole(F2, 2));
  CHECK(complement(Subspace::whole(F2, 2)).empty());
  const auto s = Subspace::span(F2, 2, std::vector{pt(F2, {1, 0, 0})});
  const auto d = complement(s);
  CHECK(d == line_through(F2, pt(F2, {0, 1, 0}), pt(F2, {0, 0, 1})));
  CHECK(project_from(s, d, pt(F2, {1, 1, 0})) == pt(F2, {0, 1, 0}));
  CHECK_FALSE(project_from(s, d, pt(F2, {1, 0, 0})).has_value());
  CHECK(project_from(s, d, pt(F2, {0, 1, 1})) == pt(F2, {0, 1, 1}));
  CHECK_THROWS_AS(project_from(s, s, pt(F2, {0, 1, 0})), Error);

  const auto seed = Subspace::span(F2, 3, std::vector{pt(F2, {0, 1, 1, 0})});
  const auto c = complement_containing(Subspace::span(F2, 3, std::vector{pt(F2, {1, 0, 0, 0})}), seed);
  CHECK(c.contains(seed));
  CHECK(c.dimension() == 2);

  // Projection is idempotent, fixes D and maps onto D, for every subspace.
  for (auto [p, k] : {std::pair{2u, 1u}, {3u, 1u}}) {
    const Field F = Field::make(p, k);
    const auto pts = enumerate_points(F, 2);
    for (int dim = -1; dim <= 2; ++dim) {
      const auto centers = dim < 0 ? std::vector<Subspace>{Subspace(F, 2)}
                                   : enumerate_subspaces(F, 2, dim);
      for (const auto& center : centers) {
        const auto target = complement(center);
        CHECK(meet(center, target).empty());
        CHECK(join(center, target) == Subspace::whole(F, 2));
        std::set<ProjPoint> image;
        for (const auto& x : pts) {
          const auto y = project_from(center, target, x);
          CHECK(y.has_value() == !center.contains(x));
          if (!y) continue;
          CHECK(target.contains(*y));
          CHECK(project_from(center, target, *y) == y);
          CHECK(join(center, Subspace::span(F, 2, std::vector{x}))
                    .contains(*y));
          image.insert(*y);
        }
        CHECK(image.size() == target.point_count());
      }
    }
  }
}

TEST_CASE("coordinates relative to a basis") {
  const Field F = Field::make(3, 1);
  const auto plane = Subspace::span(
      F, 3, std::vector{pt(F, {1, 2, 0, 1}), pt(F, {0, 1, 1, 0}), pt(F, {0, 0, 1, 2})});
  for (const auto& x : plane.points()) {
    const Vec c = plane.coordinates(x.coords());
    CHECK(plane.combine(c) == x.vector());
  }
}
