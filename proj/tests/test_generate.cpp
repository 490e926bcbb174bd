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
#include <array>
#include <vector>

#include "segdecomp/error.hpp"
#include "segdecomp/generate.hpp"

using namespace segdecomp;

namespace {

// Over GF(2) a point of PG(3,2) is its coordinate vector read as a 4-bit
// number, and its index in enumeration order is that number minus one. So a
// grid entry (0 = UNDEF) is exactly the bitmask.
//
// The three points of a line over GF(2) are valid images iff none is defined,
// or two are defined and equal with the third undefined, or all three are
// defined and form a line (a ^ b == c, pairwise distinct). Two undefined
// points force the whole line to be undefined.
bool line_ok(unsigned a, unsigned b, unsigned c) {
  const int defined = (a != 0) + (b != 0) + (c != 0);
  if (defined == 0) return true;
  if (defined == 1) return false;
  if (defined == 2) {
    const unsigned u = a ? a : b;
    const unsigned v = c ? c : b;
    return u == v;
  }
  return a != b && (a ^ b) == c;
}

std::vector<GridEntries> brute_force_grids() {
  std::vector<std::array<unsigned, 3>> rows, first_rows;
  for (unsigned a = 0; a < 16; ++a)
    for (unsigned b = 0; b < 16; ++b)
      for (unsigned c = 0; c < 16; ++c) {
        if (!line_ok(a, b, c)) continue;
        rows.push_back({a, b, c});
        if (a && b && c) first_rows.push_back({a, b, c});
      }
  std::vector<GridEntries> out;
  for (const auto& r0 : first_rows)
    for (const auto& r1 : rows)
      for (const auto& r2 : rows) {
        bool ok = true;
        for (int j = 0; j < 3 && ok; ++j) ok = line_ok(r0[j], r1[j], r2[j]);
        if (!ok) continue;
        GridEntries e;
        for (int j = 0; j < 3; ++j) {
          e[j] = static_cast<std::uint8_t>(r0[j]);
          e[3 + j] = static_cast<std::uint8_t>(r1[j]);
          e[6 + j] = static_cast<std::uint8_t>(r2[j]);
        }
        out.push_back(e);
      }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_CASE("line oracle sanity") {
  CHECK(line_ok(0, 0, 0));
  CHECK_FALSE(line_ok(5, 0, 0));
  CHECK(line_ok(5, 5, 0));
  CHECK_FALSE(line_ok(5, 6, 0));
  CHECK(line_ok(1, 2, 3));
  CHECK_FALSE(line_ok(1, 2, 4));
  CHECK_FALSE(line_ok(1, 1, 1));
}

TEST_CASE("grid enumeration matches a brute-force count") {
  const auto& lib = all_grid_tables_q2();
  const auto oracle = brute_force_grids();
  CHECK(lib.size() == oracle.size());
  CHECK(lib == oracle);
  // Row (0:1) is any ordered line: 35 lines times 3! orderings.
  std::vector<std::array<std::uint8_t, 3>> firsts;
  for (const auto& e : lib) firsts.push_back({e[0], e[1], e[2]});
  std::sort(firsts.begin(), firsts.end());
  firsts.erase(std::unique(firsts.begin(), firsts.end()), firsts.end());
  CHECK(firsts.size() == 210);

  // The tables pass the library axiom checks.
  for (std::size_t i = 0; i < lib.size(); i += 97) {
    const auto t = grid_table_q2(lib[i]);
    CHECK(check_L1(t).ok());
    CHECK(check_L2(t).ok());
  }
}

TEST_CASE("generators are deterministic") {
  const Field F = Field::make(3, 1);
  RoundtripParams rp;
  rp.seed = 42;
  const auto a = random_roundtrip(F, rp);
  const auto b = random_roundtrip(F, rp);
  CHECK(a.beta == b.beta);
  CHECK(a.psi == b.psi);
  rp.seed = 43;
  const auto c = random_roundtrip(F, rp);
  CHECK_FALSE((a.beta == c.beta && a.psi == c.psi));

  DegenerateParams dp;
  dp.seed = 9;
  CHECK(random_degenerate(Field::make(2, 1), dp).psi ==
        random_degenerate(Field::make(2, 1), dp).psi);
  CHECK(random_grid(F, 5) == random_grid(F, 5));
  CHECK(random_grid(Field::make(2, 1), 7) ==
        grid_table_q2(all_grid_tables_q2()[7 % all_grid_tables_q2().size()]));
}

TEST_CASE("round-trip instances") {
  for (auto [p, k] : {std::pair{2u, 1u}, {3u, 1u}, {2u, 2u}}) {
    const Field F = Field::make(p, k);
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
      RoundtripParams rp;
      rp.seed = seed;
      const auto a = random_roundtrip(F, rp);
      CHECK(a.beta.is_invertible());
      CHECK(a.psi.is_invertible());
      CHECK(a.target_dimension == 5);
      const auto t = compose_instance(a.beta, a.psi, a.n, a.m);
      CHECK(t.defined_count() == t.size());
    }
  }
  RoundtripParams fixed;
  fixed.psi_sigma = FieldAutomorphism{1};
  CHECK(random_roundtrip(Field::make(2, 2), fixed).psi.automorphism().exponent == 1);
}

TEST_CASE("degenerate instances have the requested radicals") {
  const Field F = Field::make(2, 1);
  for (int r1 = -1; r1 <= 1; ++r1)
    for (int r2 = -1; r2 <= 0; ++r2) {
      DegenerateParams dp;
      dp.rad1_dim = r1;
      dp.rad2_dim = r2;
      dp.seed = static_cast<std::uint64_t>(r1 + 7 * r2 + 20);
      const auto a = random_degenerate(F, dp);
      const auto t = compose_instance(a.beta, a.psi, a.n, a.m);
      const auto rads = radicals(t);
      CHECK(rads.first.dimension() == r1);
      CHECK(rads.second.dimension() == r2);
      CHECK(check_L1(t).ok());
      CHECK(check_L2(t).ok());
    }
  DegenerateParams bad;
  bad.rad2_dim = 3;
  CHECK_THROWS_AS(random_degenerate(F, bad), Error);
}

TEST_CASE("random grids over larger fields") {
  const Field F = Field::make(3, 1);
  const auto a = enumerate_points(F, 1).front();
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const auto g = random_grid(F, seed);
    CHECK(g.n() == 1);
    CHECK(g.target_dimension() == 3);
    for (const auto& y : enumerate_points(F, 1)) CHECK(g.at(a, y).has_value());
    CHECK(check_L1(g).ok());
    CHECK(check_L2(g).ok());
  }
}

TEST_CASE("bad shapes") {
  const Field F = Field::make(2, 1);
  CHECK_THROWS_AS(segre_table(F, 0, 1), Error);
  CHECK_THROWS_AS(compose_instance(SemilinearMap::identity(F, 2),
                                   SemilinearMap::identity(F, 5), 2, 1),
                  Error);
}
