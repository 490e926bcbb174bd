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

#include "segdecomp/generate.hpp"

#include "segdecomp/error.hpp"

namespace segdecomp {

namespace {

using Rng = std::mt19937_64;

constexpr int kAttempts = 1000;

Matrix random_matrix(Rng& rng, const Field& F, std::size_t r, std::size_t c) {
  Matrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = rng() % F.order();
  return m;
}

// r <= c.
Matrix random_full_rank(Rng& rng, const Field& F, std::size_t r, std::size_t c) {
  while (true) {
    Matrix m = random_matrix(rng, F, r, c);
    if (rank(F, m) == r) return m;
  }
}

Subspace random_subspace(Rng& rng, const Field& F, int d, int k) {
  if (k < 0) return Subspace(F, d);
  return Subspace::from_rows(F, d, random_full_rank(rng, F, k + 1, d + 1));
}

FieldAutomorphism random_automorphism(Rng& rng, const Field& F) {
  return FieldAutomorphism{static_cast<unsigned>(rng() % F.degree())};
}

void check_shape(int n, int m, int N) {
  if (n < 1 || m < 1 || N < 0)
    throw Error(ErrorCode::kInvalidArgument, "need n >= 1, m >= 1, N >= 0");
}

}  // namespace

ProductMapTable segre_table(const Field& F, int n, int m) {
  check_shape(n, m, 0);
  const SegreEmbedding gamma(F, n, m);
  ProductMapTable t(F, n, m, gamma.target_dimension());
  for (std::size_t i = 0; i < t.size(); ++i) t.set(i, gamma.embed(t.space().point(i)));
  return t;
}

ProductMapTable compose_instance(const SemilinearMap& beta,
                                 const SemilinearMap& psi, int n, int m) {
  const Field& F = psi.field();
  const SegreEmbedding gamma(F, n, m);
  if (beta.source_dimension() != m || beta.target_dimension() != m ||
      psi.source_dimension() != gamma.target_dimension())
    throw Error(ErrorCode::kShapeMismatch, "maps do not fit the product shape");
  ProductMapTable t(F, n, m, psi.target_dimension());
  const auto& sp = t.space();
  std::vector<MaybePoint> moved;
  for (const auto& y : sp.second_points()) moved.push_back(beta.apply(y));
  for (std::size_t i = 0; i < t.size(); ++i) {
    const auto& y = moved[sp.second_index(i)];
    if (!y) continue;
    t.set(i, psi.apply(gamma.embed(sp.first_points()[sp.first_index(i)], *y)));
  }
  return t;
}

Answer random_roundtrip(const Field& F, const RoundtripParams& params) {
  const int n = params.n;
  const int m = params.m;
  const std::size_t dim = static_cast<std::size_t>((n + 1) * (m + 1));
  const int N = params.target_dimension < 0 ? static_cast<int>(dim) - 1
                                            : params.target_dimension;
  check_shape(n, m, N);
  if (params.psi_sigma && params.psi_sigma->exponent >= F.degree())
    throw Error(ErrorCode::kInvalidArgument, "automorphism exponent out of range");
  const bool injective = static_cast<std::size_t>(N + 1) >= dim;

  Rng rng(params.seed);
  for (int attempt = 0; attempt < kAttempts; ++attempt) {
    SemilinearMap beta(F, random_full_rank(rng, F, m + 1, m + 1));
    const FieldAutomorphism sigma =
        params.psi_sigma ? *params.psi_sigma : random_automorphism(rng, F);
    Matrix psi_m = injective ? random_full_rank(rng, F, dim, N + 1)
                             : random_matrix(rng, F, dim, N + 1);
    SemilinearMap psi(F, std::move(psi_m), sigma);
    if (!injective) {
      const auto t = compose_instance(beta, psi, n, m);
      if (!check_condition_i(t) || !check_condition_ii(t)) continue;
    }
    return {F, n, m, N, std::move(beta), std::move(psi)};
  }
  throw Error(ErrorCode::kInvalidArgument,
              "no instance satisfying the hypotheses found for this shape");
}

Answer random_degenerate(const Field& F, const DegenerateParams& params) {
  const int n = params.n;
  const int m = params.m;
  check_shape(n, m, 0);
  if (params.rad1_dim < -1 || params.rad1_dim > n || params.rad2_dim < -1 ||
      params.rad2_dim > m)
    throw Error(ErrorCode::kInvalidArgument, "radical dimension out of range");

  Rng rng(params.seed);
  const SegreEmbedding gamma(F, n, m);
  const Radicals rads{random_subspace(rng, F, n, params.rad1_dim),
                      random_subspace(rng, F, m, params.rad2_dim)};
  const Subspace u = radical_span(gamma, rads);
  const Subspace c = complement(u);
  const std::size_t k = c.basis().rows();
  const int N = params.target_dimension < 0
                    ? std::max(0, static_cast<int>(k) - 1)
                    : params.target_dimension;
  if (static_cast<std::size_t>(N + 1) < k)
    throw Error(ErrorCode::kInvalidArgument,
                "target dimension too small for an injective core");

  Matrix source = u.basis();
  Matrix target(0, N + 1);
  const Vec zero(N + 1, 0);
  for (std::size_t r = 0; r < u.basis().rows(); ++r) target.append_row(zero);
  const Matrix core = random_full_rank(rng, F, k, N + 1);
  if (source.cols() == 0) source = Matrix(0, c.basis().cols());
  for (std::size_t r = 0; r < k; ++r) {
    source.append_row(c.basis().row(r));
    target.append_row(core.row(r));
  }
  SemilinearMap psi(F, multiply(F, *inverse(F, source), target));
  SemilinearMap beta(F, random_full_rank(rng, F, m + 1, m + 1));
  return {F, n, m, N, std::move(beta), std::move(psi)};
}

// ---------------------------------------------------------------------------
// Grids over GF(2)

namespace {

// The 256 valid assignments of a single line PG(1,2) -> PG(3,2), indexed by
// e0 * 256 + e1 * 16 + e2.
std::vector<char> valid_line_assignments(const Field& F) {
  std::vector<char> ok(16 * 16 * 16, 0);
  for (unsigned code = 0; code < ok.size(); ++code) {
    PointMap f(F, 1, 3);
    const unsigned e[3] = {code >> 8, (code >> 4) & 15, code & 15};
    for (int i = 0; i < 3; ++i)
      if (e[i]) f.set(i, point_at(F, 3, e[i] - 1));
    ok[code] = check_L1(f).ok() && check_L2(f).ok();
  }
  return ok;
}

}  // namespace

const std::vector<GridEntries>& all_grid_tables_q2() {
  static const std::vector<GridEntries> tables = [] {
    const Field F = Field::make(2, 1);
    const auto ok = valid_line_assignments(F);
    std::vector<unsigned> lines, full_lines;
    for (unsigned code = 0; code < ok.size(); ++code) {
      if (!ok[code]) continue;
      lines.push_back(code);
      if ((code >> 8) && ((code >> 4) & 15) && (code & 15))
        full_lines.push_back(code);
    }
    auto entry = [](unsigned code, int i) { return (code >> (8 - 4 * i)) & 15; };
    std::vector<GridEntries> out;
    for (unsigned a : full_lines)
      for (unsigned r1 : lines)
        for (unsigned r2 : lines) {
          bool good = true;
          for (int j = 0; j < 3 && good; ++j)
            good = ok[(entry(a, j) << 8) | (entry(r1, j) << 4) | entry(r2, j)];
          if (!good) continue;
          GridEntries g{};
          for (int j = 0; j < 3; ++j) {
            g[j] = static_cast<std::uint8_t>(entry(a, j));
            g[3 + j] = static_cast<std::uint8_t>(entry(r1, j));
            g[6 + j] = static_cast<std::uint8_t>(entry(r2, j));
          }
          out.push_back(g);
        }
    return out;
  }();
  return tables;
}

ProductMapTable grid_table_q2(const GridEntries& entries) {
  const Field F = Field::make(2, 1);
  ProductMapTable t(F, 1, 1, 3);
  for (std::size_t i = 0; i < entries.size(); ++i)
    if (entries[i]) t.set(i, point_at(F, 3, entries[i] - 1u));
  return t;
}

ProductMapTable random_grid(const Field& F, std::uint64_t seed) {
  if (F.order() == 2) {
    const auto& all = all_grid_tables_q2();
    return grid_table_q2(all[seed % all.size()]);
  }
  Rng rng(seed);
  const auto beta = SemilinearMap::identity(F, 1);
  const ProjPoint a = point_at(F, 1, 0);
  for (int attempt = 0; attempt < kAttempts; ++attempt) {
    SemilinearMap psi(F, random_matrix(rng, F, 4, 4), random_automorphism(rng, F));
    auto t = compose_instance(beta, psi, 1, 1);
    bool row_defined = true;
    for (const auto& y : t.space().second_points())
      row_defined = row_defined && t.at(a, y).has_value();
    if (row_defined) return t;
  }
  throw Error(ErrorCode::kInvalidArgument, "no grid with a defined first row found");
}

}  // namespace segdecomp
