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

/// @file generate.hpp
/// Seeded instance generators. Output depends only on the parameters and the
/// seed.

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <random>

#include "segdecomp/io.hpp"

namespace segdecomp {

/// The tabulated Segre embedding, N = nm+n+m.
ProductMapTable segre_table(const Field& F, int n, int m);

/// chi(X, Y) = psi(gamma(X, beta'(Y))).
ProductMapTable compose_instance(const SemilinearMap& beta,
                                 const SemilinearMap& psi, int n, int m);

struct RoundtripParams {
  int n = 2;
  int m = 1;
  int target_dimension = -1;  // -1: nm+n+m
  std::uint64_t seed = 0;
  /// Automorphism of psi; random when unset.
  std::optional<FieldAutomorphism> psi_sigma;
};

/// beta' is a random projectivity; psi is a random semilinear map, injective
/// when N >= nm+n+m. When N is smaller, psi is resampled until the table
/// satisfies both decomposition hypotheses (kInvalidArgument if that never
/// happens within a fixed budget).
Answer random_roundtrip(const Field& F, const RoundtripParams& params);

struct DegenerateParams {
  int n = 2;
  int m = 2;
  int target_dimension = -1;  // -1: the smallest N that keeps the core injective
  int rad1_dim = -1;
  int rad2_dim = 0;
  std::uint64_t seed = 0;
};

/// psi vanishes exactly on rad1 (x) V2 + V1 (x) rad2 for random subspaces
/// rad1, rad2 (taken before applying beta') and is injective elsewhere.
Answer random_degenerate(const Field& F, const DegenerateParams& params);

/// A 3 x 3 grid table over GF(2) as nine entries in product index order;
/// 0 is UNDEF, otherwise 1 + the point index in PG(3, 2).
using GridEntries = std::array<std::uint8_t, 9>;

/// Every map on PG(1,2) x PG(1,2) -> PG(3,2) satisfying (L1) and (L2) whose
/// first row (0:1) x PG(1,2) is everywhere defined, in lexicographic order of
/// entries. Computed once per process.
const std::vector<GridEntries>& all_grid_tables_q2();
ProductMapTable grid_table_q2(const GridEntries& entries);

/// A grid table on PG(1,q) x PG(1,q) with row (0:1) everywhere defined. For
/// q = 2 it is entry seed mod count of all_grid_tables_q2(); otherwise it is
/// gamma followed by a random possibly singular linear map to PG(3,q).
ProductMapTable random_grid(const Field& F, std::uint64_t seed);

}  // namespace segdecomp
