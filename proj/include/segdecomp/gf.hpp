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

/// @file gf.hpp
/// Exact arithmetic in GF(p^k).
///
/// An element is stored as its canonical integer encoding e = sum a_i p^i,
/// where (a_0, ..., a_{k-1}) are its coefficients in the polynomial basis
/// 1, t, ..., t^{k-1} of GF(p)[t]/(f). The modulus f is the Conway polynomial
/// for (p, k), found by exhaustive search, so t is always a primitive element
/// and the encoding is reproducible across runs and machines.

#include <cstdint>
#include <memory>
#include <span>
#include <vector>

namespace segdecomp {

using Elem = std::uint32_t;

namespace detail {
struct FieldTables;
}

/// The Frobenius power x -> x^(p^j), 0 <= j < k.
struct FieldAutomorphism {
  unsigned exponent = 0;

  bool is_identity() const { return exponent == 0; }
  auto operator<=>(const FieldAutomorphism&) const = default;
};

class Field {
 public:
  /// Largest supported order p^k.
  static constexpr std::uint32_t kMaxOrder = 1u << 16;

  /// Throws kNonPrimeCharacteristic or kUnsupportedSize.
  static Field make(unsigned p, unsigned k);

  unsigned characteristic() const;
  unsigned degree() const;
  Elem order() const;

  /// Modulus coefficients, low degree first, length k+1, leading 1.
  const std::vector<unsigned>& modulus() const;

  /// The element t (a generator of the multiplicative group).
  Elem generator() const;

  Elem zero() const { return 0; }
  Elem one() const { return 1; }

  Elem add(Elem a, Elem b) const;
  Elem sub(Elem a, Elem b) const;
  Elem neg(Elem a) const;
  Elem mul(Elem a, Elem b) const;
  /// Throws kDivisionByZero when b == 0.
  Elem div(Elem a, Elem b) const;
  Elem inv(Elem a) const;
  Elem pow(Elem a, std::uint64_t e) const;

  Elem apply(FieldAutomorphism sigma, Elem x) const;
  FieldAutomorphism inverse(FieldAutomorphism sigma) const;
  FieldAutomorphism compose(FieldAutomorphism first,
                            FieldAutomorphism second) const;
  /// All k automorphisms, exponent 0..k-1.
  std::vector<FieldAutomorphism> automorphisms() const;

  std::vector<unsigned> coefficients(Elem a) const;
  Elem from_coefficients(std::span<const unsigned> coeffs) const;

  bool contains(Elem a) const { return a < order(); }

  friend bool operator==(const Field& a, const Field& b) {
    return a.characteristic() == b.characteristic() && a.degree() == b.degree();
  }

 private:
  explicit Field(std::shared_ptr<const detail::FieldTables> tables)
      : t_(std::move(tables)) {}

  std::shared_ptr<const detail::FieldTables> t_;
};

bool is_prime(unsigned p);

}  // namespace segdecomp
