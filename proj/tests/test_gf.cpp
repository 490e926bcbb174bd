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

#include <numeric>
#include <vector>

#include "segdecomp/error.hpp"
#include "segdecomp/gf.hpp"

using namespace segdecomp;

namespace {

// Schoolbook arithmetic on coefficient vectors, reduced by a hard-coded
// modulus. Used as an oracle for the table-driven field.
struct Poly {
  unsigned p;
  std::vector<unsigned> mod;  // low degree first, monic

  unsigned k() const { return static_cast<unsigned>(mod.size() - 1); }

  std::vector<unsigned> decode(unsigned e) const {
    std::vector<unsigned> c(k());
    for (auto& x : c) {
      x = e % p;
      e /= p;
    }
    return c;
  }
  unsigned encode(const std::vector<unsigned>& c) const {
    unsigned e = 0;
    for (std::size_t i = c.size(); i-- > 0;) e = e * p + c[i];
    return e;
  }
  unsigned mul(unsigned a, unsigned b) const {
    const auto x = decode(a), y = decode(b);
    std::vector<unsigned> z(2 * k(), 0);
    for (unsigned i = 0; i < k(); ++i)
      for (unsigned j = 0; j < k(); ++j) z[i + j] = (z[i + j] + x[i] * y[j]) % p;
    for (std::size_t d = z.size(); d-- > k();) {
      const unsigned lead = z[d];
      if (!lead) continue;
      for (unsigned i = 0; i <= k(); ++i)
        z[d - k() + i] = (z[d - k() + i] + p * p - lead * mod[i] % p) % p;
    }
    z.resize(k());
    return encode(z);
  }
  unsigned add(unsigned a, unsigned b) const {
    auto x = decode(a);
    const auto y = decode(b);
    for (unsigned i = 0; i < k(); ++i) x[i] = (x[i] + y[i]) % p;
    return encode(x);
  }
};

const std::vector<Poly> kKnown = {
    {2, {1, 1}},          // GF(2)
    {3, {1, 1}},          // GF(3), modulus unused for k = 1
    {2, {1, 1, 1}},       // t^2 + t + 1
    {2, {1, 1, 0, 1}},    // t^3 + t + 1
    {2, {1, 1, 0, 0, 1}}, // t^4 + t + 1
    {3, {2, 2, 1}},       // t^2 + 2t + 2
    {3, {1, 2, 0, 1}},    // t^3 + 2t + 1
    {5, {2, 4, 1}},       // t^2 + 4t + 2
};

}  // namespace

TEST_CASE("field construction") {
  CHECK(Field::make(2, 1).order() == 2);
  CHECK(Field::make(2, 2).modulus() == std::vector<unsigned>{1, 1, 1});
  CHECK(Field::make(3, 2).modulus() == std::vector<unsigned>{2, 2, 1});
  CHECK(Field::make(2, 16).order() == 65536);

  auto code_of = [](auto fn) {
    try {
      fn();
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::kInvalidArgument;
  };
  CHECK(code_of([] { Field::make(4, 1); }) == ErrorCode::kNonPrimeCharacteristic);
  CHECK(code_of([] { Field::make(1, 1); }) == ErrorCode::kNonPrimeCharacteristic);
  CHECK(code_of([] { Field::make(2, 17); }) == ErrorCode::kUnsupportedSize);
  CHECK(code_of([] { Field::make(257, 2); }) == ErrorCode::kUnsupportedSize);
  CHECK(code_of([] { Field::make(2, 0); }) == ErrorCode::kUnsupportedSize);
}

TEST_CASE("modulus is irreducible by trial division") {
  for (auto [p, k] : {std::pair{2u, 3u}, {2u, 5u}, {3u, 3u}, {5u, 3u}, {7u, 2u}}) {
    const Field F = Field::make(p, k);
    const auto& f = F.modulus();
    REQUIRE(f.size() == k + 1);
    CHECK(f.back() == 1);
    // For degree <= 3, irreducible iff no root in GF(p).
    if (k <= 3) {
      for (unsigned x = 0; x < p; ++x) {
        unsigned v = 0;
        for (std::size_t i = f.size(); i-- > 0;) v = (v * x + f[i]) % p;
        CHECK(v != 0);
      }
    }
  }
}

TEST_CASE("multiplication agrees with schoolbook polynomial arithmetic") {
  for (const auto& poly : kKnown) {
    const Field F = Field::make(poly.p, poly.k());
    CAPTURE(F.order());
    if (poly.k() > 1) CHECK(F.modulus() == poly.mod);
    for (Elem a = 0; a < F.order(); ++a)
      for (Elem b = 0; b < F.order(); ++b) {
        REQUIRE(F.mul(a, b) == poly.mul(a, b));
        REQUIRE(F.add(a, b) == poly.add(a, b));
      }
  }
}

TEST_CASE("small examples") {
  const Field F3 = Field::make(3, 1);
  CHECK(F3.mul(2, 2) == 1);
  const Field F2 = Field::make(2, 1);
  CHECK(F2.add(1, 1) == 0);

  const Field F4 = Field::make(2, 2);
  const Elem t = 2, t1 = 3;  // t and t+1
  CHECK(F4.mul(t, t1) == 1);
  CHECK(F4.inv(t) == t1);
  CHECK(F4.apply(FieldAutomorphism{1}, t) == t1);
  CHECK(F4.automorphisms().size() == 2);
  CHECK(F2.automorphisms().size() == 1);
  CHECK(F3.automorphisms().size() == 1);
  CHECK_THROWS_AS(F4.div(1, 0), Error);
}

TEST_CASE("field axioms, exhaustive for q <= 9") {
  for (auto [p, k] : {std::pair{2u, 1u}, {3u, 1u}, {2u, 2u}, {5u, 1u}, {7u, 1u},
                      {2u, 3u}, {3u, 2u}}) {
    const Field F = Field::make(p, k);
    const Elem q = F.order();
    CAPTURE(q);
    for (Elem a = 0; a < q; ++a) {
      CHECK(F.add(a, F.neg(a)) == 0);
      CHECK(F.sub(a, a) == 0);
      if (a) {
        CHECK(F.mul(a, F.inv(a)) == 1);
        CHECK(F.pow(a, q - 1) == 1);
      }
      for (Elem b = 0; b < q; ++b) {
        CHECK(F.add(a, b) == F.add(b, a));
        CHECK(F.mul(a, b) == F.mul(b, a));
        if (b) CHECK(F.mul(F.div(a, b), b) == a);
        for (Elem c = 0; c < q; ++c) {
          CHECK(F.add(F.add(a, b), c) == F.add(a, F.add(b, c)));
          CHECK(F.mul(F.mul(a, b), c) == F.mul(a, F.mul(b, c)));
          CHECK(F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c)));
        }
      }
    }
  }
}

TEST_CASE("multiplicative group is cyclic, generated by t") {
  for (auto [p, k] : {std::pair{2u, 4u}, {3u, 3u}, {5u, 2u}, {11u, 1u}}) {
    const Field F = Field::make(p, k);
    const Elem g = F.generator();
    std::vector<bool> seen(F.order(), false);
    Elem x = 1;
    for (Elem i = 0; i + 1 < F.order(); ++i) {
      CHECK_FALSE(seen[x]);
      seen[x] = true;
      x = F.mul(x, g);
    }
    CHECK(x == 1);
  }
}

TEST_CASE("automorphisms are field automorphisms fixing the prime field") {
  for (auto [p, k] : {std::pair{2u, 2u}, {2u, 3u}, {3u, 2u}, {2u, 4u}}) {
    const Field F = Field::make(p, k);
    const auto autos = F.automorphisms();
    REQUIRE(autos.size() == k);
    for (auto s : autos) {
      for (Elem c = 0; c < p; ++c) CHECK(F.apply(s, c) == c);
      for (Elem a = 0; a < F.order(); ++a) {
        std::uint64_t e = 1;
        for (unsigned i = 0; i < s.exponent; ++i) e *= p;
        CHECK(F.apply(s, a) == F.pow(a, e));
        CHECK(F.apply(F.inverse(s), F.apply(s, a)) == a);
        for (Elem b = 0; b < F.order(); ++b) {
          CHECK(F.apply(s, F.add(a, b)) == F.add(F.apply(s, a), F.apply(s, b)));
          CHECK(F.apply(s, F.mul(a, b)) == F.mul(F.apply(s, a), F.apply(s, b)));
        }
      }
      // Iterating k / gcd(j, k) times returns every element.
      const unsigned period = s.exponent == 0 ? 1 : k / std::gcd(s.exponent, k);
      for (Elem a = 0; a < F.order(); ++a) {
        Elem x = a;
        for (unsigned i = 0; i < period; ++i) x = F.apply(s, x);
        CHECK(x == a);
      }
      for (auto s2 : autos)
        for (Elem a = 0; a < F.order(); ++a)
          CHECK(F.apply(F.compose(s, s2), a) == F.apply(s2, F.apply(s, a)));
    }
  }
}

TEST_CASE("coefficient encoding round-trips") {
  const Field F = Field::make(3, 3);
  for (Elem a = 0; a < F.order(); ++a) {
    const auto c = F.coefficients(a);
    CHECK(c.size() == 3);
    CHECK(F.from_coefficients(c) == a);
  }
}
