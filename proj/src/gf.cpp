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

#include "segdecomp/gf.hpp"

#include <map>
#include <mutex>
#include <numeric>
#include <string>
#include <utility>

#include "segdecomp/error.hpp"

namespace segdecomp {

namespace detail {

struct FieldTables {
  unsigned p = 0;
  unsigned k = 0;
  Elem q = 0;
  std::vector<unsigned> modulus;
  std::vector<Elem> exp;  // length 2(q-1), exp[i] = t^i
  std::vector<std::uint32_t> log;
  std::vector<Elem> neg;
  std::vector<std::uint16_t> add;  // q*q table, only for q <= 256
  std::vector<std::uint64_t> frob;  // p^j mod (q-1)
  Elem generator = 1;
};

}  // namespace detail

namespace {

using Poly = std::vector<unsigned>;  // low degree first

// Product of a and b modulo the monic f; a and b have length deg f.
Poly mulmod(const Poly& a, const Poly& b, const Poly& f, unsigned p) {
  const std::size_t k = f.size() - 1;
  std::vector<std::uint64_t> prod(2 * k, 0);
  for (std::size_t i = 0; i < k; ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < k; ++j) {
      prod[i + j] = (prod[i + j] + std::uint64_t{a[i]} * b[j]) % p;
    }
  }
  for (std::size_t d = 2 * k - 1; d >= k; --d) {
    const std::uint64_t c = prod[d] % p;
    if (c == 0) continue;
    prod[d] = 0;
    for (std::size_t i = 0; i < k; ++i) {
      prod[d - k + i] = (prod[d - k + i] + (p - c) * f[i]) % p;
    }
  }
  Poly r(k);
  for (std::size_t i = 0; i < k; ++i) r[i] = static_cast<unsigned>(prod[i] % p);
  return r;
}

Poly powmod(Poly base, std::uint64_t e, const Poly& f, unsigned p) {
  Poly r(f.size() - 1, 0);
  r[0] = 1 % p;
  while (e > 0) {
    if (e & 1) r = mulmod(r, base, f, p);
    base = mulmod(base, base, f, p);
    e >>= 1;
  }
  return r;
}

// The residue class of x modulo f.
Poly x_mod(const Poly& f, unsigned p) {
  const std::size_t k = f.size() - 1;
  Poly x(k, 0);
  if (k == 1) {
    x[0] = (p - f[0]) % p;
  } else {
    x[1] = 1;
  }
  return x;
}

bool is_one(const Poly& a) {
  if (a[0] != 1) return false;
  for (std::size_t i = 1; i < a.size(); ++i)
    if (a[i] != 0) return false;
  return true;
}

bool is_zero(const Poly& a) {
  for (unsigned c : a)
    if (c != 0) return false;
  return true;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

std::uint64_t ipow(std::uint64_t b, unsigned e) {
  std::uint64_t r = 1;
  while (e-- > 0) r *= b;
  return r;
}

// Evaluates g (a polynomial over GF(p), low degree first) at r in GF(p)[x]/f.
Poly evaluate_at(const Poly& g, const Poly& r, const Poly& f, unsigned p) {
  const std::size_t k = f.size() - 1;
  Poly acc(k, 0);
  for (std::size_t i = g.size(); i-- > 0;) {
    acc = mulmod(acc, r, f, p);
    acc[0] = (acc[0] + g[i]) % p;
  }
  return acc;
}

using ConwayCache = std::map<std::pair<unsigned, unsigned>, Poly>;

// Conway polynomial: the least primitive polynomial of degree k in the
// ordering that compares (-1)^i a_{k-i}, i = 1..k, lexicographically, subject
// to compatibility with the Conway polynomials of every proper subfield.
const Poly& conway(unsigned p, unsigned k, ConwayCache& cache) {
  if (auto it = cache.find({p, k}); it != cache.end()) return it->second;

  const std::uint64_t q = ipow(p, k);
  const auto factors = prime_factors(q - 1);
  std::vector<std::pair<unsigned, const Poly*>> subfields;
  for (unsigned d = 1; d < k; ++d) {
    if (k % d == 0) subfields.emplace_back(d, &conway(p, d, cache));
  }

  std::vector<unsigned> digits(k, 0);  // digits[i-1] = (-1)^i a_{k-i}
  Poly f(k + 1, 0);
  f[k] = 1;
  while (true) {
    for (unsigned i = 1; i <= k; ++i) {
      const unsigned b = digits[i - 1];
      f[k - i] = (i % 2 == 0) ? b : (p - b) % p;
    }
    bool ok = f[0] != 0;
    if (ok) {
      const Poly x = x_mod(f, p);
      ok = is_one(powmod(x, q - 1, f, p));
      for (std::size_t i = 0; ok && i < factors.size(); ++i)
        ok = !is_one(powmod(x, (q - 1) / factors[i], f, p));
      for (std::size_t i = 0; ok && i < subfields.size(); ++i) {
        const auto [d, g] = subfields[i];
        const Poly r = powmod(x, (q - 1) / (ipow(p, d) - 1), f, p);
        ok = is_zero(evaluate_at(*g, r, f, p));
      }
    }
    if (ok) return cache.emplace(std::make_pair(p, k), f).first->second;

    std::size_t pos = k;
    while (pos > 0) {
      if (++digits[pos - 1] < p) break;
      digits[pos - 1] = 0;
      --pos;
    }
    if (pos == 0) break;
  }
  throw Error(ErrorCode::kUnsupportedSize, "no Conway polynomial found");
}

Elem encode(const Poly& a, unsigned p) {
  Elem e = 0;
  for (std::size_t i = a.size(); i-- > 0;) e = e * p + a[i];
  return e;
}

Poly decode(Elem e, unsigned p, unsigned k) {
  Poly a(k);
  for (unsigned i = 0; i < k; ++i) {
    a[i] = e % p;
    e /= p;
  }
  return a;
}

std::shared_ptr<const detail::FieldTables> build_tables(unsigned p, unsigned k,
                                                        ConwayCache& cache) {
  auto t = std::make_shared<detail::FieldTables>();
  t->p = p;
  t->k = k;
  t->q = static_cast<Elem>(ipow(p, k));
  t->modulus = conway(p, k, cache);

  const Elem q = t->q;
  const Poly x = x_mod(t->modulus, p);
  t->generator = encode(x, p);
  t->exp.resize(2 * static_cast<std::size_t>(q - 1));
  t->log.assign(q, 0);
  Poly cur(k, 0);
  cur[0] = 1;
  for (Elem i = 0; i < q - 1; ++i) {
    const Elem e = encode(cur, p);
    t->exp[i] = e;
    t->exp[i + q - 1] = e;
    t->log[e] = i;
    cur = mulmod(cur, x, t->modulus, p);
  }

  t->neg.resize(q);
  for (Elem a = 0; a < q; ++a) {
    Poly c = decode(a, p, k);
    for (auto& v : c) v = (p - v) % p;
    t->neg[a] = encode(c, p);
  }
  if (q <= 256) {
    t->add.resize(static_cast<std::size_t>(q) * q);
    for (Elem a = 0; a < q; ++a) {
      const Poly ca = decode(a, p, k);
      for (Elem b = 0; b < q; ++b) {
        Poly cb = decode(b, p, k);
        for (unsigned i = 0; i < k; ++i) cb[i] = (cb[i] + ca[i]) % p;
        t->add[static_cast<std::size_t>(a) * q + b] =
            static_cast<std::uint16_t>(encode(cb, p));
      }
    }
  }
  t->frob.resize(k);
  std::uint64_t pj = 1;
  for (unsigned j = 0; j < k; ++j) {
    t->frob[j] = pj % (q - 1 == 0 ? 1 : q - 1);
    pj *= p;
  }
  return t;
}

}  // namespace

bool is_prime(unsigned p) {
  if (p < 2) return false;
  for (unsigned d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

Field Field::make(unsigned p, unsigned k) {
  if (!is_prime(p))
    throw Error(ErrorCode::kNonPrimeCharacteristic,
                std::to_string(p) + " is not prime");
  std::uint64_t q = 1;
  for (unsigned i = 0; i < k && q <= kMaxOrder; ++i) q *= p;
  if (k < 1 || q > kMaxOrder)
    throw Error(ErrorCode::kUnsupportedSize,
                "GF(" + std::to_string(p) + "^" + std::to_string(k) +
                    ") is outside the supported range");

  static std::mutex mu;
  static ConwayCache conway_cache;
  static std::map<std::pair<unsigned, unsigned>,
                  std::shared_ptr<const detail::FieldTables>>
      fields;
  std::lock_guard lock(mu);
  auto& slot = fields[{p, k}];
  if (!slot) slot = build_tables(p, k, conway_cache);
  return Field(slot);
}

unsigned Field::characteristic() const { return t_->p; }
unsigned Field::degree() const { return t_->k; }
Elem Field::order() const { return t_->q; }
const std::vector<unsigned>& Field::modulus() const { return t_->modulus; }
Elem Field::generator() const { return t_->generator; }

Elem Field::add(Elem a, Elem b) const {
  if (!t_->add.empty()) return t_->add[static_cast<std::size_t>(a) * t_->q + b];
  if (t_->p == 2) return a ^ b;
  const unsigned p = t_->p;
  Elem r = 0, scale = 1;
  for (unsigned i = 0; i < t_->k; ++i) {
    r += ((a % p + b % p) % p) * scale;
    a /= p;
    b /= p;
    scale *= p;
  }
  return r;
}

Elem Field::neg(Elem a) const { return t_->neg[a]; }

Elem Field::sub(Elem a, Elem b) const { return add(a, t_->neg[b]); }

Elem Field::mul(Elem a, Elem b) const {
  if (a == 0 || b == 0) return 0;
  return t_->exp[t_->log[a] + t_->log[b]];
}

Elem Field::inv(Elem a) const {
  if (a == 0) throw Error(ErrorCode::kDivisionByZero, "inverse of zero");
  const Elem q1 = t_->q - 1;
  return t_->exp[(q1 - t_->log[a]) % q1];
}

Elem Field::div(Elem a, Elem b) const {
  if (b == 0) throw Error(ErrorCode::kDivisionByZero, "division by zero");
  return mul(a, inv(b));
}

Elem Field::pow(Elem a, std::uint64_t e) const {
  if (e == 0) return 1;
  if (a == 0) return 0;
  const std::uint64_t q1 = t_->q - 1;
  return t_->exp[(std::uint64_t{t_->log[a]} * (e % q1)) % q1];
}

Elem Field::apply(FieldAutomorphism sigma, Elem x) const {
  if (sigma.exponent == 0 || x == 0) return x;
  const std::uint64_t q1 = t_->q - 1;
  return t_->exp[(std::uint64_t{t_->log[x]} * t_->frob[sigma.exponent]) % q1];
}

FieldAutomorphism Field::inverse(FieldAutomorphism sigma) const {
  return {(t_->k - sigma.exponent) % t_->k};
}

FieldAutomorphism Field::compose(FieldAutomorphism first,
                                 FieldAutomorphism second) const {
  return {(first.exponent + second.exponent) % t_->k};
}

std::vector<FieldAutomorphism> Field::automorphisms() const {
  std::vector<FieldAutomorphism> out;
  for (unsigned j = 0; j < t_->k; ++j) out.push_back({j});
  return out;
}

std::vector<unsigned> Field::coefficients(Elem a) const {
  return decode(a, t_->p, t_->k);
}

Elem Field::from_coefficients(std::span<const unsigned> coeffs) const {
  Elem e = 0;
  for (std::size_t i = coeffs.size(); i-- > 0;)
    e = e * t_->p + coeffs[i] % t_->p;
  return e;
}

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kNonPrimeCharacteristic: return "NonPrimeCharacteristic";
    case ErrorCode::kUnsupportedSize: return "UnsupportedSize";
    case ErrorCode::kDivisionByZero: return "DivisionByZero";
    case ErrorCode::kZeroVector: return "ZeroVector";
    case ErrorCode::kEqualPoints: return "EqualPoints";
    case ErrorCode::kNotComplementary: return "NotComplementary";
    case ErrorCode::kNotOnVariety: return "NotOnVariety";
    case ErrorCode::kRadicalNotSubspace: return "RadicalNotSubspace";
    case ErrorCode::kNotSemilinear: return "NotSemilinear";
    case ErrorCode::kInconsistentAutomorphisms: return "InconsistentAutomorphisms";
    case ErrorCode::kRowNotSemilinear: return "RowNotSemilinear";
    case ErrorCode::kNoUniquePreimage: return "NoUniquePreimage";
    case ErrorCode::kHypothesisFailure: return "HypothesisFailure";
    case ErrorCode::kPreconditionViolated: return "PreconditionViolated";
    case ErrorCode::kParseError: return "ParseError";
    case ErrorCode::kShapeMismatch: return "ShapeMismatch";
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
    case ErrorCode::kIo: return "Io";
  }
  return "Unknown";
}

}  // namespace segdecomp
