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

#include <filesystem>
#include <string>

#include "segdecomp/error.hpp"
#include "segdecomp/generate.hpp"
#include "segdecomp/io.hpp"
#include "segdecomp/literal.hpp"

using namespace segdecomp;

namespace {

std::size_t parse_error_line(const std::string& text) {
  try {
    parse_table(text);
  } catch (const ParseError& e) {
    return e.line();
  }
  return 0;
}

const char* kGrid =
    "field 2 1\n"
    "shape 1 1 3\n"
    "(0:1)x(0:1) -> (0:0:0:1)\n"
    "(0:1)x(1:0) -> (0:0:1:0)\n"
    "(0:1)x(1:1) -> (0:0:1:1)\n"
    "(1:0)x(0:1) -> (0:1:0:0)\n"
    "(1:0)x(1:0) -> (1:0:0:0)\n"
    "(1:0)x(1:1) -> (1:1:0:0)\n"
    "(1:1)x(0:1) -> (0:1:0:1)\n"
    "(1:1)x(1:0) -> (1:0:1:0)\n"
    "(1:1)x(1:1) -> UNDEF\n";

}  // namespace

TEST_CASE("point literals") {
  const Field F = Field::make(3, 1);
  const auto p = parse_point(F, "(0:2:1)");
  CHECK(format_point(p) == "(0:1:2)");
  CHECK(format_point(MaybePoint{}) == "UNDEF");
  CHECK_THROWS_AS(parse_point(F, "(0:0:0)"), Error);
  CHECK_THROWS_AS(parse_point(F, "(0:3)"), Error);
  CHECK_THROWS_AS(parse_point(F, "(1:2)", 2), Error);
  const auto pp = parse_product_point(F, "(1:0:0)x(1:2)");
  CHECK(format_product_point(pp) == "(1:0:0)x(1:2)");
}

TEST_CASE("table parse and format") {
  const auto t = parse_table(kGrid);
  CHECK(t.n() == 1);
  CHECK(t.target_dimension() == 3);
  CHECK(t.defined_count() == 8);
  CHECK(format_table(t) == kGrid);

  // Point order, blank lines and comments do not matter.
  std::string shuffled = "# a comment\nfield 2 1\n\nshape 1 1 3\n";
  std::string body(kGrid);
  body = body.substr(body.find("(0:1)x"));
  std::vector<std::string> lines;
  for (std::size_t pos = 0; pos < body.size();) {
    const auto nl = body.find('\n', pos);
    lines.push_back(body.substr(pos, nl - pos));
    pos = nl + 1;
  }
  for (auto it = lines.rbegin(); it != lines.rend(); ++it) shuffled += *it + "\n";
  CHECK(parse_table(shuffled) == t);

  for (auto [p, k] : {std::pair{2u, 1u}, {3u, 1u}, {2u, 2u}}) {
    const auto s = segre_table(Field::make(p, k), 2, 1);
    CHECK(parse_table(format_table(s)) == s);
  }
}

TEST_CASE("table parse errors carry line numbers") {
  std::string dup = kGrid;
  dup += "(1:1)x(1:1) -> UNDEF\n";
  CHECK(parse_error_line(dup) == 12);

  std::string missing = kGrid;
  missing.erase(missing.find("(1:1)x(1:1)"));
  CHECK_THROWS_AS(parse_table(missing), ParseError);

  std::string bad = kGrid;
  bad.replace(bad.find("(0:0:1:0)"), 9, "(0:0:2:0)");
  CHECK(parse_error_line(bad) == 4);

  std::string arrow = kGrid;
  arrow.replace(arrow.find("->"), 2, "=>");
  CHECK(parse_error_line(arrow) == 3);

  CHECK(parse_error_line("field 4 1\nshape 1 1 3\n") == 1);
  CHECK(parse_error_line("field 2 1\nshape 0 1 3\n") == 2);
  CHECK_THROWS_AS(parse_table("shape 1 1 3\n"), ParseError);
  CHECK_THROWS_AS(parse_table(""), ParseError);
}

TEST_CASE("certificate round trip") {
  const Field F = Field::make(2, 2);
  RoundtripParams rp;
  rp.seed = 5;
  rp.psi_sigma = FieldAutomorphism{1};
  const auto a = random_roundtrip(F, rp);
  const auto t = compose_instance(a.beta, a.psi, a.n, a.m);
  const auto cert = decompose(t);
  const auto text = format_certificate(cert, 2, 1, t.target_dimension());
  const auto back = parse_certificate(text);
  CHECK(back.field == F);
  CHECK(back.n == 2);
  CHECK(back.target_dimension == 5);
  CHECK(back.certificate.alpha_prime == cert.alpha_prime);
  CHECK(back.certificate.phi == cert.phi);
  CHECK(back.certificate.witness_a == cert.witness_a);
  CHECK(back.certificate.witness_basis == cert.witness_basis);
  CHECK(back.certificate.witness_plane == cert.witness_plane);
  CHECK(back.certificate.verified == cert.verified);
  CHECK(format_certificate(back.certificate, 2, 1, 5) == text);

  // Certificates without witnesses.
  DecompositionCertificate bare{SemilinearMap::identity(F, 1), SemilinearMap::zero(F, 5, 5),
                                std::nullopt, {}, std::nullopt, false};
  const auto bt = format_certificate(bare, 2, 1, 5);
  CHECK(bt.find("witness A none") != std::string::npos);
  const auto bb = parse_certificate(bt);
  CHECK_FALSE(bb.certificate.witness_a.has_value());
  CHECK(bb.certificate.witness_basis.empty());
  CHECK_FALSE(bb.certificate.verified);

  std::string broken = text;
  broken.replace(broken.find("sigma 1"), 7, "sigma 2");
  CHECK_THROWS_AS(parse_certificate(broken), Error);
  CHECK_THROWS_AS(parse_certificate("certificate\nfield 2 1\n"), ParseError);
}

TEST_CASE("answer round trip") {
  const Field F = Field::make(3, 1);
  RoundtripParams rp;
  rp.seed = 1;
  const auto a = random_roundtrip(F, rp);
  const auto back = parse_answer(format_answer(a));
  CHECK(back.beta == a.beta);
  CHECK(back.psi == a.psi);
  CHECK(back.target_dimension == a.target_dimension);
  CHECK(format_semilinear(a.beta).rfind("semilinear 2 2 sigma 0\n", 0) == 0);
}

TEST_CASE("file helpers") {
  const auto dir = std::filesystem::temp_directory_path() / "segdecomp_test_io";
  std::filesystem::create_directories(dir);
  write_file(dir / "t.txt", kGrid);
  CHECK(read_file(dir / "t.txt") == kGrid);
  try {
    read_file(dir / "missing.txt");
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kIo);
  }
  std::filesystem::remove_all(dir);
}
