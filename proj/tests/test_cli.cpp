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
#include <sys/wait.h>
#include <unistd.h>

#include <cstdlib>
#include <filesystem>
#include <string>

#include "segdecomp/generate.hpp"
#include "segdecomp/io.hpp"

using namespace segdecomp;
namespace fs = std::filesystem;

namespace {

struct Scratch {
  fs::path dir;
  Scratch() {
    dir = fs::temp_directory_path() /
          ("segdecomp_cli_" + std::to_string(static_cast<unsigned long>(::getpid())));
    fs::create_directories(dir);
  }
  ~Scratch() { fs::remove_all(dir); }
  std::string operator/(const std::string& name) const { return (dir / name).string(); }
};

struct Run {
  int code;
  std::string out;
};

Run cli(const Scratch& s, const std::string& args) {
  const std::string out = s / "stdout.txt";
  const std::string cmd =
      std::string(SEGDECOMP_CLI) + " " + args + " > " + out + " 2>&1";
  const int status = std::system(cmd.c_str());
  Run r{WIFEXITED(status) ? WEXITSTATUS(status) : -1, ""};
  if (fs::exists(out)) r.out = read_file(out);
  return r;
}

}  // namespace

TEST_CASE("segre table through info, axioms, decompose, verify") {
  Scratch s;
  const auto table = s / "segre.txt";
  REQUIRE(cli(s, "generate segre --field 2 1 --shape 2 1 5 --out " + table).code == 0);
  CHECK(read_file(table).rfind("field 2 1\nshape 2 1 5\n", 0) == 0);

  const auto info = cli(s, "info " + table);
  CHECK(info.code == 0);
  CHECK(info.out.find("defined 21") != std::string::npos);
  CHECK(info.out.find("undefined 0") != std::string::npos);
  CHECK(info.out.find("radicals -1 -1") != std::string::npos);

  const auto ax = cli(s, "axioms " + table);
  CHECK(ax.code == 0);
  CHECK(ax.out.find("axioms ok") != std::string::npos);

  const auto cert = s / "segre.cert";
  CHECK(cli(s, "decompose " + table + " --out " + cert).code == 0);
  CHECK(read_file(cert).find("semilinear 2 2 sigma 0\n1 0\n0 1\n") != std::string::npos);
  CHECK(cli(s, "--parallel 3 verify " + table + " " + cert).code == 0);
}

TEST_CASE("round trips exit 0 and outputs are byte-identical") {
  Scratch s;
  for (int seed = 0; seed < 6; ++seed) {
    const std::string field = seed % 2 ? "3 1" : "2 1";
    const auto table = s / "rt.txt";
    REQUIRE(cli(s, "generate roundtrip --field " + field + " --seed " +
                       std::to_string(seed) + " --out " + table)
                .code == 0);
    CHECK(fs::exists(table + ".answer"));
    const auto first = read_file(table);
    REQUIRE(cli(s, "generate roundtrip --field " + field + " --seed " +
                       std::to_string(seed) + " --out " + table)
                .code == 0);
    CHECK(read_file(table) == first);
    CHECK(cli(s, "decompose " + table + " --out " + s / "rt.cert").code == 0);
    CHECK(cli(s, "verify " + table + " " + s / "rt.cert").code == 0);
  }
}

TEST_CASE("exit codes for failures") {
  Scratch s;
  const auto table = s / "t.txt";
  write_file(table, "field 2 1\nshape 2 1 5\n(0:0:1)x(0:1) -> nonsense\n");
  const auto bad = cli(s, "info " + table);
  CHECK(bad.code == 2);
  CHECK(bad.out.find("line 3") != std::string::npos);
  CHECK(cli(s, "axioms " + s / "missing.txt").code == 2);
  CHECK(cli(s, "frobnicate").code == 2);
  CHECK(cli(s, "generate segre --field 4 1 --out " + table).code == 2);

  // An L2 violation: two points of a row share an image.
  REQUIRE(cli(s, "generate segre --out " + table).code == 0);
  std::string text = read_file(table);
  const auto pos = text.find("(0:0:1)x(0:1) -> ") + 17;
  text.replace(pos, 13, "(0:0:0:0:1:0)");
  write_file(table, text);
  const auto ax = cli(s, "axioms " + table);
  CHECK(ax.code == 1);
  CHECK(ax.out.find("L2") != std::string::npos);

  // An all-UNDEF table fails the hypotheses; the fallback returns the zero
  // map.
  std::string empty = "field 2 1\nshape 2 1 5\n";
  for (const char* x : {"(0:0:1)", "(0:1:0)", "(0:1:1)", "(1:0:0)", "(1:0:1)", "(1:1:0)", "(1:1:1)"})
    for (const char* y : {"(0:1)", "(1:0)", "(1:1)"})
      empty += std::string(x) + "x" + y + " -> UNDEF\n";
  write_file(table, empty);
  CHECK(cli(s, "axioms " + table).code == 0);
  const auto info = cli(s, "info " + table);
  CHECK(info.out.find("radicals 2 1") != std::string::npos);
  CHECK(cli(s, "decompose " + table + " --out " + s / "e.cert").code == 0);

  // Rows collapse onto points; neither path applies.
  const Field F = Field::make(2, 1);
  Matrix flat(6, 6);
  for (std::size_t i : {1, 3, 5}) flat(i, i) = 1;
  write_file(table, format_table(compose_instance(SemilinearMap::identity(F, 1),
                                                  SemilinearMap(F, flat), 2, 1)));
  const auto hyp = cli(s, "decompose " + table + " --out " + s / "h.cert");
  CHECK(hyp.code == 1);
  CHECK(hyp.out.find("condition") != std::string::npos);
}

TEST_CASE("verify rejects mutated and mismatched certificates") {
  Scratch s;
  const auto table = s / "t.txt";
  REQUIRE(cli(s, "generate roundtrip --seed 7 --out " + table).code == 0);
  const auto cert = s / "c.txt";
  REQUIRE(cli(s, "decompose " + table + " --out " + cert).code == 0);

  std::string text = read_file(cert);
  const auto phi = text.find("phi\nsemilinear");
  const auto row = text.find('\n', text.find('\n', phi) + 1) + 1;
  text[row] = text[row] == '0' ? '1' : '0';
  write_file(s / "bent.txt", text);
  const auto v = cli(s, "verify " + table + " " + s / "bent.txt");
  CHECK(v.code == 1);
  CHECK(v.out.find("mismatch") != std::string::npos);

  const auto other = s / "other.txt";
  REQUIRE(cli(s, "generate segre --shape 2 2 8 --out " + other).code == 0);
  CHECK(cli(s, "verify " + other + " " + cert).code == 2);
}

TEST_CASE("degenerate and grid generators") {
  Scratch s;
  const auto table = s / "d.txt";
  REQUIRE(cli(s, "generate degenerate --seed 2 --out " + table).code == 0);
  CHECK(read_file(table).find("shape 2 2 ") != std::string::npos);
  CHECK(cli(s, "decompose " + table + " --out " + s / "d.cert").code == 0);
  CHECK(cli(s, "verify " + table + " " + s / "d.cert").code == 0);

  const auto grid = s / "g.txt";
  REQUIRE(cli(s, "generate grid --seed 5 --out " + grid).code == 0);
  CHECK(read_file(grid).rfind("field 2 1\nshape 1 1 3\n", 0) == 0);
  const auto info = cli(s, "info " + grid);
  CHECK(info.code == 0);
  CHECK(info.out.find("grid A (0:1)") != std::string::npos);
}
