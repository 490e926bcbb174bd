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

// segdecomp: command-line front end.
//
// Exit codes: 0 pass, 1 semantic failure (axioms violated, hypotheses fail,
// certificate does not verify), 2 input error.

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <string>
#include <thread>
#include <vector>

#include "segdecomp/segdecomp.h"

namespace {

constexpr std::size_t kListedMismatches = 10;

int exit_code(sd_status s) {
  switch (s) {
    case SD_OK: return 0;
    case SD_ERR_SEMANTIC:
    case SD_ERR_HYPOTHESIS:
    case SD_ERR_CONSTRUCTION:
    case SD_ERR_INTERNAL:
      return 1;
    default:
      return 2;
  }
}

int report(sd_status s, const std::string& context) {
  if (s != SD_OK)
    std::cerr << context << ": " << sd_status_name(s) << ": " << sd_last_error()
              << '\n';
  return exit_code(s);
}

struct StringDeleter {
  void operator()(char* s) const { sd_string_free(s); }
};
using OwnedString = std::unique_ptr<char, StringDeleter>;

struct TableDeleter {
  void operator()(sd_table* t) const { sd_table_free(t); }
};
struct CertDeleter {
  void operator()(sd_certificate* c) const { sd_certificate_free(c); }
};
using TablePtr = std::unique_ptr<sd_table, TableDeleter>;
using CertPtr = std::unique_ptr<sd_certificate, CertDeleter>;

unsigned resolve_workers(unsigned requested) {
  if (requested != 0) return requested;
  return std::max(1u, std::thread::hardware_concurrency());
}

// Writes to `path`, or to standard output when it is empty.
bool emit(const std::string& path, const char* text) {
  if (path.empty()) {
    std::cout << text;
    return static_cast<bool>(std::cout);
  }
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  out << text;
  return static_cast<bool>(out);
}

int load_table(const std::string& path, TablePtr& out) {
  sd_table* t = nullptr;
  const sd_status s = sd_table_read(path.c_str(), &t);
  if (s != SD_OK) return report(s, path);
  out.reset(t);
  return 0;
}

int cmd_info(const std::string& path) {
  TablePtr t;
  if (int rc = load_table(path, t)) return rc;
  char* text = nullptr;
  const sd_status s = sd_table_info(t.get(), &text);
  if (s != SD_OK) return report(s, "info");
  OwnedString owned(text);
  std::cout << text;
  return 0;
}

int cmd_axioms(const std::string& path, unsigned workers) {
  TablePtr t;
  if (int rc = load_table(path, t)) return rc;
  char* text = nullptr;
  const sd_status s = sd_table_check_axioms(t.get(), workers, &text);
  OwnedString owned(text);
  if (text) std::cout << text;
  if (s == SD_OK) std::cout << "axioms ok\n";
  return report(s, "axioms");
}

int cmd_decompose(const std::string& path, const std::string& out,
                  unsigned workers) {
  TablePtr t;
  if (int rc = load_table(path, t)) return rc;
  sd_certificate* c = nullptr;
  const sd_status s = sd_decompose(t.get(), workers, &c);
  CertPtr cert(c);
  if (cert) {
    char* text = nullptr;
    const sd_status w = sd_certificate_to_string(cert.get(), &text);
    if (w != SD_OK) return report(w, "decompose");
    OwnedString owned(text);
    if (!emit(out, text)) {
      std::cerr << "decompose: cannot write " << out << '\n';
      return 2;
    }
  }
  return report(s, "decompose");
}

int cmd_verify(const std::string& table_path, const std::string& cert_path,
               unsigned workers) {
  TablePtr t;
  if (int rc = load_table(table_path, t)) return rc;
  sd_certificate* c = nullptr;
  sd_status s = sd_certificate_read(cert_path.c_str(), &c);
  if (s != SD_OK) return report(s, cert_path);
  CertPtr cert(c);
  char* text = nullptr;
  s = sd_verify(t.get(), cert.get(), workers, kListedMismatches, &text);
  OwnedString owned(text);
  if (text) std::cout << text;
  if (s == SD_OK) std::cout << "verified\n";
  return report(s, "verify");
}

struct GenerateOptions {
  std::string kind;
  std::vector<unsigned> field{2, 1};
  std::vector<int> shape;
  std::uint64_t seed = 0;
  std::string out;
  std::string answer;
  int sigma = -1;
  int rad1 = -1;
  int rad2 = 0;
};

int cmd_generate(const GenerateOptions& o) {
  sd_generate_params p;
  sd_generate_params_init(&p);
  if (o.kind == "segre") {
    p.kind = SD_GEN_SEGRE;
  } else if (o.kind == "roundtrip") {
    p.kind = SD_GEN_ROUNDTRIP;
  } else if (o.kind == "degenerate") {
    p.kind = SD_GEN_DEGENERATE;
    p.m = 2;
  } else if (o.kind == "grid") {
    p.kind = SD_GEN_GRID;
    p.n = p.m = 1;
  } else {
    std::cerr << "generate: unknown kind '" << o.kind << "'\n";
    return 2;
  }
  p.p = o.field[0];
  p.k = o.field[1];
  if (!o.shape.empty()) {
    p.n = o.shape[0];
    p.m = o.shape[1];
    p.target_dimension = o.shape[2];
  }
  p.seed = o.seed;
  p.psi_sigma = o.sigma;
  p.rad1_dim = o.rad1;
  p.rad2_dim = o.rad2;

  char* table = nullptr;
  char* answer = nullptr;
  const sd_status s = sd_generate(&p, &table, &answer);
  OwnedString owned_table(table);
  OwnedString owned_answer(answer);
  if (s != SD_OK) return report(s, "generate");
  if (!emit(o.out, table)) {
    std::cerr << "generate: cannot write " << o.out << '\n';
    return 2;
  }
  std::string answer_path = o.answer;
  if (answer_path.empty() && !o.out.empty()) answer_path = o.out + ".answer";
  if (answer && !answer_path.empty() && !emit(answer_path, answer)) {
    std::cerr << "generate: cannot write " << answer_path << '\n';
    return 2;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Decompose linear mappings of product spaces through the Segre "
               "embedding"};
  app.require_subcommand(1);
  app.fallthrough();
  unsigned parallel = 1;
  app.add_option("--parallel", parallel, "worker threads (0: all cores)")
      ->capture_default_str();

  std::string table_path, cert_path, out_path;

  auto* info = app.add_subcommand("info", "summarize a table");
  info->add_option("table", table_path)->required();

  auto* axioms = app.add_subcommand("axioms", "check (L1) and (L2)");
  axioms->add_option("table", table_path)->required();

  auto* dec = app.add_subcommand("decompose", "decompose a table");
  dec->add_option("table", table_path)->required();
  dec->add_option("--out", out_path, "certificate path (default: stdout)");

  auto* ver = app.add_subcommand("verify", "re-verify a certificate");
  ver->add_option("table", table_path)->required();
  ver->add_option("certificate", cert_path)->required();

  GenerateOptions gen;
  auto* g = app.add_subcommand("generate", "generate a test table");
  g->add_option("kind", gen.kind, "segre | roundtrip | degenerate | grid")
      ->required();
  g->add_option("--field", gen.field, "p k")->expected(2);
  g->add_option("--shape", gen.shape, "n m N (N = -1 for the default)")
      ->expected(3);
  g->add_option("--seed", gen.seed);
  g->add_option("--out", gen.out, "table path (default: stdout)");
  g->add_option("--answer", gen.answer,
                "answer path (default: <out>.answer when --out is given)");
  g->add_option("--sigma", gen.sigma,
                "roundtrip: Frobenius exponent of psi (-1: random)");
  g->add_option("--rad1", gen.rad1, "degenerate: dimension of the first radical");
  g->add_option("--rad2", gen.rad2,
                "degenerate: dimension of the second radical");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }
  const unsigned workers = resolve_workers(parallel);

  if (*info) return cmd_info(table_path);
  if (*axioms) return cmd_axioms(table_path, workers);
  if (*dec) return cmd_decompose(table_path, out_path, workers);
  if (*ver) return cmd_verify(table_path, cert_path, workers);
  if (*g) return cmd_generate(gen);
  return 2;
}
