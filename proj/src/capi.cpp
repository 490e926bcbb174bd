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

#include "segdecomp/segdecomp.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <sstream>
#include <string>

#include "segdecomp/decomp.hpp"
#include "segdecomp/error.hpp"
#include "segdecomp/generate.hpp"
#include "segdecomp/io.hpp"
#include "segdecomp/literal.hpp"

using namespace segdecomp;

struct sd_table {
  ProductMapTable table;
};

struct sd_certificate {
  CertificateFile file;
};

namespace {

thread_local std::string g_last_error;

sd_status status_of(ErrorCode code) {
  switch (code) {
    case ErrorCode::kParseError: return SD_ERR_PARSE;
    case ErrorCode::kIo: return SD_ERR_IO;
    case ErrorCode::kShapeMismatch: return SD_ERR_SHAPE_MISMATCH;
    case ErrorCode::kHypothesisFailure: return SD_ERR_HYPOTHESIS;
    case ErrorCode::kNotSemilinear:
    case ErrorCode::kInconsistentAutomorphisms:
    case ErrorCode::kRowNotSemilinear:
    case ErrorCode::kNoUniquePreimage:
    case ErrorCode::kRadicalNotSubspace:
    case ErrorCode::kNotComplementary:
      return SD_ERR_CONSTRUCTION;
    default:
      return SD_ERR_INVALID_ARGUMENT;
  }
}

sd_status fail(sd_status status, std::string message) {
  g_last_error = std::move(message);
  return status;
}

// Runs fn, translating exceptions into a status and the last error message.
template <typename Fn>
sd_status guarded(Fn&& fn) {
  try {
    g_last_error.clear();
    return fn();
  } catch (const Error& e) {
    return fail(status_of(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(SD_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(SD_ERR_INTERNAL, e.what());
  }
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void set_string(char** out, const std::string& s) {
  if (out) *out = dup_string(s);
}

std::string points_text(const std::vector<ProjPoint>& pts) {
  std::string s;
  for (const auto& p : pts) s += (s.empty() ? "" : " ") + format_point(p);
  return s;
}

std::string info_text(const ProductMapTable& t) {
  const Field& F = t.field();
  std::ostringstream out;
  out << "field " << F.characteristic() << ' ' << F.degree() << '\n';
  out << "shape " << t.n() << ' ' << t.m() << ' ' << t.target_dimension() << '\n';
  out << "points " << t.size() << '\n';
  out << "defined " << t.defined_count() << '\n';
  out << "undefined " << t.size() - t.defined_count() << '\n';
  try {
    const Radicals r = radicals(t);
    out << "radicals " << r.first.dimension() << ' ' << r.second.dimension()
        << '\n';
  } catch (const Error& e) {
    out << "radicals error: " << e.what() << '\n';
  }
  if (const auto ci = check_condition_i(t))
    out << "condition-i plane " << points_text(ci->plane.basis_points())
        << " basis " << points_text(ci->basis) << '\n';
  else
    out << "condition-i Fail\n";
  if (const auto a = check_condition_ii(t))
    out << "condition-ii A " << format_point(*a) << '\n';
  else
    out << "condition-ii Fail\n";

  if (t.n() == 1 && t.m() == 1) {
    const auto& sp = t.space();
    std::optional<ProjPoint> a;
    for (const auto& x : sp.first_points()) {
      bool all = true;
      for (const auto& y : sp.second_points()) all = all && t.at(x, y).has_value();
      if (all) {
        a = x;
        break;
      }
    }
    if (a) {
      const auto g = classify_line_grid(t, *a);
      out << "grid A " << format_point(*a) << " kind " << to_string(g.kind)
          << " subcase " << to_string(g.subcase) << ' '
          << (g.conclusions_hold ? std::string("consistent")
                                 : "violation: " + g.violation)
          << '\n';
    } else {
      out << "grid no everywhere-defined row\n";
    }
  }
  return out.str();
}

std::string axiom_text(const AxiomReport& report) {
  std::string s;
  for (const auto& v : report.violations) {
    s += v.axiom == Axiom::kL1 ? "L1 " : "L2 ";
    s += v.first + " " + v.second + ": " + v.detail + "\n";
  }
  return s;
}

}  // namespace

extern "C" {

const char* sd_last_error(void) { return g_last_error.c_str(); }

const char* sd_status_name(sd_status status) {
  switch (status) {
    case SD_OK: return "ok";
    case SD_ERR_SEMANTIC: return "semantic failure";
    case SD_ERR_PARSE: return "parse error";
    case SD_ERR_INVALID_ARGUMENT: return "invalid argument";
    case SD_ERR_SHAPE_MISMATCH: return "shape mismatch";
    case SD_ERR_HYPOTHESIS: return "hypothesis failure";
    case SD_ERR_CONSTRUCTION: return "construction failure";
    case SD_ERR_IO: return "io error";
    case SD_ERR_INTERNAL: return "internal error";
  }
  return "unknown";
}

void sd_string_free(char* s) { std::free(s); }

sd_status sd_table_parse(const char* text, sd_table** out) {
  return guarded([&] {
    if (!text || !out) return fail(SD_ERR_INVALID_ARGUMENT, "null argument");
    *out = new sd_table{parse_table(text)};
    return SD_OK;
  });
}

sd_status sd_table_read(const char* path, sd_table** out) {
  return guarded([&] {
    if (!path || !out) return fail(SD_ERR_INVALID_ARGUMENT, "null argument");
    *out = new sd_table{parse_table(read_file(path))};
    return SD_OK;
  });
}

sd_status sd_table_write(const sd_table* t, const char* path) {
  return guarded([&] {
    if (!t || !path) return fail(SD_ERR_INVALID_ARGUMENT, "null argument");
    write_file(path, format_table(t->table));
    return SD_OK;
  });
}

sd_status sd_table_to_string(const sd_table* t, char** out) {
  return guarded([&] {
    if (!t || !out) return fail(SD_ERR_INVALID_ARGUMENT, "null argument");
    *out = dup_string(format_table(t->table));
    return SD_OK;
  });
}

void sd_table_free(sd_table* t) { delete t; }

sd_status sd_table_shape_of(const sd_table* t, sd_table_shape* out) {
  return guarded([&] {
    if (!t || !out) return fail(SD_ERR_INVALID_ARGUMENT, "null argument");
    const auto& tb = t->table;
    *out = {tb.field().characteristic(), tb.field().degree(), tb.n(), tb.m(),
            tb.target_dimension(), tb.size(), tb.defined_count()};
    return SD_OK;
  });
}

sd_status sd_table_info(const sd_table* t, char** out) {
  return guarded([&] {
    if (!t || !out) return fail(SD_ERR_INVALID_ARGUMENT, "null argument");
    *out = dup_string(info_text(t->table));
    return SD_OK;
  });
}

sd_status sd_table_check_axioms(const sd_table* t, unsigned workers,
                                char** report) {
  return guarded([&] {
    if (!t) return fail(SD_ERR_INVALID_ARGUMENT, "null argument");
    AxiomReport all = check_L1(t->table, workers);
    const AxiomReport l2 = check_L2(t->table, workers);
    all.violations.insert(all.violations.end(), l2.violations.begin(),
                          l2.violations.end());
    set_string(report, axiom_text(all));
    if (all.ok()) return SD_OK;
    return fail(SD_ERR_SEMANTIC,
                std::to_string(all.violations.size()) + " axiom violation(s)");
  });
}

sd_status sd_decompose(const sd_table* t, unsigned workers,
                       sd_certificate** out) {
  return guarded([&] {
    if (!t || !out) return fail(SD_ERR_INVALID_ARGUMENT, "null argument");
    const auto& tb = t->table;
    std::optional<DecompositionCertificate> cert;
    try {
      cert = decompose(tb, workers);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::kHypothesisFailure) throw;
      const std::string first = e.what();
      try {
        cert = decompose_degenerate(tb, workers);
      } catch (const Error& e2) {
        return fail(status_of(e2.code()),
                    first + "; degenerate fallback: " + e2.what());
      }
    }
    const bool verified = cert->verified;
    *out = new sd_certificate{
        {tb.field(), tb.n(), tb.m(), tb.target_dimension(), std::move(*cert)}};
    if (!verified)
      return fail(SD_ERR_SEMANTIC, "certificate does not verify");
    return SD_OK;
  });
}

sd_status sd_certificate_parse(const char* text, sd_certificate** out) {
  return guarded([&] {
    if (!text || !out) return fail(SD_ERR_INVALID_ARGUMENT, "null argument");
    *out = new sd_certificate{parse_certificate(text)};
    return SD_OK;
  });
}

sd_status sd_certificate_read(const char* path, sd_certificate** out) {
  return guarded([&] {
    if (!path || !out) return fail(SD_ERR_INVALID_ARGUMENT, "null argument");
    *out = new sd_certificate{parse_certificate(read_file(path))};
    return SD_OK;
  });
}

sd_status sd_certificate_write(const sd_certificate* c, const char* path) {
  return guarded([&] {
    if (!c || !path) return fail(SD_ERR_INVALID_ARGUMENT, "null argument");
    const auto& f = c->file;
    write_file(path, format_certificate(f.certificate, f.n, f.m,
                                        f.target_dimension));
    return SD_OK;
  });
}

sd_status sd_certificate_to_string(const sd_certificate* c, char** out) {
  return guarded([&] {
    if (!c || !out) return fail(SD_ERR_INVALID_ARGUMENT, "null argument");
    const auto& f = c->file;
    *out = dup_string(
        format_certificate(f.certificate, f.n, f.m, f.target_dimension));
    return SD_OK;
  });
}

int sd_certificate_verified_flag(const sd_certificate* c) {
  return c && c->file.certificate.verified ? 1 : 0;
}

void sd_certificate_free(sd_certificate* c) { delete c; }

sd_status sd_verify(const sd_table* t, const sd_certificate* c,
                    unsigned workers, size_t max_listed, char** report) {
  return guarded([&] {
    if (!t || !c) return fail(SD_ERR_INVALID_ARGUMENT, "null argument");
    const auto& tb = t->table;
    const auto& f = c->file;
    if (!(f.field == tb.field()) || f.n != tb.n() || f.m != tb.m() ||
        f.target_dimension != tb.target_dimension())
      return fail(SD_ERR_SHAPE_MISMATCH,
                  "certificate field or shape differs from the table");
    const auto r = verify_decomposition(tb, f.certificate.alpha_prime,
                                        f.certificate.phi, workers);
    std::string text;
    for (std::size_t i = 0; i < r.mismatches.size() && i < max_listed; ++i) {
      const auto& mm = r.mismatches[i];
      text += "mismatch " + format_product_point(mm.point) + ": phi gamma " +
              format_point(mm.lhs) + ", chi alpha " + format_point(mm.rhs) +
              "\n";
    }
    set_string(report, text);
    if (r.ok()) return SD_OK;
    return fail(SD_ERR_SEMANTIC, std::to_string(r.mismatches.size()) + " of " +
                                     std::to_string(r.checked) +
                                     " points mismatch");
  });
}

void sd_generate_params_init(sd_generate_params* params) {
  if (!params) return;
  *params = {SD_GEN_SEGRE, 2, 1, 2, 1, -1, 0, -1, -1, 0};
}

sd_status sd_generate(const sd_generate_params* params, char** table,
                      char** answer) {
  return guarded([&] {
    if (!params || !table) return fail(SD_ERR_INVALID_ARGUMENT, "null argument");
    if (answer) *answer = nullptr;
    const Field F = Field::make(params->p, params->k);
    switch (params->kind) {
      case SD_GEN_SEGRE: {
        const auto t = segre_table(F, params->n, params->m);
        if (params->target_dimension >= 0 &&
            params->target_dimension != t.target_dimension())
          return fail(SD_ERR_INVALID_ARGUMENT, "segre table has N = nm+n+m");
        *table = dup_string(format_table(t));
        return SD_OK;
      }
      case SD_GEN_ROUNDTRIP:
      case SD_GEN_DEGENERATE: {
        Answer a = [&] {
          if (params->kind == SD_GEN_ROUNDTRIP) {
            RoundtripParams rp;
            rp.n = params->n;
            rp.m = params->m;
            rp.target_dimension = params->target_dimension;
            rp.seed = params->seed;
            if (params->psi_sigma >= 0)
              rp.psi_sigma = FieldAutomorphism{static_cast<unsigned>(params->psi_sigma)};
            return random_roundtrip(F, rp);
          }
          DegenerateParams dp;
          dp.n = params->n;
          dp.m = params->m;
          dp.target_dimension = params->target_dimension;
          dp.rad1_dim = params->rad1_dim;
          dp.rad2_dim = params->rad2_dim;
          dp.seed = params->seed;
          return random_degenerate(F, dp);
        }();
        const auto t = compose_instance(a.beta, a.psi, a.n, a.m);
        *table = dup_string(format_table(t));
        if (answer) *answer = dup_string(format_answer(a));
        return SD_OK;
      }
      case SD_GEN_GRID: {
        if (params->n != 1 || params->m != 1 ||
            (params->target_dimension >= 0 && params->target_dimension != 3))
          return fail(SD_ERR_INVALID_ARGUMENT, "grid tables have shape 1 1 3");
        *table = dup_string(format_table(random_grid(F, params->seed)));
        return SD_OK;
      }
    }
    return fail(SD_ERR_INVALID_ARGUMENT, "unknown generator kind");
  });
}

}  // extern "C"
