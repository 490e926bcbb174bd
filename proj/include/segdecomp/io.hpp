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

/// @file io.hpp
/// Text formats. All are line oriented; blank lines and lines starting with
/// '#' are ignored on input.
///
/// Table:
///     field <p> <k>
///     shape <n> <m> <N>
///     (x0:..:xn)x(y0:..:ym) -> (z0:..:zN)      one line per product point,
///     (x0:..:xn)x(y0:..:ym) -> UNDEF            written in enumeration order
///
/// Semilinear map block:
///     semilinear <rows> <cols> sigma <j>
///     <cols space-separated elements>           rows times
///
/// Certificate:
///     certificate
///     field <p> <k>
///     shape <n> <m> <N>
///     alpha
///     <semilinear block>
///     phi
///     <semilinear block>
///     witness A <point>|none
///     witness B <points>|none
///     witness E <basis rows as points>|none
///     verified true|false
///
/// Answer (generator ground truth): `answer`, field, shape, then `beta` and
/// `psi` blocks.

#include <filesystem>
#include <string>
#include <string_view>

#include "segdecomp/decomp.hpp"

namespace segdecomp {

ProductMapTable parse_table(std::string_view text);
std::string format_table(const ProductMapTable& t);

std::string format_semilinear(const SemilinearMap& f);

struct CertificateFile {
  Field field;
  int n;
  int m;
  int target_dimension;
  DecompositionCertificate certificate;
};

CertificateFile parse_certificate(std::string_view text);
std::string format_certificate(const DecompositionCertificate& cert, int n,
                               int m, int target_dimension);

struct Answer {
  Field field;
  int n;
  int m;
  int target_dimension;
  SemilinearMap beta;  // beta' on PG(m)
  SemilinearMap psi;   // on PG(nm+n+m) -> PG(N)
};

Answer parse_answer(std::string_view text);
std::string format_answer(const Answer& a);

/// Throw kIo when the file cannot be read or written.
std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, std::string_view content);

}  // namespace segdecomp
