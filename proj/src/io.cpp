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

#include "segdecomp/io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

#include "segdecomp/error.hpp"
#include "segdecomp/literal.hpp"

namespace segdecomp {

namespace {

// Largest table accepted on input.
constexpr std::uint64_t kMaxTableSize = 1u << 22;

std::string_view trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    std::size_t j = i;
    while (j < s.size() && s[j] != ' ' && s[j] != '\t') ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

class Lines {
 public:
  explicit Lines(std::string_view text) {
    std::size_t no = 0;
    while (!text.empty()) {
      const auto nl = text.find('\n');
      const auto line = trim(text.substr(0, nl));
      ++no;
      if (!line.empty() && line.front() != '#') lines_.push_back({no, line});
      if (nl == std::string_view::npos) break;
      text = text.substr(nl + 1);
    }
  }

  bool done() const { return pos_ == lines_.size(); }
  std::size_t line_no() const {
    return done() ? (lines_.empty() ? 1 : lines_.back().first + 1)
                  : lines_[pos_].first;
  }
  std::string_view peek() const { return done() ? "" : lines_[pos_].second; }
  std::string_view next(const char* what) {
    if (done()) throw ParseError(line_no(), std::string("expected ") + what);
    return lines_[pos_++].second;
  }

 private:
  std::vector<std::pair<std::size_t, std::string_view>> lines_;
  std::size_t pos_ = 0;
};

template <typename T>
T parse_number(std::string_view tok, std::size_t line, const char* what) {
  T value{};
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (tok.empty() || ec != std::errc() || ptr != tok.data() + tok.size())
    throw ParseError(line, std::string("bad ") + what + " '" + std::string(tok) +
                               "'");
  return value;
}

// Rethrows literal errors with the current line number attached.
template <typename Fn>
auto at_line(std::size_t line, Fn&& fn) -> decltype(fn()) {
  try {
    return fn();
  } catch (const ParseError& e) {
    if (e.line() != 0) throw;
    throw ParseError(line, e.what());
  } catch (const Error& e) {
    throw ParseError(line, e.what());
  }
}

std::vector<std::string_view> keyword_line(Lines& in, std::string_view key,
                                           std::size_t args) {
  const std::size_t no = in.line_no();
  const auto toks = split_ws(in.next(std::string(key).c_str()));
  if (toks.empty() || toks[0] != key || toks.size() != args + 1)
    throw ParseError(no, "expected '" + std::string(key) + "' with " +
                             std::to_string(args) + " argument(s)");
  return toks;
}

Field read_field(Lines& in) {
  const std::size_t no = in.line_no();
  const auto toks = keyword_line(in, "field", 2);
  const auto p = parse_number<unsigned>(toks[1], no, "characteristic");
  const auto k = parse_number<unsigned>(toks[2], no, "degree");
  return at_line(no, [&] { return Field::make(p, k); });
}

struct Shape {
  int n, m, N;
};

Shape read_shape(Lines& in) {
  const std::size_t no = in.line_no();
  const auto toks = keyword_line(in, "shape", 3);
  Shape s{parse_number<int>(toks[1], no, "n"), parse_number<int>(toks[2], no, "m"),
          parse_number<int>(toks[3], no, "N")};
  if (s.n < 1 || s.m < 1 || s.N < 0)
    throw ParseError(no, "shape needs n >= 1, m >= 1, N >= 0");
  return s;
}

void check_size(const Field& F, const Shape& s, std::size_t line) {
  std::uint64_t size = 1;
  for (int d : {s.n, s.m}) {
    std::uint64_t c = 0, pw = 1;
    for (int i = 0; i <= d; ++i) {
      c += pw;
      pw *= F.order();
      if (c > kMaxTableSize) throw ParseError(line, "table too large");
    }
    size *= c;
    if (size > kMaxTableSize) throw ParseError(line, "table too large");
  }
  std::uint64_t pw = 1;
  for (int i = 0; i <= s.N; ++i) {
    pw *= F.order();
    if (pw > (std::uint64_t{1} << 40)) throw ParseError(line, "N too large");
  }
}

SemilinearMap read_semilinear(Lines& in, const Field& F, std::size_t rows,
                              std::size_t cols) {
  const std::size_t no = in.line_no();
  const auto toks = keyword_line(in, "semilinear", 4);
  const auto r = parse_number<std::size_t>(toks[1], no, "row count");
  const auto c = parse_number<std::size_t>(toks[2], no, "column count");
  if (toks[3] != "sigma") throw ParseError(no, "expected 'sigma'");
  const auto j = parse_number<unsigned>(toks[4], no, "automorphism exponent");
  if (r != rows || c != cols)
    throw ParseError(no, "expected a " + std::to_string(rows) + " x " +
                             std::to_string(cols) + " matrix");
  if (j >= F.degree()) throw ParseError(no, "automorphism exponent out of range");
  Matrix m(r, c);
  for (std::size_t i = 0; i < r; ++i) {
    const std::size_t ln = in.line_no();
    const auto entries = split_ws(in.next("matrix row"));
    if (entries.size() != c)
      throw ParseError(ln, "expected " + std::to_string(c) + " entries");
    for (std::size_t k = 0; k < c; ++k) {
      const auto e = parse_number<Elem>(entries[k], ln, "field element");
      if (!F.contains(e)) throw ParseError(ln, "field element out of range");
      m(i, k) = e;
    }
  }
  return SemilinearMap(F, std::move(m), FieldAutomorphism{j});
}

void expect_end(const Lines& in) {
  if (!in.done())
    throw ParseError(in.line_no(), "unexpected '" + std::string(in.peek()) + "'");
}

void write_header(std::ostringstream& out, const Field& F, int n, int m, int N) {
  out << "field " << F.characteristic() << ' ' << F.degree() << '\n';
  out << "shape " << n << ' ' << m << ' ' << N << '\n';
}

}  // namespace

// ---------------------------------------------------------------------------

ProductMapTable parse_table(std::string_view text) {
  Lines in(text);
  const Field F = read_field(in);
  const std::size_t shape_line = in.line_no();
  const Shape s = read_shape(in);
  check_size(F, s, shape_line);

  ProductMapTable t(F, s.n, s.m, s.N);
  std::vector<char> seen(t.size(), 0);
  std::size_t count = 0;
  while (!in.done()) {
    const std::size_t no = in.line_no();
    const auto line = in.next("entry");
    const auto arrow = line.find("->");
    if (arrow == std::string_view::npos) throw ParseError(no, "expected '->'");
    const auto lhs = trim(line.substr(0, arrow));
    const auto rhs = trim(line.substr(arrow + 2));
    const ProductPoint p =
        at_line(no, [&] { return parse_product_point(F, lhs, s.n, s.m); });
    MaybePoint img;
    if (rhs != "UNDEF") img = at_line(no, [&] { return parse_point(F, rhs, s.N); });
    const std::size_t idx = t.space().index(p);
    if (seen[idx])
      throw ParseError(no, "duplicate entry for " + format_product_point(p));
    seen[idx] = 1;
    ++count;
    t.set(idx, std::move(img));
  }
  if (count != t.size()) {
    for (std::size_t i = 0; i < t.size(); ++i)
      if (!seen[i])
        throw ParseError(in.line_no(), "missing entry for " +
                                           format_product_point(t.space().point(i)));
  }
  return t;
}

std::string format_table(const ProductMapTable& t) {
  std::ostringstream out;
  write_header(out, t.field(), t.n(), t.m(), t.target_dimension());
  for (std::size_t i = 0; i < t.size(); ++i)
    out << format_product_point(t.space().point(i)) << " -> "
        << format_point(t.at(i)) << '\n';
  return out.str();
}

std::string format_semilinear(const SemilinearMap& f) {
  std::ostringstream out;
  const Matrix& m = f.matrix();
  out << "semilinear " << m.rows() << ' ' << m.cols() << " sigma "
      << f.automorphism().exponent << '\n';
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) out << (c ? " " : "") << m(r, c);
    out << '\n';
  }
  return out.str();
}

CertificateFile parse_certificate(std::string_view text) {
  Lines in(text);
  keyword_line(in, "certificate", 0);
  const Field F = read_field(in);
  const Shape s = read_shape(in);
  const std::size_t pbar = static_cast<std::size_t>((s.n + 1) * (s.m + 1));

  keyword_line(in, "alpha", 0);
  SemilinearMap alpha = read_semilinear(in, F, s.m + 1, s.m + 1);
  keyword_line(in, "phi", 0);
  SemilinearMap phi = read_semilinear(in, F, pbar, s.N + 1);

  DecompositionCertificate cert{std::move(alpha), std::move(phi), std::nullopt,
                                {}, std::nullopt, false};
  auto witness = [&](std::string_view tag, int dim) {
    const std::size_t no = in.line_no();
    const auto line = in.next("witness");
    const auto toks = split_ws(line);
    if (toks.size() < 3 || toks[0] != "witness" || toks[1] != tag)
      throw ParseError(no, "expected 'witness " + std::string(tag) + "'");
    std::vector<ProjPoint> pts;
    if (toks.size() == 3 && toks[2] == "none") return pts;
    for (std::size_t i = 2; i < toks.size(); ++i)
      pts.push_back(at_line(no, [&] { return parse_point(F, toks[i], dim); }));
    return pts;
  };
  {
    const std::size_t no = in.line_no();
    auto a = witness("A", s.n);
    if (a.size() > 1) throw ParseError(no, "witness A is a single point");
    if (!a.empty()) cert.witness_a = a.front();
  }
  cert.witness_basis = witness("B", s.m);
  {
    auto e = witness("E", s.n);
    if (!e.empty()) cert.witness_plane = Subspace::span(F, s.n, e);
  }
  {
    const std::size_t no = in.line_no();
    const auto toks = keyword_line(in, "verified", 1);
    if (toks[1] == "true")
      cert.verified = true;
    else if (toks[1] != "false")
      throw ParseError(no, "verified must be true or false");
  }
  expect_end(in);
  return {F, s.n, s.m, s.N, std::move(cert)};
}

std::string format_certificate(const DecompositionCertificate& cert, int n,
                               int m, int target_dimension) {
  std::ostringstream out;
  out << "certificate\n";
  write_header(out, cert.phi.field(), n, m, target_dimension);
  out << "alpha\n" << format_semilinear(cert.alpha_prime);
  out << "phi\n" << format_semilinear(cert.phi);
  out << "witness A " << (cert.witness_a ? format_point(*cert.witness_a) : "none")
      << '\n';
  out << "witness B";
  if (cert.witness_basis.empty()) out << " none";
  for (const auto& b : cert.witness_basis) out << ' ' << format_point(b);
  out << "\nwitness E";
  if (!cert.witness_plane) {
    out << " none";
  } else {
    for (const auto& b : cert.witness_plane->basis_points())
      out << ' ' << format_point(b);
  }
  out << "\nverified " << (cert.verified ? "true" : "false") << '\n';
  return out.str();
}

Answer parse_answer(std::string_view text) {
  Lines in(text);
  keyword_line(in, "answer", 0);
  const Field F = read_field(in);
  const Shape s = read_shape(in);
  keyword_line(in, "beta", 0);
  SemilinearMap beta = read_semilinear(in, F, s.m + 1, s.m + 1);
  keyword_line(in, "psi", 0);
  SemilinearMap psi = read_semilinear(
      in, F, static_cast<std::size_t>((s.n + 1) * (s.m + 1)), s.N + 1);
  expect_end(in);
  return {F, s.n, s.m, s.N, std::move(beta), std::move(psi)};
}

std::string format_answer(const Answer& a) {
  std::ostringstream out;
  out << "answer\n";
  write_header(out, a.field, a.n, a.m, a.target_dimension);
  out << "beta\n" << format_semilinear(a.beta);
  out << "psi\n" << format_semilinear(a.psi);
  return out.str();
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIo, "cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  if (in.bad()) throw Error(ErrorCode::kIo, "cannot read " + path.string());
  return ss.str();
}

void write_file(const std::filesystem::path& path, std::string_view content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorCode::kIo, "cannot write " + path.string());
  out << content;
  out.flush();
  if (!out) throw Error(ErrorCode::kIo, "cannot write " + path.string());
}

}  // namespace segdecomp
