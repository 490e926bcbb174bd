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

// Dense exact linear algebra over GF(p^k). Vectors are rows; a matrix M
// acts on a row vector v as v * M.

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "segdecomp/gf.hpp"

namespace segdecomp {

using Vec = std::vector<Elem>;

class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols, 0) {}

  static Matrix identity(std::size_t n);
  static Matrix from_rows(std::size_t cols, std::span<const Vec> rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Elem& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  Elem operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }

  std::span<Elem> row(std::size_t r) {
    return {data_.data() + r * cols_, cols_};
  }
  std::span<const Elem> row(std::size_t r) const {
    return {data_.data() + r * cols_, cols_};
  }

  void append_row(std::span<const Elem> v);
  bool is_zero() const;
  const std::vector<Elem>& data() const { return data_; }

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Elem> data_;
};

/// In-place reduced row echelon form with zero rows dropped. Returns the
/// pivot column of each surviving row.
std::vector<std::size_t> rref(const Field& F, Matrix& m);

std::size_t rank(const Field& F, Matrix m);

Vec row_times(const Field& F, std::span<const Elem> v, const Matrix& m);
Matrix multiply(const Field& F, const Matrix& a, const Matrix& b);
Matrix transpose(const Matrix& m);

/// Basis (in rref) of { u : u * m = 0 }.
Matrix left_kernel(const Field& F, const Matrix& m);

std::optional<Matrix> inverse(const Field& F, const Matrix& m);

/// Some x with x * a = b, if one exists.
std::optional<Vec> solve_left(const Field& F, const Matrix& a,
                              std::span<const Elem> b);

Vec twist(const Field& F, std::span<const Elem> v, FieldAutomorphism sigma);
Matrix twist(const Field& F, const Matrix& m, FieldAutomorphism sigma);

Vec scale(const Field& F, std::span<const Elem> v, Elem s);
bool is_zero(std::span<const Elem> v);

}  // namespace segdecomp
