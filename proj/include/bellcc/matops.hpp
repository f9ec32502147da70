// Copyright 2026 The bellcc Authors
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

// Dense complex linear algebra for the small (dim <= 16) operators used
// throughout bellcc.
//
// Conventions:
//  - Entries are stored row-major.
//  - tensor(a, b) puts a on the most-significant index: the basis state
//    |i>_A |j>_B of a (dA x dB) system has flat index i * dB + j.
//  - Matrix comparisons use the max-abs-entry norm.

#ifndef BELLCC_MATOPS_HPP_
#define BELLCC_MATOPS_HPP_

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace bellcc {

using Complex = std::complex<double>;
using Ket = std::vector<Complex>;

// Default tolerance for structural predicates (projector, commutation,
// Hermiticity).
inline constexpr double kStructuralTol = 1e-10;

class ComplexMatrix {
 public:
  ComplexMatrix() = default;

  // rows x cols zero matrix.
  ComplexMatrix(std::size_t rows, std::size_t cols);

  // Throws ShapeError if entries.size() != rows * cols and
  // InvalidOperatorError if any entry is NaN or infinite.
  ComplexMatrix(std::size_t rows, std::size_t cols,
                std::vector<Complex> entries);

  // Row-wise literal, e.g. from_rows({{0, 1}, {1, 0}}).
  static ComplexMatrix from_rows(
      std::initializer_list<std::initializer_list<Complex>> rows);
  static ComplexMatrix identity(std::size_t n);
  static ComplexMatrix diagonal(std::span<const Complex> diag);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Complex& operator()(std::size_t r, std::size_t c) {
    return entries_[r * cols_ + c];
  }
  const Complex& operator()(std::size_t r, std::size_t c) const {
    return entries_[r * cols_ + c];
  }

  std::span<const Complex> entries() const { return entries_; }

  ComplexMatrix& operator+=(const ComplexMatrix& other);
  ComplexMatrix& operator-=(const ComplexMatrix& other);
  ComplexMatrix& operator*=(Complex scalar);

  friend bool operator==(const ComplexMatrix&, const ComplexMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Complex> entries_;
};

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b);
ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b);
ComplexMatrix operator*(Complex scalar, ComplexMatrix a);
ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);

// Matrix product. Throws ShapeError when a.cols() != b.rows().
ComplexMatrix matmul(const ComplexMatrix& a, const ComplexMatrix& b);

ComplexMatrix dagger(const ComplexMatrix& a);

// Kronecker product; a is the left (most-significant) factor.
ComplexMatrix tensor(const ComplexMatrix& a, const ComplexMatrix& b);

// Throws ShapeError on non-square input.
Complex trace(const ComplexMatrix& a);

// max_ij |a_ij|.
double max_abs(const ComplexMatrix& a);

// max_ij |a_ij - b_ij|. Throws ShapeError on mismatched shapes.
double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);

bool is_hermitian(const ComplexMatrix& a, double tol = kStructuralTol);

// ||a - a^dagger|| <= tol and ||a a - a|| <= tol. Throws ShapeError on
// non-square input.
bool is_projector(const ComplexMatrix& a, double tol = kStructuralTol);

// ||ab - ba|| <= tol. Throws ShapeError unless both are square with equal
// dimension.
bool commutes(const ComplexMatrix& a, const ComplexMatrix& b,
              double tol = kStructuralTol);

// <u|v>, antilinear in u.
Complex inner(std::span<const Complex> u, std::span<const Complex> v);

// |ket><bra|.
ComplexMatrix outer(std::span<const Complex> ket, std::span<const Complex> bra);

// |v><v| / <v|v>. Throws InvalidOperatorError for the zero vector.
ComplexMatrix projector_onto(std::span<const Complex> v);

// m |v>.
Ket matvec(const ComplexMatrix& m, std::span<const Complex> v);

// Kronecker product of kets, left factor most significant.
Ket tensor(std::span<const Complex> u, std::span<const Complex> v);

}  // namespace bellcc

#endif  // BELLCC_MATOPS_HPP_
