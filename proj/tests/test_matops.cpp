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

#include <cmath>
#include <limits>
#include <random>

#include "bellcc/errors.hpp"
#include "bellcc/matops.hpp"
#include "catch2/catch_amalgamated.hpp"

using namespace bellcc;
using Catch::Matchers::WithinAbs;

namespace {

const Complex I(0.0, 1.0);

ComplexMatrix random_matrix(std::size_t rows, std::size_t cols,
                            std::mt19937_64& rng) {
  std::normal_distribution<double> n(0.0, 1.0);
  std::vector<Complex> e(rows * cols);
  for (auto& z : e) z = {n(rng), n(rng)};
  return ComplexMatrix(rows, cols, std::move(e));
}

ComplexMatrix pauli_x() { return ComplexMatrix::from_rows({{0, 1}, {1, 0}}); }
ComplexMatrix pauli_z() { return ComplexMatrix::from_rows({{1, 0}, {0, -1}}); }
ComplexMatrix ket0() { return ComplexMatrix::from_rows({{1, 0}, {0, 0}}); }
ComplexMatrix ket1() { return ComplexMatrix::from_rows({{0, 0}, {0, 1}}); }

}  // namespace

TEST_CASE("ComplexMatrix construction validates shape and finiteness",
          "[matops]") {
  CHECK_THROWS_AS(ComplexMatrix(2, 2, std::vector<Complex>(3)), ShapeError);
  std::vector<Complex> bad(4);
  bad[1] = std::numeric_limits<double>::quiet_NaN();
  CHECK_THROWS_AS(ComplexMatrix(2, 2, bad), InvalidOperatorError);
  bad[1] = Complex(0.0, std::numeric_limits<double>::infinity());
  CHECK_THROWS_AS(ComplexMatrix(2, 2, bad), InvalidOperatorError);
  CHECK_THROWS_AS(ComplexMatrix::from_rows({{1, 2}, {3}}), ShapeError);
}

TEST_CASE("matmul", "[matops]") {
  const auto id = ComplexMatrix::identity(2);
  CHECK(matmul(id, id) == id);
  CHECK(matmul(ket0(), ket1()) == ComplexMatrix(2, 2));
  CHECK(matmul(pauli_x(), pauli_x()) == id);
  CHECK_THROWS_AS(matmul(ComplexMatrix(2, 3), ComplexMatrix(2, 3)), ShapeError);
}

TEST_CASE("dagger", "[matops]") {
  const auto a = ComplexMatrix::from_rows({{0, I}, {0, 0}});
  CHECK(dagger(a) == ComplexMatrix::from_rows({{0, 0}, {-I, 0}}));

  const auto h = ComplexMatrix::from_rows({{2, 1.0 - I}, {1.0 + I, -3}});
  CHECK(dagger(h) == h);

  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    const auto p = random_matrix(3, 3, rng);
    const auto q = random_matrix(3, 3, rng);
    CHECK(max_abs_diff(dagger(matmul(p, q)), matmul(dagger(q), dagger(p))) <
          1e-12);
    CHECK(dagger(dagger(p)) == p);
  }
  CHECK(dagger(ComplexMatrix(2, 3)).rows() == 3);
}

TEST_CASE("tensor uses the left factor as the most significant index",
          "[matops]") {
  CHECK(tensor(ComplexMatrix::identity(2), ComplexMatrix::identity(2)) ==
        ComplexMatrix::identity(4));
  const std::vector<Complex> d0110 = {0, 1, 0, 0};
  CHECK(tensor(ket0(), ket1()) == ComplexMatrix::diagonal(d0110));
  const std::vector<Complex> zz = {1, -1, -1, 1};
  CHECK(tensor(pauli_z(), pauli_z()) == ComplexMatrix::diagonal(zz));
  const auto rect = tensor(ComplexMatrix(2, 3), ComplexMatrix(1, 2));
  CHECK(rect.rows() == 2);
  CHECK(rect.cols() == 6);
}

TEST_CASE("trace", "[matops]") {
  CHECK(trace(ComplexMatrix::identity(4)) == Complex(4.0));
  const std::vector<Complex> rank2 = {1, 0, 1};
  CHECK(trace(ComplexMatrix::diagonal(rank2)) == Complex(2.0));
  CHECK_THROWS_AS(trace(ComplexMatrix(2, 3)), ShapeError);

  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    const auto a = random_matrix(4, 4, rng);
    const auto b = random_matrix(4, 4, rng);
    CHECK(std::abs(trace(matmul(a, b)) - trace(matmul(b, a))) < 1e-12);
  }
}

TEST_CASE("is_projector", "[matops]") {
  CHECK(is_projector(ket0()));
  CHECK_FALSE(is_projector(0.5 * ComplexMatrix::identity(2)));
  CHECK_FALSE(is_projector(ComplexMatrix::from_rows({{1, 1}, {0, 0}})));
  CHECK_THROWS_AS(is_projector(ComplexMatrix(2, 3)), ShapeError);

  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> angle(-M_PI, M_PI);
  for (int trial = 0; trial < 50; ++trial) {
    const double t = angle(rng);
    const auto r = ComplexMatrix::from_rows(
        {{std::cos(t), -std::sin(t)}, {std::sin(t), std::cos(t)}});
    CHECK(is_projector(matmul(r, matmul(ket0(), dagger(r)))));
  }
}

TEST_CASE("commutes", "[matops]") {
  std::mt19937_64 rng(8);
  const auto id = ComplexMatrix::identity(2);
  for (int trial = 0; trial < 20; ++trial) {
    const auto a = random_matrix(2, 2, rng);
    const auto b = random_matrix(2, 2, rng);
    CHECK(commutes(tensor(a, id), tensor(id, b)));
    CHECK(commutes(a, matmul(a, a)));
  }
  CHECK_FALSE(commutes(pauli_x(), pauli_z()));
  CHECK_THROWS_AS(
      commutes(ComplexMatrix::identity(2), ComplexMatrix::identity(3)),
      ShapeError);
}

TEST_CASE("tensor is associative and multiplicative under trace",
          "[matops][property]") {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 25; ++trial) {
    const auto a = random_matrix(2, 2, rng);
    const auto b = random_matrix(3, 3, rng);
    const auto c = random_matrix(2, 2, rng);
    CHECK(max_abs_diff(tensor(tensor(a, b), c), tensor(a, tensor(b, c))) <
          1e-12);
    const Complex lhs = trace(tensor(a, b));
    const Complex rhs = trace(a) * trace(b);
    CHECK(std::abs(lhs - rhs) <= 1e-12 * std::max(1.0, std::abs(rhs)));
  }
}

TEST_CASE("g g^dagger is Hermitian positive semidefinite",
          "[matops][property]") {
  std::mt19937_64 rng(34);
  for (int trial = 0; trial < 25; ++trial) {
    const auto g = random_matrix(4, 4, rng);
    const auto m = matmul(g, dagger(g));
    CHECK(is_hermitian(m, 1e-12));
    for (int probe = 0; probe < 20; ++probe) {
      const auto v = random_matrix(4, 1, rng);
      const Complex q = matmul(dagger(v), matmul(m, v))(0, 0);
      CHECK(q.real() >= -1e-12);
    }
  }
}

TEST_CASE("vector helpers", "[matops]") {
  const Ket plus = {1.0 / std::sqrt(2.0), 1.0 / std::sqrt(2.0)};
  const auto p = projector_onto(plus);
  CHECK(is_projector(p));
  CHECK_THAT(p(0, 1).real(), WithinAbs(0.5, 1e-15));
  CHECK_THROWS_AS(projector_onto(Ket{0.0, 0.0}), InvalidOperatorError);
  CHECK_THROWS_AS(inner(Ket{1.0}, plus), ShapeError);
  const Ket uv = tensor(Ket{0.0, 1.0}, Ket{1.0, 0.0});
  CHECK(uv == Ket{0.0, 0.0, 1.0, 0.0});
  CHECK(matvec(pauli_x(), Ket{1.0, 0.0}) == Ket{0.0, 1.0});
}
