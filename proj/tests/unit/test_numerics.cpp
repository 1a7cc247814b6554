#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "qdho/numerics.hpp"

using namespace qdho;

TEST_CASE("kron of identities is identity") {
  const ComplexMatrix i2 = ComplexMatrix::Identity(2, 2);
  CHECK(kron(i2, i2) == ComplexMatrix::Identity(4, 4));
}

TEST_CASE("kron places the right factor in the blocks of the left") {
  ComplexMatrix raise = ComplexMatrix::Zero(2, 2);
  raise(0, 1) = 1.0;
  const ComplexMatrix k = kron(raise, ComplexMatrix::Identity(2, 2).eval());
  ComplexMatrix expected = ComplexMatrix::Zero(4, 4);
  expected(0, 2) = 1.0;
  expected(1, 3) = 1.0;
  CHECK(k == expected);
}

TEST_CASE("kron mixed-product property") {
  std::mt19937_64 rng(11);
  const auto a = oracle::random_matrix(2, 2, rng);
  const auto b = oracle::random_matrix(2, 2, rng);
  const auto c = oracle::random_matrix(2, 2, rng);
  const auto d = oracle::random_matrix(2, 2, rng);
  const ComplexMatrix lhs = kron(a, b) * kron(c, d);
  const ComplexMatrix rhs = kron((a * c).eval(), (b * d).eval());
  CHECK(frobenius_distance(lhs, rhs) <= 1e-13);
}

TEST_CASE("kron works for real scalars too") {
  const Matrix<double> a = Matrix<double>::Identity(2, 2);
  const Matrix<double> b = Matrix<double>::Constant(1, 2, 3.0);
  const Matrix<double> k = kron(a, b);
  CHECK(k.rows() == 2);
  CHECK(k.cols() == 4);
  CHECK(k(1, 3) == 3.0);
  CHECK(k(0, 3) == 0.0);
}

TEST_CASE("expm elementary cases") {
  CHECK(expm(ComplexMatrix::Zero(3, 3)) == ComplexMatrix::Identity(3, 3));

  ComplexMatrix diag = ComplexMatrix::Zero(2, 2);
  diag(0, 0) = Complex(0.3, 1.0);
  diag(1, 1) = -2.0;
  const ComplexMatrix e = expm(diag);
  CHECK(std::abs(e(0, 0) - std::exp(Complex(0.3, 1.0))) <= 1e-14);
  CHECK(std::abs(e(1, 1) - std::exp(-2.0)) <= 1e-15);
  CHECK(std::abs(e(0, 1)) == 0.0);

  ComplexMatrix nil = ComplexMatrix::Zero(2, 2);
  nil(0, 1) = 1.0;
  ComplexMatrix expected = ComplexMatrix::Identity(2, 2);
  expected(0, 1) = 1.0;
  CHECK(frobenius_distance(expm(nil), expected) <= 1e-15);
}

TEST_CASE("expm agrees with an RK4 integration of X' = M X") {
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 3; ++trial) {
    const ComplexMatrix m = oracle::random_matrix(4, 4, rng);
    const ComplexMatrix ref = oracle::rk4([&](const ComplexMatrix& x) -> ComplexMatrix { return m * x; },
                                          ComplexMatrix::Identity(4, 4), 1.0, 4000);
    CHECK(frobenius_distance(expm(m), ref) <= 1e-10);
  }
}

TEST_CASE("expm rejects non-square and non-finite input") {
  CHECK_THROWS_AS(expm(ComplexMatrix::Zero(2, 3)), ShapeError);
  ComplexMatrix bad = ComplexMatrix::Zero(2, 2);
  bad(0, 0) = std::numeric_limits<double>::quiet_NaN();
  CHECK_THROWS_AS(expm(bad), ShapeError);
}

TEST_CASE("nilpotent_exp matches expm on strictly upper triangular input") {
  std::mt19937_64 rng(5);
  ComplexMatrix m = oracle::random_matrix(6, 6, rng).triangularView<Eigen::StrictlyUpper>();
  const Complex c(0.4, -0.2);
  const ComplexMatrix scaled = c * m;
  CHECK(frobenius_distance(nilpotent_exp(m, c, 6), expm(scaled)) <= 1e-12);

  const ComplexVector v = oracle::random_matrix(6, 1, rng);
  const ComplexVector direct = expm(scaled) * v;
  CHECK((nilpotent_exp_apply(m, c, v, 6) - direct).norm() <= 1e-12);
}

TEST_CASE("hermitian_eigenvalues closed forms") {
  const RealVector ones = hermitian_eigenvalues(ComplexMatrix::Identity(3, 3));
  CHECK(ones.size() == 3);
  for (int i = 0; i < 3; ++i) {
    CHECK(ones(i) == doctest::Approx(1.0).epsilon(1e-15));
  }

  ComplexMatrix x = ComplexMatrix::Zero(2, 2);
  x(0, 1) = x(1, 0) = 1.0;
  const RealVector ev = hermitian_eigenvalues(x);
  CHECK(ev(0) == doctest::Approx(-1.0).epsilon(1e-15));
  CHECK(ev(1) == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("hermitian eigenvalues reproduce trace and determinant") {
  std::mt19937_64 rng(6);
  for (int trial = 0; trial < 5; ++trial) {
    const ComplexMatrix h = oracle::random_hermitian(3, rng);
    const RealVector ev = hermitian_eigenvalues(h);
    CHECK(ev(0) <= ev(1));
    CHECK(ev(1) <= ev(2));
    const double tr = h.trace().real();
    const double det = oracle::determinant(h).real();
    CHECK(std::abs(ev.sum() - tr) <= 1e-10 * std::max(1.0, std::abs(tr)));
    CHECK(std::abs(ev.prod() - det) <= 1e-10 * std::max(1.0, std::abs(det)));
  }
}

TEST_CASE("hermitian_eigensystem vectors diagonalize the Hermitized input") {
  std::mt19937_64 rng(7);
  const ComplexMatrix m = oracle::random_matrix(5, 5, rng);
  const auto sys = hermitian_eigensystem(m);
  const ComplexMatrix h = hermitize(m);
  const ComplexMatrix recon = sys.vectors * sys.values.cast<Complex>().asDiagonal() * sys.vectors.adjoint();
  CHECK(frobenius_distance(recon, h) <= 1e-12);
}

TEST_CASE("small helpers") {
  std::mt19937_64 rng(8);
  const auto a = oracle::random_matrix(3, 3, rng);
  CHECK(frobenius_distance(a, a) == 0.0);
  CHECK(trace(ComplexMatrix::Identity(5, 5)) == Complex(5.0));

  ComplexMatrix x(1, 1), y(1, 1);
  x(0, 0) = Complex(2.0, 1.0);
  y(0, 0) = Complex(0.0, 3.0);
  CHECK(matmul(x, y)(0, 0) == Complex(2.0, 1.0) * Complex(0.0, 3.0));

  CHECK_THROWS_AS(matmul(ComplexMatrix::Zero(2, 3), ComplexMatrix::Zero(2, 3)), ShapeError);
  CHECK_THROWS_AS(frobenius_distance(ComplexMatrix::Zero(2, 2), ComplexMatrix::Zero(3, 3)),
                  ShapeError);
  CHECK_THROWS_AS(trace(ComplexMatrix::Zero(2, 3)), ShapeError);

  const ComplexMatrix h = hermitize(a);
  CHECK(frobenius_distance(h, h.adjoint().eval()) == 0.0);
  CHECK(Tolerance{}.scaled(10.0) == doctest::Approx(1e-12 + 1e-9));
}
