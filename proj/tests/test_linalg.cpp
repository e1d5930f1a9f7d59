#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <random>

#include "doctest.h"
#include "nlg/linalg.hpp"

using namespace nlg;

namespace {

std::mt19937_64 rng(12345);

cplx random_amp() {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  return cplx(u(rng), u(rng));
}

ComplexMatrix random_hermitian(int n) {
  ComplexMatrix m(n, n);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (int r = 0; r < n; ++r) {
    m(r, r) = u(rng);
    for (int c = r + 1; c < n; ++c) {
      m(r, c) = random_amp();
      m(c, r) = std::conj(m(r, c));
    }
  }
  return m;
}

ComplexMatrix random_matrix(int n) {
  ComplexMatrix m(n, n);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) m(r, c) = random_amp();
  return m;
}

StateVector random_state(int dim) {
  StateVector s;
  s.amps.resize(dim);
  double norm = 0.0;
  for (cplx& a : s.amps) {
    a = random_amp();
    norm += std::norm(a);
  }
  norm = std::sqrt(norm);
  for (cplx& a : s.amps) a /= norm;
  return s;
}

double eig_reconstruction_residual(const ComplexMatrix& h) {
  EigenSystem es = eig_hermitian(h);
  ComplexMatrix rec(h.rows(), h.rows());
  for (int k = 0; k < h.rows(); ++k)
    rec = rec + ComplexMatrix::outer(es.vectors.column(k)) * cplx(es.values[k], 0.0);
  return (rec - h).max_abs();
}

double schmidt_reconstruction_residual(const StateVector& s, int dA, int dB) {
  SchmidtForm sf = schmidt(s, dA, dB);
  std::vector<cplx> rec(s.amps.size());
  for (size_t k = 0; k < sf.coefficients.size(); ++k) {
    const std::vector<cplx> term = kron_vec(sf.basisA[k], sf.basisB[k]);
    for (size_t i = 0; i < rec.size(); ++i) rec[i] += sf.coefficients[k] * term[i];
  }
  double worst = 0.0;
  for (size_t i = 0; i < rec.size(); ++i) worst = std::max(worst, std::abs(rec[i] - s.amps[i]));
  return worst;
}

}  // namespace

TEST_CASE("kron of identities is identity") {
  const ComplexMatrix i2 = ComplexMatrix::identity(2);
  const ComplexMatrix i4 = kron(i2, i2);
  CHECK((i4 - ComplexMatrix::identity(4)).max_abs() == doctest::Approx(0.0));
}

TEST_CASE("kron of basis states") {
  const std::vector<cplx> e0 = {1.0, 0.0};
  const std::vector<cplx> e1 = {0.0, 1.0};
  const std::vector<cplx> v = kron_vec(e0, e1);
  CHECK(v[0] == cplx(0.0));
  CHECK(v[1] == cplx(1.0));
  CHECK(v[2] == cplx(0.0));
  CHECK(v[3] == cplx(0.0));
}

TEST_CASE("kron mixed-product identity on random matrices") {
  for (int trial = 0; trial < 50; ++trial) {
    const ComplexMatrix a = random_matrix(2);
    const ComplexMatrix b = random_matrix(2);
    const std::vector<cplx> u = {random_amp(), random_amp()};
    const std::vector<cplx> v = {random_amp(), random_amp()};
    const std::vector<cplx> lhs = kron(a, b).apply(kron_vec(u, v));
    const std::vector<cplx> rhs = kron_vec(a.apply(u), b.apply(v));
    for (size_t i = 0; i < lhs.size(); ++i) CHECK(std::abs(lhs[i] - rhs[i]) <= 1e-12);
  }
}

TEST_CASE("kron associativity on random triples") {
  for (int trial = 0; trial < 50; ++trial) {
    const ComplexMatrix a = random_matrix(2);
    const ComplexMatrix b = random_matrix(2);
    const ComplexMatrix c = random_matrix(2);
    CHECK((kron(kron(a, b), c) - kron(a, kron(b, c))).max_abs() <= 1e-12);
  }
}

TEST_CASE("eig of diagonal matrix") {
  ComplexMatrix m(2, 2);
  m(0, 0) = 2.0;
  m(1, 1) = 1.0;
  EigenSystem es = eig_hermitian(m);
  CHECK(es.values[0] == doctest::Approx(2.0));
  CHECK(es.values[1] == doctest::Approx(1.0));
  CHECK(std::abs(es.vectors(0, 0) - cplx(1.0)) <= 1e-10);
  CHECK(std::abs(es.vectors(1, 1) - cplx(1.0)) <= 1e-10);
}

TEST_CASE("eig of Pauli X") {
  ComplexMatrix m(2, 2);
  m(0, 1) = 1.0;
  m(1, 0) = 1.0;
  EigenSystem es = eig_hermitian(m);
  const double r = 1.0 / std::sqrt(2.0);
  CHECK(es.values[0] == doctest::Approx(1.0));
  CHECK(es.values[1] == doctest::Approx(-1.0));
  CHECK(std::abs(es.vectors(0, 0) - cplx(r)) <= 1e-10);
  CHECK(std::abs(es.vectors(1, 0) - cplx(r)) <= 1e-10);
  CHECK(std::abs(es.vectors(0, 1) - cplx(r)) <= 1e-10);
  CHECK(std::abs(es.vectors(1, 1) + cplx(r)) <= 1e-10);
}

TEST_CASE("eig rejects non-Hermitian input") {
  ComplexMatrix m(2, 2);
  m(0, 1) = 1.0;
  CHECK_THROWS_AS(eig_hermitian(m), std::invalid_argument);
}

TEST_CASE("eig reconstruction on random Hermitian matrices") {
  for (int dim = 2; dim <= 4; ++dim)
    for (int trial = 0; trial < 400; ++trial) {
      const ComplexMatrix h = random_hermitian(dim);
      CHECK(eig_reconstruction_residual(h) <= 1e-10);
      EigenSystem es = eig_hermitian(h);
      const ComplexMatrix gram = es.vectors.adjoint() * es.vectors;
      CHECK((gram - ComplexMatrix::identity(dim)).max_abs() <= 1e-10);
    }
}

TEST_CASE("schmidt of the Bell state") {
  const double r = 1.0 / std::sqrt(2.0);
  StateVector s;
  s.amps = {r, 0.0, 0.0, r};
  SchmidtForm sf = schmidt(s, 2, 2);
  CHECK(sf.coefficients[0] == doctest::Approx(r).epsilon(1e-10));
  CHECK(sf.coefficients[1] == doctest::Approx(r).epsilon(1e-10));
}

TEST_CASE("schmidt of a product basis state") {
  StateVector s;
  s.amps = {0.0, 1.0, 0.0, 0.0};  // |01>
  SchmidtForm sf = schmidt(s, 2, 2);
  CHECK(sf.coefficients[0] == doctest::Approx(1.0));
  CHECK(sf.coefficients[1] == doctest::Approx(0.0));
  CHECK(sf.rank() == 1);
}

TEST_CASE("schmidt coefficients of the Hardy state") {
  // Independent oracle: eigenvalues of the Gram matrix of [[0,1],[1,1]]/sqrt(3)
  // are (3 +- sqrt(5))/6.
  const double r3 = 1.0 / std::sqrt(3.0);
  StateVector s;
  s.amps = {0.0, r3, r3, r3};
  SchmidtForm sf = schmidt(s, 2, 2);
  CHECK(sf.coefficients[0] == doctest::Approx(std::sqrt((3.0 + std::sqrt(5.0)) / 6.0)).epsilon(1e-10));
  CHECK(sf.coefficients[1] == doctest::Approx(std::sqrt((3.0 - std::sqrt(5.0)) / 6.0)).epsilon(1e-10));
  CHECK(sf.coefficients[0] == doctest::Approx(0.93417).epsilon(1e-5));
  CHECK(sf.coefficients[1] == doctest::Approx(0.35682).epsilon(1e-5));
}

TEST_CASE("schmidt dimension mismatch") {
  StateVector s;
  s.amps = {1.0, 0.0, 0.0};
  CHECK_THROWS_AS(schmidt(s, 2, 2), std::invalid_argument);
}

TEST_CASE("schmidt reconstruction and normalization on random states") {
  struct Shape {
    int dA, dB;
  };
  for (Shape sh : {Shape{2, 2}, Shape{2, 3}, Shape{3, 2}, Shape{2, 5}}) {
    for (int trial = 0; trial < 200; ++trial) {
      const StateVector s = random_state(sh.dA * sh.dB);
      CHECK(schmidt_reconstruction_residual(s, sh.dA, sh.dB) <= 1e-10);
      SchmidtForm sf = schmidt(s, sh.dA, sh.dB);
      double sum = 0.0;
      for (double c : sf.coefficients) sum += c * c;
      CHECK(sum == doctest::Approx(1.0).epsilon(1e-10));
      for (size_t k = 0; k + 1 < sf.coefficients.size(); ++k)
        CHECK(sf.coefficients[k] >= sf.coefficients[k + 1]);
    }
  }
}
