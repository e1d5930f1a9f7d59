#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <numbers>
#include <random>

#include "doctest.h"
#include "nlg/povm.hpp"
#include "nlg/support_gen.hpp"

using namespace nlg;

namespace {

constexpr double kPi = std::numbers::pi;

std::mt19937_64 rng(777);

Povm computational_basis() {
  Povm p;
  p.dim = 2;
  p.elements.push_back(ComplexMatrix::outer({1.0, 0.0}));
  p.elements.push_back(ComplexMatrix::outer({0.0, 1.0}));
  return p;
}

// Three symmetric states in the x-z plane, 120 degrees apart on the Bloch
// sphere, each weighted 2/3.
Povm trine() {
  Povm p;
  p.dim = 2;
  for (int k = 0; k < 3; ++k) {
    const double half = k * kPi / 3.0;  // Bloch angle 2*pi/3 apart => theta step pi/3
    const std::vector<cplx> v = {std::cos(half), std::sin(half)};
    p.elements.push_back(ComplexMatrix::outer(v) * cplx(2.0 / 3.0, 0.0));
  }
  return p;
}

std::vector<cplx> random_qubit_state() {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::vector<cplx> v = {cplx(u(rng), u(rng)), cplx(u(rng), u(rng))};
  const double n = std::sqrt(std::norm(v[0]) + std::norm(v[1]));
  v[0] /= n;
  v[1] /= n;
  return v;
}

double povm_probability(const ComplexMatrix& m, const std::vector<cplx>& state) {
  const std::vector<cplx> mv = m.apply(state);
  cplx acc{};
  for (size_t i = 0; i < state.size(); ++i) acc += std::conj(state[i]) * mv[i];
  return acc.real();
}

}  // namespace

TEST_CASE("validate_povm accepts projective and trine measurements") {
  CHECK(validate_povm(computational_basis()).ok);
  CHECK(validate_povm(trine()).ok);
}

TEST_CASE("validate_povm reports completeness violations") {
  Povm p = computational_basis();
  p.elements[0] = p.elements[0] * cplx(1.5, 0.0);
  const PovmValidation rep = validate_povm(p);
  CHECK_FALSE(rep.ok);
  CHECK(rep.message == "elements do not sum to identity");
}

TEST_CASE("validate_povm reports negative elements") {
  Povm p;
  p.dim = 2;
  p.elements.push_back(ComplexMatrix::identity(2) * cplx(2.0, 0.0));
  ComplexMatrix neg(2, 2);
  neg(0, 0) = -1.0;
  neg(1, 1) = -1.0;
  p.elements.push_back(neg);
  const PovmValidation rep = validate_povm(p);
  CHECK_FALSE(rep.ok);
  CHECK(rep.element_index == 1);
}

TEST_CASE("projector_to_angles poles and plus state") {
  auto [t0, p0] = projector_to_angles(ComplexMatrix::outer({1.0, 0.0}));
  CHECK(t0 == 0.0);
  CHECK(p0 == 0.0);

  auto [t1, p1] = projector_to_angles(ComplexMatrix::outer({0.0, 1.0}));
  CHECK(t1 == doctest::Approx(kPi / 2.0));
  CHECK(p1 == doctest::Approx(kPi));

  const double r = 1.0 / std::sqrt(2.0);
  auto [tp, pp] = projector_to_angles(ComplexMatrix::outer({r, r}));
  CHECK(tp == doctest::Approx(kPi / 4.0));
  CHECK(pp == doctest::Approx(0.0));
}

TEST_CASE("projector_to_angles rejects non-projectors") {
  CHECK_THROWS_AS(projector_to_angles(ComplexMatrix::identity(2)), std::invalid_argument);
}

TEST_CASE("projector_to_angles round-trips through the matrix form") {
  for (int trial = 0; trial < 500; ++trial) {
    const std::vector<cplx> v = random_qubit_state();
    const ComplexMatrix proj = ComplexMatrix::outer(v);
    auto [theta, phi] = projector_to_angles(proj);
    Rank1Element e{1.0, theta, phi, 0, 0};
    CHECK((rank1_matrix(e) - proj).max_abs() <= 1e-9);
  }
}

TEST_CASE("angles_to_bloch fixed points") {
  const BlochPoint north = angles_to_bloch(0.0, 0.0);
  CHECK(north.z == doctest::Approx(1.0));
  const BlochPoint south = angles_to_bloch(kPi / 2.0, kPi);
  CHECK(south.z == doctest::Approx(-1.0));
  const BlochPoint yhat = angles_to_bloch(kPi / 4.0, kPi / 2.0);
  CHECK(yhat.x == doctest::Approx(0.0));
  CHECK(yhat.y == doctest::Approx(1.0));
  CHECK(yhat.z == doctest::Approx(0.0));
}

TEST_CASE("angles_to_bloch is always unit norm") {
  std::uniform_real_distribution<double> ut(0.0, kPi / 2.0);
  std::uniform_real_distribution<double> up(0.0, 2.0 * kPi);
  for (int trial = 0; trial < 1000; ++trial) {
    const BlochPoint v = angles_to_bloch(ut(rng), up(rng));
    CHECK(std::abs(v.x * v.x + v.y * v.y + v.z * v.z - 1.0) <= 1e-12);
  }
}

TEST_CASE("refine_to_rank1 leaves projective measurements intact") {
  const std::vector<Rank1Element> elems = refine_to_rank1(computational_basis());
  REQUIRE(elems.size() == 2);
  CHECK(elems[0].original == 0);
  CHECK(elems[1].original == 1);
  CHECK(elems[0].gamma == doctest::Approx(1.0));
  CHECK(elems[1].gamma == doctest::Approx(1.0));
}

TEST_CASE("refine_to_rank1 splits I/2 elements") {
  Povm p;
  p.dim = 2;
  p.elements.push_back(ComplexMatrix::identity(2) * cplx(0.5, 0.0));
  p.elements.push_back(ComplexMatrix::identity(2) * cplx(0.5, 0.0));
  const std::vector<Rank1Element> elems = refine_to_rank1(p);
  REQUIRE(elems.size() == 4);
  for (const auto& e : elems) CHECK(e.gamma == doctest::Approx(0.5));
  CHECK(elems[0].original == 0);
  CHECK(elems[0].sub == 0);
  CHECK(elems[1].original == 0);
  CHECK(elems[1].sub == 1);
  CHECK(elems[2].original == 1);
  CHECK(elems[3].original == 1);
}

TEST_CASE("refinement preserves outcome statistics") {
  for (int trial = 0; trial < 100; ++trial) {
    const Povm p = random_qubit_povm(rng);
    const std::vector<Rank1Element> elems = refine_to_rank1(p);
    for (int st = 0; st < 10; ++st) {
      const std::vector<cplx> state = random_qubit_state();
      for (size_t i = 0; i < p.elements.size(); ++i) {
        double refined = 0.0;
        for (const auto& e : elems)
          if (e.original == static_cast<int>(i)) refined += rank1_probability(e, state);
        CHECK(std::abs(refined - povm_probability(p.elements[i], state)) <= 1e-10);
      }
    }
  }
}

TEST_CASE("check_vector_condition on fixtures") {
  CHECK(check_vector_condition(refine_to_rank1(computational_basis())));
  CHECK(check_vector_condition(refine_to_rank1(trine())));

  // Broken weights fail.
  std::vector<Rank1Element> bad = refine_to_rank1(computational_basis());
  bad[0].gamma = 0.9;
  CHECK_FALSE(check_vector_condition(bad));
}

TEST_CASE("vector condition agrees with the matrix identity check") {
  std::uniform_real_distribution<double> ut(0.0, kPi / 2.0);
  std::uniform_real_distribution<double> up(0.0, 2.0 * kPi);
  std::uniform_real_distribution<double> ug(0.05, 1.0);
  int validSeen = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    std::vector<Rank1Element> elems;
    const int n = 2 + static_cast<int>(trial % 3);
    for (int k = 0; k < n; ++k) elems.push_back(Rank1Element{ug(rng), ut(rng), up(rng), k, 0});
    ComplexMatrix sum(2, 2);
    for (const auto& e : elems) sum = sum + rank1_matrix(e);
    const bool matrixOk = (sum - ComplexMatrix::identity(2)).max_abs() <= 1e-9;
    CHECK(check_vector_condition(elems) == matrixOk);
  }
  // The other direction: genuinely valid POVMs must pass.
  for (int trial = 0; trial < 1000; ++trial) {
    const std::vector<Rank1Element> elems = refine_to_rank1(random_qubit_povm(rng));
    CHECK(check_vector_condition(elems));
    ++validSeen;
  }
  CHECK(validSeen == 1000);
}

TEST_CASE("hemisphere classification") {
  CHECK(hemisphere_of(Rank1Element{1.0, 0.0, 0.0, 0, 0}) == Hemisphere::Both);
  CHECK(hemisphere_of(Rank1Element{1.0, kPi / 2.0, kPi, 0, 0}) == Hemisphere::Neither);
  CHECK(hemisphere_of(Rank1Element{0.5, kPi / 4.0, 3.0 * kPi / 2.0, 0, 0}) == Hemisphere::West);
  CHECK(hemisphere_of(Rank1Element{0.5, kPi / 4.0, kPi / 2.0, 0, 0}) == Hemisphere::East);
  CHECK(hemisphere_of(Rank1Element{0.5, kPi / 4.0, 0.0, 0, 0}) == Hemisphere::Both);
  CHECK(hemisphere_of(Rank1Element{0.5, kPi / 4.0, kPi, 0, 0}) == Hemisphere::Neither);
  // Scaling does not matter.
  CHECK(hemisphere_of(Rank1Element{0.01, kPi / 4.0, kPi / 2.0, 0, 0}) == Hemisphere::East);
  // theta = 0 never lands in Neither.
  CHECK(hemisphere_of(Rank1Element{1.0, 0.0, kPi, 0, 0}) != Hemisphere::Neither);
}

TEST_CASE("pick_east and pick_west on fixtures") {
  const std::vector<Rank1Element> comp = refine_to_rank1(computational_basis());
  CHECK(pick_east(comp) == 0);  // |0><0| is in both hemispheres
  CHECK(pick_west(comp) == 0);

  std::vector<Rank1Element> pair = {Rank1Element{1.0, kPi / 4.0, kPi / 2.0, 0, 0},
                                    Rank1Element{1.0, kPi / 4.0, 3.0 * kPi / 2.0, 1, 0}};
  CHECK(pick_east(pair) == 0);
  CHECK(pick_west(pair) == 1);
}

TEST_CASE("pick_east and pick_west succeed on random valid POVMs") {
  for (int trial = 0; trial < 1000; ++trial) {
    const std::vector<Rank1Element> elems = refine_to_rank1(random_qubit_povm(rng));
    CHECK_NOTHROW(pick_east(elems));
    CHECK_NOTHROW(pick_west(elems));
  }
}

TEST_CASE("pick_east succeeds on POVMs containing the south pole") {
  // { |1><1|, |0><0| }: the south pole element serves neither side; the
  // north pole element serves both.
  std::vector<Rank1Element> elems = {Rank1Element{1.0, kPi / 2.0, kPi, 0, 0},
                                     Rank1Element{1.0, 0.0, 0.0, 1, 0}};
  CHECK(pick_east(elems) == 1);
  CHECK(pick_west(elems) == 1);
}
