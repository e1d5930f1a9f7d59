#include "nlg/support_gen.hpp"

#include <cmath>
#include <numbers>

namespace nlg {

namespace {
constexpr double kPi = std::numbers::pi;
}

ComplexMatrix random_unitary2(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> uni(0.0, 1.0);
  // U(2) from three phases and a mixing angle.
  const double t = std::acos(std::sqrt(uni(rng)));
  const double p1 = 2.0 * kPi * uni(rng);
  const double p2 = 2.0 * kPi * uni(rng);
  const double p3 = 2.0 * kPi * uni(rng);
  ComplexMatrix u(2, 2);
  u(0, 0) = std::cos(t) * std::exp(cplx(0.0, p1));
  u(0, 1) = std::sin(t) * std::exp(cplx(0.0, p2));
  u(1, 0) = -std::sin(t) * std::exp(cplx(0.0, p3));
  u(1, 1) = std::cos(t) * std::exp(cplx(0.0, p2 + p3 - p1));
  return u;
}

Povm random_qubit_povm(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> pieces(1, 2);
  std::uniform_real_distribution<double> uni(0.0, 1.0);
  const int m = pieces(rng);  // m unitaries -> 2m rank-1 elements

  std::vector<double> weights(m);
  double sum = 0.0;
  for (double& w : weights) {
    w = 0.1 + uni(rng);
    sum += w;
  }
  for (double& w : weights) w /= sum;

  Povm p;
  p.dim = 2;
  for (int k = 0; k < m; ++k) {
    const ComplexMatrix u = random_unitary2(rng);
    for (int basis = 0; basis < 2; ++basis) {
      const ComplexMatrix proj = ComplexMatrix::outer(u.column(basis));
      p.elements.push_back(proj * cplx(weights[k], 0.0));
    }
  }
  return p;
}

SupportBundle random_support_bundle(std::uint64_t seed, int inputsPerPlayer,
                                    int outputsPerPlayer) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> alphaDist(0.2, 0.95);
  std::uniform_int_distribution<int> answerDist(0, outputsPerPlayer - 1);

  for (int attempt = 0; attempt < 1000; ++attempt) {
    QuantumStrategy s;
    s.dimA = 2;
    s.dimB = 2;
    const double alpha = alphaDist(rng);
    const double beta = std::sqrt(1.0 - alpha * alpha);
    // Random local bases so generated strategies exercise the Schmidt normalization path.
    const ComplexMatrix ua = random_unitary2(rng);
    const ComplexMatrix ub = random_unitary2(rng);
    s.shared.amps.assign(4, cplx{});
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j)
        s.shared.amps[static_cast<size_t>(i) * 2 + j] =
            alpha * ua(i, 0) * ub(j, 0) + beta * ua(i, 1) * ub(j, 1);

    for (int x = 0; x < inputsPerPlayer; ++x) {
      s.povmsA.push_back(random_qubit_povm(rng));
      s.povmsB.push_back(random_qubit_povm(rng));
    }
    for (int x = 0; x < inputsPerPlayer; ++x) {
      std::vector<int> ansA, ansB;
      for (size_t i = 0; i < s.povmsA[x].elements.size(); ++i) ansA.push_back(answerDist(rng));
      for (size_t j = 0; j < s.povmsB[x].elements.size(); ++j) ansB.push_back(answerDist(rng));
      s.answerA.push_back(std::move(ansA));
      s.answerB.push_back(std::move(ansB));
    }

    Game g({inputsPerPlayer, inputsPerPlayer}, {outputsPerPlayer, outputsPerPlayer});
    bool ambiguous = false;
    for (int x = 0; x < inputsPerPlayer && !ambiguous; ++x)
      for (int y = 0; y < inputsPerPlayer && !ambiguous; ++y) {
        const auto dist = answer_distribution(s, g, x, y);
        for (int a = 0; a < outputsPerPlayer && !ambiguous; ++a)
          for (int b = 0; b < outputsPerPlayer; ++b) {
            const double p = dist[a][b];
            if (p > tol().support && p < 1e-8) {
              ambiguous = true;
              break;
            }
            g.set_winning({x, y}, {a, b}, p > tol().support);
          }
      }
    if (ambiguous) continue;
    return SupportBundle{std::move(s), std::move(g)};
  }
  throw std::runtime_error("could not draw an unambiguous support bundle");
}

}  // namespace nlg
