#include "nlg/extraction.hpp"

#include <cmath>
#include <numbers>

namespace nlg {

namespace {
constexpr double kPi = std::numbers::pi;
}

VanishingWitness vanishing_characterization(double alpha, double beta, const Rank1Element& eA,
                                            const Rank1Element& eB) {
  VanishingWitness w;
  w.a = alpha * std::cos(eA.theta) * std::cos(eB.theta);
  w.b = beta * std::sin(eA.theta) * std::sin(eB.theta);
  w.c = std::cos(eA.phi + eB.phi);

  const double p = closed_form_probability(alpha, beta, eA, eB);
  if (p > tol().support) {
    w.kind = VanishingKind::NonVanishing;
  } else if (w.a <= tol().angle && w.b <= tol().angle) {
    w.kind = VanishingKind::BothPolesZero;
  } else {
    w.kind = VanishingKind::EqualAmplitudeAntiphase;
  }
  return w;
}

namespace {

// Product-state fallback: fix, per input, the smallest-label outcome that
// has nonzero probability on the local pure state.
DeterministicStrategy extract_from_product(const QuantumStrategy& s) {
  const SchmidtForm sf = schmidt(s.shared, s.dimA, s.dimB);
  const std::vector<cplx>& localA = sf.basisA[0];
  const std::vector<cplx>& localB = sf.basisB[0];

  auto pick = [](const std::vector<Povm>& povms, const std::vector<std::vector<int>>& answers,
                 const std::vector<cplx>& local) {
    std::vector<int> out;
    for (size_t x = 0; x < povms.size(); ++x) {
      int chosen = -1;
      for (size_t i = 0; i < povms[x].elements.size(); ++i) {
        const std::vector<cplx> mv = povms[x].elements[i].apply(local);
        cplx acc{};
        for (size_t r = 0; r < local.size(); ++r) acc += std::conj(local[r]) * mv[r];
        if (acc.real() > tol().support) {
          chosen = static_cast<int>(i);
          break;
        }
      }
      if (chosen < 0) throw std::logic_error("every outcome has zero probability");
      out.push_back(answers[x][chosen]);
    }
    return out;
  };

  DeterministicStrategy d;
  d.outputs.push_back(pick(s.povmsA, s.answerA, localA));
  d.outputs.push_back(pick(s.povmsB, s.answerB, localB));
  return d;
}

}  // namespace

ExtractionResult extract_classical(const QuantumStrategy& s, const Game& g, bool verify_first) {
  if (std::min(s.dimA, s.dimB) > 2)
    throw std::invalid_argument(
        "extraction handles dimension 2xn only; a 3x3 pseudo-telepathy game exists, so no "
        "general extraction is possible there");

  ExtractionResult res;
  if (verify_first) res.guaranteed = verify_winning(s, g).wins;

  QuantumStrategy reduced = (s.dimA == s.dimB) ? s : reduce_dimension(s);
  SchmidtStrategy2x2 normal;
  try {
    normal = schmidt_normalize(reduced);
  } catch (const ProductStateError&) {
    res.strategy = extract_from_product(reduced);
    return res;
  }

  res.strategy.outputs.resize(2);
  for (size_t x = 0; x < normal.povmsA.size(); ++x) {
    const size_t i = pick_east(normal.povmsA[x]);
    res.east_picks.push_back(normal.povmsA[x][i]);
    res.strategy.outputs[0].push_back(normal.answerA[x][i]);
  }
  for (size_t y = 0; y < normal.povmsB.size(); ++y) {
    const size_t j = pick_west(normal.povmsB[y]);
    const Rank1Element& e = normal.povmsB[y][j];
    res.west_picks.push_back(e);
    // Both-hemisphere picks sit at phi=0, which reads as phi=2pi on the
    // west side; record that representative.
    res.phi_west_effective.push_back(
        hemisphere_of(e) == Hemisphere::Both ? 2.0 * kPi : e.phi);
    res.strategy.outputs[1].push_back(normal.answerB[y][j]);
  }
  return res;
}

}  // namespace nlg
