#pragma once

#include "nlg/classical_types.hpp"
#include "nlg/strategies.hpp"

namespace nlg {

enum class VanishingKind { BothPolesZero, EqualAmplitudeAntiphase, NonVanishing };

// Decomposition of the closed-form probability into
//   a = alpha cos t cos t', b = beta sin t sin t', c = cos(phi + phi'),
// with Pr = g g' (a^2 + b^2 + 2abc). Vanishes only when a=b=0 or when
// a=b and c=-1.
struct VanishingWitness {
  VanishingKind kind = VanishingKind::NonVanishing;
  double a = 0.0, b = 0.0, c = 0.0;
};

VanishingWitness vanishing_characterization(double alpha, double beta, const Rank1Element& eA,
                                            const Rank1Element& eB);

struct ExtractionResult {
  DeterministicStrategy strategy;
  // False when the input strategy failed the defensive winning check; the
  // returned strategy then carries no guarantee.
  bool guaranteed = true;
  // Chosen refined elements per input, for inspection. phi_west uses the
  // 2pi representative for elements in both hemispheres so that
  // phi_east + phi_west always lies strictly inside (pi, 3pi).
  std::vector<Rank1Element> east_picks;   // per Alice input
  std::vector<Rank1Element> west_picks;   // per Bob input
  std::vector<double> phi_west_effective;
};

// Constructive east/west extraction: Alice answers via an east-hemisphere
// element of each refined POVM, Bob via a west-hemisphere one. Accepts 2x2
// and 2xn strategies (2xn reduced first). Product shared states fall back
// to fixing a nonzero-probability outcome of each local measurement.
ExtractionResult extract_classical(const QuantumStrategy& s, const Game& g,
                                   bool verify_first = true);

}  // namespace nlg
