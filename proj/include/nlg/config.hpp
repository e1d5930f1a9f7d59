#pragma once

namespace nlg {

// All numerical tolerances in one place. The underlying mathematics is
// exact; every epsilon below is an implementation choice.
struct Tolerances {
  double hermitian = 1e-12;        // max |H[r,c] - conj(H[c,r])|
  double orthonormal = 1e-10;      // basis orthonormality checks
  double reconstruction = 1e-10;   // eigen / Schmidt reconstruction residual
  double normalization = 1e-10;    // state norm, Schmidt coefficient sum
  double completeness = 1e-10;     // POVM elements summing to identity
  double positivity = 1e-10;       // min eigenvalue >= -positivity
  double angle = 1e-9;             // angle equality (theta=0, phi=pi, ...)
  double vector_sum = 1e-9;        // Bloch vector-sum condition
  double probability_match = 1e-10;// cross-oracle probability agreement
  double prob_sum = 1e-9;          // sum of joint probabilities vs 1
  double winning_mass = 1e-9;      // losing probability mass per input
  double support = 1e-12;          // "possible outcome" threshold
  double truncation = 1e-12;       // eigen-term / Schmidt rank truncation
  double schmidt_rank = 1e-9;      // strict positivity of alpha, beta
};

inline const Tolerances& tol() {
  static const Tolerances t;
  return t;
}

}  // namespace nlg
