#include "nlg/strategies.hpp"

#include <cmath>

namespace nlg {

namespace {

double quad_form(const StateVector& psi, const ComplexMatrix& m) {
  const std::vector<cplx> mv = m.apply(psi.amps);
  cplx acc{};
  for (size_t i = 0; i < psi.amps.size(); ++i) acc += std::conj(psi.amps[i]) * mv[i];
  return acc.real();
}

ComplexMatrix basis_isometry(const std::vector<std::vector<cplx>>& columns, int dim) {
  ComplexMatrix v(dim, static_cast<int>(columns.size()));
  for (size_t k = 0; k < columns.size(); ++k)
    for (int r = 0; r < dim; ++r) v(r, static_cast<int>(k)) = columns[k][r];
  return v;
}

Povm conjugate_povm(const Povm& p, const ComplexMatrix& v) {
  Povm out;
  out.dim = v.cols();
  const ComplexMatrix vdag = v.adjoint();
  for (const auto& m : p.elements) out.elements.push_back(vdag * m * v);
  return out;
}

}  // namespace

void QuantumStrategy::validate() const {
  if (shared.dim() != dimA * dimB) throw std::invalid_argument("state dim != dimA * dimB");
  shared.check_normalized();
  if (povmsA.empty() || povmsB.empty()) throw std::invalid_argument("strategy needs POVMs");
  if (povmsA.size() != answerA.size() || povmsB.size() != answerB.size())
    throw std::invalid_argument("answer maps must cover every input");
  for (size_t x = 0; x < povmsA.size(); ++x) {
    if (!validate_povm(povmsA[x]).ok) throw std::invalid_argument("invalid POVM for Alice");
    if (answerA[x].size() != povmsA[x].elements.size())
      throw std::invalid_argument("answer map missing outcomes for Alice");
  }
  for (size_t y = 0; y < povmsB.size(); ++y) {
    if (!validate_povm(povmsB[y]).ok) throw std::invalid_argument("invalid POVM for Bob");
    if (answerB[y].size() != povmsB[y].elements.size())
      throw std::invalid_argument("answer map missing outcomes for Bob");
  }
}

double joint_probability(const QuantumStrategy& s, int x, int y, int i, int j) {
  if (x < 0 || x >= static_cast<int>(s.povmsA.size()) || y < 0 ||
      y >= static_cast<int>(s.povmsB.size()))
    throw std::out_of_range("joint_probability: unknown input");
  const Povm& ma = s.povmsA[x];
  const Povm& mb = s.povmsB[y];
  if (i < 0 || i >= static_cast<int>(ma.elements.size()) || j < 0 ||
      j >= static_cast<int>(mb.elements.size()))
    throw std::out_of_range("joint_probability: unknown outcome label");
  return quad_form(s.shared, kron(ma.elements[i], mb.elements[j]));
}

double closed_form_probability(double alpha, double beta, const Rank1Element& eA,
                               const Rank1Element& eB) {
  const double ca = std::cos(eA.theta), sa = std::sin(eA.theta);
  const double cb = std::cos(eB.theta), sb = std::sin(eB.theta);
  return eA.gamma * eB.gamma *
         (alpha * alpha * ca * ca * cb * cb + beta * beta * sa * sa * sb * sb +
          2.0 * alpha * beta * ca * cb * std::cos(eA.phi + eB.phi) * sa * sb);
}

double joint_probability(const SchmidtStrategy2x2& s, int x, int y, size_t i, size_t j) {
  return closed_form_probability(s.alpha, s.beta, s.povmsA[x][i], s.povmsB[y][j]);
}

SchmidtStrategy2x2 schmidt_normalize(const QuantumStrategy& s) {
  if (s.dimA != 2 || s.dimB != 2)
    throw std::invalid_argument("schmidt_normalize: 2x2 strategies only");
  const SchmidtForm sf = schmidt(s.shared, 2, 2);
  if (sf.coefficients.size() < 2 || sf.coefficients[1] <= tol().schmidt_rank)
    throw ProductStateError();

  SchmidtStrategy2x2 out;
  out.alpha = sf.coefficients[0];
  out.beta = sf.coefficients[1];
  const ComplexMatrix ua = basis_isometry(sf.basisA, 2);
  const ComplexMatrix ub = basis_isometry(sf.basisB, 2);

  for (size_t x = 0; x < s.povmsA.size(); ++x) {
    std::vector<Rank1Element> elems = refine_to_rank1(conjugate_povm(s.povmsA[x], ua));
    std::vector<int> answers;
    for (const auto& e : elems) answers.push_back(s.answerA[x][e.original]);
    out.povmsA.push_back(std::move(elems));
    out.answerA.push_back(std::move(answers));
  }
  for (size_t y = 0; y < s.povmsB.size(); ++y) {
    std::vector<Rank1Element> elems = refine_to_rank1(conjugate_povm(s.povmsB[y], ub));
    std::vector<int> answers;
    for (const auto& e : elems) answers.push_back(s.answerB[y][e.original]);
    out.povmsB.push_back(std::move(elems));
    out.answerB.push_back(std::move(answers));
  }
  return out;
}

QuantumStrategy reduce_dimension(const QuantumStrategy& s) {
  if (s.dimA == s.dimB) return s;
  const int d = std::min(s.dimA, s.dimB);
  const SchmidtForm sf = schmidt(s.shared, s.dimA, s.dimB);
  const ComplexMatrix va = basis_isometry(sf.basisA, s.dimA);
  const ComplexMatrix vb = basis_isometry(sf.basisB, s.dimB);

  QuantumStrategy out;
  out.dimA = d;
  out.dimB = d;
  out.shared.amps.assign(static_cast<size_t>(d) * d, cplx{});
  for (int k = 0; k < d; ++k)
    out.shared.amps[static_cast<size_t>(k) * d + k] = sf.coefficients[k];
  for (const auto& p : s.povmsA) out.povmsA.push_back(conjugate_povm(p, va));
  for (const auto& p : s.povmsB) out.povmsB.push_back(conjugate_povm(p, vb));
  out.answerA = s.answerA;
  out.answerB = s.answerB;
  return out;
}

std::vector<std::vector<double>> answer_distribution(const QuantumStrategy& s, const Game& g,
                                                     int x, int y) {
  const auto& outs = g.output_sizes();
  std::vector<std::vector<double>> dist(outs[0], std::vector<double>(outs[1], 0.0));
  for (size_t i = 0; i < s.povmsA[x].elements.size(); ++i)
    for (size_t j = 0; j < s.povmsB[y].elements.size(); ++j)
      dist[s.answerA[x][i]][s.answerB[y][j]] +=
          joint_probability(s, x, y, static_cast<int>(i), static_cast<int>(j));
  return dist;
}

VerifyResult verify_winning(const QuantumStrategy& s, const Game& g, double tolerance) {
  if (g.player_count() != 2) throw std::invalid_argument("two-player verification only");
  if (static_cast<int>(s.povmsA.size()) != g.input_sizes()[0] ||
      static_cast<int>(s.povmsB.size()) != g.input_sizes()[1])
    throw std::invalid_argument("strategy does not cover the game's inputs");

  VerifyResult best;
  best.wins = true;
  best.losing_mass.assign(static_cast<size_t>(g.joint_inputs()), 0.0);
  for (int x = 0; x < g.input_sizes()[0]; ++x) {
    for (int y = 0; y < g.input_sizes()[1]; ++y) {
      const auto dist = answer_distribution(s, g, x, y);
      double losing = 0.0;
      int worstA = -1, worstB = -1;
      double worstP = -1.0;
      for (int a = 0; a < g.output_sizes()[0]; ++a)
        for (int b = 0; b < g.output_sizes()[1]; ++b) {
          if (is_winning(g, {x, y}, {a, b})) continue;
          losing += dist[a][b];
          if (dist[a][b] > worstP) {
            worstP = dist[a][b];
            worstA = a;
            worstB = b;
          }
        }
      best.losing_mass[static_cast<size_t>(g.input_index({x, y}))] = losing;
      if (losing > best.worst_losing_mass) {
        best.worst_losing_mass = losing;
        best.inputs = {x, y};
        best.outputs = {worstA, worstB};
        best.probability = worstP;
      }
    }
  }
  best.wins = best.worst_losing_mass <= tolerance;
  if (best.wins) {
    best.inputs.clear();
    best.outputs.clear();
    best.probability = 0.0;
  }
  return best;
}

VerifyResult verify_winning(const QuantumStrategy3& s, const Game& g, double tolerance) {
  if (g.player_count() != 3) throw std::invalid_argument("three-player verification needs a 3-player game");
  VerifyResult best;
  best.losing_mass.assign(static_cast<size_t>(g.joint_inputs()), 0.0);
  for (int x = 0; x < g.input_sizes()[0]; ++x)
    for (int y = 0; y < g.input_sizes()[1]; ++y)
      for (int z = 0; z < g.input_sizes()[2]; ++z) {
        const Povm& pa = s.povms[0][x];
        const Povm& pb = s.povms[1][y];
        const Povm& pc = s.povms[2][z];
        double losing = 0.0;
        std::vector<int> worstOut;
        double worstP = -1.0;
        for (size_t i = 0; i < pa.elements.size(); ++i)
          for (size_t j = 0; j < pb.elements.size(); ++j)
            for (size_t k = 0; k < pc.elements.size(); ++k) {
              const int a = s.answers[0][x][i];
              const int b = s.answers[1][y][j];
              const int c = s.answers[2][z][k];
              if (is_winning(g, {x, y, z}, {a, b, c})) continue;
              const double p = [&] {
                const ComplexMatrix m = kron(kron(pa.elements[i], pb.elements[j]), pc.elements[k]);
                const std::vector<cplx> mv = m.apply(s.shared.amps);
                cplx acc{};
                for (size_t t = 0; t < mv.size(); ++t) acc += std::conj(s.shared.amps[t]) * mv[t];
                return acc.real();
              }();
              losing += p;
              if (p > worstP) {
                worstP = p;
                worstOut = {a, b, c};
              }
            }
        best.losing_mass[static_cast<size_t>(g.input_index({x, y, z}))] = losing;
        if (losing > best.worst_losing_mass) {
          best.worst_losing_mass = losing;
          best.inputs = {x, y, z};
          best.outputs = worstOut;
          best.probability = worstP;
        }
      }
  best.wins = best.worst_losing_mass <= tolerance;
  if (best.wins) {
    best.inputs.clear();
    best.outputs.clear();
    best.probability = 0.0;
  }
  return best;
}

namespace {

Povm projective(const std::vector<cplx>& v0, const std::vector<cplx>& v1) {
  Povm p;
  p.dim = static_cast<int>(v0.size());
  p.elements.push_back(ComplexMatrix::outer(v0));
  p.elements.push_back(ComplexMatrix::outer(v1));
  return p;
}

}  // namespace

QuantumStrategy3 ghz_strategy() {
  const double r = 1.0 / std::sqrt(2.0);
  QuantumStrategy3 s;
  s.shared.amps.assign(8, cplx{});
  s.shared.amps[0] = r;
  s.shared.amps[7] = r;

  const Povm xBasis = projective({r, r}, {r, -r});
  const Povm yBasis = projective({r, cplx(0.0, r)}, {r, cplx(0.0, -r)});
  for (int player = 0; player < 3; ++player) {
    s.povms.push_back({xBasis, yBasis});
    s.answers.push_back({{0, 1}, {0, 1}});
  }
  return s;
}

QuantumStrategy hardy_strategy() {
  const double r3 = 1.0 / std::sqrt(3.0);
  const double r2 = 1.0 / std::sqrt(2.0);
  QuantumStrategy s;
  s.dimA = 2;
  s.dimB = 2;
  s.shared.amps = {0.0, r3, r3, r3};

  const Povm comp = projective({1.0, 0.0}, {0.0, 1.0});
  const Povm had = projective({r2, r2}, {r2, -r2});
  s.povmsA = {comp, had};
  s.povmsB = {comp, had};
  s.answerA = {{0, 1}, {0, 1}};
  s.answerB = {{0, 1}, {0, 1}};
  return s;
}

}  // namespace nlg
