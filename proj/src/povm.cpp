#include "nlg/povm.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace nlg {

namespace {
constexpr double kPi = std::numbers::pi;
}

PovmValidation validate_povm(const Povm& p) {
  PovmValidation rep;
  if (p.elements.empty()) {
    rep.message = "no elements";
    return rep;
  }
  for (size_t i = 0; i < p.elements.size(); ++i) {
    const ComplexMatrix& m = p.elements[i];
    if (m.rows() != p.dim || m.cols() != p.dim)
      throw std::invalid_argument("POVM element dimension mismatch");
    if (!m.is_hermitian()) {
      rep.message = "element not Hermitian";
      rep.element_index = static_cast<int>(i);
      return rep;
    }
    EigenSystem es = eig_hermitian(m);
    if (es.values.back() < -tol().positivity) {
      rep.message = "element not positive semidefinite";
      rep.element_index = static_cast<int>(i);
      return rep;
    }
  }
  ComplexMatrix sum(p.dim, p.dim);
  for (const auto& m : p.elements) sum = sum + m;
  if ((sum - ComplexMatrix::identity(p.dim)).max_abs() > tol().completeness) {
    rep.message = "elements do not sum to identity";
    return rep;
  }
  rep.ok = true;
  return rep;
}

std::vector<Rank1Element> refine_to_rank1(const Povm& p) {
  if (p.dim != 2) throw std::invalid_argument("refine_to_rank1: qubit POVMs only");
  PovmValidation v = validate_povm(p);
  if (!v.ok) throw std::invalid_argument("refine_to_rank1: invalid POVM (" + v.message + ")");

  std::vector<Rank1Element> out;
  for (size_t i = 0; i < p.elements.size(); ++i) {
    EigenSystem es = eig_hermitian(p.elements[i]);
    int sub = 0;
    for (int k = 0; k < 2; ++k) {
      const double b = es.values[k];
      if (b <= tol().truncation) continue;
      const ComplexMatrix proj = ComplexMatrix::outer(es.vectors.column(k));
      auto [theta, phi] = projector_to_angles(proj);
      out.push_back(Rank1Element{b, theta, phi, static_cast<int>(i), sub++});
    }
  }
  if (!check_vector_condition(out))
    throw std::logic_error("refine_to_rank1: refined elements fail completeness");
  return out;
}

ComplexMatrix rank1_matrix(const Rank1Element& e) {
  const double ct = std::cos(e.theta);
  const double st = std::sin(e.theta);
  ComplexMatrix m(2, 2);
  m(0, 0) = e.gamma * ct * ct;
  m(1, 1) = e.gamma * st * st;
  m(0, 1) = e.gamma * st * ct * std::exp(cplx(0.0, -e.phi));
  m(1, 0) = e.gamma * st * ct * std::exp(cplx(0.0, e.phi));
  return m;
}

std::pair<double, double> projector_to_angles(const ComplexMatrix& p) {
  if (p.rows() != 2 || p.cols() != 2) throw std::invalid_argument("projector_to_angles: 2x2 only");
  if (!p.is_hermitian(1e-10) || std::abs(p.trace().real() - 1.0) > 1e-10 ||
      ((p * p) - p).max_abs() > 1e-10)
    throw std::invalid_argument("projector_to_angles: not a rank-1 projector");

  const double p00 = std::max(0.0, std::min(1.0, p(0, 0).real()));
  const double p11 = std::max(0.0, std::min(1.0, p(1, 1).real()));
  double theta = std::atan2(std::sqrt(p11), std::sqrt(p00));

  const cplx off = p(1, 0);  // e^{i phi} sin t cos t
  double phi;
  if (std::abs(off) > tol().truncation) {
    phi = std::atan2(off.imag(), off.real());
    if (phi < 0.0) phi += 2.0 * kPi;
  } else {
    phi = 0.0;
  }

  // Pole conventions last.
  if (theta <= tol().angle) {
    theta = 0.0;
    phi = 0.0;
  } else if (theta >= kPi / 2.0 - tol().angle) {
    theta = kPi / 2.0;
    phi = kPi;
  }
  if (phi >= 2.0 * kPi - tol().angle) phi = 0.0;
  return {theta, phi};
}

BlochPoint angles_to_bloch(double theta, double phi) {
  return BlochPoint{std::sin(2.0 * theta) * std::cos(phi),
                    std::sin(2.0 * theta) * std::sin(phi), std::cos(2.0 * theta)};
}

bool check_vector_condition(const std::vector<Rank1Element>& elems) {
  double sx = 0.0, sy = 0.0, sz = 0.0, sg = 0.0;
  for (const auto& e : elems) {
    const BlochPoint v = angles_to_bloch(e.theta, e.phi);
    sx += e.gamma * v.x;
    sy += e.gamma * v.y;
    sz += e.gamma * v.z;
    sg += e.gamma;
  }
  const double norm = std::sqrt(sx * sx + sy * sy + sz * sz);
  return norm <= tol().vector_sum && std::abs(sg - 2.0) <= tol().vector_sum;
}

Hemisphere hemisphere_of(const Rank1Element& e) {
  const double eps = tol().angle;
  if (e.theta <= eps) return Hemisphere::Both;             // north pole
  if (std::abs(e.phi - kPi) <= eps) return Hemisphere::Neither;  // includes south pole
  if (e.phi <= eps || e.phi >= 2.0 * kPi - eps) return Hemisphere::Both;
  return e.phi < kPi ? Hemisphere::East : Hemisphere::West;
}

namespace {
size_t pick_hemisphere(const std::vector<Rank1Element>& elems, Hemisphere want) {
  for (size_t i = 0; i < elems.size(); ++i) {
    const Hemisphere h = hemisphere_of(elems[i]);
    if (h == want || h == Hemisphere::Both) return i;
  }
  throw std::logic_error(
      "no element in the requested hemisphere: valid POVMs always have one, "
      "this indicates a canonicalization bug");
}
}  // namespace

size_t pick_east(const std::vector<Rank1Element>& elems) {
  return pick_hemisphere(elems, Hemisphere::East);
}

size_t pick_west(const std::vector<Rank1Element>& elems) {
  return pick_hemisphere(elems, Hemisphere::West);
}

double rank1_probability(const Rank1Element& e, const std::vector<cplx>& state) {
  const ComplexMatrix m = rank1_matrix(e);
  const std::vector<cplx> mv = m.apply(state);
  cplx acc{};
  for (size_t i = 0; i < state.size(); ++i) acc += std::conj(state[i]) * mv[i];
  return acc.real();
}

}  // namespace nlg
