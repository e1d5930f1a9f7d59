#include "nlg/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace nlg {

ComplexMatrix ComplexMatrix::identity(int n) {
  ComplexMatrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::outer(const std::vector<cplx>& v) {
  const int n = static_cast<int>(v.size());
  ComplexMatrix m(n, n);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) m(r, c) = v[r] * std::conj(v[c]);
  return m;
}

ComplexMatrix ComplexMatrix::adjoint() const {
  ComplexMatrix m(cols_, rows_);
  for (int r = 0; r < rows_; ++r)
    for (int c = 0; c < cols_; ++c) m(c, r) = std::conj((*this)(r, c));
  return m;
}

ComplexMatrix ComplexMatrix::operator+(const ComplexMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("shape mismatch in +");
  ComplexMatrix m(rows_, cols_);
  for (size_t i = 0; i < data_.size(); ++i) m.data_[i] = data_[i] + o.data_[i];
  return m;
}

ComplexMatrix ComplexMatrix::operator-(const ComplexMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("shape mismatch in -");
  ComplexMatrix m(rows_, cols_);
  for (size_t i = 0; i < data_.size(); ++i) m.data_[i] = data_[i] - o.data_[i];
  return m;
}

ComplexMatrix ComplexMatrix::operator*(const ComplexMatrix& o) const {
  if (cols_ != o.rows_) throw std::invalid_argument("shape mismatch in *");
  ComplexMatrix m(rows_, o.cols_);
  for (int r = 0; r < rows_; ++r)
    for (int k = 0; k < cols_; ++k) {
      const cplx a = (*this)(r, k);
      if (a == cplx{}) continue;
      for (int c = 0; c < o.cols_; ++c) m(r, c) += a * o(k, c);
    }
  return m;
}

ComplexMatrix ComplexMatrix::operator*(cplx s) const {
  ComplexMatrix m(rows_, cols_);
  for (size_t i = 0; i < data_.size(); ++i) m.data_[i] = data_[i] * s;
  return m;
}

std::vector<cplx> ComplexMatrix::apply(const std::vector<cplx>& v) const {
  if (static_cast<int>(v.size()) != cols_) throw std::invalid_argument("shape mismatch in apply");
  std::vector<cplx> out(rows_);
  for (int r = 0; r < rows_; ++r) {
    cplx acc{};
    for (int c = 0; c < cols_; ++c) acc += (*this)(r, c) * v[c];
    out[r] = acc;
  }
  return out;
}

cplx ComplexMatrix::trace() const {
  cplx t{};
  for (int i = 0; i < std::min(rows_, cols_); ++i) t += (*this)(i, i);
  return t;
}

double ComplexMatrix::max_abs() const {
  double m = 0.0;
  for (const cplx& z : data_) m = std::max(m, std::abs(z));
  return m;
}

bool ComplexMatrix::is_hermitian(double eps) const {
  if (rows_ != cols_) return false;
  for (int r = 0; r < rows_; ++r)
    for (int c = 0; c <= r; ++c)
      if (std::abs((*this)(r, c) - std::conj((*this)(c, r))) > eps) return false;
  return true;
}

std::vector<cplx> ComplexMatrix::column(int c) const {
  std::vector<cplx> v(rows_);
  for (int r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

double StateVector::norm() const {
  double s = 0.0;
  for (const cplx& a : amps) s += std::norm(a);
  return std::sqrt(s);
}

void StateVector::check_normalized() const {
  if (std::abs(norm() - 1.0) > tol().normalization)
    throw std::invalid_argument("state vector not normalized");
}

int SchmidtForm::rank(double eps) const {
  int r = 0;
  for (double c : coefficients)
    if (c > eps) ++r;
  return r;
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix m(a.rows() * b.rows(), a.cols() * b.cols());
  for (int ar = 0; ar < a.rows(); ++ar)
    for (int ac = 0; ac < a.cols(); ++ac) {
      const cplx s = a(ar, ac);
      if (s == cplx{}) continue;
      for (int br = 0; br < b.rows(); ++br)
        for (int bc = 0; bc < b.cols(); ++bc)
          m(ar * b.rows() + br, ac * b.cols() + bc) = s * b(br, bc);
    }
  return m;
}

std::vector<cplx> kron_vec(const std::vector<cplx>& u, const std::vector<cplx>& v) {
  std::vector<cplx> out(u.size() * v.size());
  for (size_t i = 0; i < u.size(); ++i)
    for (size_t j = 0; j < v.size(); ++j) out[i * v.size() + j] = u[i] * v[j];
  return out;
}

namespace {

// Multiply a phase onto column c so its first entry above eps is real positive.
void canonicalize_column(ComplexMatrix& v, int c) {
  const double eps = 1e-12;
  for (int r = 0; r < v.rows(); ++r) {
    const cplx z = v(r, c);
    if (std::abs(z) > eps) {
      const cplx phase = std::conj(z) / std::abs(z);
      for (int rr = 0; rr < v.rows(); ++rr) v(rr, c) *= phase;
      return;
    }
  }
}

void canonicalize_vector(std::vector<cplx>& v, cplx* applied = nullptr) {
  const double eps = 1e-12;
  for (const cplx& z : v) {
    if (std::abs(z) > eps) {
      const cplx phase = std::conj(z) / std::abs(z);
      for (cplx& e : v) e *= phase;
      if (applied) *applied = phase;
      return;
    }
  }
  if (applied) *applied = 1.0;
}

}  // namespace

EigenSystem eig_hermitian(const ComplexMatrix& h) {
  const int n = h.rows();
  if (h.rows() != h.cols()) throw std::invalid_argument("eig_hermitian: matrix not square");
  if (n > 16) throw std::invalid_argument("eig_hermitian: dimension > 16 unsupported");
  if (!h.is_hermitian()) throw std::invalid_argument("eig_hermitian: matrix not Hermitian");

  ComplexMatrix a = h;
  ComplexMatrix v = ComplexMatrix::identity(n);

  const double scale = std::max(a.max_abs(), 1e-300);
  const int max_sweeps = 100;
  for (int sweep = 0; sweep < max_sweeps; ++sweep) {
    double off = 0.0;
    for (int p = 0; p < n; ++p)
      for (int q = p + 1; q < n; ++q) off = std::max(off, std::abs(a(p, q)));
    if (off <= 1e-15 * scale) break;

    for (int p = 0; p < n; ++p) {
      for (int q = p + 1; q < n; ++q) {
        const cplx apq = a(p, q);
        const double g = std::abs(apq);
        if (g <= 1e-300) continue;
        const double app = a(p, p).real();
        const double aqq = a(q, q).real();
        // Unitary rotation in the (p,q) plane zeroing a(p,q):
        //   columns (c, s), (-conj(s), c) with s = sin(t) e^{-i arg(apq)}.
        const double angle = 0.5 * std::atan2(2.0 * g, app - aqq);
        const double c = std::cos(angle);
        const cplx phase = apq / g;  // e^{i arg}
        const cplx s = std::sin(angle) * std::conj(phase);
        const cplx sbar = std::conj(s);

        // A <- U† A U, applied as row then column updates.
        for (int k = 0; k < n; ++k) {
          const cplx akp = a(k, p);
          const cplx akq = a(k, q);
          a(k, p) = c * akp + s * akq;
          a(k, q) = -sbar * akp + c * akq;
        }
        for (int k = 0; k < n; ++k) {
          const cplx apk = a(p, k);
          const cplx aqk = a(q, k);
          a(p, k) = c * apk + sbar * aqk;
          a(q, k) = -s * apk + c * aqk;
        }
        for (int k = 0; k < n; ++k) {
          const cplx vkp = v(k, p);
          const cplx vkq = v(k, q);
          v(k, p) = c * vkp + s * vkq;
          v(k, q) = -sbar * vkp + c * vkq;
        }
      }
    }
  }

  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::vector<double> values(n);
  for (int i = 0; i < n; ++i) values[i] = a(i, i).real();
  std::stable_sort(order.begin(), order.end(),
                   [&](int i, int j) { return values[i] > values[j]; });

  EigenSystem es;
  es.values.resize(n);
  es.vectors = ComplexMatrix(n, n);
  for (int k = 0; k < n; ++k) {
    es.values[k] = values[order[k]];
    for (int r = 0; r < n; ++r) es.vectors(r, k) = v(r, order[k]);
    canonicalize_column(es.vectors, k);
  }
  return es;
}

SchmidtForm schmidt(const StateVector& state, int dimA, int dimB) {
  if (state.dim() != dimA * dimB)
    throw std::invalid_argument("schmidt: dim != dimA * dimB");
  state.check_normalized();

  // Amplitude matrix C[i][j] = psi_{i dB + j}; Gram = C C† on Alice's side.
  ComplexMatrix c(dimA, dimB);
  for (int i = 0; i < dimA; ++i)
    for (int j = 0; j < dimB; ++j) c(i, j) = state.amps[static_cast<size_t>(i) * dimB + j];
  const ComplexMatrix gram = c * c.adjoint();

  EigenSystem es = eig_hermitian(gram);
  const ComplexMatrix cdag = c.adjoint();

  SchmidtForm sf;
  const int kmax = std::min(dimA, dimB);
  for (int k = 0; k < kmax; ++k) {
    const double lambda = std::max(es.values[k], 0.0);
    double coeff = std::sqrt(lambda);
    if (coeff < tol().truncation) coeff = 0.0;
    std::vector<cplx> ak = es.vectors.column(k);
    std::vector<cplx> bk(dimB);
    if (coeff > 0.0) {
      // B_k = conj(C† A_k / coeff): C = sum_k coeff_k A_k conj(B_k)^T.
      std::vector<cplx> w = cdag.apply(ak);
      for (int j = 0; j < dimB; ++j) bk[j] = std::conj(w[j]) / coeff;
    }
    sf.coefficients.push_back(coeff);
    sf.basisA.push_back(std::move(ak));
    sf.basisB.push_back(std::move(bk));
  }

  // Fill orthonormal padding for zero-coefficient B vectors so both basis
  // sets stay usable as isometries (Gram-Schmidt against earlier columns).
  for (size_t k = 0; k < sf.basisB.size(); ++k) {
    if (sf.coefficients[k] > 0.0) continue;
    for (int cand = 0; cand < dimB; ++cand) {
      std::vector<cplx> e(dimB);
      e[cand] = 1.0;
      for (size_t m = 0; m < sf.basisB.size(); ++m) {
        if (m == k || (sf.coefficients[m] == 0.0 && m > k)) continue;
        cplx ip{};
        for (int j = 0; j < dimB; ++j) ip += std::conj(sf.basisB[m][j]) * e[j];
        for (int j = 0; j < dimB; ++j) e[j] -= ip * sf.basisB[m][j];
      }
      double nrm = 0.0;
      for (const cplx& z : e) nrm += std::norm(z);
      nrm = std::sqrt(nrm);
      if (nrm > 1e-6) {
        for (cplx& z : e) z /= nrm;
        canonicalize_vector(e);
        sf.basisB[k] = std::move(e);
        break;
      }
    }
  }
  return sf;
}

}  // namespace nlg
