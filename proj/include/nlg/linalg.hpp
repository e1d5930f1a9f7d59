#pragma once

#include <complex>
#include <stdexcept>
#include <vector>

#include "nlg/config.hpp"

namespace nlg {

using cplx = std::complex<double>;

// Dense row-major complex matrix for small dimensions (<= 16 on the
// eigensolver path). Value semantics throughout.
class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  ComplexMatrix(int rows, int cols)
      : rows_(rows), cols_(cols), data_(static_cast<size_t>(rows) * cols) {
    if (rows <= 0 || cols <= 0) throw std::invalid_argument("matrix dims must be positive");
  }

  static ComplexMatrix identity(int n);
  // v v† for a column vector v.
  static ComplexMatrix outer(const std::vector<cplx>& v);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  cplx& operator()(int r, int c) { return data_[static_cast<size_t>(r) * cols_ + c]; }
  const cplx& operator()(int r, int c) const { return data_[static_cast<size_t>(r) * cols_ + c]; }

  const std::vector<cplx>& data() const { return data_; }

  ComplexMatrix adjoint() const;
  ComplexMatrix operator+(const ComplexMatrix& o) const;
  ComplexMatrix operator-(const ComplexMatrix& o) const;
  ComplexMatrix operator*(const ComplexMatrix& o) const;
  ComplexMatrix operator*(cplx s) const;
  std::vector<cplx> apply(const std::vector<cplx>& v) const;

  cplx trace() const;
  double max_abs() const;
  bool is_hermitian(double eps = tol().hermitian) const;
  // Column c as a vector.
  std::vector<cplx> column(int c) const;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<cplx> data_;
};

// Normalized pure state; dimension is amps.size().
struct StateVector {
  std::vector<cplx> amps;

  int dim() const { return static_cast<int>(amps.size()); }
  double norm() const;
  // Throws if |norm - 1| > tol().normalization.
  void check_normalized() const;
};

// Bipartite Schmidt decomposition: sum_k coeff_k |A_k>|B_k>.
// Coefficients are nonnegative and descending; basisA columns are
// phase-canonicalized (first nonzero entry real positive) with the
// compensating phase folded into basisB so reconstruction stays exact.
struct SchmidtForm {
  std::vector<double> coefficients;
  std::vector<std::vector<cplx>> basisA;
  std::vector<std::vector<cplx>> basisB;

  int rank(double eps = tol().truncation) const;
};

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);
std::vector<cplx> kron_vec(const std::vector<cplx>& u, const std::vector<cplx>& v);

struct EigenSystem {
  std::vector<double> values;  // descending
  ComplexMatrix vectors;       // orthonormal columns, values[k] <-> column k
};

// Cyclic Jacobi on Hermitian matrices, dims <= 16. Eigenvector columns are
// phase-canonicalized for reproducible output.
EigenSystem eig_hermitian(const ComplexMatrix& h);

SchmidtForm schmidt(const StateVector& state, int dimA, int dimB);

inline double abs2(cplx z) { return std::norm(z); }

}  // namespace nlg
