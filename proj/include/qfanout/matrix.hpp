// Dense complex vectors and square matrices for the three-qubit toolkit.
//
// Everything here is a plain value type over std::complex<double>. Sizes are
// tiny (dim 2, 4 or 8), so no attempt is made at sparse storage or clever
// kernels; clarity and exactness win.
#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <stdexcept>
#include <vector>

namespace qfanout {

using cxd = std::complex<double>;
using StateVector = std::vector<cxd>;

class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  explicit ComplexMatrix(std::size_t dim) : dim_(dim), a_(dim * dim) {}

  static ComplexMatrix identity(std::size_t dim) {
    ComplexMatrix m(dim);
    for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1.0;
    return m;
  }

  std::size_t dim() const { return dim_; }

  cxd& operator()(std::size_t r, std::size_t c) { return a_[r * dim_ + c]; }
  const cxd& operator()(std::size_t r, std::size_t c) const {
    return a_[r * dim_ + c];
  }

  const std::vector<cxd>& entries() const { return a_; }

 private:
  std::size_t dim_ = 0;
  std::vector<cxd> a_;
};

inline void require_same_dim(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.dim() != b.dim())
    throw std::invalid_argument("matrix dimension mismatch");
}

inline ComplexMatrix operator+(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_same_dim(a, b);
  ComplexMatrix r(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j) r(i, j) = a(i, j) + b(i, j);
  return r;
}

inline ComplexMatrix operator-(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_same_dim(a, b);
  ComplexMatrix r(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j) r(i, j) = a(i, j) - b(i, j);
  return r;
}

inline ComplexMatrix operator*(const cxd& s, const ComplexMatrix& m) {
  ComplexMatrix r(m.dim());
  for (std::size_t i = 0; i < m.dim(); ++i)
    for (std::size_t j = 0; j < m.dim(); ++j) r(i, j) = s * m(i, j);
  return r;
}

inline ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_same_dim(a, b);
  const std::size_t n = a.dim();
  ComplexMatrix r(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      const cxd aik = a(i, k);
      if (aik == cxd{0.0, 0.0}) continue;
      for (std::size_t j = 0; j < n; ++j) r(i, j) += aik * b(k, j);
    }
  return r;
}

inline ComplexMatrix mat_mul(const ComplexMatrix& a, const ComplexMatrix& b) {
  return a * b;
}

// Conjugate transpose.
inline ComplexMatrix dagger(const ComplexMatrix& m) {
  ComplexMatrix r(m.dim());
  for (std::size_t i = 0; i < m.dim(); ++i)
    for (std::size_t j = 0; j < m.dim(); ++j) r(i, j) = std::conj(m(j, i));
  return r;
}

// Kronecker product; the left factor indexes the most significant block.
inline ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  const std::size_t na = a.dim(), nb = b.dim();
  ComplexMatrix r(na * nb);
  for (std::size_t i = 0; i < na; ++i)
    for (std::size_t j = 0; j < na; ++j) {
      const cxd aij = a(i, j);
      if (aij == cxd{0.0, 0.0}) continue;
      for (std::size_t k = 0; k < nb; ++k)
        for (std::size_t l = 0; l < nb; ++l)
          r(i * nb + k, j * nb + l) = aij * b(k, l);
    }
  return r;
}

// Three-fold product with factor order (I-qubit, C-qubit, D-qubit). Combined
// with the (|1>,|0>) single-qubit ordering this reproduces the row order
// |111>, |110>, ..., |000> used throughout (see basis.hpp).
inline ComplexMatrix kron3(const ComplexMatrix& a, const ComplexMatrix& b,
                           const ComplexMatrix& c) {
  if (a.dim() != 2 || b.dim() != 2 || c.dim() != 2)
    throw std::invalid_argument("kron3 expects three 2x2 factors");
  return kron(kron(a, b), c);
}

inline double frobenius_norm(const ComplexMatrix& m) {
  double s = 0.0;
  for (const cxd& v : m.entries()) s += std::norm(v);
  return std::sqrt(s);
}

inline double frobenius_distance(const ComplexMatrix& a,
                                 const ComplexMatrix& b) {
  require_same_dim(a, b);
  double s = 0.0;
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j) s += std::norm(a(i, j) - b(i, j));
  return std::sqrt(s);
}

// ||M M^dag - I||_F; zero for unitary M.
inline double unitarity_defect(const ComplexMatrix& m) {
  return frobenius_distance(m * dagger(m), ComplexMatrix::identity(m.dim()));
}

// ||M - M^dag||_F; zero for Hermitian M.
inline double hermiticity_defect(const ComplexMatrix& m) {
  return frobenius_distance(m, dagger(m));
}

inline bool all_finite(const ComplexMatrix& m) {
  for (const cxd& v : m.entries())
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) return false;
  return true;
}

// Matrix exponential by scaling-and-squaring with an adaptive Taylor kernel.
// The argument is the full exponent (for a unitary result pass -i*H*dt/hbar).
// With the norm scaled below 1/2 the series is summed until terms fall under
// 1e-20 relative, which is well past order 12 at this size.
inline ComplexMatrix mat_exp(const ComplexMatrix& m) {
  if (!all_finite(m)) throw std::invalid_argument("mat_exp: non-finite entry");
  double nrm = frobenius_norm(m);
  int squarings = 0;
  while (nrm > 0.5) {
    nrm *= 0.5;
    ++squarings;
  }
  const ComplexMatrix x = cxd{std::ldexp(1.0, -squarings), 0.0} * m;

  ComplexMatrix sum = ComplexMatrix::identity(m.dim());
  ComplexMatrix term = ComplexMatrix::identity(m.dim());
  for (int k = 1; k <= 40; ++k) {
    term = cxd{1.0 / k, 0.0} * (term * x);
    sum = sum + term;
    if (frobenius_norm(term) <= 1e-20 * frobenius_norm(sum)) break;
  }
  for (int i = 0; i < squarings; ++i) sum = sum * sum;
  return sum;
}

// --- vectors ---------------------------------------------------------------

inline cxd inner(const StateVector& a, const StateVector& b) {
  if (a.size() != b.size())
    throw std::invalid_argument("state dimension mismatch");
  cxd s{0.0, 0.0};
  for (std::size_t i = 0; i < a.size(); ++i) s += std::conj(a[i]) * b[i];
  return s;
}

inline double norm(const StateVector& v) {
  double s = 0.0;
  for (const cxd& x : v) s += std::norm(x);
  return std::sqrt(s);
}

inline StateVector normalized(const StateVector& v) {
  const double n = norm(v);
  if (n == 0.0) throw std::invalid_argument("cannot normalize zero vector");
  StateVector r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = v[i] / n;
  return r;
}

inline StateVector apply_matrix(const ComplexMatrix& m, const StateVector& v) {
  if (m.dim() != v.size())
    throw std::invalid_argument("matrix/state dimension mismatch");
  StateVector r(v.size());
  for (std::size_t i = 0; i < m.dim(); ++i) {
    cxd s{0.0, 0.0};
    for (std::size_t j = 0; j < m.dim(); ++j) s += m(i, j) * v[j];
    r[i] = s;
  }
  return r;
}

inline double distance(const StateVector& a, const StateVector& b) {
  if (a.size() != b.size())
    throw std::invalid_argument("state dimension mismatch");
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += std::norm(a[i] - b[i]);
  return std::sqrt(s);
}

// --- reduced states --------------------------------------------------------

using DensityMatrix = ComplexMatrix;

// Reduced density matrix of a normalized 8-dim pure state over the kept
// tensor positions (0 = leftmost/most significant factor). The keep set must
// be a strict, non-empty subset of {0,1,2}, listed in ascending order.
inline DensityMatrix partial_trace(const StateVector& state,
                                   const std::vector<int>& keep) {
  if (state.size() != 8)
    throw std::invalid_argument("partial_trace expects an 8-dim state");
  if (std::abs(norm(state) - 1.0) > 1e-12)
    throw std::invalid_argument("partial_trace expects a normalized state");
  if (keep.empty() || keep.size() >= 3)
    throw std::invalid_argument("keep set must name one or two qubits");
  for (std::size_t i = 0; i < keep.size(); ++i) {
    if (keep[i] < 0 || keep[i] > 2)
      throw std::invalid_argument("keep positions must be in {0,1,2}");
    if (i > 0 && keep[i] <= keep[i - 1])
      throw std::invalid_argument("keep positions must be strictly ascending");
  }

  std::vector<int> traced;
  for (int p = 0; p < 3; ++p)
    if (std::find(keep.begin(), keep.end(), p) == keep.end())
      traced.push_back(p);

  const std::size_t kd = std::size_t{1} << keep.size();
  const std::size_t td = std::size_t{1} << traced.size();

  const auto row_for = [&](std::size_t kbits, std::size_t tbits) {
    int row = 0;
    for (std::size_t i = 0; i < keep.size(); ++i)
      row |= static_cast<int>((kbits >> (keep.size() - 1 - i)) & 1)
             << (2 - keep[i]);
    for (std::size_t i = 0; i < traced.size(); ++i)
      row |= static_cast<int>((tbits >> (traced.size() - 1 - i)) & 1)
             << (2 - traced[i]);
    return row;
  };

  DensityMatrix rho(kd);
  for (std::size_t i = 0; i < kd; ++i)
    for (std::size_t j = 0; j < kd; ++j) {
      cxd s{0.0, 0.0};
      for (std::size_t e = 0; e < td; ++e)
        s += state[row_for(i, e)] * std::conj(state[row_for(j, e)]);
      rho(i, j) = s;
    }
  return rho;
}

// <psi| rho |psi> for a pure reference state.
inline double fidelity(const DensityMatrix& rho, const StateVector& psi) {
  if (rho.dim() != psi.size())
    throw std::invalid_argument("fidelity: dimension mismatch");
  cxd s{0.0, 0.0};
  for (std::size_t i = 0; i < rho.dim(); ++i)
    for (std::size_t j = 0; j < rho.dim(); ++j)
      s += std::conj(psi[i]) * rho(i, j) * psi[j];
  return s.real();
}

}  // namespace qfanout
