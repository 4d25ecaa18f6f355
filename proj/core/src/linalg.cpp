#include "pcm/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace pcm {

namespace {

bool is_finite(Complex c) {
  return std::isfinite(c.real()) && std::isfinite(c.imag());
}

int qubits_for_dim(std::size_t dim) {
  for (int n = 1; n <= 4; ++n) {
    if (dim == (std::size_t{1} << n)) return n;
  }
  throw std::invalid_argument("dimension must be 2^n with 1 <= n <= 4, got " +
                              std::to_string(dim));
}

double norm_sqr(const std::vector<Complex>& amps) {
  double s = 0.0;
  for (Complex a : amps) s += std::norm(a);
  return s;
}

}  // namespace

PureState::PureState(std::vector<Complex> amplitudes)
    : n_qubits_(qubits_for_dim(amplitudes.size())), amplitudes_(std::move(amplitudes)) {
  for (Complex a : amplitudes_) {
    if (!is_finite(a)) throw std::invalid_argument("non-finite amplitude");
  }
  if (std::abs(norm_sqr(amplitudes_) - 1.0) > kEqTol) {
    throw std::invalid_argument("state vector is not normalized");
  }
}

PureState PureState::normalized(std::vector<Complex> amplitudes) {
  const double n2 = norm_sqr(amplitudes);
  if (!(n2 > kEqTol)) throw std::invalid_argument("cannot normalize a (near-)zero vector");
  const double inv = 1.0 / std::sqrt(n2);
  for (Complex& a : amplitudes) a *= inv;
  return PureState(std::move(amplitudes));
}

PureState PureState::basis_state(int n_qubits, std::size_t index) {
  if (n_qubits < 1 || n_qubits > 4) throw std::invalid_argument("n_qubits out of range");
  std::vector<Complex> amps(std::size_t{1} << n_qubits, 0.0);
  if (index >= amps.size()) throw std::invalid_argument("basis index out of range");
  amps[index] = 1.0;
  return PureState(std::move(amps));
}

PureState PureState::conjugate() const {
  std::vector<Complex> amps(amplitudes_);
  for (Complex& a : amps) a = std::conj(a);
  return PureState(std::move(amps));
}

CMatrix::CMatrix(std::size_t dim) : dim_(dim), data_(dim * dim, Complex{0.0, 0.0}) {
  qubits_for_dim(dim);
}

CMatrix CMatrix::identity(std::size_t dim) {
  CMatrix m(dim);
  for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1.0;
  return m;
}

int CMatrix::n_qubits() const { return qubits_for_dim(dim_); }

CMatrix CMatrix::adjoint() const {
  CMatrix out(dim_);
  for (std::size_t r = 0; r < dim_; ++r)
    for (std::size_t c = 0; c < dim_; ++c) out(c, r) = std::conj((*this)(r, c));
  return out;
}

Complex CMatrix::trace() const {
  Complex t = 0.0;
  for (std::size_t i = 0; i < dim_; ++i) t += (*this)(i, i);
  return t;
}

double CMatrix::frobenius_norm() const {
  double s = 0.0;
  for (Complex v : data_) s += std::norm(v);
  return std::sqrt(s);
}

double CMatrix::max_abs_diff(const CMatrix& other) const {
  if (other.dim_ != dim_) throw std::invalid_argument("dimension mismatch");
  double m = 0.0;
  for (std::size_t i = 0; i < data_.size(); ++i) {
    m = std::max(m, std::abs(data_[i] - other.data_[i]));
  }
  return m;
}

bool CMatrix::is_hermitian(double tol) const {
  for (std::size_t r = 0; r < dim_; ++r)
    for (std::size_t c = r; c < dim_; ++c)
      if (std::abs((*this)(r, c) - std::conj((*this)(c, r))) > tol) return false;
  return true;
}

bool CMatrix::is_finite() const {
  for (Complex v : data_)
    if (!pcm::is_finite(v)) return false;
  return true;
}

CMatrix& CMatrix::operator+=(const CMatrix& other) {
  if (other.dim_ != dim_) throw std::invalid_argument("dimension mismatch");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += other.data_[i];
  return *this;
}

CMatrix& CMatrix::operator-=(const CMatrix& other) {
  if (other.dim_ != dim_) throw std::invalid_argument("dimension mismatch");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= other.data_[i];
  return *this;
}

CMatrix& CMatrix::operator*=(Complex s) {
  for (Complex& v : data_) v *= s;
  return *this;
}

CMatrix operator*(const CMatrix& a, const CMatrix& b) {
  if (a.dim_ != b.dim_) throw std::invalid_argument("dimension mismatch");
  CMatrix out(a.dim_);
  for (std::size_t r = 0; r < a.dim_; ++r)
    for (std::size_t k = 0; k < a.dim_; ++k) {
      const Complex ark = a(r, k);
      if (ark == Complex{0.0, 0.0}) continue;
      for (std::size_t c = 0; c < a.dim_; ++c) out(r, c) += ark * b(k, c);
    }
  return out;
}

CMatrix kron(const CMatrix& a, const CMatrix& b) {
  const std::size_t da = a.dim(), db = b.dim();
  CMatrix out(da * db);
  for (std::size_t ra = 0; ra < da; ++ra)
    for (std::size_t ca = 0; ca < da; ++ca)
      for (std::size_t rb = 0; rb < db; ++rb)
        for (std::size_t cb = 0; cb < db; ++cb)
          out(ra * db + rb, ca * db + cb) = a(ra, ca) * b(rb, cb);
  return out;
}

CMatrix pauli_x() {
  CMatrix m(2);
  m(0, 1) = 1.0;
  m(1, 0) = 1.0;
  return m;
}

CMatrix pauli_y() {
  CMatrix m(2);
  m(0, 1) = Complex{0.0, -1.0};
  m(1, 0) = Complex{0.0, 1.0};
  return m;
}

CMatrix pauli_z() {
  CMatrix m(2);
  m(0, 0) = 1.0;
  m(1, 1) = -1.0;
  return m;
}

Complex quadratic_form(const CMatrix& m, std::span<const Complex> u) {
  if (u.size() != m.dim()) throw std::invalid_argument("dimension mismatch");
  Complex s = 0.0;
  for (std::size_t r = 0; r < m.dim(); ++r) {
    Complex row = 0.0;
    for (std::size_t c = 0; c < m.dim(); ++c) row += m(r, c) * u[c];
    s += std::conj(u[r]) * row;
  }
  return s;
}

namespace {

// Probe directions for the positivity check: every basis vector plus all
// (e_i + phase*e_j)/sqrt(2) pairs with phase in {1, -1, i, -i}. These reach
// every 2x2 principal block without an eigensolver.
void check_probe_positivity(const CMatrix& m) {
  const std::size_t d = m.dim();
  std::vector<Complex> u(d, 0.0);
  for (std::size_t i = 0; i < d; ++i) {
    if (m(i, i).real() < -kPsdSlack) {
      throw std::invalid_argument("density matrix has a negative diagonal entry");
    }
  }
  static const Complex phases[4] = {{1, 0}, {-1, 0}, {0, 1}, {0, -1}};
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = i + 1; j < d; ++j) {
      for (Complex ph : phases) {
        std::fill(u.begin(), u.end(), Complex{0.0, 0.0});
        u[i] = inv_sqrt2;
        u[j] = ph * inv_sqrt2;
        if (quadratic_form(m, u).real() < -kPsdSlack) {
          throw std::invalid_argument("density matrix fails a positivity probe");
        }
      }
    }
  }
}

}  // namespace

DensityMatrix::DensityMatrix(CMatrix m) : m_(std::move(m)) {
  const int n = m_.n_qubits();
  if (n > 2) throw std::invalid_argument("density matrix limited to 1 or 2 qubits");
  if (!m_.is_finite()) throw std::invalid_argument("non-finite density matrix entry");
  if (!m_.is_hermitian(kEqTol)) throw std::invalid_argument("density matrix is not Hermitian");
  if (std::abs(m_.trace() - Complex{1.0, 0.0}) > kEqTol) {
    throw std::invalid_argument("density matrix trace is not 1");
  }
  check_probe_positivity(m_);
}

DensityMatrix DensityMatrix::maximally_mixed(int n_qubits) {
  if (n_qubits < 1 || n_qubits > 2) throw std::invalid_argument("n_qubits out of range");
  const std::size_t d = std::size_t{1} << n_qubits;
  CMatrix m = CMatrix::identity(d);
  m *= Complex{1.0 / static_cast<double>(d), 0.0};
  return DensityMatrix(std::move(m));
}

PureState tensor(const PureState& a, const PureState& b) {
  if (a.n_qubits() + b.n_qubits() > 4) {
    throw std::invalid_argument("tensor product exceeds 4 qubits");
  }
  std::vector<Complex> amps(a.dim() * b.dim());
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < b.dim(); ++j) amps[i * b.dim() + j] = a[i] * b[j];
  return PureState(std::move(amps));
}

CMatrix outer_product(const PureState& s) {
  CMatrix m(s.dim());
  for (std::size_t r = 0; r < s.dim(); ++r)
    for (std::size_t c = 0; c < s.dim(); ++c) m(r, c) = s[r] * std::conj(s[c]);
  return m;
}

CMatrix partial_trace(const CMatrix& m, std::span<const int> keep) {
  const int n = m.n_qubits();
  if (keep.empty()) throw std::invalid_argument("keep must be nonempty");
  unsigned seen = 0;
  for (int q : keep) {
    if (q < 0 || q >= n) throw std::invalid_argument("keep index out of range");
    if (seen & (1u << q)) throw std::invalid_argument("duplicate keep index");
    seen |= 1u << q;
  }
  std::vector<int> traced;
  for (int q = 0; q < n; ++q) {
    if (!(seen & (1u << q))) traced.push_back(q);
  }

  const int nk = static_cast<int>(keep.size());
  const int nt = static_cast<int>(traced.size());
  const std::size_t kd = std::size_t{1} << nk;
  const std::size_t td = std::size_t{1} << nt;

  // Qubit q owns bit (n-1-q) of a full index; bit b of a reduced index maps
  // back to qubit keep[b].
  CMatrix out(kd);
  for (std::size_t r = 0; r < kd; ++r) {
    for (std::size_t c = 0; c < kd; ++c) {
      std::size_t ri = 0, ci = 0;
      for (int b = 0; b < nk; ++b) {
        const int shift = n - 1 - keep[b];
        ri |= ((r >> (nk - 1 - b)) & 1u) << shift;
        ci |= ((c >> (nk - 1 - b)) & 1u) << shift;
      }
      Complex sum = 0.0;
      for (std::size_t t = 0; t < td; ++t) {
        std::size_t ti = 0;
        for (int b = 0; b < nt; ++b) {
          ti |= ((t >> (nt - 1 - b)) & 1u) << (n - 1 - traced[b]);
        }
        sum += m(ri | ti, ci | ti);
      }
      out(r, c) = sum;
    }
  }
  return out;
}

CMatrix partial_trace(const CMatrix& m, std::initializer_list<int> keep) {
  return partial_trace(m, std::span<const int>(keep.begin(), keep.size()));
}

double fidelity_pure(const PureState& psi, const DensityMatrix& rho) {
  if (psi.n_qubits() != 1 || rho.n_qubits() != 1) {
    throw std::invalid_argument("fidelity_pure expects single-qubit arguments");
  }
  const Complex f = quadratic_form(rho.matrix(), psi.amplitudes());
  if (std::abs(f.imag()) > kEqTol) throw std::invalid_argument("fidelity has imaginary residue");
  if (f.real() < -kEqTol || f.real() > 1.0 + kEqTol) {
    throw std::invalid_argument("fidelity outside [0, 1]");
  }
  return std::clamp(f.real(), 0.0, 1.0);
}

std::array<double, 3> bloch_vector(const DensityMatrix& rho) {
  if (rho.n_qubits() != 1) throw std::invalid_argument("bloch_vector expects one qubit");
  // tr(rho sx) = 2 Re rho01, tr(rho sy) = -2 Im rho01, tr(rho sz) = rho00 - rho11.
  const Complex r01 = rho(0, 1);
  std::array<double, 3> r = {2.0 * r01.real(), -2.0 * r01.imag(),
                             (rho(0, 0) - rho(1, 1)).real()};
  const double len = std::sqrt(r[0] * r[0] + r[1] * r[1] + r[2] * r[2]);
  if (len > 1.0 + kPsdSlack) throw std::invalid_argument("Bloch vector longer than 1");
  return r;
}

}  // namespace pcm
