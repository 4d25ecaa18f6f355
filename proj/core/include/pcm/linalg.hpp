#pragma once

#include <array>
#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace pcm {

using Complex = std::complex<double>;

// Shared numeric tolerances. Every dimension in this library is at most 16,
// so double precision carries ~1e-14 of headroom; anything looser than these
// constants would hide logic errors rather than round-off.
inline constexpr double kEqTol = 1e-12;     // amplitude / weight equality
inline constexpr double kPsdSlack = 1e-10;  // lower bound on quadratic forms

// Qubit convention, used by every module: a register labelled
// (q0, q1, ..., q_{n-1}) left to right stores the amplitude of
// |b0 b1 ... b_{n-1}> at index b0*2^(n-1) + b1*2^(n-2) + ... + b_{n-1},
// i.e. the leftmost ket label is the most significant bit of the index.

/// Normalized state vector of 1 to 4 qubits.
class PureState {
 public:
  // Requires a power-of-two length in [2, 16], finite entries and unit norm
  // (within kEqTol). Use normalized() to rescale arbitrary amplitudes.
  explicit PureState(std::vector<Complex> amplitudes);

  static PureState normalized(std::vector<Complex> amplitudes);
  static PureState basis_state(int n_qubits, std::size_t index);

  int n_qubits() const { return n_qubits_; }
  std::size_t dim() const { return amplitudes_.size(); }
  const std::vector<Complex>& amplitudes() const { return amplitudes_; }
  Complex operator[](std::size_t i) const { return amplitudes_[i]; }

  // Entrywise complex conjugate in the computational basis.
  PureState conjugate() const;

 private:
  int n_qubits_;
  std::vector<Complex> amplitudes_;
};

/// Dense square complex matrix of dimension 2^n, n <= 4. Row-major.
class CMatrix {
 public:
  CMatrix() = default;
  explicit CMatrix(std::size_t dim);
  static CMatrix identity(std::size_t dim);

  std::size_t dim() const { return dim_; }
  int n_qubits() const;

  Complex& operator()(std::size_t r, std::size_t c) { return data_[r * dim_ + c]; }
  Complex operator()(std::size_t r, std::size_t c) const { return data_[r * dim_ + c]; }

  CMatrix adjoint() const;
  Complex trace() const;
  double frobenius_norm() const;
  double max_abs_diff(const CMatrix& other) const;
  bool is_hermitian(double tol = kEqTol) const;
  bool is_finite() const;

  CMatrix& operator+=(const CMatrix& other);
  CMatrix& operator-=(const CMatrix& other);
  CMatrix& operator*=(Complex s);

  friend CMatrix operator+(CMatrix a, const CMatrix& b) { return a += b; }
  friend CMatrix operator-(CMatrix a, const CMatrix& b) { return a -= b; }
  friend CMatrix operator*(Complex s, CMatrix m) { return m *= s; }
  friend CMatrix operator*(const CMatrix& a, const CMatrix& b);

 private:
  std::size_t dim_ = 0;
  std::vector<Complex> data_;
};

CMatrix kron(const CMatrix& a, const CMatrix& b);

// The 2x2 Pauli matrices.
CMatrix pauli_x();
CMatrix pauli_y();
CMatrix pauli_z();

// <u|M|u> for a vector u of matching dimension.
Complex quadratic_form(const CMatrix& m, std::span<const Complex> u);

/// Validated density matrix of 1 or 2 qubits: Hermitian within kEqTol,
/// unit trace within kEqTol, and nonnegative (within kPsdSlack) on a fixed
/// family of probe quadratic forms. No eigendecomposition is performed.
class DensityMatrix {
 public:
  explicit DensityMatrix(CMatrix m);

  static DensityMatrix maximally_mixed(int n_qubits);

  int n_qubits() const { return m_.n_qubits(); }
  std::size_t dim() const { return m_.dim(); }
  const CMatrix& matrix() const { return m_; }
  Complex operator()(std::size_t r, std::size_t c) const { return m_(r, c); }

 private:
  CMatrix m_;
};

// Kronecker product of state vectors; a's qubits become the leading
// (most significant) block of the result. Combined size must stay <= 4 qubits.
PureState tensor(const PureState& a, const PureState& b);

// |s><s| for any state of up to 4 qubits. Hermitian, trace 1, rank 1.
CMatrix outer_product(const PureState& s);

// Reduced matrix on the kept qubits, in the order listed in `keep`
// (keep[0] becomes the most significant qubit of the result). `keep` must be
// a nonempty list of distinct in-range qubit indices; keeping every qubit in
// order is the identity. Trace is preserved.
CMatrix partial_trace(const CMatrix& m, std::span<const int> keep);
CMatrix partial_trace(const CMatrix& m, std::initializer_list<int> keep);

// <psi|rho|psi> for a single-qubit pure state and density matrix.
// The imaginary residue must stay below kEqTol; the result is clamped
// to [0, 1] after an out-of-range check at the same tolerance.
double fidelity_pure(const PureState& psi, const DensityMatrix& rho);

// (tr(rho sx), tr(rho sy), tr(rho sz)); the length never exceeds 1 + kPsdSlack.
std::array<double, 3> bloch_vector(const DensityMatrix& rho);

}  // namespace pcm
