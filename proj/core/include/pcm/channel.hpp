#pragma once

#include <array>
#include <random>

#include "pcm/bell.hpp"
#include "pcm/linalg.hpp"

namespace pcm {

// Two channel probabilities whose (px, py, pz) entries differ pairwise by
// less than this are treated as the same depolarizing channel.
inline constexpr double kDepolarizingTol = 1e-9;

enum class PauliError { I, X, Y, Z };

const char* to_string(PauliError e);

/// Single-qubit Pauli channel: applies sx, sy, sz with probabilities
/// px, py, pz and the identity otherwise. The total error probability
/// p = px + py + pz is derived, never stored.
class PauliChannel {
 public:
  // Probabilities must be >= 0 (negatives within kEqTol are clamped to 0)
  // with px + py + pz <= 1 within kEqTol.
  PauliChannel(double px, double py, double pz);

  double px() const { return px_; }
  double py() const { return py_; }
  double pz() const { return pz_; }
  double p() const { return px_ + py_ + pz_; }

 private:
  double px_, py_, pz_;
};

/// Convex weights on (PhiPlus, PhiMinus, PsiPlus, PsiMinus). Only the last
/// three are stored; the PhiPlus weight is derived as one minus their sum so
/// that converting to a channel and back is exact.
class BellDiagonal {
 public:
  // Weights must each be >= -kEqTol (clamped to 0) and sum to 1 within
  // kEqTol; the given PhiPlus weight is checked against the derived value.
  BellDiagonal(double phi_plus, double phi_minus, double psi_plus, double psi_minus);

  double phi_plus() const { return 1.0 - ((psi_plus_ + psi_minus_) + phi_minus_); }
  double phi_minus() const { return phi_minus_; }
  double psi_plus() const { return psi_plus_; }
  double psi_minus() const { return psi_minus_; }

  double weight(BellKind k) const;
  std::array<double, 4> weights() const {
    return {phi_plus(), phi_minus_, psi_plus_, psi_minus_};
  }

 private:
  double phi_minus_, psi_plus_, psi_minus_;
};

/// (1-p) rho + px sx rho sx + py sy rho sy + pz sz rho sz.
DensityMatrix apply(const PauliChannel& ch, const DensityMatrix& rho);

/// Bell-state mixture produced by sending the second half of PhiPlus through
/// the channel (the reference qubit comes first): weights (1-p, pz, px, py).
BellDiagonal choi_state(const PauliChannel& ch);

/// Inverse of choi_state: (px, py, pz) = (psi_plus, psi_minus, phi_minus).
PauliChannel channel_from_bell_diagonal(const BellDiagonal& w);

struct BellDecomposition {
  BellDiagonal weights;
  // Frobenius norm of rho minus its Bell-diagonal part; callers that require
  // an exact mixture of Bell states should check this against kEqTol-scale.
  double offdiag_residual;
};

/// Diagonal weights <Bell_k|rho|Bell_k> of a two-qubit state, plus the
/// residual of everything off the Bell diagonal.
BellDecomposition bell_diagonal_decompose(const DensityMatrix& rho);

/// Scaling (lx, ly, lz) of the Bloch vector under the channel:
/// lx = 1-2(py+pz), ly = 1-2(px+pz), lz = 1-2(px+py).
std::array<double, 3> bloch_action(const PauliChannel& ch);

bool is_depolarizing(const PauliChannel& ch, double tol = kDepolarizingTol);

/// One Pauli error drawn from (1-p, px, py, pz). Deterministic given the
/// generator state; the caller owns the generator.
PauliError sample_error(const PauliChannel& ch, std::mt19937_64& rng);

}  // namespace pcm
