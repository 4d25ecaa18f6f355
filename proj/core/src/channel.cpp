#include "pcm/channel.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace pcm {

namespace {

double checked_probability(double p, const char* name) {
  if (!std::isfinite(p)) throw std::invalid_argument(std::string(name) + " is not finite");
  if (p < -kEqTol) throw std::invalid_argument(std::string(name) + " is negative");
  return p < 0.0 ? 0.0 : p;
}

}  // namespace

const char* to_string(PauliError e) {
  switch (e) {
    case PauliError::I: return "I";
    case PauliError::X: return "X";
    case PauliError::Y: return "Y";
    case PauliError::Z: return "Z";
  }
  throw std::invalid_argument("bad PauliError");
}

PauliChannel::PauliChannel(double px, double py, double pz)
    : px_(checked_probability(px, "px")),
      py_(checked_probability(py, "py")),
      pz_(checked_probability(pz, "pz")) {
  if (p() > 1.0 + kEqTol) throw std::invalid_argument("px + py + pz exceeds 1");
}

BellDiagonal::BellDiagonal(double phi_plus, double phi_minus, double psi_plus,
                           double psi_minus)
    : phi_minus_(checked_probability(phi_minus, "phi_minus weight")),
      psi_plus_(checked_probability(psi_plus, "psi_plus weight")),
      psi_minus_(checked_probability(psi_minus, "psi_minus weight")) {
  if (!std::isfinite(phi_plus)) throw std::invalid_argument("phi_plus weight is not finite");
  const double derived = this->phi_plus();
  if (derived < -kEqTol) throw std::invalid_argument("weights sum beyond 1");
  if (std::abs(phi_plus - derived) > kEqTol) {
    throw std::invalid_argument("Bell weights do not sum to 1");
  }
}

double BellDiagonal::weight(BellKind k) const {
  switch (k) {
    case BellKind::PhiPlus: return phi_plus();
    case BellKind::PhiMinus: return phi_minus_;
    case BellKind::PsiPlus: return psi_plus_;
    case BellKind::PsiMinus: return psi_minus_;
  }
  throw std::invalid_argument("bad BellKind");
}

DensityMatrix apply(const PauliChannel& ch, const DensityMatrix& rho) {
  if (rho.n_qubits() != 1) throw std::invalid_argument("apply expects a single qubit");
  const CMatrix& m = rho.matrix();
  const CMatrix sx = pauli_x(), sy = pauli_y(), sz = pauli_z();
  CMatrix out = Complex{1.0 - ch.p(), 0.0} * m;
  out += Complex{ch.px(), 0.0} * (sx * m * sx);
  out += Complex{ch.py(), 0.0} * (sy * m * sy);
  out += Complex{ch.pz(), 0.0} * (sz * m * sz);
  return DensityMatrix(std::move(out));
}

BellDiagonal choi_state(const PauliChannel& ch) {
  return BellDiagonal(1.0 - ch.p(), ch.pz(), ch.px(), ch.py());
}

PauliChannel channel_from_bell_diagonal(const BellDiagonal& w) {
  return PauliChannel(w.psi_plus(), w.psi_minus(), w.phi_minus());
}

BellDecomposition bell_diagonal_decompose(const DensityMatrix& rho) {
  if (rho.n_qubits() != 2) throw std::invalid_argument("expected a two-qubit state");
  std::array<double, 4> w{};
  CMatrix residue = rho.matrix();
  for (std::size_t k = 0; k < 4; ++k) {
    const PureState bell = bell_state(kBellKinds[k]);
    w[k] = quadratic_form(rho.matrix(), bell.amplitudes()).real();
    residue -= Complex{w[k], 0.0} * outer_product(bell);
  }
  return BellDecomposition{BellDiagonal(w[0], w[1], w[2], w[3]), residue.frobenius_norm()};
}

std::array<double, 3> bloch_action(const PauliChannel& ch) {
  return {1.0 - 2.0 * (ch.py() + ch.pz()), 1.0 - 2.0 * (ch.px() + ch.pz()),
          1.0 - 2.0 * (ch.px() + ch.py())};
}

bool is_depolarizing(const PauliChannel& ch, double tol) {
  const double lo = std::min({ch.px(), ch.py(), ch.pz()});
  const double hi = std::max({ch.px(), ch.py(), ch.pz()});
  return hi - lo < tol;
}

PauliError sample_error(const PauliChannel& ch, std::mt19937_64& rng) {
  const double u = std::uniform_real_distribution<double>(0.0, 1.0)(rng);
  if (u < ch.px()) return PauliError::X;
  if (u < ch.px() + ch.py()) return PauliError::Y;
  if (u < ch.p()) return PauliError::Z;
  return PauliError::I;
}

}  // namespace pcm
