#include "pcm/cloner.hpp"

#include <cmath>
#include <stdexcept>

namespace pcm {

namespace {

bool all_real_nonneg(const DoubleBellAmps& amps) {
  for (Complex a : amps.as_array()) {
    if (std::abs(a.imag()) > kEqTol || a.real() < -kEqTol) return false;
  }
  return true;
}

PauliChannel channel_from_amps(const DoubleBellAmps& amps) {
  return PauliChannel(std::norm(amps.x()), std::norm(amps.y()), std::norm(amps.z()));
}

}  // namespace

PcmParams::PcmParams(DoubleBellAmps amps)
    : amps_(amps), real_nonneg_(all_real_nonneg(amps)) {}

PureState build_state(const PcmParams& params) {
  const auto amps = params.amps().as_array();
  std::vector<Complex> out(16, Complex{0.0, 0.0});
  for (std::size_t k = 0; k < 4; ++k) {
    const PureState term = double_bell_state(kBellKinds[k], kBellKinds[k], Partition::AB_CD);
    for (std::size_t i = 0; i < 16; ++i) out[i] += amps[k] * term[i];
  }
  return PureState(std::move(out));
}

OutputChannels output_channels(const PcmParams& params) {
  const DoubleBellAmps& a = params.amps();
  return OutputChannels{
      channel_from_amps(a),
      channel_from_amps(repartition(a, Partition::AB_CD, Partition::AC_BD)),
      channel_from_amps(repartition(a, Partition::AB_CD, Partition::AD_BC)),
  };
}

PcmReport clone(const PcmParams& params, const PureState& probe) {
  if (probe.n_qubits() != 1) throw std::invalid_argument("probe must be a single qubit");
  const OutputChannels ch = output_channels(params);
  const DensityMatrix rho(outer_product(probe));
  const double f1 = fidelity_pure(probe, apply(ch.y1, rho));
  const double f2 = fidelity_pure(probe, apply(ch.y2, rho));
  return PcmReport{ch.y1, ch.y2,   ch.y3,
                   f1,    f2,      is_depolarizing(ch.y1),
                   is_depolarizing(ch.y2)};
}

PcmReport clone(const PcmParams& params) {
  return clone(params, PureState::basis_state(1, 0));
}

PcmParams ucm_params() {
  const double v = std::sqrt(3.0 / 4.0);
  const double w = std::sqrt(1.0 / 12.0);
  return PcmParams(DoubleBellAmps(v, w, w, w));
}

PcmParams asymmetric_depolarizing_params(double x) {
  if (!std::isfinite(x) || x < 0.0 || x > 1.0 / std::sqrt(3.0) + kEqTol) {
    throw std::invalid_argument("x must lie in [0, 1/sqrt(3)]");
  }
  const double v = std::sqrt(std::max(0.0, 1.0 - 3.0 * x * x));
  return PcmParams(DoubleBellAmps(v, x, x, x));
}

namespace {

PcmParams scaled_symmetric(double v, double x, double y, double z, double* scale) {
  const double n2 = v * v + x * x + y * y + z * z;
  if (!(n2 > kEqTol)) throw std::invalid_argument("degenerate all-zero input");
  const double s = 1.0 / std::sqrt(n2);
  if (scale) *scale = s;
  return PcmParams(DoubleBellAmps(v * s, z * s, x * s, y * s));
}

void check_nonneg(double x, double y, double z) {
  if (!std::isfinite(x) || !std::isfinite(y) || !std::isfinite(z) || x < 0.0 || y < 0.0 ||
      z < 0.0) {
    throw std::invalid_argument("inputs must be finite and nonnegative");
  }
}

}  // namespace

PcmParams symmetric_params(double x, double y, double z, double* scale) {
  check_nonneg(x, y, z);
  return scaled_symmetric(x + y + z, x, y, z, scale);
}

PcmParams symmetric_params_bd(double x, double y, double z, double* scale) {
  check_nonneg(x, y, z);
  return scaled_symmetric(x - y + z, x, y, z, scale);
}

PcmParams triplicator_params(double x, double z) {
  if (!std::isfinite(x) || !std::isfinite(z) || x < 0.0 || z < 0.0) {
    throw std::invalid_argument("x and z must be finite and nonnegative");
  }
  if (std::abs(x * x + z * z + x * z - 0.5) > 1e-10) {
    throw std::invalid_argument("(x, z) must satisfy x^2 + z^2 + xz = 1/2");
  }
  // v = x + z puts all three outputs on the same channel, and the ellipse
  // constraint is exactly the normalization condition. Rescale anyway: the
  // ellipse gate (1e-10) is looser than the normalization gate.
  return PcmParams(DoubleBellAmps::normalized(x + z, z, x, 0.0));
}

DensityMatrix best_triplicator_map(const PureState& psi) {
  if (psi.n_qubits() != 1) throw std::invalid_argument("psi must be a single qubit");
  CMatrix out = Complex{0.5, 0.0} * outer_product(psi);
  out += Complex{1.0 / 6.0, 0.0} * outer_product(psi.conjugate());
  out += Complex{1.0 / 6.0, 0.0} * CMatrix::identity(2);
  return DensityMatrix(std::move(out));
}

}  // namespace pcm
