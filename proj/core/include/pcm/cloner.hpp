#pragma once

#include "pcm/bell.hpp"
#include "pcm/channel.hpp"
#include "pcm/linalg.hpp"

namespace pcm {

/// Parameters of a Pauli cloning machine: double-Bell amplitudes (v, z, x, y)
/// over the AB_CD pairing of the four qubits (a = reference, b = first
/// output, c = second output, d = idle qubit).
class PcmParams {
 public:
  explicit PcmParams(DoubleBellAmps amps);

  const DoubleBellAmps& amps() const { return amps_; }

  // True when all four amplitudes are real and nonnegative within kEqTol.
  // The no-cloning frontier formulas only apply in that regime.
  bool real_nonneg() const { return real_nonneg_; }

 private:
  DoubleBellAmps amps_;
  bool real_nonneg_;
};

struct OutputChannels {
  PauliChannel y1, y2, y3;
};

/// Channels and per-copy fidelities a cloner produces for a given probe state.
struct PcmReport {
  PauliChannel channel_y1, channel_y2, channel_y3;
  double fidelity_y1, fidelity_y2;
  bool depolarizing_y1, depolarizing_y2;
};

/// The 16-amplitude four-qubit state v PhiPlus PhiPlus + z PhiMinus PhiMinus
/// + x PsiPlus PsiPlus + y PsiMinus PsiMinus over the AB_CD pairing.
PureState build_state(const PcmParams& params);

/// Pauli channels seen by the two outputs and the idle qubit. y1 comes from
/// the AB_CD amplitudes directly; y2 and y3 from the amplitudes repartitioned
/// to AC_BD and AD_BC. Each weight is the squared modulus of an amplitude.
OutputChannels output_channels(const PcmParams& params);

/// Applies each output channel to |probe><probe| and reports the copy
/// fidelities <probe|rho|probe>. The one-argument overload probes with |0>;
/// fidelities are probe-independent only for depolarizing outputs.
PcmReport clone(const PcmParams& params, const PureState& probe);
PcmReport clone(const PcmParams& params);

/// The universal cloning machine: amplitudes
/// (sqrt(3/4), sqrt(1/12), sqrt(1/12), sqrt(1/12)). Both copies emerge from
/// depolarizing channels of probability 1/4 and have fidelity 5/6.
PcmParams ucm_params();

/// One-parameter family (v, x, x, x) with v = sqrt(1 - 3x^2): the first
/// output depolarizes with p = 3x^2, the second with p' = (3/4)(v-x)^2.
/// Requires 0 <= x <= 1/sqrt(3). This family saturates the no-cloning
/// frontier.
PcmParams asymmetric_depolarizing_params(double x);

/// Symmetric cloner with v = x + y + z: both outputs emerge from the same
/// Pauli channel. Inputs must be nonnegative, not all zero; they are rescaled
/// by a common factor onto the normalization surface
/// x^2+y^2+z^2+xy+xz+yz = 1/2, reported through `scale` when non-null.
PcmParams symmetric_params(double x, double y, double z, double* scale = nullptr);

/// Variant with v = x - y + z, which instead makes the first output and the
/// idle qubit emerge from the same channel (rho_ab = rho_ad).
PcmParams symmetric_params_bd(double x, double y, double z, double* scale = nullptr);

/// Triplicator (v, z, x, 0) with v = x + z: all three outputs emerge from the
/// same 2-Pauli channel (py = 0). Requires x, z >= 0 on the ellipse
/// x^2 + z^2 + xz = 1/2 within 1e-10; such params are normalized already.
PcmParams triplicator_params(double x, double z);

/// Single-qubit action of the best triplicator (x = z = 1/sqrt(6)):
/// |psi> -> (1/2)|psi><psi| + (1/6)|psi*><psi*| + (1/3)(I/2), with the
/// conjugate taken in the computational basis. Equal to the 2-Pauli channel
/// px = pz = 1/6 acting on |psi><psi|.
DensityMatrix best_triplicator_map(const PureState& psi);

}  // namespace pcm
