#pragma once

#include <array>

#include "pcm/linalg.hpp"

namespace pcm {

// The four maximally entangled two-qubit states:
//   PhiPlus  = (|00> + |11>)/sqrt(2)    PhiMinus = (|00> - |11>)/sqrt(2)
//   PsiPlus  = (|01> + |10>)/sqrt(2)    PsiMinus = (|01> - |10>)/sqrt(2)
enum class BellKind { PhiPlus, PhiMinus, PsiPlus, PsiMinus };

inline constexpr std::array<BellKind, 4> kBellKinds = {
    BellKind::PhiPlus, BellKind::PhiMinus, BellKind::PsiPlus, BellKind::PsiMinus};

const char* to_string(BellKind k);

// The three pairings of four qubits (a,b,c,d) into two pairs. The first pair
// always contains a; within each pair the alphabetical order is kept, and the
// first pair supplies the more significant qubits of a double-Bell label.
enum class Partition { AB_CD, AC_BD, AD_BC };

inline constexpr std::array<Partition, 3> kPartitions = {Partition::AB_CD, Partition::AC_BD,
                                                         Partition::AD_BC};

const char* to_string(Partition p);

/// Amplitudes (v, z, x, y) of the matched double-Bell states
/// PhiPlus PhiPlus, PhiMinus PhiMinus, PsiPlus PsiPlus, PsiMinus PsiMinus
/// over some partition; |v|^2 + |z|^2 + |x|^2 + |y|^2 = 1 within kEqTol.
/// as_array() follows the kBellKinds order.
class DoubleBellAmps {
 public:
  DoubleBellAmps(Complex v, Complex z, Complex x, Complex y);

  static DoubleBellAmps normalized(Complex v, Complex z, Complex x, Complex y);

  Complex v() const { return v_; }
  Complex z() const { return z_; }
  Complex x() const { return x_; }
  Complex y() const { return y_; }

  std::array<Complex, 4> as_array() const { return {v_, z_, x_, y_}; }

 private:
  Complex v_, z_, x_, y_;
};

/// The two-qubit Bell state of the given kind.
PureState bell_state(BellKind k);

/// Four-qubit state whose first pair (per `part`) is in Bell state k1 and
/// second pair in k2, expressed in global (a,b,c,d) qubit order.
PureState double_bell_state(BellKind k1, BellKind k2, Partition part);

/// Amplitudes of the same physical state over the target partition's
/// double-Bell basis. The maps between partitions are real orthogonal, so
/// repartition(repartition(amps, P, Q), Q, P) returns the input; cross maps
/// are composed through AB_CD.
DoubleBellAmps repartition(const DoubleBellAmps& amps, Partition from, Partition to);

}  // namespace pcm
