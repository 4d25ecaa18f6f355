#include "pcm/bell.hpp"

#include <cmath>
#include <stdexcept>

namespace pcm {

const char* to_string(BellKind k) {
  switch (k) {
    case BellKind::PhiPlus: return "phi_plus";
    case BellKind::PhiMinus: return "phi_minus";
    case BellKind::PsiPlus: return "psi_plus";
    case BellKind::PsiMinus: return "psi_minus";
  }
  throw std::invalid_argument("bad BellKind");
}

const char* to_string(Partition p) {
  switch (p) {
    case Partition::AB_CD: return "ab_cd";
    case Partition::AC_BD: return "ac_bd";
    case Partition::AD_BC: return "ad_bc";
  }
  throw std::invalid_argument("bad Partition");
}

DoubleBellAmps::DoubleBellAmps(Complex v, Complex z, Complex x, Complex y)
    : v_(v), z_(z), x_(x), y_(y) {
  for (Complex a : {v_, z_, x_, y_}) {
    if (!std::isfinite(a.real()) || !std::isfinite(a.imag())) {
      throw std::invalid_argument("non-finite double-Bell amplitude");
    }
  }
  const double n2 = std::norm(v_) + std::norm(z_) + std::norm(x_) + std::norm(y_);
  if (std::abs(n2 - 1.0) > kEqTol) {
    throw std::invalid_argument("double-Bell amplitudes are not normalized");
  }
}

DoubleBellAmps DoubleBellAmps::normalized(Complex v, Complex z, Complex x, Complex y) {
  const double n2 = std::norm(v) + std::norm(z) + std::norm(x) + std::norm(y);
  if (!(n2 > kEqTol)) throw std::invalid_argument("cannot normalize near-zero amplitudes");
  const double inv = 1.0 / std::sqrt(n2);
  return DoubleBellAmps(v * inv, z * inv, x * inv, y * inv);
}

PureState bell_state(BellKind k) {
  const double s = 1.0 / std::sqrt(2.0);
  switch (k) {
    case BellKind::PhiPlus: return PureState({s, 0.0, 0.0, s});
    case BellKind::PhiMinus: return PureState({s, 0.0, 0.0, -s});
    case BellKind::PsiPlus: return PureState({0.0, s, s, 0.0});
    case BellKind::PsiMinus: return PureState({0.0, s, -s, 0.0});
  }
  throw std::invalid_argument("bad BellKind");
}

PureState double_bell_state(BellKind k1, BellKind k2, Partition part) {
  const PureState first = bell_state(k1);
  const PureState second = bell_state(k2);
  std::vector<Complex> amps(16);
  for (std::size_t i = 0; i < 16; ++i) {
    const std::size_t ba = (i >> 3) & 1, bb = (i >> 2) & 1, bc = (i >> 1) & 1, bd = i & 1;
    std::size_t f0 = ba, f1 = bb, s0 = bc, s1 = bd;  // AB_CD
    switch (part) {
      case Partition::AB_CD: break;
      case Partition::AC_BD:
        f1 = bc;
        s0 = bb;
        break;
      case Partition::AD_BC:
        f1 = bd;
        s0 = bb;
        s1 = bc;
        break;
    }
    amps[i] = first[2 * f0 + f1] * second[2 * s0 + s1];
  }
  return PureState(std::move(amps));
}

namespace {

using Amps4 = std::array<Complex, 4>;

// Change of basis AB_CD -> AC_BD. Symmetric orthogonal, its own inverse.
Amps4 mix_to_ac_bd(const Amps4& a) {
  const Complex v = a[0], z = a[1], x = a[2], y = a[3];
  return {0.5 * (v + z + x + y), 0.5 * (v + z - x - y), 0.5 * (v - z + x - y),
          0.5 * (v - z - x + y)};
}

// Change of basis AB_CD -> AD_BC. Orthogonal but not symmetric.
Amps4 mix_to_ad_bc(const Amps4& a) {
  const Complex v = a[0], z = a[1], x = a[2], y = a[3];
  return {0.5 * (v + z + x - y), 0.5 * (v + z - x + y), 0.5 * (v - z + x + y),
          0.5 * (v - z - x - y)};
}

// Inverse of mix_to_ad_bc: the transpose.
Amps4 mix_from_ad_bc(const Amps4& a) {
  const Complex v = a[0], z = a[1], x = a[2], y = a[3];
  return {0.5 * (v + z + x + y), 0.5 * (v + z - x - y), 0.5 * (v - z + x - y),
          0.5 * (-v + z + x - y)};
}

Amps4 to_ab_cd(const Amps4& a, Partition from) {
  switch (from) {
    case Partition::AB_CD: return a;
    case Partition::AC_BD: return mix_to_ac_bd(a);
    case Partition::AD_BC: return mix_from_ad_bc(a);
  }
  throw std::invalid_argument("bad Partition");
}

Amps4 from_ab_cd(const Amps4& a, Partition to) {
  switch (to) {
    case Partition::AB_CD: return a;
    case Partition::AC_BD: return mix_to_ac_bd(a);
    case Partition::AD_BC: return mix_to_ad_bc(a);
  }
  throw std::invalid_argument("bad Partition");
}

}  // namespace

DoubleBellAmps repartition(const DoubleBellAmps& amps, Partition from, Partition to) {
  if (from == to) return amps;
  const Amps4 r = from_ab_cd(to_ab_cd(amps.as_array(), from), to);
  return DoubleBellAmps(r[0], r[1], r[2], r[3]);
}

}  // namespace pcm
