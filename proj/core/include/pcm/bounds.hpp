#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

#include "pcm/channel.hpp"
#include "pcm/cloner.hpp"

namespace pcm {

// Slack used by the frontier sweep when asserting the no-cloning inequality.
inline constexpr double kFrontierSlack = 1e-9;

// Geometry of the no-cloning frontier x^2 + x'^2 + x x' = 1/4 in the
// (x, x') plane: an ellipse with semiminor axis along (1, 1).
inline const double kFrontierSemiminorAxis = 1.0 / std::sqrt(6.0);
inline const double kFrontierSemimajorAxis = 1.0 / std::sqrt(2.0);

// Geometry of the symmetric-cloner surface x^2+y^2+z^2+xy+xz+yz = 1/2 in
// (x, y, z) = (sqrt(px), sqrt(py), sqrt(pz)) space: an oblate ellipsoid with
// symmetry axis along (1, 1, 1).
inline const double kEllipsoidPolarRadius = 0.5;
inline const double kEllipsoidEquatorialRadius = 1.0;

/// Point on (or off) the no-cloning frontier. x and xp measure the copying
/// error of the two outputs through their depolarizing probabilities
/// p = 3 x^2 and pp = 3 xp^2.
struct FrontierPoint {
  double x, xp;
  double p, pp;
};

/// Point of the symmetric-cloner ellipsoid, with the Pauli-channel
/// probabilities px = x^2, py = y^2, pz = z^2 alongside.
struct EllipsoidPoint {
  double x, y, z;
  double px, py, pz;
};

/// Quantum-capacity upper bound for a Pauli channel. q is the ellipsoid
/// quadratic form at (sqrt(px), sqrt(py), sqrt(pz)); the capacity is at most
/// max(0, 1 - 2q) and vanishes whenever q >= 1/2.
struct CapacityBound {
  double q;
  double upper;
  bool vanishing;
};

/// Outcome of a randomized frontier sweep. Samples whose first two outputs
/// are not both depolarizing are skipped; a violation is a tested sample with
/// x^2 + x'^2 + x x' < 1/4 - kFrontierSlack. Violations must stay at zero.
struct FrontierSweepReport {
  std::int64_t samples = 0;
  std::int64_t tested = 0;
  std::int64_t skipped = 0;
  std::int64_t violations = 0;
  std::uint64_t seed = 0;
};

/// x^2 + xp^2 + x*xp; both arguments must be nonnegative. Values below 1/4
/// are unreachable by any cloner pair.
double no_cloning_lhs(double x, double xp);

/// The unique xp >= 0 with x^2 + xp^2 + x*xp = 1/4, for x in [0, 1/2]:
/// xp = (-x + sqrt(1 - 3x^2)) / 2. Involutive on [0, 1/2].
double frontier_partner(double x);

/// x^2 + y^2 + z^2 + xy + xz + yz; all arguments must be nonnegative.
double ellipsoid_q(double x, double y, double z);

/// Capacity upper bound for a channel with px, py, pz <= 1/2 (larger
/// probabilities are rejected: the monotonicity argument behind the bound
/// does not cover them).
CapacityBound capacity_upper_bound(const PauliChannel& ch);

/// Cloner parameters drawn uniformly from the unit 3-sphere restricted to
/// the nonnegative orthant (absolute values of a Gaussian 4-vector,
/// normalized).
PcmParams random_real_params(std::mt19937_64& rng);

/// Draws n_samples random real nonnegative cloner parameters and checks the
/// no-cloning inequality on every sample whose two outputs are both
/// depolarizing. n_samples must be >= 1.
FrontierSweepReport verify_frontier(std::int64_t n_samples, std::uint64_t seed);

/// n >= 2 points on the frontier curve in the first quadrant, uniformly in x
/// from (0, 1/2) to (1/2, 0). Every point satisfies the defining equation to
/// within 1e-12.
std::vector<FrontierPoint> ellipse_mesh(int n);

/// n >= 2 points on the first-octant patch of the symmetric-cloner
/// ellipsoid: area-uniform directions (Fibonacci lattice) scaled onto the
/// surface. Every point satisfies the defining equation to within 1e-12.
std::vector<EllipsoidPoint> ellipsoid_mesh(int n);

}  // namespace pcm
