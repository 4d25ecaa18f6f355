#include "pcm/bounds.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace pcm {

namespace {

void check_nonneg(double value, const char* name) {
  if (!std::isfinite(value) || value < 0.0) {
    throw std::invalid_argument(std::string(name) + " must be finite and nonnegative");
  }
}

}  // namespace

double no_cloning_lhs(double x, double xp) {
  check_nonneg(x, "x");
  check_nonneg(xp, "xp");
  return x * x + xp * xp + x * xp;
}

double frontier_partner(double x) {
  check_nonneg(x, "x");
  if (x > 0.5) throw std::invalid_argument("x must not exceed 1/2");
  return 0.5 * (-x + std::sqrt(1.0 - 3.0 * x * x));
}

double ellipsoid_q(double x, double y, double z) {
  check_nonneg(x, "x");
  check_nonneg(y, "y");
  check_nonneg(z, "z");
  return x * x + y * y + z * z + x * y + x * z + y * z;
}

CapacityBound capacity_upper_bound(const PauliChannel& ch) {
  if (ch.px() > 0.5 || ch.py() > 0.5 || ch.pz() > 0.5) {
    throw std::invalid_argument("capacity bound requires px, py, pz <= 1/2");
  }
  const double q = ellipsoid_q(std::sqrt(ch.px()), std::sqrt(ch.py()), std::sqrt(ch.pz()));
  const bool vanishing = q >= 0.5 - kEqTol;
  return CapacityBound{q, vanishing ? 0.0 : 1.0 - 2.0 * q, vanishing};
}

PcmParams random_real_params(std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  while (true) {
    const double v = std::abs(gauss(rng));
    const double z = std::abs(gauss(rng));
    const double x = std::abs(gauss(rng));
    const double y = std::abs(gauss(rng));
    const double n2 = v * v + z * z + x * x + y * y;
    if (n2 > kEqTol) {
      const double s = 1.0 / std::sqrt(n2);
      return PcmParams(DoubleBellAmps(v * s, z * s, x * s, y * s));
    }
  }
}

FrontierSweepReport verify_frontier(std::int64_t n_samples, std::uint64_t seed) {
  if (n_samples < 1) throw std::invalid_argument("n_samples must be >= 1");
  std::mt19937_64 rng(seed);
  FrontierSweepReport report;
  report.samples = n_samples;
  report.seed = seed;
  for (std::int64_t i = 0; i < n_samples; ++i) {
    const PcmParams params = random_real_params(rng);
    const OutputChannels ch = output_channels(params);
    if (!is_depolarizing(ch.y1) || !is_depolarizing(ch.y2)) {
      ++report.skipped;
      continue;
    }
    ++report.tested;
    const double x = std::sqrt(ch.y1.p() / 3.0);
    const double xp = std::sqrt(ch.y2.p() / 3.0);
    if (no_cloning_lhs(x, xp) < 0.25 - kFrontierSlack) ++report.violations;
  }
  return report;
}

std::vector<FrontierPoint> ellipse_mesh(int n) {
  if (n < 2) throw std::invalid_argument("mesh needs at least 2 points");
  std::vector<FrontierPoint> mesh;
  mesh.reserve(n);
  for (int i = 0; i < n; ++i) {
    const double x = 0.5 * static_cast<double>(i) / (n - 1);
    const double xp = frontier_partner(x);
    mesh.push_back(FrontierPoint{x, xp, 3.0 * x * x, 3.0 * xp * xp});
  }
  return mesh;
}

std::vector<EllipsoidPoint> ellipsoid_mesh(int n) {
  if (n < 2) throw std::invalid_argument("mesh needs at least 2 points");
  // Fibonacci lattice over the first-octant directions, each scaled onto the
  // surface (the quadratic form is homogeneous of degree 2).
  const double golden = (std::sqrt(5.0) - 1.0) / 2.0;
  std::vector<EllipsoidPoint> mesh;
  mesh.reserve(n);
  for (int k = 0; k < n; ++k) {
    const double cos_theta = 1.0 - (k + 0.5) / n;
    const double sin_theta = std::sqrt(std::max(0.0, 1.0 - cos_theta * cos_theta));
    const double phi = (std::numbers::pi / 2.0) * std::fmod(k * golden, 1.0);
    const double dx = sin_theta * std::cos(phi);
    const double dy = sin_theta * std::sin(phi);
    const double dz = cos_theta;
    const double t = std::sqrt(0.5 / ellipsoid_q(dx, dy, dz));
    const double x = t * dx, y = t * dy, z = t * dz;
    mesh.push_back(EllipsoidPoint{x, y, z, x * x, y * y, z * z});
  }
  return mesh;
}

}  // namespace pcm
