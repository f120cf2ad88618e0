#include "szilard/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace szilard {

namespace {

constexpr double kPi = 3.14159265358979323846;

void check_wall_fraction(double r) {
  if (!(r > 0.0 && r < 1.0)) {
    std::ostringstream msg;
    msg << "wall fraction must lie strictly inside (0,1), got r = " << r;
    throw std::domain_error(msg.str());
  }
}

// Even-parity matching condition, pole-free form: zero of
//   h(z) = sin(z) + 4 z cos(z) / (pi^2 v0).
double even_parity_mismatch(double z, double v0) {
  return std::sin(z) + 4.0 * z * std::cos(z) / (kPi * kPi * v0);
}

// n-th even-parity energy for v0 > 0; root bracketed in ((n-1/2)pi, n pi).
double even_level(int n, double v0) {
  double lo = (n - 0.5) * kPi;
  double hi = n * kPi;
  double flo = even_parity_mismatch(lo, v0);
  double fhi = even_parity_mismatch(hi, v0);
  if (flo == 0.0) return 4.0 * lo * lo / (kPi * kPi);
  if (fhi == 0.0) return 4.0 * hi * hi / (kPi * kPi);
  if ((flo > 0.0) == (fhi > 0.0)) {
    std::ostringstream msg;
    msg << "delta-wall root bracket lost for level " << n << ", v0 = " << v0
        << ": h(" << lo << ") = " << flo << ", h(" << hi << ") = " << fhi;
    throw std::runtime_error(msg.str());
  }
  auto energy = [](double z) { return 4.0 * z * z / (kPi * kPi); };
  while (energy(hi) - energy(lo) > 1e-12) {
    double mid = 0.5 * (lo + hi);
    if (mid == lo || mid == hi) break;  // bracket at machine resolution
    double fmid = even_parity_mismatch(mid, v0);
    if (fmid == 0.0) return energy(mid);
    if ((fmid > 0.0) == (flo > 0.0)) {
      lo = mid;
      flo = fmid;
    } else {
      hi = mid;
    }
  }
  return energy(0.5 * (lo + hi));
}

}  // namespace

double left_level(int n, double r) {
  if (n < 1) throw std::domain_error("level index must be >= 1");
  check_wall_fraction(r);
  return static_cast<double>(n) * n / (r * r);
}

double right_level(int n, double r) {
  if (n < 1) throw std::domain_error("level index must be >= 1");
  check_wall_fraction(r);
  double w = 1.0 - r;
  return static_cast<double>(n) * n / (w * w);
}

double e_sym(double r) {
  return std::abs(left_level(1, r) - right_level(1, r));
}

double delta_e(double r) {
  return std::min(left_level(2, r) - left_level(1, r),
                  right_level(2, r) - right_level(1, r));
}

std::vector<double> delta_wall_levels(const DeltaWallSpec& spec) {
  if (spec.v0 < 0.0) throw std::domain_error("delta-barrier strength must be >= 0");
  if (spec.num_levels < 2) throw std::domain_error("num_levels must be >= 2");

  std::vector<double> levels;
  levels.reserve(spec.num_levels);
  if (spec.v0 == 0.0) {
    for (int k = 1; k <= spec.num_levels; ++k) levels.push_back(static_cast<double>(k) * k);
    return levels;
  }
  // Interlacing (2n-1)^2 < even_n < (2n)^2 makes the merged order even_1,
  // odd_1, even_2, odd_2, ...
  int pairs = spec.num_levels / 2 + 1;
  for (int n = 1; n <= pairs; ++n) {
    levels.push_back(even_level(n, spec.v0));
    levels.push_back(4.0 * n * n);
  }
  levels.resize(spec.num_levels);
  return levels;
}

double doublet_splitting(double v0) {
  auto levels = delta_wall_levels({v0, 2});
  return levels[1] - levels[0];
}

double TwoStateDensity::max_abs_diff(const TwoStateDensity& other) const {
  double worst = 0.0;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      worst = std::max(worst, std::abs(a[i][j] - other.a[i][j]));
  return worst;
}

TwoStateDensity doublet_energy_mixture() {
  TwoStateDensity rho;
  rho.a[0][0] = 0.5;
  rho.a[1][1] = 0.5;
  return rho;
}

TwoStateDensity left_right_mixture() {
  const double c = 1.0 / std::sqrt(2.0);
  const std::array<double, 2> left{c, c};
  const std::array<double, 2> right{c, -c};
  TwoStateDensity rho;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      rho.a[i][j] = 0.5 * (left[i] * left[j] + right[i] * right[j]);
  return rho;
}

double doublet_mixture_equivalence(double v0) {
  if (v0 < 0.0) throw std::domain_error("delta-barrier strength must be >= 0");
  return doublet_energy_mixture().max_abs_diff(left_right_mixture());
}

}  // namespace szilard
