#pragma once

// The theta-parametrization of the zero locus: for theta in (0, pi) the
// cubic 1 + z t + t^2 + alpha z t^3 has roots tau e^{-i theta},
// tau e^{i theta}, tau zeta, with
//
//   Delta = 16 a^2 c^4 - 8 a^2 c^2 - 8 a c^2 + a^2 - 2a + 1     (c = cos theta)
//   zeta  = (1 - a - 4 a c^2 + sqrt(Delta)) / (4 a c)
//   tau   = sqrt((2c + zeta) / zeta),   z = -1 / (a tau^3 zeta).
//
// Real mode requires Delta > 0 and a positive tau radicand, which hold for
// 0 != alpha <= 1/9. Complex mode runs the same formulas for any alpha.

#include <hyperrec/params.hpp>

#include <boost/math/constants/constants.hpp>

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <cstddef>
#include <limits>
#include <stdexcept>
#include <vector>

namespace hyperrec {

/// Raised when a real-mode quantity leaves its domain (Delta <= 0, a
/// non-positive tau radicand). For valid alpha this is an internal fault.
class RegimeError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

template <class R>
R pi_v() {
  return boost::math::constants::pi<R>();
}

/// Delta as a quartic in c = cos theta; exact for rational c^2.
template <class R>
R delta_from_cos_squared(const R& c2, const R& alpha) {
  const R a2 = alpha * alpha;
  return R(16) * a2 * c2 * c2 - R(8) * a2 * c2 - R(8) * alpha * c2 + a2 - R(2) * alpha + R(1);
}

template <class R>
R delta(const R& theta, const R& alpha) {
  using std::cos;
  const R c = cos(theta);
  return delta_from_cos_squared<R>(c * c, alpha);
}

/// f(zeta) = 2 a c zeta^2 + (4 a c^2 + a - 1) zeta + 2 a c.
template <class R, class K>
K zeta_quadratic(const R& theta, const R& alpha, const K& zeta) {
  using std::cos;
  const R c = cos(theta);
  return R(2) * alpha * c * zeta * zeta + (R(4) * alpha * c * c + alpha - R(1)) * zeta + R(2) * alpha * c;
}

template <class K>
struct ZetaPair {
  K plus;   // the +sqrt(Delta) branch
  K minus;  // 1 / plus
};

namespace detail {

template <class R>
void require_off_axis(const R& c, const R& alpha) {
  if (c == R(0)) throw std::domain_error("zeta is undefined at theta = pi/2");
  if (alpha == R(0)) throw std::domain_error("alpha must be nonzero");
}

// N + sqrt(Delta), N = 1 - a - 4 a c^2. Then zeta+ = (N + sqrt D)/(4ac) and,
// since N^2 - Delta = 16 a^2 c^2, zeta- = 4ac / (N + sqrt D) with no
// cancellation.
template <class R, class K>
ZetaPair<K> zeta_from(const R& c, const R& alpha, const K& sqrt_delta) {
  const R n = R(1) - alpha - R(4) * alpha * c * c;
  const K top = K(n) + sqrt_delta;
  const R den = R(4) * alpha * c;
  return {top / K(den), K(den) / top};
}

}  // namespace detail

template <class R>
ZetaPair<R> zeta_pair(const R& theta, const R& alpha) {
  using std::cos;
  using std::sqrt;
  const R c = cos(theta);
  detail::require_off_axis(c, alpha);
  const R d = delta_from_cos_squared<R>(c * c, alpha);
  if (d < R(0)) throw RegimeError("Delta < 0: zeta is complex; use zeta_pair_complex");
  return detail::zeta_from<R, R>(c, alpha, R(sqrt(d)));
}

/// Both roots of f as complex numbers; valid for any sign of Delta.
template <class R>
ZetaPair<std::complex<R>> zeta_pair_complex(const R& theta, const R& alpha) {
  using std::cos;
  const R c = cos(theta);
  detail::require_off_axis(c, alpha);
  const R d = delta_from_cos_squared<R>(c * c, alpha);
  return detail::zeta_from<R, std::complex<R>>(c, alpha, std::sqrt(std::complex<R>(d)));
}

template <class R>
R tau_radicand(const R& theta, const R& alpha) {
  using std::cos;
  const R zeta = zeta_pair(theta, alpha).plus;
  return (R(2) * cos(theta) + zeta) / zeta;
}

template <class R>
R tau(const R& theta, const R& alpha) {
  using std::sqrt;
  const R rad = tau_radicand(theta, alpha);
  if (!(rad > R(0))) throw RegimeError("tau radicand is not positive");
  return sqrt(rad);
}

/// z(theta) with z(pi/2) := 0, the continuous extension across the pole of zeta.
template <class R>
R z_of_theta(const R& theta, const R& alpha) {
  using std::cos;
  if (cos(theta) == R(0)) return R(0);
  const R zeta = zeta_pair(theta, alpha).plus;
  const R t = tau(theta, alpha);
  return R(-1) / (alpha * t * t * t * zeta);
}

template <class R>
struct ThetaSample {
  R theta{};
  R alpha{};
  R delta{};
  R zeta_plus{};
  R zeta_minus{};
  R tau{};
  R z{};
  std::complex<R> t1, t2, t3;
};

/// Complex-mode sample; delta may be negative, everything else complex.
template <class R>
struct ComplexThetaSample {
  R theta{};
  R alpha{};
  R delta{};
  std::complex<R> zeta_plus, zeta_minus, tau, z;
  std::complex<R> t1, t2, t3;
};

template <class R>
ThetaSample<R> sample(const R& theta, const R& alpha) {
  using std::cos;
  using std::sin;
  ThetaSample<R> s;
  s.theta = theta;
  s.alpha = alpha;
  s.delta = delta(theta, alpha);
  const auto zp = zeta_pair(theta, alpha);
  s.zeta_plus = zp.plus;
  s.zeta_minus = zp.minus;
  s.tau = tau(theta, alpha);
  s.z = R(-1) / (alpha * s.tau * s.tau * s.tau * s.zeta_plus);
  const std::complex<R> phase(cos(theta), sin(theta));
  s.t1 = s.tau * std::conj(phase);
  s.t2 = s.tau * phase;
  s.t3 = std::complex<R>(s.tau * s.zeta_plus, R(0));
  return s;
}

template <class R>
ComplexThetaSample<R> sample_complex(const R& theta, const R& alpha) {
  using std::cos;
  using std::sin;
  using C = std::complex<R>;
  ComplexThetaSample<R> s;
  s.theta = theta;
  s.alpha = alpha;
  s.delta = delta(theta, alpha);
  const auto zp = zeta_pair_complex(theta, alpha);
  s.zeta_plus = zp.plus;
  s.zeta_minus = zp.minus;
  s.tau = std::sqrt((C(R(2) * cos(theta)) + s.zeta_plus) / s.zeta_plus);
  s.z = C(R(-1)) / (C(alpha) * s.tau * s.tau * s.tau * s.zeta_plus);
  const C phase(cos(theta), sin(theta));
  s.t1 = s.tau * std::conj(phase);
  s.t2 = s.tau * phase;
  s.t3 = s.tau * s.zeta_plus;
  return s;
}

/// The three roots (t1, t2, t3) = (tau e^{-i theta}, tau e^{i theta}, tau zeta).
template <class R>
std::array<std::complex<R>, 3> t_roots(const R& theta, const R& alpha) {
  const auto s = sample(theta, alpha);
  return {s.t1, s.t2, s.t3};
}

/// Relative residual of t in 1 + z t + t^2 + alpha z t^3.
template <class R, class Z>
R cubic_residual(const std::complex<R>& t, const Z& z, const R& alpha) {
  using C = std::complex<R>;
  const C zz(z);
  const C v = C(R(1)) + zz * t + t * t + C(alpha) * zz * t * t * t;
  const R scale = R(1) + std::abs(zz * t) + std::abs(t * t) + std::abs(C(alpha) * zz * t * t * t);
  return std::abs(v) / scale;
}

/// Deviations of e1, e2, e3 of (t1, t2, t3) from -1/(alpha z), 1/alpha,
/// -1/(alpha z), each relative to max(1, |target|).
template <class R>
struct VietaResidual {
  std::complex<R> r1, r2, r3;
  R max_abs() const { return std::max({std::abs(r1), std::abs(r2), std::abs(r3)}); }
};

template <class Sample>
auto vieta_residuals(const Sample& s) {
  using std::abs;
  using R = decltype(s.alpha);
  using C = std::complex<R>;
  const C z(s.z);
  const C e1 = s.t1 + s.t2 + s.t3;
  const C e2 = s.t1 * s.t2 + s.t1 * s.t3 + s.t2 * s.t3;
  const C e3 = s.t1 * s.t2 * s.t3;
  const C target13 = C(R(-1)) / (C(s.alpha) * z);
  const C target2 = C(R(1) / s.alpha);
  auto rel = [](const C& dev, const C& target) { return dev / std::max(R(1), std::abs(target)); };
  return VietaResidual<R>{rel(e1 - target13, target13), rel(e2 - target2, target2),
                          rel(e3 - target13, target13)};
}

/// The Vieta validity threshold.
inline constexpr double vieta_tolerance = 1e-10;

struct MonotonicityReport {
  double alpha = 0.0;
  std::size_t grid_size = 0;
  bool strictly_increasing = false;
  double min_slope = 0.0;       // smallest centered finite-difference slope
  std::size_t first_violation = 0;  // index of the first non-increase, if any
  double zero_crossing = 0.0;   // theta where z changes sign (linear interpolation)
  double z_first = 0.0;
  double z_last = 0.0;
};

/// Uniform theta grid on [offset, pi - offset] that never lands on pi/2.
inline std::vector<double> theta_grid(std::size_t n, double offset = 1e-6) {
  std::vector<double> g(n);
  const double pi = std::numbers::pi;
  if (n == 1) {
    g[0] = pi / 3;
    return g;
  }
  const double h = (pi - 2 * offset) / static_cast<double>(n - 1);
  for (std::size_t k = 0; k < n; ++k) {
    g[k] = offset + h * static_cast<double>(k);
    if (std::abs(g[k] - pi / 2) < 1e-9) g[k] = pi / 2 - h / 2;
  }
  return g;
}

inline MonotonicityReport monotonicity_scan(double alpha, std::size_t grid_size = 10000, double offset = 1e-6) {
  if (grid_size < 3) throw std::invalid_argument("monotonicity_scan needs at least 3 points");
  const auto grid = theta_grid(grid_size, offset);
  std::vector<double> z(grid.size());
  for (std::size_t k = 0; k < grid.size(); ++k) z[k] = z_of_theta(grid[k], alpha);

  MonotonicityReport rep;
  rep.alpha = alpha;
  rep.grid_size = grid_size;
  rep.strictly_increasing = true;
  rep.min_slope = std::numeric_limits<double>::infinity();
  rep.z_first = z.front();
  rep.z_last = z.back();
  for (std::size_t k = 0; k + 1 < z.size(); ++k) {
    if (!(z[k + 1] > z[k]) && rep.strictly_increasing) {
      rep.strictly_increasing = false;
      rep.first_violation = k;
    }
    if (z[k] < 0 && z[k + 1] >= 0)
      rep.zero_crossing = grid[k] + (grid[k + 1] - grid[k]) * (-z[k]) / (z[k + 1] - z[k]);
  }
  for (std::size_t k = 1; k + 1 < z.size(); ++k)
    rep.min_slope = std::min(rep.min_slope, (z[k + 1] - z[k - 1]) / (grid[k + 1] - grid[k - 1]));
  return rep;
}

}  // namespace hyperrec
