#pragma once

// Zeros of P_n through the auxiliary function
//
//   g_n(theta) = (zeta - cos theta) sin((n+1) theta) / sin theta
//                - cos((n+1) theta) + zeta^-(n+1),
//
// which vanishes exactly where P_n(z(theta)) does. On the grid
// theta_k = k pi / (n+1) the middle term fixes the sign (|zeta| > 1), so
// consecutive grid points bracket a zero except next to the pole of zeta at
// pi/2 and on the two edge intervals, which are probed directly.

#include <hyperrec/theta_frame.hpp>

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

namespace hyperrec {

struct GnProblem {
  std::size_t n = 1;
  double alpha = 0.0;

  GnProblem(std::size_t n_, double alpha_) : n(n_), alpha(alpha_) {
    if (n == 0) throw std::invalid_argument("GnProblem: n must be at least 1");
    if (alpha == 0.0 || !(alpha <= 1.0 / 9.0))
      throw std::domain_error("GnProblem: need 0 != alpha <= 1/9");
  }
  bool negative_regime() const { return alpha < 0.0; }
};

/// Distance from pi/2 at which the pole-side signs are sampled.
inline constexpr double pole_probe_offset = 1e-6;
/// Distance from 0 and pi at which the edge-interval signs are sampled.
inline constexpr double edge_probe_offset = 1e-8;
/// Brackets never come closer to pi/2 than this.
inline constexpr double pole_exclusion = 1e-9;

/// Internal consistency failure of the bracketing (not an input error).
class BracketError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

template <class R>
R g_value(std::size_t n, const R& theta, const R& alpha) {
  using std::abs;
  using std::cos;
  using std::exp;
  using std::log;
  using std::sin;
  if (cos(theta) == R(0)) throw std::domain_error("g_n is singular at theta = pi/2");
  const R zeta = zeta_pair(theta, alpha).plus;
  const R m = R(static_cast<double>(n + 1));
  const R main = (zeta - cos(theta)) * sin(m * theta) / sin(theta) - cos(m * theta);
  // zeta^-(n+1) in exp-log form; |zeta| > 1, so it only ever underflows.
  const R e = -m * log(abs(zeta));
  R tail = R(0);
  if (e > R(-690.0)) {
    tail = exp(e);
    if (zeta < R(0) && (n + 1) % 2 == 1) tail = -tail;
  }
  return main + tail;
}

inline double g_value(const GnProblem& p, double theta) { return g_value<double>(p.n, theta, p.alpha); }

struct Bracket {
  double lo;
  double hi;
};

struct BracketSet {
  std::vector<Bracket> intervals;  // disjoint, ascending
  bool includes_origin_root = false;
  std::size_t expected_count() const { return intervals.size() + (includes_origin_root ? 1 : 0); }
};

/// Ordered probe points: the interior grid k pi/(n+1) (pi/2 removed), the
/// edge probes, and pi/2 +- pole_probe_offset.
inline std::vector<double> bracket_probes(const GnProblem& p) {
  const double pi = std::numbers::pi;
  const double half = pi / 2;
  std::vector<double> pts{edge_probe_offset};
  for (std::size_t k = 1; k <= p.n; ++k) {
    if (2 * k == p.n + 1) continue;  // grid point on the pole
    pts.push_back(static_cast<double>(k) * pi / static_cast<double>(p.n + 1));
  }
  pts.push_back(half - pole_probe_offset);
  pts.push_back(half + pole_probe_offset);
  pts.push_back(pi - edge_probe_offset);
  std::sort(pts.begin(), pts.end());
  return pts;
}

inline BracketSet brackets(const GnProblem& p) {
  const double half = std::numbers::pi / 2;
  const auto pts = bracket_probes(p);
  std::vector<int> sgn(pts.size());
  for (std::size_t k = 0; k < pts.size(); ++k) sgn[k] = sign(g_value(p, pts[k]));

  BracketSet out;
  out.includes_origin_root = p.n % 2 == 1;
  for (std::size_t k = 0; k + 1 < pts.size(); ++k) {
    if (pts[k] < half && pts[k + 1] > half) continue;  // the pole, not a zero
    if (sgn[k] == 0 || sgn[k + 1] == 0)
      throw BracketError("g_n vanishes at a probe point (n=" + std::to_string(p.n) + ")");
    if (sgn[k] != sgn[k + 1]) out.intervals.push_back({pts[k], pts[k + 1]});
  }
  const std::size_t want = p.n % 2 == 0 ? p.n : p.n - 1;
  if (out.intervals.size() != want)
    throw BracketError("expected " + std::to_string(want) + " sign changes of g_n, found " +
                       std::to_string(out.intervals.size()) + " (n=" + std::to_string(p.n) +
                       ", alpha=" + std::to_string(p.alpha) + ")");
  for (const auto& b : out.intervals)
    if (std::abs(b.lo - half) < pole_exclusion || std::abs(b.hi - half) < pole_exclusion)
      throw BracketError("bracket touches the pole exclusion zone");
  return out;
}

/// One theta-root per bracket: bisection to width `tol`, then Newton on g_n
/// with a centered-difference slope, kept only while it stays in the bracket.
inline std::vector<double> solve(const GnProblem& p, double tol = 1e-14, int max_iterations = 200) {
  const auto set = brackets(p);
  std::vector<double> roots;
  roots.reserve(set.intervals.size());
  for (const auto& b : set.intervals) {
    double lo = b.lo, hi = b.hi;
    int slo = sign(g_value(p, lo));
    int it = 0;
    while (hi - lo > tol) {
      if (++it > max_iterations) throw std::runtime_error("g_n bisection exceeded its iteration cap");
      const double mid = 0.5 * (lo + hi);
      if (mid <= lo || mid >= hi) break;
      const int sm = sign(g_value(p, mid));
      if (sm == 0) {
        lo = hi = mid;
        break;
      }
      if (sm == slo) {
        lo = mid;
      } else {
        hi = mid;
      }
    }
    double x = 0.5 * (lo + hi);
    for (int s = 0; s < 2; ++s) {
      const double gx = g_value(p, x);
      if (gx == 0.0) break;
      const double h = 1e-7 * std::max(1e-3, std::min(x, std::numbers::pi - x));
      const double slope = (g_value(p, x + h) - g_value(p, x - h)) / (2 * h);
      if (!std::isfinite(slope) || slope == 0.0) break;
      const double next = x - gx / slope;
      if (!(next > b.lo && next < b.hi) || std::abs(g_value(p, next)) >= std::abs(gx)) break;
      x = next;
    }
    roots.push_back(x);
  }
  for (std::size_t k = 1; k < roots.size(); ++k)
    if (!(roots[k] > roots[k - 1])) throw BracketError("theta-roots are not strictly ordered");
  return roots;
}

/// The zeros of normalized P_n: z(theta) over the theta-roots, plus z = 0
/// for odd n, ascending.
inline std::vector<double> predicted_roots(const GnProblem& p, double tol = 1e-14) {
  std::vector<double> out;
  for (double th : solve(p, tol)) out.push_back(z_of_theta(th, p.alpha));
  if (p.n % 2 == 1) out.push_back(0.0);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace hyperrec
