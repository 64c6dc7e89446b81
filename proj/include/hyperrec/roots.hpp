#pragma once

// Simultaneous complex root extraction (Aberth-Ehrlich) with Newton polish.

#include <hyperrec/polynomial.hpp>

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <limits>
#include <numbers>
#include <optional>
#include <stdexcept>
#include <vector>

namespace hyperrec {

class ConvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Value and derivative at a point, possibly with a shared scale factor.
/// A positive `noise` bounds the rounding error in `value`; an iterate
/// whose |value| is within it cannot be improved.
struct PointValue {
  ComplexValue value;
  ComplexValue derivative;
  double noise = 0.0;
};

/// p and p' by Horner on binary64 coefficients.
class HornerEvaluator {
 public:
  explicit HornerEvaluator(Polynomial<double> p) : p_(std::move(p)) {}
  std::size_t degree() const { return static_cast<std::size_t>(std::max(p_.degree(), 0)); }

  PointValue operator()(ComplexValue z) const {
    ComplexValue v{0.0, 0.0}, d{0.0, 0.0};
    double magnitude = 0.0;
    const double r = std::abs(z);
    const auto c = p_.coeffs();
    for (std::size_t k = c.size(); k-- > 0;) {
      d = d * z + v;
      v = v * z + c[k];
      magnitude = magnitude * r + std::abs(c[k]);
    }
    // Horner's forward error is at most gamma_{2n} sum |c_k| |z|^k; complex
    // products add a small constant factor, covered by 4n + 2.
    const double u = std::numeric_limits<double>::epsilon() / 2;
    return {v, d, (4.0 * static_cast<double>(c.size()) + 2.0) * u * magnitude};
  }

 private:
  Polynomial<double> p_;
};

/// Wraps an evaluator of p and presents p(z) / z^k.
template <class Eval>
class ZeroDeflated {
 public:
  ZeroDeflated(Eval inner, std::size_t k) : inner_(std::move(inner)), k_(k) {}
  std::size_t degree() const { return inner_.degree() - k_; }

  PointValue operator()(ComplexValue z) const {
    const auto r = inner_(z);
    double noise = 0.0;
    if constexpr (requires { r.noise; }) noise = r.noise;
    if (k_ == 0) return {r.value, r.derivative, noise};
    // (p / z^k)' / (p / z^k) = p'/p - k/z, expressed without dividing by p.
    const ComplexValue zk = std::pow(z, static_cast<int>(k_));
    return {r.value / zk, (r.derivative * z - static_cast<double>(k_) * r.value) / (zk * z), noise / std::abs(zk)};
  }

 private:
  Eval inner_;
  std::size_t k_;
};

struct RootOptions {
  /// Radius of the starting circle; 0 picks one from the evaluator.
  double initial_radius = 0.0;
  /// Explicit starting points; overrides the circle when sized to the degree.
  std::vector<ComplexValue> initial;
  int max_iterations = 2000;
  /// Relative size of an Aberth correction that counts as converged.
  double tolerance = 1e-14;
  int polish_steps = 2;
  /// Polished roots closer than this are reported as a possible multiple
  /// root; iterates stop about sqrt(rounding noise) from a double root.
  double collision_radius = 1e-6;
};

struct RootResult {
  std::vector<ComplexValue> roots;
  int iterations = 0;
  bool converged = false;
  /// Pairs of indices (i < j) whose polished roots collide.
  std::vector<std::pair<std::size_t, std::size_t>> collisions;
};

namespace detail {

template <class Value>
ComplexValue newton_ratio_of(const Value& r, ComplexValue z) {
  if (r.derivative == ComplexValue{0.0, 0.0}) {
    if (r.value == ComplexValue{0.0, 0.0}) return {0.0, 0.0};
    return ComplexValue{1e-8 * (1.0 + std::abs(z)), 0.0};
  }
  return ComplexValue(r.value) / ComplexValue(r.derivative);
}

template <class Eval>
ComplexValue newton_ratio(const Eval& f, ComplexValue z) {
  return newton_ratio_of(f(z), z);
}

/// True when the evaluator certifies that |p(z)| is below its own
/// rounding error.
template <class Value>
bool below_noise(const Value& r) {
  if constexpr (requires { r.noise; }) return r.noise > 0.0 && std::abs(ComplexValue(r.value)) <= r.noise;
  return false;
}

}  // namespace detail

/// Aberth iteration on any evaluator exposing degree() and operator()(z)
/// returning {value, derivative} (a common scale factor is harmless).
template <class Eval>
RootResult aberth_roots(const Eval& f, const RootOptions& opt = {}) {
  const std::size_t n = f.degree();
  RootResult out;
  if (n == 0) {
    out.converged = true;
    return out;
  }
  std::vector<ComplexValue> z(n);
  if (opt.initial.size() == n) {
    z = opt.initial;
  } else {
    const double r = opt.initial_radius > 0 ? opt.initial_radius : 1.0;
    for (std::size_t k = 0; k < n; ++k) {
      const double ang = 2.0 * std::numbers::pi * (static_cast<double>(k) + 0.25) / static_cast<double>(n) + 0.4;
      z[k] = std::polar(r, ang);
    }
  }

  std::vector<char> done(n, 0);
  std::vector<double> last_step(n, std::numeric_limits<double>::infinity());
  std::size_t remaining = n;
  int it = 0;
  for (; it < opt.max_iterations && remaining > 0; ++it) {
    for (std::size_t i = 0; i < n; ++i) {
      if (done[i]) continue;
      const auto fz = f(z[i]);
      if (detail::below_noise(fz)) {
        done[i] = 1;
        --remaining;
        continue;
      }
      const ComplexValue ratio = detail::newton_ratio_of(fz, z[i]);
      ComplexValue s{0.0, 0.0};
      for (std::size_t j = 0; j < n; ++j)
        if (j != i) s += 1.0 / (z[i] - z[j]);
      const ComplexValue w = ratio / (1.0 - ratio * s);
      const double step = std::abs(w);
      if (!std::isfinite(step)) throw ConvergenceError("Aberth iteration produced a non-finite step");
      z[i] -= w;
      const double scale = std::max(std::abs(z[i]), 1e-300);
      // Converged on a small step, or once progress stalls at the noise floor.
      if (step <= opt.tolerance * scale || (step < 1e-7 * scale && step >= 0.5 * last_step[i])) {
        done[i] = 1;
        --remaining;
      }
      last_step[i] = step;
    }
  }
  out.iterations = it;
  out.converged = remaining == 0;
  if (!out.converged) throw ConvergenceError("Aberth iteration did not converge");

  for (std::size_t i = 0; i < n; ++i) {
    for (int s = 0; s < opt.polish_steps; ++s) {
      const ComplexValue step = detail::newton_ratio(f, z[i]);
      // A polish step is only trusted while it stays a local correction.
      if (!(std::abs(step) <= 1e-6 * (1.0 + std::abs(z[i])))) break;
      z[i] -= step;
    }
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (std::abs(z[i] - z[j]) < opt.collision_radius) out.collisions.emplace_back(i, j);
  out.roots = std::move(z);
  return out;
}

/// Fujiwara bound on root moduli: 2 max |a_{n-k}/a_n|^(1/k).
inline double fujiwara_bound(const Polynomial<double>& p) {
  const int n = p.degree();
  if (n < 1) return 0.0;
  double m = 0.0;
  for (int k = 1; k <= n; ++k) {
    double r = std::abs(p.coeff(static_cast<std::size_t>(n - k)) / p.leading());
    if (k == n) r /= 2.0;
    m = std::max(m, std::pow(r, 1.0 / k));
  }
  return 2.0 * m;
}

inline bool by_real_then_imag(const ComplexValue& x, const ComplexValue& y) {
  return x.real() != y.real() ? x.real() < y.real() : x.imag() < y.imag();
}

/// All complex roots with multiplicity, sorted by real then imaginary part.
/// Exact zero roots (vanishing low-order coefficients) are split off first.
inline std::vector<ComplexValue> all_roots(const Polynomial<double>& p, RootOptions opt = {}) {
  if (p.degree() < 1) throw std::invalid_argument("all_roots: degree must be at least 1");
  std::size_t zeros = 0;
  while (p.coeff(zeros) == 0.0) ++zeros;
  std::vector<double> rest(p.coeffs().begin() + static_cast<std::ptrdiff_t>(zeros), p.coeffs().end());
  Polynomial<double> q(std::move(rest));
  std::vector<ComplexValue> roots(zeros, ComplexValue{0.0, 0.0});
  if (q.degree() >= 1) {
    if (opt.initial_radius <= 0) {
      // Geometric mean of the root moduli, kept inside the Fujiwara bound.
      const double gm = std::pow(std::abs(q.coeff(0) / q.leading()), 1.0 / q.degree());
      opt.initial_radius = std::min(gm, fujiwara_bound(q));
    }
    auto r = aberth_roots(HornerEvaluator(q), opt);
    roots.insert(roots.end(), r.roots.begin(), r.roots.end());
  }
  std::sort(roots.begin(), roots.end(), by_real_then_imag);
  return roots;
}

template <ExactScalar T>
std::vector<ComplexValue> all_roots(const Polynomial<T>& p, RootOptions opt = {}) {
  return all_roots(to_double(p), std::move(opt));
}

/// Roots whose imaginary part is below `tol` in magnitude, as reals.
inline std::vector<double> real_parts_of_real_roots(const std::vector<ComplexValue>& roots, double tol = 1e-9) {
  std::vector<double> out;
  for (const auto& r : roots)
    if (std::abs(r.imag()) < tol) out.push_back(r.real());
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace hyperrec
