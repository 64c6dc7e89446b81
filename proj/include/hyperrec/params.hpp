#pragma once

// Reduction of (a, b, c) to the single parameter alpha = c/(ab), the
// interval half-width lambda(alpha) and the hyperbolicity predicate.

#include <hyperrec/recurrence.hpp>

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <stdexcept>
#include <string>

namespace hyperrec {

/// 50 decimal digits; used wherever a float result sits next to lambda.
using HighPrecision = boost::multiprecision::cpp_bin_float_50;

inline HighPrecision to_high_precision(const Rational& x) {
  return HighPrecision(x.get_num().get_str()) / HighPrecision(x.get_den().get_str());
}
inline HighPrecision to_high_precision(double x) { return HighPrecision(x); }

/// The admissibility threshold alpha <= 1/9.
inline const Rational& alpha_threshold() {
  static const Rational t(1, 9);
  return t;
}

template <class T>
struct NormalizedParams {
  T alpha;
  bool valid = false;  // b > 0
};

/// z' = factor * z with factor = a / sqrt(b). The square is kept exactly.
template <class T>
struct ScalingMap {
  T factor_squared;
  double factor = 0.0;

  template <class X>
  X apply(const X& z) const {
    return factor * z;
  }
};

template <class T>
struct Normalization {
  NormalizedParams<T> params;
  ScalingMap<T> scaling;
};

class NormalizationError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

template <class T>
Normalization<T> normalize(const RecurrenceParams<T>& p) {
  if (sign(p.b) <= 0)
    throw NormalizationError("normalization needs b > 0; use the b < 0 diagnostics instead");
  Normalization<T> out;
  out.params.alpha = p.c / (p.a * p.b);
  out.params.valid = true;
  out.scaling.factor_squared = p.a * p.a / p.b;
  out.scaling.factor = static_cast<double>(to_high_precision(p.a) / sqrt(to_high_precision(p.b)));
  return out;
}

template <class T>
bool predict_hyperbolic(const RecurrenceParams<T>& p) {
  if (is_zero(p.c)) throw std::domain_error("predict_hyperbolic: c must be nonzero");
  if (sign(p.b) <= 0) return false;
  if constexpr (ScalarTraits<T>::is_exact) {
    return p.c / (p.a * p.b) <= alpha_threshold();
  } else {
    return p.c / (p.a * p.b) <= 1.0 / 9.0;
  }
}

namespace detail {

inline void check_lambda_domain(bool above_threshold, bool is_zero_alpha) {
  if (is_zero_alpha) throw std::domain_error("lambda_bound: alpha must be nonzero");
  if (above_threshold) throw std::domain_error("lambda_bound: alpha exceeds 1/9");
}

}  // namespace detail

/// 4 / ( r^(3/2) * (1 - 5 alpha + s) ),  r = (1 + 3 alpha + s) / (1 - 5 alpha + s),
/// s = sqrt(9 alpha^2 - 10 alpha + 1), evaluated in 50-digit arithmetic.
inline HighPrecision lambda_bound_hp(const HighPrecision& alpha) {
  const HighPrecision radicand = 9 * alpha * alpha - 10 * alpha + 1;
  const HighPrecision s = radicand > 0 ? HighPrecision(sqrt(radicand)) : HighPrecision(0);
  const HighPrecision lower = -5 * alpha + 1 + s;
  const HighPrecision ratio = (3 * alpha + 1 + s) / lower;
  return 4 / (pow(ratio, HighPrecision(1.5)) * lower);
}

inline HighPrecision lambda_bound_hp(const Rational& alpha) {
  detail::check_lambda_domain(alpha > alpha_threshold(), is_zero(alpha));
  return lambda_bound_hp(to_high_precision(alpha));
}

inline HighPrecision lambda_bound_hp(double alpha) {
  detail::check_lambda_domain(!(alpha <= 1.0 / 9.0), alpha == 0.0);
  return lambda_bound_hp(to_high_precision(alpha));
}

template <class T>
double lambda_bound(const T& alpha) {
  return static_cast<double>(lambda_bound_hp(alpha));
}

/// A rational r with x - 2^-100 < r < x.
inline Rational rational_below(const HighPrecision& x) {
  const HighPrecision scaled = ldexp(x, 100);
  Integer k(static_cast<boost::multiprecision::cpp_int>(floor(scaled)).str());
  k -= 1;
  Integer den;
  mpz_ui_pow_ui(den.get_mpz_t(), 2, 100);
  Rational r(k, den);
  r.canonicalize();
  return r;
}

}  // namespace hyperrec
