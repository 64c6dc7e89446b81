#pragma once

// The family P_n(z) + a z P_{n-1}(z) + b P_{n-2}(z) + c z P_{n-3}(z) = 0,
// P_0 = 1, P_{-k} = 0, built two independent ways.

#include <hyperrec/polynomial.hpp>

#include <cmath>
#include <complex>
#include <cstddef>
#include <stdexcept>
#include <vector>

namespace hyperrec {

template <class T>
struct RecurrenceParams {
  T a;
  T b;
  T c;

  RecurrenceParams(T a_, T b_, T c_) : a(std::move(a_)), b(std::move(b_)), c(std::move(c_)) {
    if (is_zero(a)) throw std::invalid_argument("recurrence parameter a must be nonzero");
    if (is_zero(b)) throw std::invalid_argument("recurrence parameter b must be nonzero");
  }

  /// All three parameters nonzero; c = 0 is only a boundary study case.
  bool main_regime() const { return !is_zero(c); }

  /// The normalized family (a, b, c) = (1, 1, alpha).
  static RecurrenceParams from_alpha(T alpha) { return {T(1), T(1), std::move(alpha)}; }

  friend bool operator==(const RecurrenceParams&, const RecurrenceParams&) = default;
};

template <class T>
struct PolySequence {
  RecurrenceParams<T> params;
  std::vector<Polynomial<T>> polys;  // polys[n] = P_n, n = 0..N

  const Polynomial<T>& operator[](std::size_t n) const { return polys.at(n); }
  std::size_t size() const { return polys.size(); }
};

/// P_0..P_N by direct recurrence.
template <class T>
PolySequence<T> generate(const RecurrenceParams<T>& params, std::size_t N) {
  PolySequence<T> seq{params, {}};
  seq.polys.reserve(N + 1);
  seq.polys.push_back(Polynomial<T>::constant(T(1)));
  for (std::size_t n = 1; n <= N; ++n) {
    Polynomial<T> next = (seq.polys[n - 1] * params.a).shifted(1);
    if (n >= 2) next += seq.polys[n - 2] * params.b;
    if (n >= 3) next += (seq.polys[n - 3] * params.c).shifted(1);
    seq.polys.push_back(-next);
  }
  return seq;
}

/// First N+1 coefficients of 1/D(t) for a power series D with D(0) = 1,
/// whose coefficients are polynomials in z.
template <class T>
std::vector<Polynomial<T>> invert_unit_series(const std::vector<Polynomial<T>>& d, std::size_t N) {
  if (d.empty() || d[0] != Polynomial<T>::constant(T(1)))
    throw std::invalid_argument("series inversion needs constant term 1");
  std::vector<Polynomial<T>> u(N + 1);
  u[0] = d[0];
  for (std::size_t n = 1; n <= N; ++n) {
    Polynomial<T> acc;
    for (std::size_t k = 1; k <= n && k < d.size(); ++k) acc += d[k] * u[n - k];
    u[n] = -acc;
  }
  return u;
}

/// P_0..P_N as the t^n coefficients of 1 / (1 + a z t + b t^2 + c z t^3).
template <class T>
PolySequence<T> series_oracle(const RecurrenceParams<T>& params, std::size_t N) {
  const std::vector<Polynomial<T>> denom{
      Polynomial<T>::constant(T(1)),
      Polynomial<T>::monomial(params.a, 1),
      Polynomial<T>::constant(params.b),
      Polynomial<T>::monomial(params.c, 1),
  };
  return {params, invert_unit_series(denom, N)};
}

/// P_n(0): the t^n coefficient of 1/(1 + b t^2). Returned for b = 1, the
/// normalized family, where it is 0 for odd n and (-1)^(n/2) otherwise.
template <class T = Rational>
T value_at_zero(std::size_t n) {
  if (n % 2 == 1) return T(0);
  return (n / 2) % 2 == 0 ? T(1) : T(-1);
}

/// Same for general b: (-b)^(n/2) for even n.
template <class T>
T value_at_zero(const RecurrenceParams<T>& params, std::size_t n) {
  if (n % 2 == 1) return T(0);
  T v(1);
  for (std::size_t k = 0; k < n / 2; ++k) v *= -params.b;
  return v;
}

/// Result of running the recurrence at a complex point. `value` and
/// `derivative` are both scaled by 2^-scale_exp.
struct RecurrenceValue {
  ComplexValue value;
  ComplexValue derivative;
  int scale_exp = 0;
};

/// Float evaluation of P_n and P_n' straight from the recurrence. On the
/// zero set this is far better conditioned than Horner on the expanded
/// coefficients, whose magnitudes grow exponentially in n.
class RecurrenceEvaluator {
 public:
  RecurrenceEvaluator(double a, double b, double c, std::size_t n) : a_(a), b_(b), c_(c), n_(n) {}

  template <class T>
  RecurrenceEvaluator(const RecurrenceParams<T>& p, std::size_t n)
      : RecurrenceEvaluator(ScalarTraits<T>::to_double(p.a), ScalarTraits<T>::to_double(p.b),
                            ScalarTraits<T>::to_double(p.c), n) {}

  std::size_t degree() const { return n_; }

  RecurrenceValue operator()(ComplexValue z) const {
    // Rolling window (P_k, P_{k-1}, P_{k-2}) and the matching derivatives.
    ComplexValue p0{1.0, 0.0}, p1{0.0, 0.0}, p2{0.0, 0.0};
    ComplexValue d0{0.0, 0.0}, d1{0.0, 0.0}, d2{0.0, 0.0};
    int scale = 0;
    for (std::size_t k = 1; k <= n_; ++k) {
      const ComplexValue pk = -(a_ * z * p0 + b_ * p1 + c_ * z * p2);
      const ComplexValue dk = -(a_ * p0 + a_ * z * d0 + b_ * d1 + c_ * p2 + c_ * z * d2);
      p2 = p1, p1 = p0, p0 = pk;
      d2 = d1, d1 = d0, d0 = dk;
      if (std::abs(p0) + std::abs(d0) > 0x1p400) {
        for (ComplexValue* v : {&p0, &p1, &p2, &d0, &d1, &d2})
          *v = {std::ldexp(v->real(), -400), std::ldexp(v->imag(), -400)};
        scale += 400;
      }
    }
    return {p0, d0, scale};
  }

 private:
  double a_, b_, c_;
  std::size_t n_;
};

}  // namespace hyperrec
