#pragma once

// Dense univariate polynomials over either scalar backend.

#include <hyperrec/scalar.hpp>

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <limits>
#include <ostream>
#include <span>
#include <stdexcept>
#include <type_traits>
#include <utility>
#include <vector>

namespace hyperrec {

/// Coefficients are stored in ascending degree order and the highest stored
/// coefficient is always nonzero; the zero polynomial stores nothing.
template <class T>
class Polynomial {
 public:
  /// Degree reported for the zero polynomial. Never use it in arithmetic.
  static constexpr int zero_degree = std::numeric_limits<int>::min();

  Polynomial() = default;
  explicit Polynomial(std::vector<T> coeffs) : c_(std::move(coeffs)) { trim(); }
  Polynomial(std::initializer_list<T> coeffs) : c_(coeffs) { trim(); }

  static Polynomial constant(T v) { return Polynomial(std::vector<T>{std::move(v)}); }
  static Polynomial monomial(T v, std::size_t power) {
    std::vector<T> c(power + 1, T(0));
    c[power] = std::move(v);
    return Polynomial(std::move(c));
  }
  /// The identity polynomial z.
  static Polynomial z() { return monomial(T(1), 1); }

  bool is_zero() const { return c_.empty(); }
  int degree() const { return c_.empty() ? zero_degree : static_cast<int>(c_.size()) - 1; }
  std::size_t size() const { return c_.size(); }

  /// Coefficient of z^k; zero past the degree.
  T coeff(std::size_t k) const { return k < c_.size() ? c_[k] : T(0); }
  const T& leading() const {
    if (c_.empty()) throw std::domain_error("leading coefficient of the zero polynomial");
    return c_.back();
  }
  std::span<const T> coeffs() const { return c_; }

  /// Horner evaluation; the argument may be of a wider type (e.g. complex).
  /// Exact coefficients are rounded to double when X cannot hold them.
  template <class X>
  X operator()(const X& x) const {
    X acc = X(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
      if constexpr (std::is_constructible_v<X, const T&>) {
        acc = acc * x + X(*it);
      } else {
        acc = acc * x + X(ScalarTraits<T>::to_double(*it));
      }
    }
    return acc;
  }

  Polynomial& operator+=(const Polynomial& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), T(0));
    for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
    trim();
    return *this;
  }
  Polynomial& operator-=(const Polynomial& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), T(0));
    for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
    trim();
    return *this;
  }
  Polynomial& operator*=(const T& s) {
    if (hyperrec::is_zero(s)) {
      c_.clear();
      return *this;
    }
    for (auto& v : c_) v *= s;
    return *this;
  }
  Polynomial& operator/=(const T& s) {
    if (hyperrec::is_zero(s)) throw std::domain_error("polynomial divided by zero scalar");
    for (auto& v : c_) v /= s;
    return *this;
  }
  /// Multiplies by z^k.
  Polynomial shifted(std::size_t k) const {
    if (c_.empty()) return {};
    std::vector<T> c(k, T(0));
    c.insert(c.end(), c_.begin(), c_.end());
    return Polynomial(std::move(c));
  }

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator-(Polynomial a) {
    for (auto& v : a.c_) v = -v;
    return a;
  }
  friend Polynomial operator*(Polynomial a, const T& s) { return a *= s; }
  friend Polynomial operator*(const T& s, Polynomial a) { return a *= s; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<T> c(a.c_.size() + b.c_.size() - 1, T(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    return Polynomial(std::move(c));
  }
  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }

  friend std::ostream& operator<<(std::ostream& os, const Polynomial& p) {
    if (p.is_zero()) return os << "0";
    bool first = true;
    for (std::size_t k = p.c_.size(); k-- > 0;) {
      if (hyperrec::is_zero(p.c_[k])) continue;
      if (!first) os << " + ";
      os << "(" << p.c_[k] << ")";
      if (k >= 1) os << "*z";
      if (k >= 2) os << "^" << k;
      first = false;
    }
    return os;
  }

 private:
  void trim() {
    while (!c_.empty() && hyperrec::is_zero(c_.back())) c_.pop_back();
  }

  std::vector<T> c_;
};

template <class T, class X>
X eval(const Polynomial<T>& p, const X& x) {
  return p(x);
}

template <class T>
Polynomial<T> derivative(const Polynomial<T>& p) {
  if (p.degree() < 1) return {};
  std::vector<T> d(p.size() - 1);
  for (std::size_t k = 1; k < p.size(); ++k) d[k - 1] = p.coeff(k) * T(static_cast<long>(k));
  return Polynomial<T>(std::move(d));
}

/// Euclidean division over a field: a = q*b + r with deg r < deg b.
template <ExactScalar T>
std::pair<Polynomial<T>, Polynomial<T>> divmod(const Polynomial<T>& a, const Polynomial<T>& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  if (a.degree() < b.degree()) return {Polynomial<T>{}, a};
  const auto db = static_cast<std::size_t>(b.degree());
  std::vector<T> r(a.coeffs().begin(), a.coeffs().end());
  std::vector<T> q(r.size() - db, T(0));
  const T& lb = b.leading();
  for (std::size_t k = r.size(); k-- > db;) {
    if (hyperrec::is_zero(r[k])) continue;
    T f = r[k] / lb;
    for (std::size_t j = 0; j <= db; ++j) r[k - db + j] -= f * b.coeff(j);
    q[k - db] = std::move(f);
  }
  r.resize(db);
  return {Polynomial<T>(std::move(q)), Polynomial<T>(std::move(r))};
}

template <ExactScalar T>
Polynomial<T> monic(Polynomial<T> p) {
  if (p.is_zero()) return p;
  const T lc = p.leading();
  return p /= lc;
}

template <ExactScalar T>
Polynomial<T> gcd(Polynomial<T> a, Polynomial<T> b) {
  while (!b.is_zero()) {
    auto r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return monic(std::move(a));
}

/// p / gcd(p, p'), made monic.
template <ExactScalar T>
Polynomial<T> squarefree_part(const Polynomial<T>& p) {
  if (p.is_zero()) throw std::domain_error("squarefree part of the zero polynomial");
  if (p.degree() == 0) return Polynomial<T>::constant(T(1));
  return monic(divmod(p, gcd(p, derivative(p))).first);
}

template <class T>
Polynomial<double> to_double(const Polynomial<T>& p) {
  std::vector<double> c;
  c.reserve(p.size());
  for (const auto& v : p.coeffs()) c.push_back(ScalarTraits<T>::to_double(v));
  return Polynomial<double>(std::move(c));
}

}  // namespace hyperrec
