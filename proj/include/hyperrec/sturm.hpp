#pragma once

// Exact real-root counting with Sturm sequences.
//
// The chain is built over Z[z] with the subresultant pseudo-remainder
// sequence, which keeps coefficient growth polynomial without any content
// gcds. Each stored element differs from the classical Sturm element
// -rem(S[i-1], S[i]) by a nonzero scalar whose sign is tracked separately,
// so sign variations are exact.

#include <hyperrec/polynomial.hpp>

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace hyperrec {

using IntPoly = std::vector<Integer>;  // ascending, trimmed

namespace detail {

inline void trim(IntPoly& p) {
  while (!p.empty() && sgn(p.back()) == 0) p.pop_back();
}

inline int deg(const IntPoly& p) { return static_cast<int>(p.size()) - 1; }

/// Scales a rational polynomial by the lcm of its denominators.
inline IntPoly clear_denominators(const Polynomial<Rational>& p) {
  Integer l = 1;
  for (const auto& c : p.coeffs()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
  IntPoly out;
  out.reserve(p.size());
  for (const auto& c : p.coeffs()) out.push_back(c.get_num() * (l / c.get_den()));
  return out;
}

/// prem(a, b) = lc(b)^(deg a - deg b + 1) * a  mod  b. Every one of the
/// deg a - deg b + 1 steps scales by lc(b), even when the leading term is 0.
inline IntPoly pseudo_remainder(IntPoly a, const IntPoly& b) {
  const int db = deg(b);
  const Integer& lb = b.back();
  Integer t;
  for (int k = deg(a); k >= db; --k) {
    Integer lead = a[static_cast<std::size_t>(k)];
    for (auto& v : a) v *= lb;
    if (sgn(lead) != 0) {
      for (int j = 0; j <= db; ++j) {
        t = lead * b[static_cast<std::size_t>(j)];
        a[static_cast<std::size_t>(k - db + j)] -= t;
      }
    }
    a.pop_back();
  }
  trim(a);
  return a;
}

inline Integer ipow(const Integer& b, unsigned long e) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), e);
  return r;
}

/// sign(p(num/den)) for den > 0, via homogenised Horner in Z.
inline int sign_at(const IntPoly& p, const Integer& num, const Integer& den) {
  if (p.empty()) return 0;
  Integer acc = p.back();
  Integer dpow = 1;
  for (std::size_t k = p.size() - 1; k-- > 0;) {
    dpow *= den;
    acc = acc * num + p[k] * dpow;
  }
  return sgn(acc);
}

}  // namespace detail

/// Sturm sequence of a nonzero rational polynomial and its derivative.
class SturmChain {
 public:
  explicit SturmChain(const Polynomial<Rational>& p) {
    if (p.is_zero()) throw std::domain_error("Sturm chain of the zero polynomial");
    degree_ = p.degree();
    IntPoly f0 = detail::clear_denominators(p);
    chain_.push_back(f0);
    signs_.push_back(1);
    if (degree_ == 0) {
      gcd_degree_ = 0;
      return;
    }
    IntPoly f1(f0.size() - 1);
    for (std::size_t k = 1; k < f0.size(); ++k) f1[k - 1] = f0[k] * static_cast<unsigned long>(k);
    chain_.push_back(f1);
    signs_.push_back(1);
    build();
  }

  /// Number of sign changes along the chain at x, zeros skipped.
  int variations(const Rational& x) const {
    int count = 0;
    int last = 0;
    for (std::size_t i = 0; i < chain_.size(); ++i) {
      int s = detail::sign_at(chain_[i], x.get_num(), x.get_den()) * signs_[i];
      if (s == 0) continue;
      if (last != 0 && s != last) ++count;
      last = s;
    }
    return count;
  }

  int sign_of_p(const Rational& x) const {
    return detail::sign_at(chain_.front(), x.get_num(), x.get_den());
  }

  int degree() const { return degree_; }
  /// Degree of gcd(p, p'); deg p minus this is the squarefree degree.
  int gcd_degree() const { return gcd_degree_; }
  int squarefree_degree() const { return degree_ - gcd_degree_; }
  std::size_t length() const { return chain_.size(); }

 private:
  void build() {
    // Subresultant PRS (Collins/Brown). r[i+1] = prem(r[i-1], r[i]) / beta_i.
    Integer psi = -1;
    std::size_t i = 1;
    int d_prev = 0;
    Integer beta;
    while (true) {
      const IntPoly& a = chain_[i - 1];
      const IntPoly& b = chain_[i];
      const int d = detail::deg(a) - detail::deg(b);
      const Integer& gamma_prev = a.back();
      if (i == 1) {
        beta = (d % 2 == 0) ? Integer(-1) : Integer(1);  // (-1)^(d+1)
      } else {
        // psi_i = (-gamma_{i-1})^{d_{i-1}} / psi_{i-1}^{d_{i-1}-1}
        Integer num = detail::ipow(-gamma_prev, static_cast<unsigned long>(d_prev));
        if (d_prev >= 1) {
          Integer den = detail::ipow(psi, static_cast<unsigned long>(d_prev - 1));
          mpz_divexact(num.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
        }
        psi = num;
        beta = -gamma_prev * detail::ipow(psi, static_cast<unsigned long>(d));
      }
      IntPoly r = detail::pseudo_remainder(a, b);
      if (r.empty()) break;
      for (auto& v : r) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), beta.get_mpz_t());
      // Classical element is -rem(a,b) = -prem(a,b) / lc(b)^(d+1), i.e.
      // r * beta * (-1) / lc(b)^(d+1), scaled by the sign of chain_[i-1].
      int s = -sgn(beta) * signs_[i - 1];
      if ((d + 1) % 2 == 1) s *= sgn(b.back());
      chain_.push_back(std::move(r));
      signs_.push_back(s);
      d_prev = d;
      ++i;
    }
    gcd_degree_ = detail::deg(chain_.back());
  }

  int degree_ = 0;
  int gcd_degree_ = 0;
  std::vector<IntPoly> chain_;
  std::vector<int> signs_;
};

/// Largest exact power of (z - x) dividing p, and the cofactor.
inline std::pair<int, Polynomial<Rational>> deflate_root(Polynomial<Rational> p, const Rational& x) {
  const Polynomial<Rational> lin{-x, Rational(1)};
  int m = 0;
  while (!p.is_zero() && p.degree() >= 1 && is_zero(p(x))) {
    p = divmod(p, lin).first;
    ++m;
  }
  return {m, std::move(p)};
}

/// Exact count of distinct real roots of p in the open interval (lo, hi).
/// A rational endpoint that is itself a root is divided out exactly first.
inline int count_real_roots(const Polynomial<Rational>& p, const Rational& lo, const Rational& hi) {
  if (p.is_zero()) throw std::domain_error("count_real_roots: zero polynomial");
  if (!(lo < hi)) throw std::invalid_argument("count_real_roots: need lo < hi");
  Polynomial<Rational> q = deflate_root(p, lo).second;
  q = deflate_root(std::move(q), hi).second;
  if (q.degree() <= 0) return 0;
  SturmChain chain(q);
  return chain.variations(lo) - chain.variations(hi);
}

/// Count over (lo, hi) reusing an existing chain; endpoints must not be roots.
inline int count_real_roots(const SturmChain& chain, const Rational& lo, const Rational& hi) {
  if (chain.sign_of_p(lo) == 0 || chain.sign_of_p(hi) == 0)
    throw std::domain_error("count_real_roots: endpoint is a root");
  return chain.variations(lo) - chain.variations(hi);
}

/// Real-root census over symmetric intervals (-B, B). When p is z^k times
/// an even polynomial Q(z^2), the chain is built for Q (half the degree):
/// each root w > 0 of Q gives the two real roots +-sqrt(w) and w < 0 gives
/// an imaginary pair. Otherwise the full chain of p is used.
class SymmetricRootCounter {
 public:
  explicit SymmetricRootCounter(const Polynomial<Rational>& p) {
    if (p.is_zero()) throw std::domain_error("root count of the zero polynomial");
    degree_ = p.degree();
    std::size_t k = 0;
    while (is_zero(p.coeff(k))) ++k;
    origin_root_ = k > 0;
    bool even = true;
    std::vector<Rational> q;
    for (std::size_t j = k; j < p.size(); ++j) {
      if ((j - k) % 2 == 1) {
        if (!is_zero(p.coeff(j))) even = false;
      } else {
        q.push_back(p.coeff(j));
      }
    }
    if (even && degree_ > 0) {
      reduced_ = true;
      chain_.emplace(Polynomial<Rational>(std::move(q)));
    } else {
      chain_.emplace(p);
    }
  }

  bool reduced() const { return reduced_; }
  int degree() const { return degree_; }

  int squarefree_degree() const {
    if (!reduced_) return chain_->squarefree_degree();
    return (origin_root_ ? 1 : 0) + 2 * chain_->squarefree_degree();
  }

  /// Distinct real roots in (-B, B); B > 0 must not be a root.
  int count(const Rational& bound) const {
    if (sgn(bound) <= 0) throw std::invalid_argument("SymmetricRootCounter: bound must be positive");
    if (!reduced_) return count_real_roots(*chain_, -bound, bound);
    const Rational b2 = bound * bound;
    if (chain_->sign_of_p(b2) == 0) throw std::domain_error("count_real_roots: endpoint is a root");
    const int positive = chain_->degree() == 0 ? 0 : chain_->variations(Rational(0)) - chain_->variations(b2);
    return (origin_root_ ? 1 : 0) + 2 * positive;
  }

 private:
  int degree_ = 0;
  bool origin_root_ = false;
  bool reduced_ = false;
  std::optional<SturmChain> chain_;
};

/// Cauchy bound 1 + max|a_k / a_n|, rounded up to an integer.
inline Rational cauchy_bound(const Polynomial<Rational>& p) {
  if (p.degree() < 1) return Rational(1);
  Rational m = 0;
  for (int k = 0; k < p.degree(); ++k) {
    Rational r = abs(p.coeff(static_cast<std::size_t>(k)) / p.leading());
    if (r > m) m = r;
  }
  Integer up;
  mpz_cdiv_q(up.get_mpz_t(), m.get_num_mpz_t(), m.get_den_mpz_t());
  return Rational(up + 1);
}

}  // namespace hyperrec
