#pragma once

// End-to-end checks on the family: exact hyperbolicity certificates,
// counterexample search, dominance probes for the limit set of zeros,
// zero-density measurements and the b < 0, c = 0 diagnostic.

#include <hyperrec/gn_solver.hpp>
#include <hyperrec/params.hpp>
#include <hyperrec/recurrence.hpp>
#include <hyperrec/roots.hpp>
#include <hyperrec/sturm.hpp>

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <cstddef>
#include <limits>
#include <optional>
#include <stdexcept>
#include <vector>

namespace hyperrec {

// ---------------------------------------------------------------------------
// Float roots of P_n

namespace detail {

/// log2 |x| for a nonzero rational, without overflow.
inline double log2_abs(const Rational& x) {
  long en = 0, ed = 0;
  const double dn = mpz_get_d_2exp(&en, x.get_num_mpz_t());
  const double dd = mpz_get_d_2exp(&ed, x.get_den_mpz_t());
  return std::log2(std::abs(dn)) + static_cast<double>(en) - std::log2(dd) - static_cast<double>(ed);
}

/// Number of vanishing low-order coefficients (multiplicity of the root 0).
inline std::size_t origin_multiplicity(const Polynomial<Rational>& p) {
  std::size_t k = 0;
  while (k < p.size() && is_zero(p.coeff(k))) ++k;
  return k;
}

/// Starting radius for Aberth on p / z^k: the geometric mean of the root
/// moduli, computed in log space, capped by the Fujiwara bound.
inline double starting_radius(const Polynomial<Rational>& p, std::size_t k) {
  const int n = p.degree() - static_cast<int>(k);
  if (n < 1) return 1.0;
  const double l_lead = log2_abs(p.leading());
  const double gm = (log2_abs(p.coeff(k)) - l_lead) / n;
  double fj = -std::numeric_limits<double>::infinity();
  for (int j = 1; j <= n; ++j) {
    const auto& c = p.coeff(static_cast<std::size_t>(p.degree() - j));
    if (is_zero(c)) continue;
    fj = std::max(fj, (log2_abs(c) - l_lead) / j);
  }
  return std::exp2(std::min(gm, fj + 1.0));
}

}  // namespace detail

/// All complex roots of P_n (given exactly) using the recurrence for
/// evaluation. Roots at the origin are split off exactly.
template <class T>
std::vector<ComplexValue> sequence_roots(const RecurrenceParams<T>& params, const Polynomial<Rational>& pn,
                                         RootOptions opt = {}) {
  const std::size_t n = static_cast<std::size_t>(pn.degree());
  const std::size_t k = detail::origin_multiplicity(pn);
  std::vector<ComplexValue> roots(k, ComplexValue{0.0, 0.0});
  if (n > k) {
    if (opt.initial_radius <= 0.0) opt.initial_radius = detail::starting_radius(pn, k);
    ZeroDeflated<RecurrenceEvaluator> f(RecurrenceEvaluator(params, n), k);
    auto r = aberth_roots(f, opt);
    roots.insert(roots.end(), r.roots.begin(), r.roots.end());
  }
  std::sort(roots.begin(), roots.end(), by_real_then_imag);
  return roots;
}

// ---------------------------------------------------------------------------
// Exact certification

struct HyperbolicityReport {
  std::size_t n = 0;
  int degree = 0;
  int squarefree_degree = 0;
  int sturm_count = 0;  // distinct real roots in (-B, B)
  bool hyperbolic = false;
  double max_abs_root = 0.0;
  std::optional<double> lambda;  // in the caller's coordinates; only for b > 0, alpha <= 1/9
  bool contained = false;        // max_abs_root < lambda
  bool contained_exact = false;  // all real roots certified inside a rational just below lambda
};

namespace detail {

/// lambda for the original (a, b, c): lambda(alpha) * sqrt(b) / |a|.
inline std::optional<HighPrecision> original_lambda(const RecurrenceParams<Rational>& p) {
  if (sgn(p.b) <= 0 || is_zero(p.c)) return std::nullopt;
  const Rational alpha = p.c / (p.a * p.b);
  if (alpha > alpha_threshold()) return std::nullopt;
  return lambda_bound_hp(alpha) * sqrt(to_high_precision(p.b)) / abs(to_high_precision(p.a));
}

}  // namespace detail

/// Certificate for a single P_n. Without float roots, max_abs_root stays 0
/// and `contained` mirrors `contained_exact`.
inline HyperbolicityReport certify_one(const RecurrenceParams<Rational>& params, const Polynomial<Rational>& pn,
                                       std::size_t n, bool float_roots = true) {
  HyperbolicityReport rep;
  rep.n = n;
  rep.degree = pn.degree();
  const auto lam = detail::original_lambda(params);

  Rational bound;
  if (lam) {
    Integer up(static_cast<boost::multiprecision::cpp_int>(ceil(*lam)).str());
    bound = Rational(up + 1);
  } else {
    bound = cauchy_bound(pn);
  }
  const SymmetricRootCounter counter(pn);
  rep.squarefree_degree = counter.squarefree_degree();
  rep.sturm_count = counter.count(bound);
  rep.hyperbolic = rep.sturm_count == rep.squarefree_degree;

  if (float_roots)
    for (const auto& r : sequence_roots(params, pn)) rep.max_abs_root = std::max(rep.max_abs_root, std::abs(r));
  if (lam) {
    rep.lambda = static_cast<double>(*lam);
    const Rational inner = rational_below(*lam);
    rep.contained_exact = counter.count(inner) == rep.squarefree_degree;
    rep.contained = float_roots ? rep.max_abs_root < *rep.lambda : rep.contained_exact;
  }
  return rep;
}

/// Reports for n = 1..n_max.
inline std::vector<HyperbolicityReport> certify(const RecurrenceParams<Rational>& params, std::size_t n_max,
                                                bool float_roots = true) {
  const auto seq = generate(params, n_max);
  std::vector<HyperbolicityReport> out;
  out.reserve(n_max);
  for (std::size_t n = 1; n <= n_max; ++n) out.push_back(certify_one(params, seq[n], n, float_roots));
  return out;
}

struct CounterexampleRecord {
  RecurrenceParams<Rational> params;
  std::optional<std::size_t> first_nonreal_n;
  std::optional<ComplexValue> witness_root;
  int sturm_count = 0;
  int squarefree_degree = 0;
};

/// Smallest n <= n_max whose P_n has a certified non-real root: the Sturm
/// count over a Cauchy interval falls short of the squarefree degree.
/// The witness is the float root with the largest imaginary part.
inline CounterexampleRecord first_nonreal(const RecurrenceParams<Rational>& params, std::size_t n_max = 300) {
  CounterexampleRecord rec{params, std::nullopt, std::nullopt, 0, 0};
  const auto seq = generate(params, n_max);
  for (std::size_t n = 1; n <= n_max; ++n) {
    const auto& pn = seq[n];
    const SymmetricRootCounter counter(pn);
    const int count = counter.count(cauchy_bound(pn));
    if (count < counter.squarefree_degree()) {
      rec.first_nonreal_n = n;
      rec.sturm_count = count;
      rec.squarefree_degree = counter.squarefree_degree();
      const auto roots = sequence_roots(params, pn);
      auto best = std::max_element(roots.begin(), roots.end(), [](const auto& x, const auto& y) {
        return std::abs(x.imag()) < std::abs(y.imag());
      });
      rec.witness_root = best->imag() < 0 ? std::conj(*best) : *best;
      return rec;
    }
  }
  return rec;
}

// ---------------------------------------------------------------------------
// Cubic helpers and dominance

/// Discriminant of a3 x^3 + a2 x^2 + a1 x + a0.
template <class T>
T cubic_discriminant(const T& a3, const T& a2, const T& a1, const T& a0) {
  return T(18) * a3 * a2 * a1 * a0 - T(4) * a2 * a2 * a2 * a0 + a2 * a2 * a1 * a1 - T(4) * a3 * a1 * a1 * a1 -
         T(27) * a3 * a3 * a0 * a0;
}

/// Roots of a complex-coefficient cubic c0 + c1 t + c2 t^2 + c3 t^3.
inline std::array<ComplexValue, 3> cubic_roots(const std::array<ComplexValue, 4>& c) {
  if (c[3] == ComplexValue{0.0, 0.0}) throw std::domain_error("degenerate cubic: leading coefficient is zero");
  struct Eval {
    std::array<ComplexValue, 4> c;
    std::size_t degree() const { return 3; }
    PointValue operator()(ComplexValue t) const {
      return {((c[3] * t + c[2]) * t + c[1]) * t + c[0], (3.0 * c[3] * t + 2.0 * c[2]) * t + c[1]};
    }
  };
  RootOptions opt;
  opt.initial_radius = std::cbrt(std::abs(c[0] / c[3])) + 0.5;
  const auto r = aberth_roots(Eval{c}, opt);
  return {r.roots[0], r.roots[1], r.roots[2]};
}

inline constexpr double dominance_tolerance = 1e-10;

struct DominanceReport {
  ComplexValue z_probe;
  std::array<ComplexValue, 3> t_roots;  // sorted by modulus, ascending
  std::array<double, 3> t_moduli{};
  bool two_dominant = false;
  bool distinct_nonzero = false;
};

namespace detail {

inline DominanceReport classify(ComplexValue z, std::array<ComplexValue, 3> t, bool largest_pair) {
  std::sort(t.begin(), t.end(), [](const auto& x, const auto& y) { return std::abs(x) < std::abs(y); });
  DominanceReport rep;
  rep.z_probe = z;
  rep.t_roots = t;
  for (int k = 0; k < 3; ++k) rep.t_moduli[k] = std::abs(t[k]);
  const double scale = std::max(rep.t_moduli[2], 1e-300);
  rep.distinct_nonzero = rep.t_moduli[0] > 0.0;
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j)
      if (std::abs(t[i] - t[j]) <= 1e-8 * scale) rep.distinct_nonzero = false;
  const auto close = [](double x, double y) {
    return std::abs(x - y) <= dominance_tolerance * std::max({x, y, 1e-300});
  };
  const bool pair = largest_pair ? close(rep.t_moduli[1], rep.t_moduli[2]) : close(rep.t_moduli[0], rep.t_moduli[1]);
  rep.two_dominant = rep.distinct_nonzero && pair;
  return rep;
}

}  // namespace detail

/// Roots of 1 + z t + t^2 + alpha z t^3 at z = z_probe. Since the
/// exponential-sum bases are 1/t_k, the dominant indices are those with the
/// smallest |t|; two_dominant means |t1| = |t2| <= |t3| with distinct roots.
inline DominanceReport dominance_at(ComplexValue z_probe, double alpha) {
  if (alpha * z_probe == ComplexValue{0.0, 0.0}) throw std::domain_error("dominance_at: alpha * z must be nonzero");
  const auto t = cubic_roots({ComplexValue{1.0, 0.0}, z_probe, ComplexValue{1.0, 0.0}, alpha * z_probe});
  return detail::classify(z_probe, t, false);
}

struct ReciprocalDominanceReport {
  /// Roots of D*(t) = t^3 + z t^2 - t + c z; two_dominant means the two
  /// LARGEST moduli agree.
  DominanceReport reciprocal;
  /// The reciprocals, i.e. the roots of D(t) = 1 + z t - t^2 + c z t^3.
  DominanceReport direct;
};

inline ReciprocalDominanceReport reciprocal_dominance(ComplexValue z_probe, double c) {
  if (c == 0.0) throw std::domain_error("reciprocal_dominance: c must be nonzero");
  const auto ts = cubic_roots({c * z_probe, ComplexValue{-1.0, 0.0}, z_probe, ComplexValue{1.0, 0.0}});
  ReciprocalDominanceReport out;
  out.reciprocal = detail::classify(z_probe, ts, true);
  std::array<ComplexValue, 3> inv{};
  for (int k = 0; k < 3; ++k) {
    if (ts[k] == ComplexValue{0.0, 0.0}) throw std::domain_error("reciprocal_dominance: zero root");
    inv[k] = 1.0 / ts[k];
  }
  out.direct = detail::classify(z_probe, inv, false);
  return out;
}

// ---------------------------------------------------------------------------
// Limit-set and density measurements

/// min |z* - root| over the roots of P_n, for each n in n_list.
inline std::vector<double> zero_approach(ComplexValue z_star, const RecurrenceParams<Rational>& params,
                                         const std::vector<std::size_t>& n_list) {
  if (!std::is_sorted(n_list.begin(), n_list.end())) throw std::invalid_argument("zero_approach: n_list must ascend");
  std::vector<double> out;
  if (n_list.empty()) return out;
  const auto seq = generate(params, n_list.back());
  for (std::size_t n : n_list) {
    double best = std::numeric_limits<double>::infinity();
    for (const auto& r : sequence_roots(params, seq[n])) best = std::min(best, std::abs(r - z_star));
    out.push_back(best);
  }
  return out;
}

struct DensityProfile {
  Rational alpha;
  std::size_t n_max = 0;
  double lambda = 0.0;
  std::vector<double> union_roots;  // ascending
  double max_gap_central = 0.0;
  /// Largest |imaginary part| seen; the union is over real parts.
  double max_abs_imag = 0.0;
};

/// Fraction of (-lambda, lambda) used for the gap metric.
inline constexpr double central_fraction = 0.95;

/// Largest gap between consecutive points inside [-w, w]; the whole window
/// width 2w when fewer than two points fall inside.
inline double max_gap_in_window(const std::vector<double>& sorted, double w) {
  std::vector<double> in;
  for (double x : sorted)
    if (x >= -w && x <= w) in.push_back(x);
  if (in.size() < 2) return 2 * w;
  double g = 0.0;
  for (std::size_t k = 1; k < in.size(); ++k) g = std::max(g, in[k] - in[k - 1]);
  return g;
}

namespace detail {

/// Starting points for P_n from the sorted real parts of P_{n-1}'s roots:
/// the midpoints, one point beyond each end inside (-bound, bound), with a
/// small alternating imaginary offset; the `skip` points nearest the origin
/// are dropped to match an origin-deflated evaluator.
inline std::vector<ComplexValue> interlaced_start(const std::vector<double>& prev, double bound, std::size_t skip) {
  std::vector<ComplexValue> init;
  init.reserve(prev.size() + 1);
  init.emplace_back(0.5 * (prev.front() - bound), 1e-2);
  for (std::size_t k = 1; k < prev.size(); ++k)
    init.emplace_back(0.5 * (prev[k - 1] + prev[k]), k % 2 == 1 ? 1e-2 : -1e-2);
  init.emplace_back(0.5 * (prev.back() + bound), -1e-2);
  for (std::size_t s = 0; s < skip && !init.empty(); ++s) {
    const auto nearest = std::min_element(init.begin(), init.end(),
                                          [](const auto& x, const auto& y) { return std::abs(x) < std::abs(y); });
    init.erase(nearest);
  }
  return init;
}

}  // namespace detail

/// Roots of P_1..P_{n_max}. Each degree is warm-started from the previous
/// root set, which keeps the Aberth iteration count nearly flat in n.
inline DensityProfile density_profile(const Rational& alpha, std::size_t n_max) {
  DensityProfile prof;
  prof.alpha = alpha;
  prof.n_max = n_max;
  prof.lambda = lambda_bound(alpha);
  const auto params = RecurrenceParams<Rational>::from_alpha(alpha);
  const auto seq = generate(params, n_max);
  std::vector<double> prev;
  for (std::size_t n = 1; n <= n_max; ++n) {
    RootOptions opt;
    opt.initial_radius = prof.lambda;
    if (!prev.empty()) opt.initial = detail::interlaced_start(prev, prof.lambda, detail::origin_multiplicity(seq[n]));
    prev.clear();
    for (const auto& r : sequence_roots(params, seq[n], opt)) {
      prev.push_back(r.real());
      prof.max_abs_imag = std::max(prof.max_abs_imag, std::abs(r.imag()));
    }
    std::sort(prev.begin(), prev.end());
    prof.union_roots.insert(prof.union_roots.end(), prev.begin(), prev.end());
  }
  std::sort(prof.union_roots.begin(), prof.union_roots.end());
  prof.max_gap_central = max_gap_in_window(prof.union_roots, central_fraction * prof.lambda);
  return prof;
}

/// For (a, b, c) = (1, -1, 0): every root of P_n, n <= n_max, has
/// |Re| < 1e-9 and |Im| < 2.
inline bool imaginary_axis_check(std::size_t n_max) {
  const RecurrenceParams<Rational> params(Rational(1), Rational(-1), Rational(0));
  const auto seq = generate(params, n_max);
  for (std::size_t n = 1; n <= n_max; ++n) {
    RootOptions opt;
    opt.initial_radius = 2.0;
    for (const auto& r : sequence_roots(params, seq[n], opt))
      if (!(std::abs(r.real()) < 1e-9 && std::abs(r.imag()) < 2.0)) return false;
  }
  return true;
}

}  // namespace hyperrec
