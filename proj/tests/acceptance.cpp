// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails.

#include <hyperrec/hyperrec.hpp>

#include "oracles.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

namespace hr = hyperrec;
using hr::ComplexValue;
using hr::Rational;
using Params = hr::RecurrenceParams<Rational>;

namespace {

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail << " [failed: " << what << "]";
    }
  }
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

struct Admissible {
  const char* label;
  Rational exact;
  double value;
};

const Admissible admissible[] = {
    {"1/9", Rational(1, 9), 1.0 / 9},
    {"1/20", Rational(1, 20), 1.0 / 20},
    {"-1", Rational(-1), -1.0},
    {"-10", Rational(-10), -10.0},
};

void oracle_equivalence(Outcome& o) {
  const auto t0 = std::chrono::steady_clock::now();
  oracle::RationalSource src(2024);
  int mismatches = 0;
  for (int trial = 0; trial < 50; ++trial) {
    const Params p(src.nonzero(9, 7), src.nonzero(9, 7), src.integer(0, 5) == 0 ? Rational(0) : src.nonzero(9, 7));
    const auto direct = hr::generate(p, 30);
    const auto series = hr::series_oracle(p, 30);
    for (std::size_t n = 0; n <= 30; ++n) mismatches += direct[n] == series[n] ? 0 : 1;
  }
  const double dt = seconds_since(t0);
  o.detail << "50 triples, N = 30, mismatches " << mismatches << ", " << dt << " s";
  o.require(mismatches == 0, "sequences differ");
  o.require(dt < 5.0, "runtime >= 5 s");
}

void boundary_lambda(Outcome& o) {
  const double at_boundary = hr::lambda_bound(Rational(1, 9));
  const double near_zero = hr::lambda_bound(Rational(1, 100000000));
  o.detail << "lambda(1/9) - sqrt 3 = " << at_boundary - std::sqrt(3.0) << ", lambda(1e-8) - 2 = " << near_zero - 2.0;
  o.require(std::abs(at_boundary - std::sqrt(3.0)) <= 1e-12, "lambda(1/9)");
  o.require(std::abs(near_zero - 2.0) <= 1e-6, "lambda(1e-8)");
}

void sufficiency(Outcome& o) {
  for (const auto& a : admissible) {
    const auto t0 = std::chrono::steady_clock::now();
    const auto reports = hr::certify(Params::from_alpha(a.exact), 150);
    const double dt = seconds_since(t0);
    bool all = reports.size() == 150;
    double worst = 0.0;
    for (const auto& r : reports) {
      all = all && r.hyperbolic && r.lambda && r.max_abs_root < *r.lambda && r.contained_exact;
      worst = std::max(worst, r.max_abs_root);
    }
    o.detail << "alpha " << a.label << ": max|root| " << worst << " < " << hr::lambda_bound(a.value) << ", " << dt
             << " s; ";
    o.require(all, std::string("alpha ") + a.label + " not certified");
    o.require(dt < 120.0, std::string("alpha ") + a.label + " over 2 min");
  }
}

void necessity(Outcome& o) {
  struct Frozen {
    const char* label;
    Params params;
    std::size_t n;
  };
  const Frozen frozen[] = {
      {"alpha 1/8", Params::from_alpha(Rational(1, 8)), 17},
      {"alpha 1/5", Params::from_alpha(Rational(1, 5)), 7},
      {"alpha 1/2", Params::from_alpha(Rational(1, 2)), 5},
      {"alpha 2", Params::from_alpha(Rational(2)), 4},
      {"(1,-1,1/10)", Params(Rational(1), Rational(-1), Rational(1, 10)), 2},
  };
  for (const auto& f : frozen) {
    const auto rec = hr::first_nonreal(f.params, 300);
    const bool found = rec.first_nonreal_n.has_value() && rec.witness_root.has_value();
    o.detail << f.label << ": n = " << (found ? std::to_string(*rec.first_nonreal_n) : "none");
    if (found) o.detail << " witness " << rec.witness_root->real() << "+" << rec.witness_root->imag() << "i";
    o.detail << "; ";
    o.require(found && rec.sturm_count < rec.squarefree_degree, std::string(f.label) + " has no certified witness");
    o.require(found && *rec.first_nonreal_n == f.n, std::string(f.label) + " moved from frozen n");
  }
}

void theta_identities(Outcome& o) {
  double worst_product = 0.0, worst_f = 0.0, worst_vieta = 0.0, worst_limit = 0.0;
  for (const auto& a : admissible) {
    bool ok = true;
    for (double th : hr::theta_grid(10000)) {
      const auto s = hr::sample(th, a.value);
      const double f1 = hr::zeta_quadratic(th, a.value, 1.0), fm1 = hr::zeta_quadratic(th, a.value, -1.0);
      worst_product = std::max(worst_product, std::abs(s.zeta_plus * s.zeta_minus - 1.0));
      worst_f = std::max(worst_f, std::abs(f1 * fm1 + s.delta));
      worst_vieta = std::max(worst_vieta, hr::vieta_residuals(s).max_abs());
      ok = ok && s.delta > 0 && std::abs(s.zeta_plus) > 1.0 && (a.value < 0 || std::pow(s.tau, 4) < 9.0);
    }
    o.require(ok, std::string("alpha ") + a.label + " sign conditions");
    const auto scan = hr::monotonicity_scan(a.value, 10000);
    o.require(scan.strictly_increasing, std::string("alpha ") + a.label + " not increasing");
    const double lam = hr::lambda_bound(a.value);
    const double left = std::abs(hr::z_of_theta(1e-6, a.value) + lam);
    const double right = std::abs(hr::z_of_theta(std::numbers::pi - 1e-6, a.value) - lam);
    worst_limit = std::max({worst_limit, left, right});
  }
  o.detail << "4 x 10^4 points: |zeta+ zeta- - 1| <= " << worst_product << ", |f(1)f(-1) + Delta| <= " << worst_f
           << ", Vieta <= " << worst_vieta << ", |z - (+-lambda)| at offset 1e-6 <= " << worst_limit;
  o.require(worst_product <= 1e-12, "zeta product");
  o.require(worst_f <= 1e-12, "f(1) f(-1) + Delta");
  o.require(worst_vieta < 1e-10, "Vieta residuals");
  o.require(worst_limit <= 1e-5, "limits");
}

double hausdorff(const std::vector<double>& x, const std::vector<double>& y) {
  const auto one_way = [](const std::vector<double>& p, const std::vector<double>& q) {
    double h = 0.0;
    for (double u : p) {
      double best = 1e300;
      for (double v : q) best = std::min(best, std::abs(u - v));
      h = std::max(h, best);
    }
    return h;
  };
  return std::max(one_way(x, y), one_way(y, x));
}

void gn_correctness(Outcome& o) {
  double worst = 0.0;
  for (const auto& a : admissible) {
    const auto seq = hr::generate(Params::from_alpha(a.exact), 40);
    for (std::size_t n = 1; n <= 40; ++n) {
      const hr::GnProblem p(n, a.value);
      const std::size_t theta_roots = hr::solve(p).size();
      o.require(theta_roots == (n % 2 == 0 ? n : n - 1),
                std::string("alpha ") + a.label + " theta-root count at n = " + std::to_string(n));
      std::vector<double> reference;
      for (const auto& r : hr::sequence_roots(Params::from_alpha(a.exact), seq[n])) reference.push_back(r.real());
      const double h = hausdorff(hr::predicted_roots(p), reference);
      worst = std::max(worst, h);
      if (n % 2 == 1) o.require(seq[n].coeff(0) == 0, "P_n(0) != 0 for odd n");
    }
  }
  o.detail << "n <= 40, 4 alphas: worst Hausdorff distance " << worst;
  o.require(worst <= 1e-7, "Hausdorff distance");
}

void density_trend(Outcome& o) {
  const auto t0 = std::chrono::steady_clock::now();
  const auto small = hr::density_profile(Rational(-1), 100);
  const auto large = hr::density_profile(Rational(-1), 400);
  bool inside = true;
  for (const auto* prof : {&small, &large})
    for (double r : prof->union_roots) inside = inside && std::abs(r) < prof->lambda;
  o.detail << "gap(100) = " << small.max_gap_central << ", gap(400) = " << large.max_gap_central
           << ", ratio " << large.max_gap_central / small.max_gap_central << ", max |Im| " << large.max_abs_imag
           << ", " << seconds_since(t0) << " s";
  o.require(large.max_gap_central < 0.5 * small.max_gap_central, "gap did not halve");
  o.require(inside, "union root outside (-lambda, lambda)");
}

void sokal_probes(Outcome& o) {
  const ComplexValue i_unit(0.0, 1.0);
  const auto rep = hr::dominance_at(i_unit, 2.0);
  const double y3 = oracle::bisect([](double y) { return 1 + y - y * y - 2 * y * y * y; }, 0.0, 1.0);
  const double pair = std::sqrt(1.0 / (2.0 * y3));
  o.detail << "|t| = " << rep.t_moduli[0] << ", " << rep.t_moduli[1] << ", " << rep.t_moduli[2] << " (oracle " << pair
           << ", " << y3 << "); ";
  o.require(rep.two_dominant, "two_dominant");
  o.require(std::abs(rep.t_moduli[0] - pair) <= 1e-3 && std::abs(rep.t_moduli[1] - pair) <= 1e-3 &&
                std::abs(rep.t_moduli[2] - y3) <= 1e-3 && rep.t_moduli[1] <= rep.t_moduli[2],
            "moduli vs bisection oracle");

  for (const Rational alpha : {Rational(1), Rational(2)}) {
    const Rational disc = hr::cubic_discriminant<Rational>(-alpha, Rational(-1), Rational(1), Rational(1));
    o.detail << "disc(" << alpha << ") = " << disc << "; ";
    o.require(disc == 5 + 22 * alpha - 27 * alpha * alpha, "discriminant formula");
  }

  const auto d = hr::zero_approach(i_unit, Params::from_alpha(Rational(2)), {50, 100, 200});
  o.detail << "zero_approach(50, 100, 200) = " << d[0] << ", " << d[1] << ", " << d[2];
  o.require(d[0] > d[1] && d[1] > d[2], "zero_approach distances not strictly decreasing");
}

void imaginary_axis(Outcome& o) {
  const bool ok = hr::imaginary_axis_check(100);
  o.detail << "(1, -1, 0), n <= 100";
  o.require(ok, "root off the imaginary interval");
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<void(Outcome&)>>> criteria = {
      {"oracle equivalence", oracle_equivalence},
      {"boundary lambda", boundary_lambda},
      {"sufficiency n <= 150", sufficiency},
      {"necessity witnesses", necessity},
      {"theta-frame identities", theta_identities},
      {"g_n correctness", gn_correctness},
      {"density trend", density_trend},
      {"dominance probes", sokal_probes},
      {"b < 0, c = 0 imaginary interval", imaginary_axis},
  };
  int failures = 0;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    Outcome o;
    try {
      criteria[k].second(o);
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail << " [exception: " << e.what() << "]";
    }
    failures += o.pass ? 0 : 1;
    std::printf("%s %zu %s: %s\n", o.pass ? "PASS" : "FAIL", k + 1, criteria[k].first, o.detail.str().c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria failed\n", failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
