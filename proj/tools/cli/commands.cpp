#include "commands.hpp"

#include "table.hpp"

#include <hyperrec/hyperrec.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <numbers>
#include <ostream>
#include <sstream>

namespace hyperrec::cli {

namespace {

using Json = nlohmann::ordered_json;

// ---------------------------------------------------------------------------
// Parameter resolution

Rational parse_flag(const std::string& name, const std::string& text, bool allow_decimal) {
  try {
    return parse_rational(text, allow_decimal);
  } catch (const std::invalid_argument& e) {
    throw UsageError("--" + name + ": " + e.what());
  }
}

bool has_triple(const CommandConfig& cfg) { return cfg.a || cfg.b || cfg.c; }

RecurrenceParams<Rational> resolve_params(const CommandConfig& cfg) {
  if (cfg.alpha && has_triple(cfg)) throw UsageError("--alpha excludes --a/--b/--c");
  if (cfg.alpha) {
    const Rational alpha = parse_flag("alpha", *cfg.alpha, cfg.allow_decimal);
    return RecurrenceParams<Rational>::from_alpha(alpha);
  }
  if (!cfg.a || !cfg.b || !cfg.c) throw UsageError("give either --alpha or all of --a, --b, --c");
  const Rational a = parse_flag("a", *cfg.a, cfg.allow_decimal);
  const Rational b = parse_flag("b", *cfg.b, cfg.allow_decimal);
  const Rational c = parse_flag("c", *cfg.c, cfg.allow_decimal);
  try {
    return RecurrenceParams<Rational>(a, b, c);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

/// alpha from --alpha, or c/(ab) from a triple with b > 0.
Rational resolve_alpha(const CommandConfig& cfg) {
  const auto params = resolve_params(cfg);
  if (sgn(params.b) <= 0) throw UsageError("this command needs b > 0 (alpha = c/(ab) is undefined otherwise)");
  return normalize(params).params.alpha;
}

void require_admissible(const Rational& alpha) {
  if (is_zero(alpha)) throw UsageError("alpha must be nonzero");
  if (alpha > alpha_threshold()) throw UsageError("alpha must not exceed 1/9 (use --complex for theta)");
}

std::size_t n_max_or(const CommandConfig& cfg, std::size_t fallback) {
  const std::size_t n = cfg.n_max.value_or(fallback);
  if (n == 0) throw UsageError("--n-max must be at least 1");
  return n;
}

Json params_json(const RecurrenceParams<Rational>& p) {
  return Json{{"a", to_string(p.a)}, {"b", to_string(p.b)}, {"c", to_string(p.c)}};
}

Json complex_json(ComplexValue z) { return Json{{"re", z.real()}, {"im", z.imag()}}; }

Json document(const std::string& command) { return Json{{"schema", 1}, {"command", command}}; }

void emit_json(std::ostream& out, const Json& doc) { out << doc.dump(2) << "\n"; }

void write_side_table(const std::string& path, const std::function<void(std::ostream&)>& body) {
  if (path.empty()) return;
  std::ofstream f(path, std::ios::binary);
  if (!f) throw UsageError("cannot open " + path + " for writing");
  body(f);
}

// ---------------------------------------------------------------------------
// Headers (golden-tested; append-only)

const std::map<std::string, std::vector<std::string>>& headers() {
  static const std::map<std::string, std::vector<std::string>> h{
      {"certify", {"n", "degree", "sturm_count", "squarefree_degree", "hyperbolic", "max_abs_root", "lambda",
                   "contained"}},
      {"gen", {"n", "power", "coefficient"}},
      {"roots", {"n", "index", "re", "im"}},
      {"theta", {"theta", "delta", "zeta", "tau", "z", "abs_t1", "abs_t3", "vieta_max_residual"}},
      {"theta_complex", {"theta", "delta", "zeta_re", "zeta_im", "tau_re", "tau_im", "z_re", "z_im", "abs_t1",
                         "abs_t3", "vieta_max_residual"}},
      {"density", {"alpha", "n_max", "lambda", "root_count", "max_gap_central"}},
      {"density_roots", {"root"}},
      {"counterexample", {"a", "b", "c", "n_max", "first_nonreal_n", "sturm_count", "squarefree_degree",
                          "witness_re", "witness_im"}},
      {"sokal", {"mode", "probe_re", "probe_im", "t1_re", "t1_im", "t2_re", "t2_im", "t3_re", "t3_im", "abs_t1",
                 "abs_t2", "abs_t3", "two_dominant", "distinct_nonzero"}},
      {"sokal_approach", {"n", "distance"}},
      {"limits", {"alpha", "lambda", "offset", "z_left", "z_right", "err_left", "err_right", "within_tolerance"}},
  };
  return h;
}

}  // namespace

const std::vector<std::string>& csv_header(const std::string& subcommand, bool complex_mode) {
  const std::string key = subcommand == "theta" && complex_mode ? "theta_complex" : subcommand;
  const auto it = headers().find(key);
  if (it == headers().end()) throw std::out_of_range("no CSV header for " + subcommand);
  return it->second;
}

// ---------------------------------------------------------------------------
// certify

int cmd_certify(const CommandConfig& cfg, std::ostream& out) {
  const auto params = resolve_params(cfg);
  const auto reports = certify(params, n_max_or(cfg, 50));
  bool failure = false;
  for (const auto& r : reports) failure |= !r.hyperbolic || (r.lambda && !r.contained);

  if (cfg.format == Format::json) {
    Json doc = document("certify");
    doc["params"] = params_json(params);
    Json rows = Json::array();
    for (const auto& r : reports) {
      rows.push_back(Json{{"n", r.n},
                          {"degree", r.degree},
                          {"sturm_count", r.sturm_count},
                          {"squarefree_degree", r.squarefree_degree},
                          {"hyperbolic", r.hyperbolic},
                          {"max_abs_root", r.max_abs_root},
                          {"lambda", r.lambda ? Json(*r.lambda) : Json(nullptr)},
                          {"contained", r.lambda ? Json(r.contained) : Json(nullptr)}});
    }
    doc["rows"] = std::move(rows);
    doc["all_hyperbolic"] = !failure;
    emit_json(out, doc);
  } else {
    write_header(out, csv_header("certify"));
    for (const auto& r : reports) {
      CsvRow row;
      row.add(r.n).add(r.degree).add(r.sturm_count).add(r.squarefree_degree).add(r.hyperbolic).add(r.max_abs_root);
      row.add(r.lambda);
      if (r.lambda) {
        row.add(r.contained);
      } else {
        row.add("");
      }
      row.write(out);
    }
  }
  return failure ? exit_failure_found : exit_ok;
}

// ---------------------------------------------------------------------------
// gen, roots

namespace {

std::vector<std::size_t> requested_degrees(const CommandConfig& cfg, std::size_t first, std::size_t fallback_max) {
  if (cfg.n) return {*cfg.n};
  std::vector<std::size_t> ns;
  for (std::size_t n = first; n <= n_max_or(cfg, fallback_max); ++n) ns.push_back(n);
  return ns;
}

}  // namespace

int cmd_gen(const CommandConfig& cfg, std::ostream& out) {
  const auto params = resolve_params(cfg);
  const auto ns = requested_degrees(cfg, 0, 10);
  const auto seq = generate(params, ns.back());
  if (cfg.format == Format::json) {
    Json doc = document("gen");
    doc["params"] = params_json(params);
    Json polys = Json::array();
    for (std::size_t n : ns) {
      Json coeffs = Json::array();
      for (const auto& v : seq[n].coeffs()) coeffs.push_back(to_string(v));
      polys.push_back(Json{{"n", n}, {"coefficients", std::move(coeffs)}});
    }
    doc["polynomials"] = std::move(polys);
    emit_json(out, doc);
  } else {
    write_header(out, csv_header("gen"));
    for (std::size_t n : ns)
      for (std::size_t k = 0; k < seq[n].size(); ++k) CsvRow().add(n).add(k).add(to_string(seq[n].coeff(k))).write(out);
  }
  return exit_ok;
}

int cmd_roots(const CommandConfig& cfg, std::ostream& out) {
  const auto params = resolve_params(cfg);
  const auto ns = requested_degrees(cfg, 1, 10);
  if (ns.front() == 0) throw UsageError("P_0 has no roots; use --n >= 1");
  const auto seq = generate(params, ns.back());
  Json doc = document("roots");
  doc["params"] = params_json(params);
  Json all = Json::array();
  if (cfg.format == Format::csv) write_header(out, csv_header("roots"));
  for (std::size_t n : ns) {
    const auto roots = sequence_roots(params, seq[n]);
    Json list = Json::array();
    for (std::size_t k = 0; k < roots.size(); ++k) {
      if (cfg.format == Format::csv) {
        CsvRow().add(n).add(k).add(roots[k].real()).add(roots[k].imag()).write(out);
      } else {
        list.push_back(complex_json(roots[k]));
      }
    }
    if (cfg.format == Format::json) all.push_back(Json{{"n", n}, {"roots", std::move(list)}});
  }
  if (cfg.format == Format::json) {
    doc["polynomials"] = std::move(all);
    emit_json(out, doc);
  }
  return exit_ok;
}

// ---------------------------------------------------------------------------
// theta

int cmd_theta(const CommandConfig& cfg, std::ostream& out) {
  const Rational alpha_q = resolve_alpha(cfg);
  if (cfg.complex_mode) {
    if (is_zero(alpha_q)) throw UsageError("alpha must be nonzero");
  } else {
    require_admissible(alpha_q);
  }
  if (cfg.samples == 0) throw UsageError("--samples must be at least 1");
  if (!(cfg.offset > 0.0 && cfg.offset < 0.5)) throw UsageError("--offset must lie in (0, 0.5)");
  const double alpha = alpha_q.get_d();
  const double tol = cfg.tolerance.value_or(vieta_tolerance);
  const auto grid = theta_grid(cfg.samples, cfg.offset);

  bool failure = false;
  Json rows = Json::array();
  if (cfg.format == Format::csv) write_header(out, csv_header("theta", cfg.complex_mode));
  for (double th : grid) {
    if (cfg.complex_mode) {
      const auto s = sample_complex(th, alpha);
      const double res = vieta_residuals(s).max_abs();
      failure |= !(res < tol);
      const double t1 = std::abs(s.t1), t3 = std::abs(s.t3);
      if (cfg.format == Format::csv) {
        CsvRow()
            .add(th)
            .add(s.delta)
            .add(s.zeta_plus.real())
            .add(s.zeta_plus.imag())
            .add(s.tau.real())
            .add(s.tau.imag())
            .add(s.z.real())
            .add(s.z.imag())
            .add(t1)
            .add(t3)
            .add(res)
            .write(out);
      } else {
        rows.push_back(Json{{"theta", th},
                            {"delta", s.delta},
                            {"zeta", complex_json(s.zeta_plus)},
                            {"tau", complex_json(s.tau)},
                            {"z", complex_json(s.z)},
                            {"abs_t1", t1},
                            {"abs_t3", t3},
                            {"vieta_max_residual", res}});
      }
    } else {
      const auto s = sample(th, alpha);
      const double res = vieta_residuals(s).max_abs();
      failure |= !(res < tol);
      const double t3 = std::abs(s.t3);
      if (cfg.format == Format::csv) {
        CsvRow().add(th).add(s.delta).add(s.zeta_plus).add(s.tau).add(s.z).add(s.tau).add(t3).add(res).write(out);
      } else {
        rows.push_back(Json{{"theta", th},
                            {"delta", s.delta},
                            {"zeta", s.zeta_plus},
                            {"tau", s.tau},
                            {"z", s.z},
                            {"abs_t1", s.tau},
                            {"abs_t3", t3},
                            {"vieta_max_residual", res}});
      }
    }
  }
  if (cfg.format == Format::json) {
    Json doc = document("theta");
    doc["alpha"] = to_string(alpha_q);
    doc["complex"] = cfg.complex_mode;
    doc["vieta_tolerance"] = tol;
    doc["rows"] = std::move(rows);
    emit_json(out, doc);
  }
  return failure ? exit_failure_found : exit_ok;
}

// ---------------------------------------------------------------------------
// density

int cmd_density(const CommandConfig& cfg, std::ostream& out) {
  const Rational alpha = resolve_alpha(cfg);
  require_admissible(alpha);
  const auto prof = density_profile(alpha, n_max_or(cfg, 100));
  if (cfg.format == Format::json) {
    Json doc = document("density");
    doc["alpha"] = to_string(alpha);
    doc["n_max"] = prof.n_max;
    doc["lambda"] = prof.lambda;
    doc["root_count"] = prof.union_roots.size();
    doc["max_gap_central"] = prof.max_gap_central;
    emit_json(out, doc);
  } else {
    write_header(out, csv_header("density"));
    CsvRow()
        .add(to_string(alpha))
        .add(prof.n_max)
        .add(prof.lambda)
        .add(prof.union_roots.size())
        .add(prof.max_gap_central)
        .write(out);
  }
  write_side_table(cfg.side_table, [&](std::ostream& f) {
    write_header(f, csv_header("density_roots"));
    for (double r : prof.union_roots) CsvRow().add(r).write(f);
  });
  return exit_ok;
}

// ---------------------------------------------------------------------------
// counterexample

int cmd_counterexample(const CommandConfig& cfg, std::ostream& out) {
  const auto params = resolve_params(cfg);
  const std::size_t n_max = n_max_or(cfg, 300);
  const auto rec = first_nonreal(params, n_max);
  if (cfg.format == Format::json) {
    Json doc = document("counterexample");
    doc["params"] = params_json(params);
    doc["n_max"] = n_max;
    doc["first_nonreal_n"] = rec.first_nonreal_n ? Json(*rec.first_nonreal_n) : Json(nullptr);
    doc["sturm_count"] = rec.first_nonreal_n ? Json(rec.sturm_count) : Json(nullptr);
    doc["squarefree_degree"] = rec.first_nonreal_n ? Json(rec.squarefree_degree) : Json(nullptr);
    doc["witness"] = rec.witness_root ? complex_json(*rec.witness_root) : Json(nullptr);
    emit_json(out, doc);
  } else {
    write_header(out, csv_header("counterexample"));
    CsvRow row;
    row.add(to_string(params.a)).add(to_string(params.b)).add(to_string(params.c)).add(n_max);
    if (rec.first_nonreal_n) {
      row.add(*rec.first_nonreal_n).add(rec.sturm_count).add(rec.squarefree_degree);
      row.add(rec.witness_root->real()).add(rec.witness_root->imag());
    } else {
      for (int k = 0; k < 5; ++k) row.add("");
    }
    row.write(out);
  }
  return rec.first_nonreal_n ? exit_failure_found : exit_ok;
}

// ---------------------------------------------------------------------------
// sokal

namespace {

struct ProbeRow {
  std::string mode;
  DominanceReport report;
};

/// theta in (0, pi/2) minimizing Delta; Delta < 0 there for 1/9 < alpha <= 1.
double negative_delta_theta(double alpha) {
  const auto grid = theta_grid(2001, 1e-3);
  double best = grid.front(), best_d = delta(best, alpha);
  for (double th : grid) {
    if (th >= std::numbers::pi / 2) break;
    const double d = delta(th, alpha);
    if (d < best_d) best = th, best_d = d;
  }
  return best;
}

}  // namespace

int cmd_sokal(const CommandConfig& cfg, std::ostream& out) {
  const auto params = resolve_params(cfg);
  if (is_zero(params.c)) throw UsageError("sokal probes need c != 0");
  const bool explicit_probe = cfg.z_re || cfg.z_im;
  const ComplexValue user_probe(cfg.z_re.value_or(0.0), cfg.z_im.value_or(0.0));

  // Everything runs in normalized coordinates: (1, 1, alpha) for b > 0 and
  // (1, -1, c') with c' = c/(a|b|) for b < 0.
  std::vector<ProbeRow> probes;
  std::optional<Rational> alpha;
  RecurrenceParams<Rational> normalized = params;
  if (sgn(params.b) > 0) {
    alpha = normalize(params).params.alpha;
    normalized = RecurrenceParams<Rational>::from_alpha(*alpha);
    const double ad = alpha->get_d();
    ComplexValue z{0.0, 1.0};
    if (explicit_probe) {
      z = user_probe;
    } else if (*alpha > alpha_threshold() && *alpha <= 1) {
      z = sample_complex(negative_delta_theta(ad), ad).z;
    }
    if (z == ComplexValue{0.0, 0.0}) throw UsageError("the probe must be nonzero");
    probes.push_back({"direct", dominance_at(z, ad)});
  } else {
    const Rational c_norm = params.c / (params.a * abs(params.b));
    normalized = RecurrenceParams<Rational>(Rational(1), Rational(-1), c_norm);
    std::vector<ComplexValue> zs;
    if (explicit_probe) {
      zs.push_back(user_probe);
    } else {
      for (double eps : {1e-1, 1e-2, 1e-3}) zs.emplace_back(0.0, eps);
    }
    for (const auto& z : zs) {
      if (z == ComplexValue{0.0, 0.0}) throw UsageError("the probe must be nonzero");
      const auto r = reciprocal_dominance(z, c_norm.get_d());
      probes.push_back({"reciprocal", r.reciprocal});
      probes.push_back({"direct", r.direct});
    }
  }

  std::vector<double> approach;
  if (!cfg.n_list.empty()) {
    auto ns = cfg.n_list;
    std::sort(ns.begin(), ns.end());
    if (ns.front() == 0) throw UsageError("--n-list entries must be at least 1");
    approach = zero_approach(probes.front().report.z_probe, normalized, ns);
  }

  if (cfg.format == Format::json) {
    Json doc = document("sokal");
    doc["params"] = params_json(params);
    doc["normalized"] = params_json(normalized);
    if (alpha) {
      const Rational disc = cubic_discriminant<Rational>(-*alpha, Rational(-1), Rational(1), Rational(1));
      doc["discriminant"] = to_string(disc);
    }
    Json list = Json::array();
    for (const auto& p : probes) {
      Json ts = Json::array();
      for (int k = 0; k < 3; ++k) {
        Json t = complex_json(p.report.t_roots[k]);
        t["abs"] = p.report.t_moduli[k];
        ts.push_back(std::move(t));
      }
      list.push_back(Json{{"mode", p.mode},
                          {"probe", complex_json(p.report.z_probe)},
                          {"t", std::move(ts)},
                          {"two_dominant", p.report.two_dominant},
                          {"distinct_nonzero", p.report.distinct_nonzero}});
    }
    doc["probes"] = std::move(list);
    if (!approach.empty()) {
      Json za = Json::array();
      auto ns = cfg.n_list;
      std::sort(ns.begin(), ns.end());
      for (std::size_t k = 0; k < ns.size(); ++k) za.push_back(Json{{"n", ns[k]}, {"distance", approach[k]}});
      doc["zero_approach"] = std::move(za);
    }
    emit_json(out, doc);
  } else {
    write_header(out, csv_header("sokal"));
    for (const auto& p : probes) {
      CsvRow row;
      row.add(p.mode).add(p.report.z_probe.real()).add(p.report.z_probe.imag());
      for (const auto& t : p.report.t_roots) row.add(t.real()).add(t.imag());
      for (double m : p.report.t_moduli) row.add(m);
      row.add(p.report.two_dominant).add(p.report.distinct_nonzero);
      row.write(out);
    }
  }
  write_side_table(cfg.side_table, [&](std::ostream& f) {
    write_header(f, csv_header("sokal_approach"));
    auto ns = cfg.n_list;
    std::sort(ns.begin(), ns.end());
    for (std::size_t k = 0; k < approach.size(); ++k) CsvRow().add(ns[k]).add(approach[k]).write(f);
  });
  return exit_ok;
}

// ---------------------------------------------------------------------------
// limits

int cmd_limits(const CommandConfig& cfg, std::ostream& out) {
  const Rational alpha_q = resolve_alpha(cfg);
  require_admissible(alpha_q);
  if (!(cfg.offset > 0.0 && cfg.offset < 0.5)) throw UsageError("--offset must lie in (0, 0.5)");
  const double alpha = alpha_q.get_d();
  const double lam = lambda_bound(alpha_q);
  const double tol = cfg.tolerance.value_or(1e-5);
  const double z_left = z_of_theta(cfg.offset, alpha);
  const double z_right = z_of_theta(std::numbers::pi - cfg.offset, alpha);
  const double err_left = z_left + lam;
  const double err_right = z_right - lam;
  const bool ok = std::abs(err_left) < tol && std::abs(err_right) < tol;
  if (cfg.format == Format::json) {
    Json doc = document("limits");
    doc["alpha"] = to_string(alpha_q);
    doc["lambda"] = lam;
    doc["offset"] = cfg.offset;
    doc["z_left"] = z_left;
    doc["z_right"] = z_right;
    doc["err_left"] = err_left;
    doc["err_right"] = err_right;
    doc["tolerance"] = tol;
    doc["within_tolerance"] = ok;
    emit_json(out, doc);
  } else {
    write_header(out, csv_header("limits"));
    CsvRow()
        .add(to_string(alpha_q))
        .add(lam)
        .add(cfg.offset)
        .add(z_left)
        .add(z_right)
        .add(err_left)
        .add(err_right)
        .add(ok)
        .write(out);
  }
  return ok ? exit_ok : exit_failure_found;
}

// ---------------------------------------------------------------------------
// Dispatch

int run_command(const CommandConfig& cfg, std::ostream& out, std::ostream& err) {
  static const std::map<std::string, int (*)(const CommandConfig&, std::ostream&)> table{
      {"certify", cmd_certify}, {"gen", cmd_gen},         {"roots", cmd_roots},
      {"theta", cmd_theta},     {"density", cmd_density}, {"counterexample", cmd_counterexample},
      {"sokal", cmd_sokal},     {"limits", cmd_limits},
  };
  const auto it = table.find(cfg.subcommand);
  if (it == table.end()) {
    err << "unknown subcommand '" << cfg.subcommand << "'\n";
    return exit_usage;
  }
  try {
    // Buffer so that a usage error never leaves a partial table behind.
    std::ostringstream buf;
    const int code = it->second(cfg, buf);
    if (cfg.output.empty()) {
      out << buf.str();
    } else {
      std::ofstream f(cfg.output, std::ios::binary);
      if (!f) throw UsageError("cannot open " + cfg.output + " for writing");
      f << buf.str();
    }
    return code;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return exit_usage;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return exit_internal;
  }
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Four-term recurrence polynomials: generation, hyperbolicity certificates and diagnostics",
               "hyperrec"};
  app.require_subcommand(1, 1);
  CommandConfig cfg;
  std::string format = "csv";

  const auto add_params = [&](CLI::App* sub) {
    auto* a = sub->add_option("--a", cfg.a, "coefficient a, exact rational p/q");
    auto* b = sub->add_option("--b", cfg.b, "coefficient b, exact rational p/q");
    auto* c = sub->add_option("--c", cfg.c, "coefficient c, exact rational p/q");
    auto* alpha = sub->add_option("--alpha", cfg.alpha, "normalized parameter c/(ab); implies a = b = 1");
    alpha->excludes(a)->excludes(b)->excludes(c);
    sub->add_flag("--float", cfg.allow_decimal, "accept decimal literals (converted exactly)");
  };
  const auto add_output = [&](CLI::App* sub) {
    sub->add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
    sub->add_option("-o,--output", cfg.output, "write to this file instead of stdout");
  };

  auto* certify_cmd = app.add_subcommand("certify", "exact hyperbolicity certificate for n = 1..n-max");
  add_params(certify_cmd);
  certify_cmd->add_option("--n-max", cfg.n_max, "largest n (default 50)");
  add_output(certify_cmd);

  auto* gen_cmd = app.add_subcommand("gen", "exact coefficients of P_n");
  add_params(gen_cmd);
  gen_cmd->add_option("--n", cfg.n, "a single n");
  gen_cmd->add_option("--n-max", cfg.n_max, "all n = 0..n-max (default 10)");
  add_output(gen_cmd);

  auto* roots_cmd = app.add_subcommand("roots", "complex roots of P_n");
  add_params(roots_cmd);
  roots_cmd->add_option("--n", cfg.n, "a single n");
  roots_cmd->add_option("--n-max", cfg.n_max, "all n = 1..n-max (default 10)");
  add_output(roots_cmd);

  auto* theta_cmd = app.add_subcommand("theta", "theta-parametrization table");
  add_params(theta_cmd);
  theta_cmd->add_option("--samples", cfg.samples, "grid size on (0, pi) (default 1000)");
  theta_cmd->add_option("--offset", cfg.offset, "distance of the grid ends from 0 and pi (default 1e-6)");
  theta_cmd->add_option("--tol", cfg.tolerance, "Vieta residual threshold (default 1e-10)");
  theta_cmd->add_flag("--complex", cfg.complex_mode, "complex mode; any nonzero alpha");
  add_output(theta_cmd);

  auto* density_cmd = app.add_subcommand("density", "union of real root sets and the central gap");
  add_params(density_cmd);
  density_cmd->add_option("--n-max", cfg.n_max, "largest n (default 100)");
  density_cmd->add_option("--roots-csv", cfg.side_table, "also write the sorted root union here");
  add_output(density_cmd);

  auto* cx_cmd = app.add_subcommand("counterexample", "first n with a certified non-real root");
  add_params(cx_cmd);
  cx_cmd->add_option("--n-max", cfg.n_max, "scan bound (default 300)");
  add_output(cx_cmd);

  auto* sokal_cmd = app.add_subcommand("sokal", "dominance probe of the generating cubic");
  add_params(sokal_cmd);
  sokal_cmd->add_option("--z-re", cfg.z_re, "probe real part (normalized coordinates)");
  sokal_cmd->add_option("--z-im", cfg.z_im, "probe imaginary part (normalized coordinates)");
  sokal_cmd->add_option("--n-list", cfg.n_list, "degrees for the zero-approach distances")->delimiter(',');
  sokal_cmd->add_option("--approach-csv", cfg.side_table, "write the n,distance table here");
  add_output(sokal_cmd);

  auto* limits_cmd = app.add_subcommand("limits", "lambda and the theta -> 0, pi limits of z");
  add_params(limits_cmd);
  limits_cmd->add_option("--offset", cfg.offset, "theta offset (default 1e-6)");
  limits_cmd->add_option("--tol", cfg.tolerance, "allowed |z +- lambda| (default 1e-5)");
  add_output(limits_cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return exit_usage;
  }
  cfg.subcommand = app.get_subcommands().front()->get_name();
  cfg.format = format == "json" ? Format::json : Format::csv;
  return run_command(cfg, out, err);
}

}  // namespace hyperrec::cli
