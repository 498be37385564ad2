#include <cstdlib>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "io.hpp"
#include "sqw/degenerations.hpp"
#include "sqw/error.hpp"
#include "sqw/grid.hpp"
#include "sqw/random.hpp"
#include "sqw/sqwhittaker.hpp"
#include "sqw/suite.hpp"
#include "sqw/transfer.hpp"
#include "sqw/weights.hpp"

using namespace sqw;
using cli::Json;

namespace {

const DrawOptions kWide{.max_num = 60, .max_den = 40};

struct Common {
  std::uint64_t seed = 1;
  std::string format = "pretty";
};

struct Outcome {
  Json report;
  bool pass = true;
  // suite output has its own pretty form
  std::string pretty;
};

std::uint64_t effective_seed(const Common& c) {
  if (const char* env = std::getenv("SQW_SEED")) {
    try {
      size_t used = 0;
      const unsigned long long v = std::stoull(env, &used);
      if (used != std::string(env).size()) throw std::invalid_argument("trailing characters");
      return v;
    } catch (const std::exception&) {
      throw Error(Errc::ParseError, std::string("SQW_SEED is not an unsigned integer: ") + env);
    }
  }
  return c.seed;
}

Json header(const std::string& command, std::uint64_t seed) {
  return {{"schema", 1}, {"command", command}, {"seed", seed}};
}

Json series_json(const TruncSeries& s) {
  Json a = Json::array();
  for (const Rational& c : s.coeffs()) a.push_back(c.str());
  return a;
}

Json series_report_json(const SeriesReport& r) {
  Json params = Json::object();
  for (const auto& [k, v] : r.parameters) params[k] = v;
  Json contributing = Json::array();
  for (const Partition& p : r.contributing) contributing.push_back(cli::to_json(p));
  return {{"identity", r.identity}, {"truncation", r.truncation}, {"parameters", params},
          {"contributing", contributing}, {"lhs", series_json(r.lhs)}, {"rhs", series_json(r.rhs)},
          {"pass", r.pass}};
}

Grid load_grid(const std::string& path) { return cli::grid_from_json(cli::read_json_file(path)); }

std::vector<Rational> require(const std::optional<std::vector<Rational>>& v, const char* name) {
  if (!v) throw Error(Errc::ParseError, std::string("parameter file lacks ") + name);
  return *v;
}

Rational require(const std::optional<Rational>& v, const char* name) {
  if (!v) throw Error(Errc::ParseError, std::string("parameter file lacks ") + name);
  return *v;
}

Json params_json(const std::vector<std::pair<std::string, std::vector<Rational>>>& seqs,
                 const std::vector<std::pair<std::string, Rational>>& scalars) {
  Json j = Json::object();
  for (const auto& [k, v] : seqs) j[k] = cli::to_json(v);
  for (const auto& [k, v] : scalars) j[k] = v.str();
  return j;
}

std::vector<Rational> prefix(const ParamSeq& s) {
  std::vector<Rational> v;
  for (size_t i = 0; i < s.size(); ++i) v.push_back(s.at(i));
  return v;
}

// compute

struct ComputeArgs {
  std::string family = "sqw";
  std::string lambda, mu, params, table, at;
  int n = 2;
};

Outcome run_compute(const Common& c, const ComputeArgs& a) {
  const std::uint64_t seed = effective_seed(c);
  const Partition lambda = cli::parse_partition(a.lambda), mu = cli::parse_partition(a.mu);
  const bool evaluate = !a.at.empty();
  const std::vector<Rational> point = cli::parse_rationals(a.at);
  Outcome out;
  out.report = header("compute", seed);
  out.report["family"] = a.family;
  out.report["lambda"] = cli::to_json(lambda);
  out.report["mu"] = cli::to_json(mu);
  Rng rng(seed);
  const size_t len = static_cast<size_t>(a.n + lambda.length() + 2);
  std::optional<cli::ParamFile> pf;
  if (!a.params.empty()) pf = cli::params_from_json(cli::read_json_file(a.params));
  auto check_point = [&](int n) {
    if (evaluate && static_cast<int>(point.size()) != n) throw Error(Errc::ParseError, "--at needs n coordinates");
  };

  if (a.family == "sqw" || a.family == "tilde") {
    std::vector<Rational> A, B;
    Rational q;
    if (pf) {
      A = require(pf->A, "A");
      q = require(pf->q, "q");
      if (a.family == "sqw") B = require(pf->B, "B");
    } else {
      const ParamDraw d = draw_params(rng, len, kWide);
      A = prefix(d.A);
      B = prefix(d.B);
      q = d.q;
    }
    const ParamSeq As(A, 'A'), Bs(B, 'B');
    out.report["n"] = a.n;
    if (a.family == "sqw") {
      out.report["parameters"] = params_json({{"A", A}, {"B", B}}, {{"q", q}});
      check_point(a.n);
      if (evaluate) out.report["value"] = f_skew(lambda, mu, point, As, Bs, q).str();
      else out.report["polynomial"] = cli::to_json(f_skew_symbolic(lambda, mu, a.n, As, Bs, q));
    } else {
      out.report["parameters"] = params_json({{"A", A}}, {{"q", q}});
      check_point(a.n);
      if (evaluate) out.report["value"] = f_tilde(lambda, mu, point, As, q).str();
      else out.report["polynomial"] = cli::to_json(f_tilde_symbolic(lambda, mu, a.n, As, q));
    }
  } else if (a.family == "el") {
    std::vector<Rational> C;
    Rational d;
    if (pf) {
      C = require(pf->C, "C");
      d = require(pf->d, "d");
    } else {
      const LinearDraw ld = draw_linear_params(rng, len, kWide);
      C = prefix(ld.C);
      d = ld.d;
    }
    const ParamSeq Cs(C, 'C');
    out.report["n"] = a.n;
    out.report["parameters"] = params_json({{"C", C}}, {{"d", d}});
    check_point(a.n);
    if (evaluate) out.report["value"] = f_el(lambda, mu, point, Cs, d).str();
    else out.report["polynomial"] = cli::to_json(f_el_symbolic(lambda, mu, a.n, Cs, d));
  } else if (a.family == "grid") {
    if (a.table.empty()) throw Error(Errc::ParseError, "--family grid needs --table");
    if (!mu.empty()) throw Error(Errc::ParseError, "--family grid computes straight shapes only");
    const Grid g = load_grid(a.table);
    const SymPoly f = solve_f(g, lambda);
    out.report["n"] = g.n();
    out.report["hook_value"] = hook_value(g, lambda).str();
    check_point(g.n());
    if (evaluate) out.report["value"] = f.evaluate(point).str();
    else out.report["polynomial"] = cli::to_json(f);
  } else {
    throw Error(Errc::ParseError, "unknown family " + a.family);
  }
  return out;
}

// verify-ybe

struct YbeArgs {
  int points = 5;
  int max_label = 3;
};

Outcome run_verify_ybe(const Common& c, const YbeArgs& a) {
  const std::uint64_t seed = effective_seed(c);
  if (a.points < 1 || a.max_label < 0) throw Error(Errc::ParseError, "need --points >= 1 and --max-label >= 0");
  Rng rng(seed);
  Outcome out;
  out.report = header("verify-ybe", seed);
  long checked = 0, failed = 0;
  Json failures = Json::array();
  Json pts = Json::array();
  const int m = a.max_label;
  for (int pt = 0; pt < a.points; ++pt) {
    const YbeParams p = draw_ybe_params(rng).params;
    pts.push_back(params_json({}, {{"a1", p.a1}, {"a2", p.a2}, {"a3", p.a3}, {"b1", p.b1}, {"b2", p.b2},
                                   {"b3", p.b3}, {"q", p.q}}));
    for (int a1 = 0; a1 <= m; ++a1)
      for (int a2 = 0; a2 <= m; ++a2)
        for (int a3 = 0; a3 <= m; ++a3)
          for (int b1 = 0; b1 <= m; ++b1)
            for (int b2 = 0; b2 <= m; ++b2)
              for (int b3 = 0; b3 <= m; ++b3) {
                if (a1 + a2 + a3 != b1 + b2 + b3) continue;
                const YbeBoundary bd{{a1}, {a2}, {a3}, {b1}, {b2}, {b3}};
                const YbeResult rs[2] = {check_ybe_bbb(p, bd), check_ybe_mixed(p, bd)};
                const char* names[2] = {"bbb", "mixed"};
                for (int k = 0; k < 2; ++k) {
                  ++checked;
                  if (rs[k].pass) continue;
                  ++failed;
                  if (failures.size() < 10)
                    failures.push_back({{"relation", names[k]}, {"point", pt},
                                        {"boundary", {a1, a2, a3, b1, b2, b3}},
                                        {"lhs", rs[k].lhs.str()}, {"rhs", rs[k].rhs.str()}});
                }
              }
  }
  out.report["points"] = pts;
  out.report["max_label"] = m;
  out.report["checked"] = checked;
  out.report["failed"] = failed;
  out.report["failures"] = failures;
  out.pass = failed == 0;
  out.report["pass"] = out.pass;
  return out;
}

// verify-cauchy / verify-exchange

struct CauchyArgs {
  int n = 2, m = 2, D = 8;
  std::string mu, nu;
};

Outcome run_verify_cauchy(const Common& c, const CauchyArgs& a) {
  const std::uint64_t seed = effective_seed(c);
  if (a.n < 1 || a.m < 1 || a.D < 1) throw Error(Errc::ParseError, "need n, m, D >= 1");
  Rng rng(seed);
  const GradedPoint p =
      draw_graded_point(rng, static_cast<size_t>(a.n + a.m + a.D + 4), static_cast<size_t>(a.n),
                        static_cast<size_t>(a.m), kWide)
          .point;
  const SeriesReport r = check_cauchy(a.n, a.m, a.D, p, cli::parse_partition(a.mu), cli::parse_partition(a.nu));
  Outcome out;
  out.report = header("verify-cauchy", seed);
  out.report["report"] = series_report_json(r);
  out.pass = r.pass;
  out.report["pass"] = r.pass;
  return out;
}

struct ExchangeArgs {
  int D = 10;
  std::string mu, nu;
};

Outcome run_verify_exchange(const Common& c, const ExchangeArgs& a) {
  const std::uint64_t seed = effective_seed(c);
  if (a.D < 1) throw Error(Errc::ParseError, "need D >= 1");
  Rng rng(seed);
  const Partition mu = cli::parse_partition(a.mu), nu = cli::parse_partition(a.nu);
  const GradedPoint p =
      draw_graded_point(rng, static_cast<size_t>(mu.length() + nu.length() + 4), 1, 1, kWide).point;
  const SeriesReport r = check_exchange(mu, nu, a.D, p);
  Outcome out;
  out.report = header("verify-exchange", seed);
  out.report["report"] = series_report_json(r);
  out.pass = r.pass;
  out.report["pass"] = r.pass;
  return out;
}

// verify-vanishing

struct VanishingArgs {
  std::string family = "sqw";
  int n = 3, wmax = 5;
};

Outcome run_verify_vanishing(const Common& c, const VanishingArgs& a) {
  const std::uint64_t seed = effective_seed(c);
  if (a.n < 1 || a.wmax < 0) throw Error(Errc::ParseError, "need n >= 1 and wmax >= 0");
  Rng rng(seed);
  const size_t len = static_cast<size_t>(2 * a.n + a.wmax + 2);
  const std::vector<Partition> parts = enumerate_partitions(a.n, a.wmax);
  std::vector<std::pair<Partition, Partition>> violations;
  Outcome out;
  out.report = header("verify-vanishing", seed);
  out.report["family"] = a.family;
  if (a.family == "sqw") {
    const ParamDraw pd = draw_params(rng, len, kWide);
    out.report["parameters"] = params_json({{"A", prefix(pd.A)}, {"B", prefix(pd.B)}}, {{"q", pd.q}});
    violations = vanishing_report(a.n, a.wmax, pd.A, pd.B, pd.q).violations;
  } else if (a.family == "tilde" || a.family == "el") {
    const bool tilde = a.family == "tilde";
    ParamDraw pd;
    LinearDraw ld;
    if (tilde) {
      pd = draw_params(rng, len, kWide);
      out.report["parameters"] = params_json({{"A", prefix(pd.A)}}, {{"q", pd.q}});
    } else {
      ld = draw_linear_params(rng, len, kWide);
      out.report["parameters"] = params_json({{"C", prefix(ld.C)}}, {{"d", ld.d}});
    }
    for (const Partition& mu : parts) {
      const std::vector<Rational> x =
          tilde ? grid_point_q(pd.A, pd.q, mu, a.n) : grid_point_lin(ld.C, ld.d, mu, a.n);
      for (const Partition& lambda : parts) {
        const Rational v = tilde ? f_tilde(lambda, Partition(), x, pd.A, pd.q) : f_el(lambda, Partition(), x, ld.C, ld.d);
        bool ok = mu.contains(lambda) != v.is_zero();
        if (lambda == mu) ok = ok && v == (tilde ? h_tilde(lambda, pd.A, pd.q, a.n) : h_el(lambda, ld.C, ld.d, a.n));
        if (!ok) violations.emplace_back(lambda, mu);
      }
    }
  } else {
    throw Error(Errc::ParseError, "unknown family " + a.family);
  }
  out.report["n"] = a.n;
  out.report["wmax"] = a.wmax;
  out.report["cells"] = parts.size() * parts.size();
  Json v = Json::array();
  for (const auto& [l, m] : violations) v.push_back({{"lambda", cli::to_json(l)}, {"mu", cli::to_json(m)}});
  out.report["violations"] = v;
  out.pass = violations.empty();
  out.report["pass"] = out.pass;
  return out;
}

// verify-pieri

struct PieriArgs {
  std::string family = "q";
  std::string table;
  int kmax = 5;
};

Outcome run_verify_pieri(const Common& c, const PieriArgs& a) {
  const std::uint64_t seed = effective_seed(c);
  if (a.kmax < 1) throw Error(Errc::ParseError, "need kmax >= 1");
  Grid g;
  if (!a.table.empty()) {
    g = load_grid(a.table);
  } else {
    Rng rng(seed);
    if (a.family == "q") g = draw_q_grid(rng, 2, a.kmax + 1);
    else if (a.family == "linear") g = draw_linear_grid(rng, 2, a.kmax + 1);
    else throw Error(Errc::ParseError, "unknown family " + a.family);
  }
  Outcome out;
  out.report = header("verify-pieri", seed);
  out.report["grid"] = cli::to_json(g);
  Json ks = Json::array();
  for (int k = 1; k <= a.kmax; ++k) {
    const SymPoly r = pieri_residual(g, k);
    ks.push_back({{"k", k}, {"kappa", pieri_kappa(g, k).str()}, {"residual", r.str()}, {"zero", r.is_zero()}});
    out.pass = out.pass && r.is_zero();
  }
  out.report["residuals"] = ks;
  out.report["pass"] = out.pass;
  return out;
}

// interpolate / classify-grid / generate-grid

struct TableArgs {
  std::string table, lambda, at;
};

Outcome run_interpolate(const Common& c, const TableArgs& a) {
  const std::uint64_t seed = effective_seed(c);
  const Grid g = load_grid(a.table);
  const Partition lambda = cli::parse_partition(a.lambda);
  const SymPoly f = solve_f(g, lambda);
  Outcome out;
  out.report = header("interpolate", seed);
  out.report["lambda"] = cli::to_json(lambda);
  out.report["n"] = g.n();
  out.report["hook_value"] = hook_value(g, lambda).str();
  out.report["polynomial"] = cli::to_json(f);
  if (!a.at.empty()) {
    const std::vector<Rational> x = cli::parse_rationals(a.at);
    if (static_cast<int>(x.size()) != g.n()) throw Error(Errc::ParseError, "--at needs n coordinates");
    out.report["value"] = f.evaluate(x).str();
  }
  return out;
}

Outcome run_classify(const Common& c, const TableArgs& a) {
  const std::uint64_t seed = effective_seed(c);
  const Grid g = load_grid(a.table);
  const Classification cl = classify_grid(g);
  Outcome out;
  out.report = header("classify-grid", seed);
  out.report["classification"] = cli::to_json(cl);
  Json constraints = Json::object();
  try {
    constraints["final"] = constraint_final(g).str();
    constraints["31"] = constraint_31(g).str();
  } catch (const Error& e) {
    constraints["error"] = e.what();
  }
  out.report["constraints"] = constraints;
  return out;
}

struct GenerateArgs {
  std::string family = "q";
  int n = 3, depth = 4;
};

Outcome run_generate(const Common& c, const GenerateArgs& a) {
  const std::uint64_t seed = effective_seed(c);
  if (a.n < 1 || a.depth < 0) throw Error(Errc::ParseError, "need n >= 1 and depth >= 0");
  Rng rng(seed);
  Grid g;
  if (a.family == "q") g = draw_q_grid(rng, a.n, a.depth);
  else if (a.family == "linear") g = draw_linear_grid(rng, a.n, a.depth);
  else throw Error(Errc::ParseError, "unknown family " + a.family);
  Outcome out;
  // bare grid, so the output can be fed back through --table
  out.report = cli::to_json(g);
  return out;
}

// suite

struct SuiteArgs {
  std::string only;
  bool timing = false;
};

Outcome run_suite_cmd(const Common& c, const SuiteArgs& a) {
  const std::uint64_t seed = effective_seed(c);
  std::vector<int> ids;
  for (const Rational& r : cli::parse_rationals(a.only)) {
    if (r.den() != 1) throw Error(Errc::ParseError, "criterion ids are integers");
    ids.push_back(static_cast<int>(r.num().get_si()));
  }
  for (int id : ids)
    if (id < 1 || id > kCriterionCount) throw Error(Errc::ParseError, "criterion ids run from 1 to 12");
  const std::vector<CriterionResult> results = run_suite(SuiteOptions{seed}, ids);
  Outcome out;
  out.report = header("suite", seed);
  Json arr = Json::array();
  for (const CriterionResult& r : results) {
    arr.push_back(cli::to_json(r, a.timing));
    out.pass = out.pass && r.pass;
    out.pretty += format_result(r) + "\n";
    for (const std::string& w : r.witnesses) out.pretty += "    " + w + "\n";
  }
  out.report["criteria"] = arr;
  out.report["pass"] = out.pass;
  return out;
}

void emit(const Outcome& o, const std::string& format) {
  if (format == "json") std::cout << o.report.dump(2) << "\n";
  else if (format == "csv") std::cout << cli::to_csv(o.report);
  else if (!o.pretty.empty()) std::cout << o.pretty;
  else std::cout << cli::to_pretty(o.report);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Inhomogeneous spin q-Whittaker polynomials: computation and identity checks"};
  app.require_subcommand(1);
  app.fallthrough();
  Common common;
  app.add_option("--seed", common.seed, "Seed for random rational parameters (SQW_SEED overrides)");
  app.add_option("--format", common.format, "Output format")
      ->check(CLI::IsMember({"json", "csv", "pretty"}));

  std::function<Outcome()> action;

  ComputeArgs ca;
  auto* compute = app.add_subcommand("compute", "Compute F, F~, F^el or the grid interpolation polynomial");
  compute->add_option("--family", ca.family, "sqw | tilde | el | grid")
      ->check(CLI::IsMember({"sqw", "tilde", "el", "grid"}));
  compute->add_option("--lambda", ca.lambda, "Partition, e.g. 2,1")->required();
  compute->add_option("--mu", ca.mu, "Inner partition for skew shapes");
  compute->add_option("--n", ca.n, "Number of variables")->check(CLI::Range(0, 8));
  compute->add_option("--params", ca.params, "JSON parameter file with exact rationals")->check(CLI::ExistingFile);
  compute->add_option("--table", ca.table, "Grid JSON for --family grid")->check(CLI::ExistingFile);
  compute->add_option("--at", ca.at, "Evaluate at this point instead of printing the polynomial");
  compute->callback([&] { action = [&] { return run_compute(common, ca); }; });

  YbeArgs ya;
  auto* ybe = app.add_subcommand("verify-ybe", "Yang-Baxter equations over all conserving rank-1 boundaries");
  ybe->add_option("--points", ya.points, "Random parameter points");
  ybe->add_option("--max-label", ya.max_label, "Largest edge label");
  ybe->callback([&] { action = [&] { return run_verify_ybe(common, ya); }; });

  CauchyArgs cy;
  auto* cauchy = app.add_subcommand("verify-cauchy", "Cauchy identity modulo t^{D+1}");
  cauchy->add_option("--n", cy.n, "x variables");
  cauchy->add_option("--m", cy.m, "y variables");
  cauchy->add_option("--D", cy.D, "Truncation order");
  cauchy->add_option("--mu", cy.mu, "Skew shape mu");
  cauchy->add_option("--nu", cy.nu, "Skew shape nu");
  cauchy->callback([&] { action = [&] { return run_verify_cauchy(common, cy); }; });

  ExchangeArgs ex;
  auto* exch = app.add_subcommand("verify-exchange", "Exchange relation of B and B* modulo t^{D+1}");
  exch->add_option("--mu", ex.mu, "Partition mu");
  exch->add_option("--nu", ex.nu, "Partition nu");
  exch->add_option("--D", ex.D, "Truncation order");
  exch->callback([&] { action = [&] { return run_verify_exchange(common, ex); }; });

  VanishingArgs va;
  auto* van = app.add_subcommand("verify-vanishing", "Vanishing table and diagonal values");
  van->add_option("--family", va.family, "sqw | tilde | el")->check(CLI::IsMember({"sqw", "tilde", "el"}));
  van->add_option("--n", va.n, "Number of variables")->check(CLI::Range(1, 6));
  van->add_option("--wmax", va.wmax, "Largest weight")->check(CLI::Range(0, 10));
  van->callback([&] { action = [&] { return run_verify_vanishing(common, va); }; });

  PieriArgs pa;
  auto* pieri = app.add_subcommand("verify-pieri", "Two-variable Pieri rule on a grid");
  pieri->add_option("--family", pa.family, "q | linear, for a generated grid")->check(CLI::IsMember({"q", "linear"}));
  pieri->add_option("--table", pa.table, "Grid JSON instead of a generated grid")->check(CLI::ExistingFile);
  pieri->add_option("--kmax", pa.kmax, "Largest k");
  pieri->callback([&] { action = [&] { return run_verify_pieri(common, pa); }; });

  TableArgs ia;
  auto* interp = app.add_subcommand("interpolate", "Solve for F_lambda on a grid");
  interp->add_option("--table", ia.table, "Grid JSON")->required()->check(CLI::ExistingFile);
  interp->add_option("--lambda", ia.lambda, "Partition")->required();
  interp->add_option("--at", ia.at, "Also evaluate at this point");
  interp->callback([&] { action = [&] { return run_interpolate(common, ia); }; });

  TableArgs cg;
  auto* classify = app.add_subcommand("classify-grid", "Classify a grid as q-type, linear-type or not perfect");
  classify->add_option("--table", cg.table, "Grid JSON")->required()->check(CLI::ExistingFile);
  classify->callback([&] { action = [&] { return run_classify(common, cg); }; });

  GenerateArgs ga;
  auto* gen = app.add_subcommand("generate-grid", "Write a random q-type or linear-type grid as JSON");
  gen->add_option("--family", ga.family, "q | linear")->check(CLI::IsMember({"q", "linear"}));
  gen->add_option("--n", ga.n, "Rows");
  gen->add_option("--depth", ga.depth, "Largest column index");
  gen->callback([&] { action = [&] { return run_generate(common, ga); }; });

  SuiteArgs sa;
  auto* suite = app.add_subcommand("suite", "Run the acceptance criteria");
  suite->add_option("--only", sa.only, "Comma-separated criterion ids");
  suite->add_flag("--timing", sa.timing, "Include wall-clock seconds in JSON and CSV output");
  suite->callback([&] { action = [&] { return run_suite_cmd(common, sa); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    const Outcome o = action();
    emit(o, common.format);
    return o.pass ? 0 : 1;
  } catch (const Error& e) {
    std::cerr << "sqw: " << e.what() << "\n";
    return 2;
  }
}
