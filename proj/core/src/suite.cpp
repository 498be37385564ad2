#include "sqw/suite.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>

#include "sqw/degenerations.hpp"
#include "sqw/error.hpp"
#include "sqw/grid.hpp"
#include "sqw/linalg.hpp"
#include "sqw/random.hpp"
#include "sqw/sqwhittaker.hpp"
#include "sqw/transfer.hpp"
#include "sqw/weights.hpp"

namespace sqw {

namespace {

constexpr size_t kMaxWitnesses = 5;

// long parameter sequences need a larger pool to stay pairwise generic
const DrawOptions kWide{.max_num = 60, .max_den = 40};

struct Spec {
  const char* name;
  double limit;
};

const Spec kSpecs[kCriterionCount] = {
    {"YBE suite", 30},
    {"R-matrix equivalence", 5},
    {"q-Gauss", 10},
    {"exchange relation", 60},
    {"symmetry", 10},
    {"Cauchy identity", 120},
    {"vanishing", 120},
    {"characterization", 60},
    {"degenerations", 90},
    {"interpolation round trip", 120},
    {"Pieri and small cases", 30},
    {"classification and falsification", 30},
};

// Collects outcomes of individual checks.
struct Tally {
  long checks = 0;
  long failures = 0;
  std::vector<std::string> witnesses;

  void record(bool ok, const std::function<std::string()>& describe) {
    ++checks;
    if (ok) return;
    ++failures;
    if (witnesses.size() < kMaxWitnesses) witnesses.push_back(describe());
  }
  bool ok() const { return failures == 0; }
};

std::string params_str(const std::vector<std::pair<std::string, std::string>>& ps) {
  std::string s;
  for (const auto& [k, v] : ps) s += (s.empty() ? "" : " ") + k + "=" + v;
  return s;
}

std::string ybe_str(const YbeParams& p) {
  std::ostringstream os;
  os << "a=(" << p.a1 << "," << p.a2 << "," << p.a3 << ") b=(" << p.b1 << "," << p.b2 << "," << p.b3
     << ") q=" << p.q;
  return os.str();
}

std::vector<Poly> poly_vars(int n) {
  std::vector<Poly> xs;
  for (int i = 0; i < n; ++i) xs.push_back(Poly::variable(n, i));
  return xs;
}

ParamSeq with_dummy(const std::vector<Rational>& v, char label) {
  std::vector<Rational> w{Rational(0)};
  w.insert(w.end(), v.begin(), v.end());
  return ParamSeq(std::move(w), label);
}

std::string count_detail(const Tally& t, const std::string& what) {
  return std::to_string(t.checks - t.failures) + "/" + std::to_string(t.checks) + " " + what;
}

void c1_ybe(Rng& rng, Tally& t, std::string& detail) {
  long nonzero = 0;
  for (int pt = 0; pt < 5; ++pt) {
    const YbeParams p = draw_ybe_params(rng).params;
    for (int a1 = 0; a1 <= 3; ++a1)
      for (int a2 = 0; a2 <= 3; ++a2)
        for (int a3 = 0; a3 <= 3; ++a3)
          for (int b1 = 0; b1 <= 3; ++b1)
            for (int b2 = 0; b2 <= 3; ++b2)
              for (int b3 = 0; b3 <= 3; ++b3) {
                if (a1 + a2 + a3 != b1 + b2 + b3) continue;
                const YbeBoundary bd{{a1}, {a2}, {a3}, {b1}, {b2}, {b3}};
                const YbeResult r1 = check_ybe_bbb(p, bd), r2 = check_ybe_mixed(p, bd);
                if (!r1.lhs.is_zero()) ++nonzero;
                auto where = [&](const char* which) {
                  return std::string(which) + " boundary " + bd.A1.str() + bd.A2.str() + bd.A3.str() + "|" +
                         bd.B1.str() + bd.B2.str() + bd.B3.str() + " " + ybe_str(p);
                };
                t.record(r1.pass, [&] { return where("bbb"); });
                t.record(r2.pass, [&] { return where("mixed"); });
              }
  }
  detail = count_detail(t, "boundary checks (rank 1, labels <= 3, 5 points), " + std::to_string(nonzero) +
                               " with nonzero sides");
}

void c2_r_forms(Rng& rng, Tally& t, std::string& detail) {
  for (int pt = 0; pt < 5; ++pt) {
    const YbeParams p = draw_ybe_params(rng).params;
    for (int I = 0; I <= 4; ++I)
      for (int J = 0; J <= 4; ++J)
        for (int K = 0; K <= 4; ++K)
          for (int L = 0; L <= 4; ++L) {
            const Composition ci{I}, cj{J}, ck{K}, cl{L};
            const Rational r1 = weight_r(p.a1, p.b1, p.a2, p.b2, p.q, ci, cj, ck, cl, RForm::PSum1);
            const Rational r2 = weight_r(p.a1, p.b1, p.a2, p.b2, p.q, ci, cj, ck, cl, RForm::PSum2);
            t.record(r1 == r2, [&] {
              std::ostringstream os;
              os << "R(" << I << "," << J << "," << K << "," << L << ") " << r1 << " != " << r2 << " " << ybe_str(p);
              return os.str();
            });
          }
  }
  detail = count_detail(t, "label quadruples (rank 1, labels <= 4, 5 points)");
}

void c3_qgauss(Rng& rng, Tally& t, std::string& detail) {
  for (int pt = 0; pt < 2; ++pt) {
    const ParamDraw pd = draw_params(rng, 1);
    const Rational a = pd.A.at(0), b = pd.B.at(0);
    const Rational xh = rng.nonzero_rational(), yh = rng.nonzero_rational(), qh = rng.nonzero_rational();
    for (int J = 0; J <= 3; ++J)
      for (int L = 0; L <= 3; ++L) {
        const SeriesReport r = check_qgauss(J, L, a, b, 12, xh, yh, qh);
        t.record(r.pass, [&] { return "J=" + std::to_string(J) + " L=" + std::to_string(L) + " " + params_str(r.parameters); });
      }
  }
  detail = count_detail(t, "(J, L) cases at D=12 over 2 points");
}

void c4_exchange(Rng& rng, Tally& t, std::string& detail) {
  const GradedPoint p = draw_graded_point(rng, 8, 1, 1, kWide).point;
  std::vector<Partition> parts;
  for (int w = 0; w <= 3; ++w)
    for (const Partition& m : enumerate_partitions(w, 3))
      if (m.weight() == w) parts.push_back(m);
  for (const Partition& mu : parts)
    for (const Partition& nu : parts) {
      const SeriesReport r = check_exchange(mu, nu, 10, p);
      t.record(r.pass, [&] { return "mu=" + mu.str() + " nu=" + nu.str() + " " + params_str(r.parameters); });
    }
  detail = count_detail(t, "(mu, nu) pairs at D=10");
}

void c5_symmetry(Rng& rng, Tally& t, std::string& detail) {
  const std::vector<Poly> xs = poly_vars(2);
  for (int pt = 0; pt < 3; ++pt) {
    const ParamDraw pd = draw_params(rng, 8, kWide);
    for (const Partition& lambda : enumerate_partitions(2, 5)) {
      const Poly f = f_skew(lambda, Partition(), xs, pd.A, pd.B, pd.q);
      t.record(!f.is_zero() && f == f.swap_vars(0, 1), [&] { return "lambda=" + lambda.str(); });
    }
  }
  detail = count_detail(t, "F_lambda(x1,x2), |lambda| <= 5, 3 points");
}

void c6_cauchy(Rng& rng, Tally& t, std::string& detail) {
  const int cases[3][3] = {{1, 1, 6}, {1, 2, 8}, {2, 2, 8}};
  for (const auto& c : cases)
    for (int s = 0; s < 3; ++s) {
      const GradedPoint p = draw_graded_point(rng, 16, static_cast<size_t>(c[0]), static_cast<size_t>(c[1]), kWide).point;
      const SeriesReport r = check_cauchy(c[0], c[1], c[2], p);
      t.record(r.pass, [&] { return params_str(r.parameters); });
    }
  detail = count_detail(t, "(n, m, D) cases over 3 draws each");
}

void c7_vanishing(Rng& rng, Tally& t, std::string& detail) {
  const ParamDraw pd = draw_params(rng, 12, kWide);
  const VanishingTable tab = vanishing_report(3, 5, pd.A, pd.B, pd.q);
  const size_t N = tab.partitions.size();
  t.checks = static_cast<long>(N * N);
  t.failures = static_cast<long>(tab.violations.size());
  for (const auto& [l, m] : tab.violations)
    if (t.witnesses.size() < kMaxWitnesses) t.witnesses.push_back("lambda=" + l.str() + " mu=" + m.str());
  detail = count_detail(t, "(lambda, mu) cells, n=3, weights <= 5");
}

void c8_characterization(Rng& rng, Tally& t, std::string& detail) {
  const ParamDraw pd = draw_params(rng, 12, kWide);
  const VanishingTable tab = vanishing_report(2, 4, pd.A, pd.B, pd.q);
  const size_t N = tab.partitions.size();
  bool tri = true, diag = true;
  for (size_t l = 0; l < N; ++l) {
    if (tab.values[l][l].is_zero()) diag = false;
    for (size_t m = 0; m < N; ++m)
      if (!tab.partitions[m].contains(tab.partitions[l]) && !tab.values[l][m].is_zero()) tri = false;
  }
  t.record(tri, [] { return std::string("evaluation matrix not containment-triangular"); });
  t.record(diag, [] { return std::string("evaluation matrix has a zero diagonal entry"); });
  const int rank = matrix_rank(tab.values);
  t.record(rank == static_cast<int>(N), [&] { return "evaluation matrix rank " + std::to_string(rank); });
  std::vector<std::vector<Rational>> extra;
  for (int i = 0; i < 3; ++i) extra.push_back(draw_point(rng, 2));
  const TransitionReport tr = gf_transition(2, 4, pd.A, pd.B, pd.q, extra);
  t.record(tr.triangular, [] { return std::string("G to F transition not triangular"); });
  t.record(tr.diagonal_nonzero, [] { return std::string("G to F transition has a zero diagonal entry"); });
  t.record(tr.diagonal_matches_dual, [] { return std::string("G to F diagonal differs from the dual evaluation"); });
  t.record(tr.reproduces, [] { return std::string("G to F expansion fails at an extra point"); });
  detail = std::to_string(N) + "x" + std::to_string(N) + " evaluation and transition matrices, " +
           count_detail(t, "structural checks");
}

void c9_degenerations(Rng& rng, Tally& t, std::string& detail) {
  const ParamDraw pd = draw_params(rng, 10, kWide);
  const LinearDraw ld = draw_linear_params(rng, 10, kWide);
  const ParamSeq& A = pd.A;
  const Rational& q = pd.q;
  const ParamSeq& C = ld.C;
  const Rational& d = ld.d;

  long tops = 0, top_q = 0, top_el = 0, el_fail = 0, el_factorial = 0;
  for (int n = 1; n <= 3; ++n)
    for (const Partition& lambda : enumerate_partitions(n, 4)) {
      ++tops;
      const SymPoly ft = sympoly_top_component(f_tilde_symbolic(lambda, Partition(), n, A, q));
      const bool okq = ft == q_whittaker_q(lambda, n, q);
      top_q += okq;
      t.record(okq, [&] { return "top f_tilde differs from the oracle: n=" + std::to_string(n) + " lambda=" + lambda.str(); });

      const auto top = sympoly_expand_basis(sympoly_top_component(f_el_symbolic(lambda, Partition(), n, C, d)),
                                            SymBasis::Elementary);
      const bool single = top.size() == 1 && top.begin()->first == lambda;
      const bool oke = single && top.begin()->second == Rational(1);
      top_el += oke;
      if (!oke) {
        ++el_fail;
        Rational fact = 1;
        for (int r = 1; r <= lambda.length(); ++r)
          for (int k = 2; k <= lambda.part(r) - lambda.part(r + 1); ++k) fact *= Rational(k);
        if (single && top.begin()->second * fact == Rational(1)) ++el_factorial;
      }
      t.record(oke, [&] {
        std::ostringstream os;
        os << "top f_el != e_{lambda'}: n=" << n << " lambda=" << lambda.str() << " coefficient "
           << (single ? top.begin()->second.str() : std::string("(not a single term)"));
        return os.str();
      });
    }

  long cells = 0, bad_cells = 0;
  for (int n = 1; n <= 3; ++n) {
    const std::vector<Partition> parts = enumerate_partitions(n, 5);
    for (const Partition& mu : parts) {
      const std::vector<Rational> xq = grid_point_q(A, q, mu, n), xl = grid_point_lin(C, d, mu, n);
      for (const Partition& lambda : parts) {
        const Rational vq = f_tilde(lambda, Partition(), xq, A, q), vl = f_el(lambda, Partition(), xl, C, d);
        const bool inside = mu.contains(lambda);
        bool okq = inside != vq.is_zero(), okl = inside != vl.is_zero();
        if (lambda == mu) {
          okq = okq && vq == h_tilde(lambda, A, q, n);
          okl = okl && vl == h_el(lambda, C, d, n);
        }
        cells += 2;
        bad_cells += !okq + !okl;
        t.record(okq, [&] { return "f_tilde vanishing: n=" + std::to_string(n) + " lambda=" + lambda.str() + " mu=" + mu.str(); });
        t.record(okl, [&] { return "f_el vanishing: n=" + std::to_string(n) + " lambda=" + lambda.str() + " mu=" + mu.str(); });
      }
    }
  }
  std::ostringstream os;
  os << "top f_tilde = oracle " << top_q << "/" << tops << "; top f_el = e_{lambda'} " << top_el << "/" << tops << " (" << el_factorial
     << " of " << el_fail << " failures equal e_{lambda'}/prod (lambda_i-lambda_{i+1})!); vanishing "
     << cells - bad_cells << "/" << cells;
  detail = os.str();
}

void c10_round_trip(Rng& rng, Tally& t, std::string& detail) {
  for (int draw = 0; draw < 2; ++draw) {
    const Grid gq = draw_q_grid(rng, 3, 4), gl = draw_linear_grid(rng, 3, 4);
    const ParamSeq A = with_dummy(gq.tag().a, 'A'), C = with_dummy(gl.tag().cs, 'C');
    for (const Partition& lambda : enumerate_partitions(3, 4)) {
      const Poly sq = solve_f(gq, lambda).to_poly(), sl = solve_f(gl, lambda).to_poly();
      const Poly ft = f_tilde_symbolic(lambda, Partition(), 3, A, gq.tag().q).to_poly().shift_all(-gq.tag().c);
      const Poly fe = f_el_symbolic(lambda, Partition(), 3, C, gl.tag().d).to_poly();
      t.record(sq * h_tilde(lambda, A, gq.tag().q, 3) == ft * hook_value(gq, lambda),
               [&] { return "q-type lambda=" + lambda.str(); });
      t.record(sl * h_el(lambda, C, gl.tag().d, 3) == fe * hook_value(gl, lambda),
               [&] { return "linear-type lambda=" + lambda.str(); });
    }
  }
  detail = count_detail(t, "solve_f vs normalized f_tilde / f_el, n=3, |lambda| <= 4, 2 grids each");
}

void c11_pieri(Rng& rng, Tally& t, std::string& detail) {
  const std::vector<Poly> x2 = poly_vars(2), x3 = poly_vars(3);
  for (int draw = 0; draw < 3; ++draw)
    for (int family = 0; family < 2; ++family) {
      const Grid g = family == 0 ? draw_q_grid(rng, 3, 6) : draw_linear_grid(rng, 3, 6);
      const char* fam = family == 0 ? "q-type" : "linear-type";
      for (int k = 1; k <= 5; ++k)
        t.record(pieri_residual(g, k).is_zero(), [&] { return std::string(fam) + " Pieri k=" + std::to_string(k); });
      const Grid g2 = grid_restrict(g, 2);
      t.record(solve_f(g2, Partition{2}).to_poly() == f2_explicit(g, x2[0], x2[1]),
               [&] { return std::string(fam) + " F_(2) two variables"; });
      t.record(solve_f(g2, Partition{3}).to_poly() == f3_explicit(g, x2[0], x2[1]),
               [&] { return std::string(fam) + " F_(3) two variables"; });
      t.record(solve_f(g, Partition{2}).to_poly() == f2_threevar(g, x3[0], x3[1], x3[2]),
               [&] { return std::string(fam) + " F_(2) three variables"; });
    }
  detail = count_detail(t, "Pieri residuals k <= 5 and closed forms, 3 grids per family");
}

// cells that f3 at ℧((2,2)) reads
const std::pair<int, int> kF3Cells[] = {{1, 0}, {1, 1}, {1, 2}, {2, 0}, {2, 1}, {2, 2}};

void c12_classification(Rng& rng, Tally& t, std::string& detail) {
  for (int i = 0; i < 20; ++i) {
    const Grid g = draw_q_grid(rng, 3, 4);
    const Classification c = classify_grid(g);
    t.record(c.kind == Classification::Kind::QType && c.fitted.c == g.tag().c && c.fitted.q == g.tag().q &&
                 c.fitted.a == g.tag().a,
             [&] { return std::string("q-type table classified as ") + classification_name(c.kind); });
  }
  for (int i = 0; i < 20; ++i) {
    const Grid g = draw_linear_grid(rng, 3, 4);
    const Classification c = classify_grid(g);
    t.record(c.kind == Classification::Kind::LinearType && c.fitted.d == g.tag().d && c.fitted.cs == g.tag().cs,
             [&] { return std::string("linear-type table classified as ") + classification_name(c.kind); });
  }
  int redraws = 0;
  for (int i = 0; i < 20; ++i) {
    const Grid base = i % 2 == 0 ? draw_q_grid(rng, 3, 4) : draw_linear_grid(rng, 3, 4);
    for (int attempt = 0;; ++attempt) {
      if (attempt == 100) throw Error(Errc::SingularDenominator, "no usable perturbation");
      const auto [r, col] = kF3Cells[rng.uniform(0, 5)];
      Grid g = base;
      g.set(r, col, g.at(r, col) + rng.nonzero_rational());
      try {
        const Classification c = classify_grid(g);
        const Rational f3 = f3_explicit(g, g.at(1, 0), g.at(2, 2));
        const std::string where = "perturbed cell (" + std::to_string(r) + "," + std::to_string(col) + ")";
        t.record(c.kind == Classification::Kind::NotPerfect, [&] { return where + " classified as " + classification_name(c.kind); });
        t.record(!f3.is_zero(), [&] { return where + ": f3 vanishes at the (2,2) point"; });
        break;
      } catch (const Error& e) {
        if (e.code() != Errc::DivisionByZero) throw;
        ++redraws;
      }
    }
  }
  // perturbations anywhere in the table only need to break the fit
  for (int i = 0; i < 20; ++i) {
    Grid g = i % 2 == 0 ? draw_q_grid(rng, 3, 4) : draw_linear_grid(rng, 3, 4);
    const int r = static_cast<int>(rng.uniform(1, 3)), col = static_cast<int>(rng.uniform(0, 4));
    g.set(r, col, g.at(r, col) + rng.nonzero_rational());
    try {
      const Classification c = classify_grid(g);
      t.record(c.kind == Classification::Kind::NotPerfect, [&] {
        return "perturbed cell (" + std::to_string(r) + "," + std::to_string(col) + ") classified as " +
               classification_name(c.kind);
      });
    } catch (const Error& e) {
      if (e.code() != Errc::DivisionByZero) throw;
      ++redraws;
    }
  }
  detail = count_detail(t, "checks: 40 generated tables, 20 perturbed in the f3 cells (class + f3), 20 perturbed anywhere") +
           ", " + std::to_string(redraws) + " degenerate perturbations redrawn";
}

using Runner = void (*)(Rng&, Tally&, std::string&);
const Runner kRunners[kCriterionCount] = {c1_ybe,    c2_r_forms,   c3_qgauss,          c4_exchange,
                                          c5_symmetry, c6_cauchy, c7_vanishing, c8_characterization,
                                          c9_degenerations, c10_round_trip, c11_pieri, c12_classification};

void check_id(int id) {
  if (id < 1 || id > kCriterionCount) throw Error(Errc::OutOfRange, "criterion id out of range");
}

}  // namespace

const char* criterion_name(int id) {
  check_id(id);
  return kSpecs[id - 1].name;
}

double criterion_limit(int id) {
  check_id(id);
  return kSpecs[id - 1].limit;
}

CriterionResult run_criterion(int id, const SuiteOptions& opt) {
  check_id(id);
  CriterionResult res;
  res.id = id;
  res.name = kSpecs[id - 1].name;
  res.limit = kSpecs[id - 1].limit;
  // independent stream per criterion
  Rng rng(opt.seed ^ (0x9E3779B97F4A7C15ULL * static_cast<std::uint64_t>(id)));
  Tally t;
  const auto t0 = std::chrono::steady_clock::now();
  try {
    kRunners[id - 1](rng, t, res.detail);
  } catch (const Error& e) {
    ++t.failures;
    t.witnesses.push_back(std::string("error: ") + e.what());
  }
  res.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  res.checks = t.checks;
  res.exact = t.ok();
  res.pass = res.exact && res.seconds < res.limit;
  res.witnesses = std::move(t.witnesses);
  return res;
}

std::vector<CriterionResult> run_suite(const SuiteOptions& opt, const std::vector<int>& ids) {
  std::vector<CriterionResult> out;
  if (ids.empty())
    for (int id = 1; id <= kCriterionCount; ++id) out.push_back(run_criterion(id, opt));
  else
    for (int id : ids) out.push_back(run_criterion(id, opt));
  return out;
}

std::string format_result(const CriterionResult& r) {
  char buf[96];
  std::snprintf(buf, sizeof buf, "[%s] %2d %s (%.2f s / %.0f s)", r.pass ? "PASS" : "FAIL", r.id, r.name.c_str(),
                r.seconds, r.limit);
  std::string s = buf;
  if (!r.detail.empty()) s += ": " + r.detail;
  if (r.exact && !r.pass) s += " [over time limit]";
  return s;
}

}  // namespace sqw
