#include "sqw/random.hpp"

#include <limits>

#include "sqw/error.hpp"

namespace sqw {

long Rng::uniform(long lo, long hi) {
  if (hi < lo) throw Error(Errc::OutOfRange, "empty range");
  const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % span;
  std::uint64_t r;
  do r = eng_();
  while (r >= limit);
  return lo + static_cast<long>(r % span);
}

Rational Rng::nonzero_rational(long max_num, long max_den) {
  const long p = uniform(1, max_num), r = uniform(1, max_den);
  return uniform(0, 1) ? Rational(p, r) : Rational(-p, r);
}

bool generic_for_q(const Rational& q, const std::vector<Rational>& values, int window) {
  if (q.is_zero() || q == Rational(1) || q == Rational(-1)) return false;
  std::vector<Rational> powers;
  for (int k = -window; k <= window; ++k) powers.push_back(q.pow(k));
  for (size_t i = 0; i < values.size(); ++i) {
    if (values[i].is_zero()) return false;
    for (size_t j = i + 1; j < values.size(); ++j) {
      const Rational r = values[i] / values[j];
      for (const Rational& p : powers)
        if (r == p) return false;
    }
  }
  return true;
}

namespace {

[[noreturn]] void give_up() { throw Error(Errc::SingularDenominator, "no generic draw within the attempt limit"); }

}  // namespace

ParamDraw draw_params(Rng& rng, size_t len, const DrawOptions& opt) {
  ParamDraw out;
  for (int attempt = 0; attempt < opt.max_attempts; ++attempt) {
    const Rational q = rng.nonzero_rational(opt.max_num, opt.max_den);
    std::vector<Rational> a, b, all;
    for (size_t i = 0; i < len; ++i) a.push_back(rng.nonzero_rational(opt.max_num, opt.max_den));
    for (size_t i = 0; i < len; ++i) b.push_back(rng.nonzero_rational(opt.max_num, opt.max_den));
    all = a;
    all.insert(all.end(), b.begin(), b.end());
    if (!generic_for_q(q, all, opt.window)) {
      ++out.rejections;
      continue;
    }
    out.A = ParamSeq(std::move(a), 'A');
    out.B = ParamSeq(std::move(b), 'B');
    out.q = q;
    return out;
  }
  give_up();
}

YbeDraw draw_ybe_params(Rng& rng, const DrawOptions& opt) {
  YbeDraw out;
  for (int attempt = 0; attempt < opt.max_attempts; ++attempt) {
    YbeParams p;
    p.q = rng.nonzero_rational(opt.max_num, opt.max_den);
    for (Rational* v : {&p.a1, &p.a2, &p.a3, &p.b1, &p.b2, &p.b3}) *v = rng.nonzero_rational(opt.max_num, opt.max_den);
    if (!generic_for_q(p.q, {p.a1, p.a2, p.a3, p.b1, p.b2, p.b3}, opt.window)) {
      ++out.rejections;
      continue;
    }
    out.params = p;
    return out;
  }
  give_up();
}

GradedDraw draw_graded_point(Rng& rng, size_t len, size_t nx, size_t ny, const DrawOptions& opt) {
  GradedDraw out;
  for (int attempt = 0; attempt < opt.max_attempts; ++attempt) {
    std::vector<Rational> a, b, all;
    for (size_t i = 0; i < len; ++i) a.push_back(rng.nonzero_rational(opt.max_num, opt.max_den));
    for (size_t i = 0; i < len; ++i) b.push_back(rng.nonzero_rational(opt.max_num, opt.max_den));
    all = a;
    all.insert(all.end(), b.begin(), b.end());
    // q is graded, so only the constant terms 1 - a_i/b_j and friends need to be units.
    bool ok = true;
    for (size_t i = 0; i < all.size() && ok; ++i)
      for (size_t j = i + 1; j < all.size(); ++j)
        if (all[i] == all[j]) {
          ok = false;
          break;
        }
    if (!ok) {
      ++out.rejections;
      continue;
    }
    GradedPoint& p = out.point;
    p.A = ParamSeq(std::move(a), 'A');
    p.B = ParamSeq(std::move(b), 'B');
    p.xhat.clear();
    p.yhat.clear();
    for (size_t i = 0; i < nx; ++i) p.xhat.push_back(rng.nonzero_rational(opt.max_num, opt.max_den));
    for (size_t j = 0; j < ny; ++j) p.yhat.push_back(rng.nonzero_rational(opt.max_num, opt.max_den));
    p.qhat = rng.nonzero_rational(opt.max_num, opt.max_den);
    return out;
  }
  give_up();
}

namespace {

bool is_integer(const Rational& r) { return r.den() == 1; }

}  // namespace

LinearDraw draw_linear_params(Rng& rng, size_t len, const DrawOptions& opt) {
  LinearDraw out;
  for (int attempt = 0; attempt < opt.max_attempts; ++attempt) {
    const Rational d = rng.nonzero_rational(opt.max_num, opt.max_den);
    std::vector<Rational> c;
    for (size_t i = 0; i < len; ++i) c.push_back(Rational(rng.uniform(-opt.max_num, opt.max_num), rng.uniform(1, opt.max_den)));
    bool ok = true;
    for (size_t i = 1; i < len && ok; ++i)
      for (size_t j = i + 1; j < len; ++j)
        if (is_integer((c[i] - c[j]) / d)) {
          ok = false;
          break;
        }
    if (!ok) {
      ++out.rejections;
      continue;
    }
    out.C = ParamSeq(std::move(c), 'C');
    out.d = d;
    return out;
  }
  give_up();
}

Grid draw_q_grid(Rng& rng, int n, int depth, const DrawOptions& opt) {
  for (int attempt = 0; attempt < opt.max_attempts; ++attempt) {
    const Rational q = rng.nonzero_rational(opt.max_num, opt.max_den);
    const Rational c(rng.uniform(-opt.max_num, opt.max_num), rng.uniform(1, opt.max_den));
    std::vector<Rational> a;
    for (int i = 0; i < n; ++i) a.push_back(rng.nonzero_rational(opt.max_num, opt.max_den));
    if (!generic_for_q(q, a, opt.window)) continue;
    Grid g = Grid::q_type(c, q, a, depth);
    if (grid_nondegenerate(g)) return g;
  }
  give_up();
}

Grid draw_linear_grid(Rng& rng, int n, int depth, const DrawOptions& opt) {
  for (int attempt = 0; attempt < opt.max_attempts; ++attempt) {
    LinearDraw p = draw_linear_params(rng, static_cast<size_t>(n) + 1, opt);
    std::vector<Rational> cs;
    for (int i = 1; i <= n; ++i) cs.push_back(p.C.at(static_cast<size_t>(i)));
    Grid g = Grid::linear_type(p.d, cs, depth);
    if (grid_nondegenerate(g)) return g;
  }
  give_up();
}

std::vector<Rational> draw_point(Rng& rng, size_t n, const DrawOptions& opt) {
  std::vector<Rational> x;
  for (size_t i = 0; i < n; ++i) x.push_back(rng.nonzero_rational(opt.max_num, opt.max_den));
  return x;
}

}  // namespace sqw
