#include "sqw/grid.hpp"

#include <set>

#include "sqw/error.hpp"
#include "sqw/linalg.hpp"

namespace sqw {

const char* grid_kind_name(GridTag::Kind k) {
  switch (k) {
    case GridTag::Kind::QType: return "q-type";
    case GridTag::Kind::LinearType: return "linear-type";
    case GridTag::Kind::Raw: break;
  }
  return "raw";
}

const char* classification_name(Classification::Kind k) {
  switch (k) {
    case Classification::Kind::QType: return "q-type";
    case Classification::Kind::LinearType: return "linear-type";
    case Classification::Kind::NotPerfect: break;
  }
  return "NotPerfect";
}

Grid::Grid(std::vector<std::vector<Rational>> values, GridTag tag) : v_(std::move(values)), tag_(std::move(tag)) {
  if (v_.empty()) throw Error(Errc::OutOfRange, "grid needs at least one row");
  for (const auto& row : v_)
    if (row.size() != v_[0].size() || row.empty()) throw Error(Errc::OutOfRange, "grid rows must have equal nonzero length");
}

Grid Grid::q_type(const Rational& c, const Rational& q, const std::vector<Rational>& a, int depth) {
  std::vector<std::vector<Rational>> v;
  for (const Rational& ai : a) {
    std::vector<Rational> row;
    Rational p = ai;
    for (int j = 0; j <= depth; ++j, p *= q) row.push_back(c + p);
    v.push_back(std::move(row));
  }
  GridTag t;
  t.kind = GridTag::Kind::QType;
  t.c = c;
  t.q = q;
  t.a = a;
  return Grid(std::move(v), std::move(t));
}

Grid Grid::linear_type(const Rational& d, const std::vector<Rational>& cs, int depth) {
  std::vector<std::vector<Rational>> v;
  for (const Rational& ci : cs) {
    std::vector<Rational> row;
    for (int j = 0; j <= depth; ++j) row.push_back(ci + d * Rational(j));
    v.push_back(std::move(row));
  }
  GridTag t;
  t.kind = GridTag::Kind::LinearType;
  t.d = d;
  t.cs = cs;
  return Grid(std::move(v), std::move(t));
}

const Rational& Grid::at(int i, int j) const {
  if (i < 1 || i > n()) throw Error(Errc::OutOfRange, "grid row " + std::to_string(i) + " out of range");
  if (j < 0) throw Error(Errc::OutOfRange, "negative grid column");
  if (j > depth())
    throw Error(Errc::DepthTooShallow, "grid column " + std::to_string(j) + " exceeds depth " + std::to_string(depth()));
  return v_[static_cast<size_t>(i - 1)][static_cast<size_t>(j)];
}

void Grid::set(int i, int j, const Rational& v) {
  at(i, j);
  v_[static_cast<size_t>(i - 1)][static_cast<size_t>(j)] = v;
  tag_ = GridTag{};
}

std::vector<Rational> Grid::point(const Partition& mu) const {
  if (mu.length() > n()) throw Error(Errc::OutOfRange, "partition longer than the grid rank");
  std::vector<Rational> x;
  for (int i = 1; i <= n(); ++i) x.push_back(at(i, mu.part(i) - mu.part(i + 1)));
  return x;
}

bool grid_nondegenerate(const Grid& g) {
  std::set<Rational> seen;
  for (const auto& row : g.values())
    for (const Rational& v : row)
      if (!seen.insert(v).second) return false;
  return true;
}

Grid grid_restrict(const Grid& g, int m) {
  if (m < 1 || m > g.n()) throw Error(Errc::OutOfRange, "restriction rank out of range");
  std::vector<std::vector<Rational>> v(g.values().begin(), g.values().begin() + m);
  GridTag t = g.tag();
  if (t.kind == GridTag::Kind::QType) t.a.resize(static_cast<size_t>(m));
  if (t.kind == GridTag::Kind::LinearType) t.cs.resize(static_cast<size_t>(m));
  return Grid(std::move(v), std::move(t));
}

Grid grid_shift(const Grid& g, int k) {
  if (k < 0 || k > g.depth()) throw Error(Errc::OutOfRange, "shift exceeds the grid depth");
  const int depth = g.depth() - k;
  std::vector<std::vector<Rational>> v;
  for (int i = 1; i <= g.n(); ++i) {
    const int off = i == g.n() ? k : 0;
    std::vector<Rational> row;
    for (int j = 0; j <= depth; ++j) row.push_back(g.at(i, j + off));
    v.push_back(std::move(row));
  }
  GridTag t = g.tag();
  if (t.kind == GridTag::Kind::QType) t.a.back() *= t.q.pow(k);
  if (t.kind == GridTag::Kind::LinearType) t.cs.back() += t.d * Rational(k);
  return Grid(std::move(v), std::move(t));
}

Grid grid_leftshift(const Grid& g, int l) {
  if (l < 0 || l >= g.n()) throw Error(Errc::OutOfRange, "left shift out of range");
  std::vector<std::vector<Rational>> v(g.values().begin() + l, g.values().end());
  GridTag t = g.tag();
  if (t.kind == GridTag::Kind::QType) t.a.erase(t.a.begin(), t.a.begin() + l);
  if (t.kind == GridTag::Kind::LinearType) t.cs.erase(t.cs.begin(), t.cs.begin() + l);
  return Grid(std::move(v), std::move(t));
}

Grid grid_translate(const Grid& g, const Rational& c) {
  std::vector<std::vector<Rational>> v = g.values();
  for (auto& row : v)
    for (Rational& x : row) x += c;
  GridTag t = g.tag();
  if (t.kind == GridTag::Kind::QType) t.c += c;
  if (t.kind == GridTag::Kind::LinearType)
    for (Rational& ci : t.cs) ci += c;
  return Grid(std::move(v), std::move(t));
}

Rational hook_value(const Grid& g, const Partition& lambda) {
  if (lambda.length() > g.n()) throw Error(Errc::OutOfRange, "partition longer than the grid rank");
  Rational r = 1;
  for (int row = 1; row <= lambda.length(); ++row)
    for (int i = 1; i <= row; ++i) {
      const Rational& top = g.at(i, lambda.part(i) - lambda.part(i + 1));
      for (int j = lambda.part(row + 1); j < lambda.part(row); ++j) r *= top - g.at(row, j - lambda.part(row + 1));
    }
  return r;
}

namespace detail {

Rational checked_div(const Rational& a, const Rational& b, const char* what) {
  if (b.is_zero()) throw Error(Errc::DivisionByZero, what);
  return a / b;
}

}  // namespace detail

SymPoly solve_f(const Grid& g, const Partition& lambda) {
  const int n = g.n(), w = lambda.weight();
  if (lambda.length() > n) throw Error(Errc::OutOfRange, "partition longer than the grid rank");
  if (g.depth() < w)
    throw Error(Errc::DepthTooShallow, "solve_f needs depth >= |lambda| = " + std::to_string(w));
  const std::vector<Partition> basis = enumerate_partitions(n, w);
  const size_t N = basis.size();
  RationalMatrix M(N, std::vector<Rational>(N));
  std::vector<Rational> rhs(N);
  for (size_t v = 0; v < N; ++v) {
    const std::vector<Rational> pt = g.point(basis[v]);
    for (size_t m = 0; m < N; ++m) M[v][m] = monomial_symmetric_eval(basis[m], pt);
    if (basis[v] == lambda) rhs[v] = hook_value(g, lambda);
  }
  const std::vector<Rational> sol = solve_linear(M, rhs);
  std::map<Partition, Rational> coeffs;
  for (size_t m = 0; m < N; ++m)
    if (!sol[m].is_zero()) coeffs.emplace(basis[m], sol[m]);
  return sympoly_from_basis(n, coeffs, SymBasis::Monomial);
}

Rational pieri_kappa(const Grid& g, int k) {
  if (k < 1) throw Error(Errc::OutOfRange, "Pieri index must be >= 1");
  const Grid h = grid_restrict(g, 2);
  const Rational &u = h.at(1, k - 1), &v = h.at(2, 1), &c = h.at(2, 0);
  const Rational fk = solve_f(h, Partition{k}).evaluate(std::vector<Rational>{u, v});
  Rational den = (v - c) * (u - c);
  for (int i = 0; i <= k - 2; ++i) den *= u - h.at(1, i);
  return detail::checked_div((u + v - h.at(1, k) - c) * fk, den, "kappa denominator vanishes");
}

SymPoly pieri_residual(const Grid& g, int k) {
  if (k < 1) throw Error(Errc::OutOfRange, "Pieri index must be >= 1");
  const Grid h = grid_restrict(g, 2);
  const Rational c = h.at(2, 0);
  const SymPoly e1 = SymPoly::monomial(2, Partition{1}), e2 = SymPoly::monomial(2, Partition{1, 1});
  const SymPoly lin = e1 + SymPoly(2, -(h.at(1, k) + c));
  // (x_1 - c)(x_2 - c)
  const SymPoly quad = e2 + e1 * (-c) + SymPoly(2, c * c);
  const SymPoly below = k == 1 ? SymPoly(2, Rational(1)) : solve_f(grid_shift(h, 1), Partition{k - 1});
  return lin * solve_f(h, Partition{k}) - solve_f(h, Partition{k + 1}) - quad * below * pieri_kappa(h, k);
}

Rational constraint_12(const Grid& g, int i, int j) {
  if (i < 1 || i >= g.n() || j < 1) throw Error(Errc::OutOfRange, "constraint_12 needs 1 <= i < n and j >= 1");
  return (g.at(i, 1) - g.at(i + 1, j - 1)) * (g.at(i, 1) - g.at(i + 1, j + 1)) -
         (g.at(i, 0) - g.at(i + 1, j)) * (g.at(i, 2) - g.at(i + 1, j));
}

Rational constraint_31(const Grid& g) {
  if (g.n() < 3) throw Error(Errc::OutOfRange, "constraint_31 needs a 3-grid");
  const Rational &a = g.at(1, 0), &b = g.at(1, 1), &c = g.at(2, 0), &d = g.at(2, 1), &e = g.at(3, 0);
  return g.at(3, 1) - detail::checked_div(a * d - b * c - d * e + b * e, a - c, "[1;0] = [2;0]");
}

Rational constraint_final(const Grid& g) {
  if (g.n() < 2) throw Error(Errc::OutOfRange, "constraint_final needs a 2-grid");
  const Rational &a = g.at(1, 0), &b = g.at(1, 1), &b2 = g.at(1, 2), &c = g.at(2, 0), &d = g.at(2, 1);
  return (d - b2) * (c - a) - (d - b) * (c - b);
}

Classification classify_grid(const Grid& g) {
  if (g.n() < 3) throw Error(Errc::OutOfRange, "classification needs n >= 3");
  if (g.depth() < 4) throw Error(Errc::DepthTooShallow, "classification needs depth >= 4");
  const Rational &x10 = g.at(1, 0), &x11 = g.at(1, 1), &x20 = g.at(2, 0), &x21 = g.at(2, 1);
  const Rational q = detail::checked_div(x21 - x11, x20 - x10, "[1;0] = [2;0]");

  Classification out;
  GridTag t;
  if (q != Rational(1)) {
    t.kind = GridTag::Kind::QType;
    t.q = q;
    const Rational a1 = (x10 - x11) / (Rational(1) - q);
    t.c = x10 - a1;
    for (int i = 1; i <= g.n(); ++i) t.a.push_back(g.at(i, 0) - t.c);
  } else {
    t.kind = GridTag::Kind::LinearType;
    t.d = x11 - x10;
    for (int i = 1; i <= g.n(); ++i) t.cs.push_back(g.at(i, 0));
  }
  const Grid model = t.kind == GridTag::Kind::QType ? Grid::q_type(t.c, t.q, t.a, g.depth())
                                                    : Grid::linear_type(t.d, t.cs, g.depth());
  for (int i = 1; i <= g.n(); ++i)
    for (int j = 0; j <= g.depth(); ++j)
      if (g.at(i, j) != model.at(i, j)) {
        out.violated_cell = {i, j};
        out.reason = std::string("cell disagrees with the fitted ") + grid_kind_name(t.kind) + " generator";
        return out;
      }
  out.nondegenerate = grid_nondegenerate(g);
  if (!out.nondegenerate) out.reason = "fits the generator but repeats a value";
  out.kind = t.kind == GridTag::Kind::QType ? Classification::Kind::QType : Classification::Kind::LinearType;
  out.fitted = std::move(t);
  return out;
}

}  // namespace sqw
