#include "sqw/linalg.hpp"

#include <utility>

#include "sqw/error.hpp"

namespace sqw {

namespace {

using IntMatrix = std::vector<std::vector<mpz_class>>;

IntMatrix integer_rows(const RationalMatrix& M, const RationalMatrix* B) {
  IntMatrix out;
  for (size_t i = 0; i < M.size(); ++i) {
    std::vector<Rational> row = M[i];
    if (B) row.insert(row.end(), (*B)[i].begin(), (*B)[i].end());
    mpz_class l = 1;
    for (const Rational& v : row) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.den().get_mpz_t());
    std::vector<mpz_class> r;
    r.reserve(row.size());
    for (const Rational& v : row) r.push_back(v.num() * (l / v.den()));
    out.push_back(std::move(r));
  }
  return out;
}

// Bareiss elimination on the first `cols` columns; returns the pivot columns in order.
std::vector<size_t> eliminate(IntMatrix& A, size_t cols) {
  std::vector<size_t> pivots;
  mpz_class prev = 1;
  size_t row = 0;
  const size_t width = A.empty() ? 0 : A[0].size();
  for (size_t c = 0; c < cols && row < A.size(); ++c) {
    size_t p = row;
    while (p < A.size() && A[p][c] == 0) ++p;
    if (p == A.size()) continue;
    std::swap(A[p], A[row]);
    for (size_t i = row + 1; i < A.size(); ++i) {
      for (size_t j = c + 1; j < width; ++j) {
        A[i][j] = A[row][c] * A[i][j] - A[i][c] * A[row][j];
        mpz_divexact(A[i][j].get_mpz_t(), A[i][j].get_mpz_t(), prev.get_mpz_t());
      }
      A[i][c] = 0;
    }
    prev = A[row][c];
    pivots.push_back(c);
    ++row;
  }
  return pivots;
}

}  // namespace

RationalMatrix solve_linear(const RationalMatrix& M, const RationalMatrix& B) {
  const size_t n = M.size();
  if (B.size() != n) throw Error(Errc::OutOfRange, "right-hand side has wrong height");
  for (const auto& row : M)
    if (row.size() != n) throw Error(Errc::OutOfRange, "matrix is not square");
  const size_t k = n ? B[0].size() : 0;
  IntMatrix A = integer_rows(M, &B);
  if (eliminate(A, n).size() != n) throw Error(Errc::SingularSystem, "matrix is singular");
  RationalMatrix X(n, std::vector<Rational>(k));
  for (size_t col = 0; col < k; ++col) {
    for (size_t ii = n; ii-- > 0;) {
      Rational s(mpq_class(A[ii][n + col]));
      for (size_t j = ii + 1; j < n; ++j)
        if (A[ii][j] != 0) s -= Rational(mpq_class(A[ii][j])) * X[j][col];
      X[ii][col] = s / Rational(mpq_class(A[ii][ii]));
    }
  }
  return X;
}

std::vector<Rational> solve_linear(const RationalMatrix& M, const std::vector<Rational>& b) {
  RationalMatrix B;
  for (const Rational& v : b) B.push_back({v});
  RationalMatrix X = solve_linear(M, B);
  std::vector<Rational> x;
  for (auto& row : X) x.push_back(row[0]);
  return x;
}

int matrix_rank(const RationalMatrix& M) {
  if (M.empty()) return 0;
  IntMatrix A = integer_rows(M, nullptr);
  return static_cast<int>(eliminate(A, M[0].size()).size());
}

}  // namespace sqw
