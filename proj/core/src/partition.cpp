#include "sqw/partition.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "sqw/error.hpp"

namespace sqw {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
  for (size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0 || (i > 0 && parts_[i] > parts_[i - 1]))
      throw Error(Errc::OutOfRange, "not a partition");
  }
}

int Partition::weight() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

Partition Partition::conjugate() const {
  std::vector<int> c;
  for (int j = 1; j <= part(1); ++j) {
    int cnt = 0;
    while (cnt < length() && parts_[static_cast<size_t>(cnt)] >= j) ++cnt;
    c.push_back(cnt);
  }
  return Partition(std::move(c));
}

bool Partition::contains(const Partition& mu) const {
  if (mu.length() > length()) return false;
  for (int r = 1; r <= mu.length(); ++r)
    if (mu.part(r) > part(r)) return false;
  return true;
}

Partition Partition::plus_columns(int n, int k) const {
  std::vector<int> p(static_cast<size_t>(std::max(n, length())), 0);
  for (int r = 1; r <= static_cast<int>(p.size()); ++r) p[r - 1] = part(r) + (r <= n ? k : 0);
  return Partition(std::move(p));
}

std::string Partition::str() const {
  if (parts_.empty()) return "()";
  std::string s = "(";
  for (size_t i = 0; i < parts_.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(parts_[i]);
  }
  return s + ")";
}

size_t PartitionHash::operator()(const Partition& p) const noexcept {
  size_t h = 0x9e3779b97f4a7c15ULL;
  for (int x : p.parts()) h ^= std::hash<int>{}(x) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  return h;
}

bool interlaces(const Partition& lambda, const Partition& mu) {
  const int len = std::max(lambda.length(), mu.length());
  for (int i = 1; i <= len; ++i)
    if (lambda.part(i) < mu.part(i) || mu.part(i) < lambda.part(i + 1)) return false;
  return true;
}

namespace {

// Partitions of exactly m with at most n parts and parts ≤ cap, in reverse-lexicographic order.
void partitions_of(int m, int n, int cap, std::vector<int>& cur, std::vector<Partition>& out) {
  if (m == 0) {
    out.emplace_back(cur);
    return;
  }
  if (n == 0) return;
  for (int p = std::min(m, cap); p >= 1; --p) {
    cur.push_back(p);
    partitions_of(m - p, n - 1, p, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<Partition> enumerate_partitions(int n, int m) {
  std::vector<Partition> out;
  std::vector<int> cur;
  for (int w = 0; w <= m; ++w) partitions_of(w, n, w, cur, out);
  return out;
}

std::vector<Partition> partitions_below(const Partition& lambda) {
  std::vector<Partition> out;
  const int len = lambda.length();
  std::vector<int> mu(static_cast<size_t>(len), 0);
  std::function<void(int)> rec = [&](int r) {
    if (r > len) {
      out.emplace_back(mu);
      return;
    }
    for (int v = lambda.part(r); v >= lambda.part(r + 1); --v) {
      mu[r - 1] = v;
      rec(r + 1);
    }
  };
  rec(1);
  return out;
}

long count_partitions(int n, int m) {
  // p(m, n) = p(m, n-1) + p(m-n, n): at most n parts.
  std::vector<std::vector<long>> p(static_cast<size_t>(m) + 1, std::vector<long>(static_cast<size_t>(n) + 1, 0));
  for (int k = 0; k <= n; ++k) p[0][k] = 1;
  for (int w = 1; w <= m; ++w)
    for (int k = 1; k <= n; ++k) p[w][k] = p[w][k - 1] + (w >= k ? p[w - k][k] : 0);
  return p[m][n];
}

int Composition::total() const { return std::accumulate(e_.begin(), e_.end(), 0); }

bool Composition::nonnegative() const {
  return std::all_of(e_.begin(), e_.end(), [](int x) { return x >= 0; });
}

bool Composition::dominates(const Composition& o) const {
  for (size_t i = 0; i < e_.size(); ++i)
    if (e_[i] < o.e_[i]) return false;
  return true;
}

std::string Composition::str() const {
  std::string s = "[";
  for (size_t i = 0; i < e_.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(e_[i]);
  }
  return s + "]";
}

Composition operator+(const Composition& a, const Composition& b) {
  if (a.rank() != b.rank()) throw Error(Errc::OutOfRange, "composition rank mismatch");
  Composition r = a;
  for (size_t i = 0; i < r.rank(); ++i) r.e_[i] += b.e_[i];
  return r;
}

Composition operator-(const Composition& a, const Composition& b) {
  if (a.rank() != b.rank()) throw Error(Errc::OutOfRange, "composition rank mismatch");
  Composition r = a;
  for (size_t i = 0; i < r.rank(); ++i) r.e_[i] -= b.e_[i];
  return r;
}

ParamSeq::ParamSeq(std::vector<Rational> values, char label)
    : v_(std::make_shared<const std::vector<Rational>>(std::move(values))), label_(label) {}

Rational ParamSeq::at(size_t i) const {
  if (offset_ + i >= v_->size())
    throw Error(Errc::PrefixTooShort, std::string("sequence ") + label_ + " has no entry " +
                                          std::to_string(offset_ + i));
  const Rational& v = (*v_)[offset_ + i];
  return inverted_ ? v.inverse() : v;
}

ParamSeq ParamSeq::shift(size_t k) const {
  ParamSeq s = *this;
  s.offset_ += k;
  return s;
}

ParamSeq ParamSeq::invert() const {
  ParamSeq s = *this;
  s.inverted_ = !s.inverted_;
  return s;
}

std::vector<Rational> grid_point_q(const ParamSeq& A, const Rational& q, const Partition& mu, int n) {
  if (mu.length() > n) throw Error(Errc::OutOfRange, "partition longer than n");
  std::vector<Rational> x;
  for (int i = 1; i <= n; ++i) x.push_back(A.at(i) * q.pow(mu.part(i) - mu.part(i + 1)));
  return x;
}

std::vector<Rational> grid_point_lin(const ParamSeq& C, const Rational& d, const Partition& mu, int n) {
  if (mu.length() > n) throw Error(Errc::OutOfRange, "partition longer than n");
  std::vector<Rational> r;
  for (int i = 1; i <= n; ++i) r.push_back(C.at(i) + d * Rational(mu.part(i) - mu.part(i + 1)));
  return r;
}

}  // namespace sqw
