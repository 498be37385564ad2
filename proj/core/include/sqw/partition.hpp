#pragma once

#include <cstddef>
#include <initializer_list>
#include <memory>
#include <string>
#include <vector>

#include "sqw/rational.hpp"

namespace sqw {

// Weakly decreasing positive parts; no zeros stored. part(r) is 1-based and reads 0 past the end.
class Partition {
 public:
  Partition() = default;
  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}
  explicit Partition(std::vector<int> parts);

  int length() const { return static_cast<int>(parts_.size()); }
  int weight() const;
  int part(int r) const { return r >= 1 && r <= length() ? parts_[static_cast<size_t>(r - 1)] : 0; }
  const std::vector<int>& parts() const { return parts_; }
  bool empty() const { return parts_.empty(); }
  Partition conjugate() const;
  // mu ⊆ *this
  bool contains(const Partition& mu) const;
  // adds k to each of the first n parts (λ + kⁿ)
  Partition plus_columns(int n, int k) const;
  std::string str() const;

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition& a, const Partition& b) { return a.parts_ <=> b.parts_; }

 private:
  std::vector<int> parts_;
};

struct PartitionHash {
  size_t operator()(const Partition& p) const noexcept;
};

// λ_i ≥ μ_i ≥ λ_{i+1} for all i.
bool interlaces(const Partition& lambda, const Partition& mu);

// Partitions with at most n parts and weight ≤ m, ordered by weight then reverse-lexicographically.
std::vector<Partition> enumerate_partitions(int n, int m);

// All μ with μ ≺ λ.
std::vector<Partition> partitions_below(const Partition& lambda);

// Number of partitions with at most n parts and weight exactly m.
long count_partitions(int n, int m);

// Signed integer vector used as a vertex-weight label.
class Composition {
 public:
  Composition() = default;
  Composition(std::initializer_list<int> e) : e_(e) {}
  explicit Composition(std::vector<int> e) : e_(std::move(e)) {}
  static Composition zeros(size_t rank) { return Composition(std::vector<int>(rank, 0)); }

  size_t rank() const { return e_.size(); }
  int operator[](size_t i) const { return e_[i]; }
  int& operator[](size_t i) { return e_[i]; }
  const std::vector<int>& entries() const { return e_; }
  int total() const;
  bool nonnegative() const;
  // componentwise ≥
  bool dominates(const Composition& o) const;
  std::string str() const;

  friend Composition operator+(const Composition& a, const Composition& b);
  friend Composition operator-(const Composition& a, const Composition& b);
  friend bool operator==(const Composition&, const Composition&) = default;

 private:
  std::vector<int> e_;
};

// Finite prefix (χ_0, χ_1, ...) of a parameter sequence with offset (τ) and inversion (bar) views.
class ParamSeq {
 public:
  ParamSeq() : ParamSeq(std::vector<Rational>{}, 'A') {}
  ParamSeq(std::vector<Rational> values, char label);

  // 0-based; throws Errc::PrefixTooShort past the stored prefix.
  Rational at(size_t i) const;
  Rational operator[](size_t i) const { return at(i); }
  size_t size() const { return v_->size() - offset_; }
  char label() const { return label_; }
  size_t offset() const { return offset_; }
  bool inverted() const { return inverted_; }

  ParamSeq shift(size_t k = 1) const;
  ParamSeq invert() const;

 private:
  std::shared_ptr<const std::vector<Rational>> v_;
  size_t offset_ = 0;
  bool inverted_ = false;
  char label_;
};

// (a_1 q^{μ_1-μ_2}, ..., a_n q^{μ_n})
std::vector<Rational> grid_point_q(const ParamSeq& A, const Rational& q, const Partition& mu, int n);
// (c_1 + (μ_1-μ_2)d, ..., c_n + μ_n d)
std::vector<Rational> grid_point_lin(const ParamSeq& C, const Rational& d, const Partition& mu, int n);

}  // namespace sqw
