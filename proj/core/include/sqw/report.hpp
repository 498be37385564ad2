#pragma once

#include <string>
#include <utility>
#include <vector>

#include "sqw/partition.hpp"
#include "sqw/series.hpp"

namespace sqw {

// Point for identities checked in Q[t]/t^{D+1}: x_i = t·xhat_i, y_j^{-1} (or y_j) = t·yhat_j, q = t·qhat.
struct GradedPoint {
  ParamSeq A, B;
  std::vector<Rational> xhat, yhat;
  Rational qhat;
};

// Outcome of a truncated-series identity check.
struct SeriesReport {
  std::string identity;
  std::vector<std::pair<std::string, std::string>> parameters;
  int truncation = 0;
  std::vector<Partition> contributing;
  TruncSeries lhs, rhs;
  bool pass = false;
};

std::vector<std::pair<std::string, std::string>> describe_point(const GradedPoint& p);

}  // namespace sqw
