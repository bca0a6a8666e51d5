// tests/oracle.hpp
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Test-only reference implementations. These re-derive the Mamdani pipeline
// from scratch (own MF formulas, own clamping, inclusive-endpoint sampling)
// so they share no evaluation code with the library under test.

#ifndef SPEECHFIS_TESTS_ORACLE_HPP_
#define SPEECHFIS_TESTS_ORACLE_HPP_

#include <algorithm>
#include <cmath>
#include <vector>

#include "speechfis/fuzzy.hpp"

namespace testoracle {

inline double tri(double x, double a, double b, double c) {
  if (x == b) return 1.0;
  if (x < b) {
    if (b == a || x <= a) return 0.0;
    return (x - a) / (b - a);
  }
  if (c == b || x >= c) return 0.0;
  return (c - x) / (c - b);
}

inline double gau(double x, double sigma, double center) {
  const double t = (x - center) / sigma;
  return std::exp(-0.5 * t * t);
}

inline double eval_mf(const speechfis::MembershipFunction& mf, double x) {
  if (mf.kind == speechfis::MfKind::triangular) {
    return tri(x, mf.params[0], mf.params[1], mf.params[2]);
  }
  return gau(x, mf.params[0], mf.params[1]);
}

inline std::vector<double> strengths(const speechfis::FisDefinition& fis,
                                     const std::vector<double>& inputs) {
  std::vector<std::vector<double>> degrees(fis.inputs.size());
  for (std::size_t i = 0; i < fis.inputs.size(); ++i) {
    const auto& var = fis.inputs[i];
    double x = inputs[i];
    if (x < var.range_lo) x = var.range_lo;
    if (x > var.range_hi) x = var.range_hi;
    for (const auto& mf : var.mfs) degrees[i].push_back(eval_mf(mf, x));
  }
  std::vector<double> out;
  for (const auto& rule : fis.rules) {
    const bool conj = rule.connective == speechfis::Connective::And;
    double acc = conj ? 1.0 : 0.0;
    bool any = false;
    for (std::size_t i = 0; i < rule.antecedent.size(); ++i) {
      const int idx = rule.antecedent[i];
      if (idx == 0) continue;
      any = true;
      const double d = degrees[i][static_cast<std::size_t>(idx) - 1];
      acc = conj ? std::min(acc, d) : std::max(acc, d);
    }
    out.push_back(any ? acc * rule.weight : 0.0);
  }
  return out;
}

// Brute-force discrete centroid over n_points inclusive-endpoint samples of
// the output range. Midpoint fallback when nothing fires.
inline double crisp(const speechfis::FisDefinition& fis, const std::vector<double>& inputs,
                    int n_points) {
  const std::vector<double> s = strengths(fis, inputs);
  const auto& out = fis.outputs.front();
  const double lo = out.range_lo;
  const double hi = out.range_hi;
  double sum_y = 0.0, sum_xy = 0.0;
  for (int i = 0; i < n_points; ++i) {
    const double x = lo + (hi - lo) * i / (n_points - 1);
    double y = 0.0;
    for (std::size_t r = 0; r < fis.rules.size(); ++r) {
      const double m = eval_mf(out.mfs[static_cast<std::size_t>(fis.rules[r].consequent[0]) - 1], x);
      y = std::max(y, std::min(s[r], m));
    }
    sum_y += y;
    sum_xy += x * y;
  }
  if (sum_y <= 0.0) return 0.5 * (lo + hi);
  return sum_xy / sum_y;
}

}  // namespace testoracle

#endif  // SPEECHFIS_TESTS_ORACLE_HPP_
