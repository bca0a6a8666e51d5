// speechfis/fuzzy.cpp
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

#include "speechfis/fuzzy.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace speechfis {

double clamp_to_range(const FuzzyVariable& variable, double x) {
  return std::clamp(x, variable.range_lo, variable.range_hi);
}

std::vector<double> fuzzify(const FuzzyVariable& variable, double x) {
  const double xc = clamp_to_range(variable, x);
  std::vector<double> degrees;
  degrees.reserve(variable.mfs.size());
  for (const MembershipFunction& mf : variable.mfs) {
    degrees.push_back(mf.evaluate(xc));
  }
  return degrees;
}

double rule_strength(const FuzzyRule& rule,
                     const std::vector<std::vector<double>>& degrees) {
  const bool conj = rule.connective == Connective::And;
  double acc = conj ? 1.0 : 0.0;
  bool any = false;
  for (std::size_t i = 0; i < rule.antecedent.size(); ++i) {
    const int idx = rule.antecedent[i];
    if (idx == 0) continue;
    any = true;
    const double d = degrees[i][static_cast<std::size_t>(idx) - 1];
    acc = conj ? std::min(acc, d) : std::max(acc, d);
  }
  if (!any) return 0.0;
  return acc * rule.weight;
}

InferenceTrace infer(const FisDefinition& fis, const std::vector<double>& inputs,
                     int resolution) {
  if (inputs.size() != fis.inputs.size()) {
    throw std::invalid_argument("infer: expected " + std::to_string(fis.inputs.size()) +
                                " inputs, got " + std::to_string(inputs.size()));
  }
  if (fis.outputs.size() != 1) {
    throw std::invalid_argument("infer: engine requires exactly one output variable");
  }
  if (resolution < 2) {
    throw std::invalid_argument("infer: resolution must be >= 2");
  }

  InferenceTrace trace;
  trace.clamped_inputs.reserve(inputs.size());
  trace.degrees.reserve(inputs.size());
  for (std::size_t i = 0; i < inputs.size(); ++i) {
    const double xc = clamp_to_range(fis.inputs[i], inputs[i]);
    if (xc != inputs[i]) trace.input_clamped = true;
    trace.clamped_inputs.push_back(xc);
    trace.degrees.push_back(fuzzify(fis.inputs[i], xc));
  }

  trace.rule_strengths.reserve(fis.rules.size());
  for (const FuzzyRule& rule : fis.rules) {
    trace.rule_strengths.push_back(rule_strength(rule, trace.degrees));
  }

  const FuzzyVariable& out = fis.outputs.front();
  const double lo = out.range_lo;
  const double hi = out.range_hi;
  const double cell = (hi - lo) / resolution;

  trace.aggregate_x.resize(static_cast<std::size_t>(resolution));
  trace.aggregate_y.resize(static_cast<std::size_t>(resolution));

  // Midpoint sampling keeps the discrete centroid stable in the resolution:
  // endpoint-weighted sums drift O(1/n) when the aggregate is large at a
  // range boundary.
  double sum_y = 0.0;
  double sum_xy = 0.0;
  for (int i = 0; i < resolution; ++i) {
    const double x = lo + (i + 0.5) * cell;
    double y = 0.0;
    for (std::size_t r = 0; r < fis.rules.size(); ++r) {
      const double strength = trace.rule_strengths[r];
      if (strength <= 0.0) continue;
      const int cons = fis.rules[r].consequent.front();
      const double m = out.mfs[static_cast<std::size_t>(cons) - 1].evaluate(x);
      y = std::max(y, std::min(strength, m));
    }
    trace.aggregate_x[static_cast<std::size_t>(i)] = x;
    trace.aggregate_y[static_cast<std::size_t>(i)] = y;
    sum_y += y;
    sum_xy += x * y;
  }

  if (sum_y > 0.0) {
    trace.crisp = sum_xy / sum_y;
    trace.fired = true;
  } else {
    trace.crisp = 0.5 * (lo + hi);
    trace.fired = false;
  }
  return trace;
}

}  // namespace speechfis
