// speechfis/fuzzy.hpp
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

#ifndef SPEECHFIS_FUZZY_HPP_
#define SPEECHFIS_FUZZY_HPP_

#include <string>
#include <vector>

#include "speechfis/membership.hpp"

namespace speechfis {

/// Default number of sample cells used for centroid defuzzification.
inline constexpr int kDefaultResolution = 1001;

/// A named crisp variable with a finite range and an ordered set of
/// membership functions. MF supports may extend beyond the range; crisp
/// values are clamped to [range_lo, range_hi] before fuzzification.
struct FuzzyVariable {
  std::string name;
  double range_lo = 0.0;
  double range_hi = 1.0;
  std::vector<MembershipFunction> mfs;

  bool operator==(const FuzzyVariable&) const = default;
};

enum class Connective { And = 1, Or = 2 };

/// One weighted rule. Antecedent entries are 1-based MF indices per input
/// variable, 0 meaning don't-care; consequent entries are 1-based MF indices
/// per output variable.
struct FuzzyRule {
  std::vector<int> antecedent;
  std::vector<int> consequent;
  double weight = 1.0;
  Connective connective = Connective::And;

  bool operator==(const FuzzyRule&) const = default;
};

/// A complete Mamdani system. The combination operators are fixed:
/// AND = min, OR = max, implication = min, aggregation = max,
/// defuzzification = centroid.
struct FisDefinition {
  std::string name;
  std::vector<FuzzyVariable> inputs;
  std::vector<FuzzyVariable> outputs;
  std::vector<FuzzyRule> rules;

  bool operator==(const FisDefinition&) const = default;
};

/// Full record of a single inference.
struct InferenceTrace {
  std::vector<double> clamped_inputs;
  bool input_clamped = false;
  std::vector<std::vector<double>> degrees;  // [input][mf]
  std::vector<double> rule_strengths;
  std::vector<double> aggregate_x;
  std::vector<double> aggregate_y;
  double crisp = 0.0;
  bool fired = false;
};

double clamp_to_range(const FuzzyVariable& variable, double x);

/// Membership degree of the (range-clamped) crisp value in every MF of the
/// variable, in declaration order.
std::vector<double> fuzzify(const FuzzyVariable& variable, double x);

/// Firing strength of a rule: min (AND) or max (OR) over the degrees of the
/// non-don't-care antecedents, multiplied by the rule weight.
double rule_strength(const FuzzyRule& rule,
                     const std::vector<std::vector<double>>& degrees);

/// Runs the full Mamdani pipeline for one crisp input vector. Each rule's
/// consequent MF is clipped at the rule strength, the clipped curves are
/// combined pointwise by max over a uniform sampling of the output range,
/// and the crisp result is the discrete centroid sum(x*y)/sum(y). The range
/// is sampled at the midpoints of `resolution` equal cells. When the
/// aggregate has zero area the crisp result is the midpoint of the output
/// range and `fired` is false.
///
/// Requires exactly one output variable and inputs.size() == fis.inputs.size();
/// throws std::invalid_argument otherwise.
InferenceTrace infer(const FisDefinition& fis, const std::vector<double>& inputs,
                     int resolution = kDefaultResolution);

}  // namespace speechfis

#endif  // SPEECHFIS_FUZZY_HPP_
