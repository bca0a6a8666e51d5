// speechfis/membership.hpp
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

#ifndef SPEECHFIS_MEMBERSHIP_HPP_
#define SPEECHFIS_MEMBERSHIP_HPP_

#include <string>
#include <vector>

namespace speechfis {

enum class MfKind { triangular, gaussian };

/// Evaluates a triangular membership curve with breakpoints a <= b <= c.
/// Degenerate sides (a == b or b == c) act as vertical edges: the degree is
/// 1 exactly at x == b and follows the remaining slope elsewhere.
/// Throws std::invalid_argument if the breakpoints are out of order.
double eval_trimf(double x, double a, double b, double c);

/// Evaluates a Gaussian membership curve exp(-(x-center)^2 / (2*sigma^2)).
/// Throws std::invalid_argument if sigma <= 0.
double eval_gaussmf(double x, double sigma, double center);

/// One named membership function of a fuzzy variable.
/// params holds {a, b, c} for triangular and {sigma, center} for gaussian.
struct MembershipFunction {
  std::string name;
  MfKind kind = MfKind::triangular;
  std::vector<double> params;

  double evaluate(double x) const;

  bool operator==(const MembershipFunction&) const = default;
};

const char* mf_kind_name(MfKind kind);

}  // namespace speechfis

#endif  // SPEECHFIS_MEMBERSHIP_HPP_
