// speechfis/membership.cpp
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

#include "speechfis/membership.hpp"

#include <cmath>
#include <stdexcept>

namespace speechfis {

double eval_trimf(double x, double a, double b, double c) {
  if (!(a <= b && b <= c)) {
    throw std::invalid_argument("trimf: breakpoints must satisfy a <= b <= c");
  }
  if (x == b) return 1.0;
  if (x <= a || x >= c) return 0.0;
  if (x < b) return (x - a) / (b - a);
  return (c - x) / (c - b);
}

double eval_gaussmf(double x, double sigma, double center) {
  if (!(sigma > 0.0)) {
    throw std::invalid_argument("gaussmf: sigma must be > 0");
  }
  const double d = x - center;
  return std::exp(-(d * d) / (2.0 * sigma * sigma));
}

double MembershipFunction::evaluate(double x) const {
  switch (kind) {
    case MfKind::triangular:
      if (params.size() != 3) {
        throw std::invalid_argument("trimf '" + name + "': expected 3 parameters");
      }
      return eval_trimf(x, params[0], params[1], params[2]);
    case MfKind::gaussian:
      if (params.size() != 2) {
        throw std::invalid_argument("gaussmf '" + name + "': expected 2 parameters");
      }
      return eval_gaussmf(x, params[0], params[1]);
  }
  throw std::invalid_argument("unknown MF kind");
}

const char* mf_kind_name(MfKind kind) {
  return kind == MfKind::triangular ? "trimf" : "gaussmf";
}

}  // namespace speechfis
