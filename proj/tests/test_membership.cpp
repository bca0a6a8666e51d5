// tests/test_membership.cpp
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

#include <cmath>
#include <random>
#include <stdexcept>

#include "doctest.h"
#include "speechfis/membership.hpp"

using namespace speechfis;

TEST_CASE("trimf apex, slopes and support") {
  CHECK(eval_trimf(50.0, 35.0, 50.0, 66.0) == 1.0);
  CHECK(eval_trimf(45.0, 35.0, 50.0, 66.0) == (45.0 - 35.0) / (50.0 - 35.0));
  CHECK(eval_trimf(45.0, 35.0, 50.0, 66.0) == doctest::Approx(0.6667).epsilon(1e-4));
  CHECK(eval_trimf(34.0, 35.0, 50.0, 66.0) == 0.0);
  CHECK(eval_trimf(35.0, 35.0, 50.0, 66.0) == 0.0);
  CHECK(eval_trimf(66.0, 35.0, 50.0, 66.0) == 0.0);
  CHECK(eval_trimf(58.0, 35.0, 50.0, 66.0) == (66.0 - 58.0) / (66.0 - 50.0));
}

TEST_CASE("trimf degenerate sides act as vertical edges") {
  // a == b: degree 1 exactly at the shared breakpoint, 0 just below it
  CHECK(eval_trimf(5.0, 5.0, 5.0, 10.0) == 1.0);
  CHECK(eval_trimf(4.999, 5.0, 5.0, 10.0) == 0.0);
  CHECK(eval_trimf(7.5, 5.0, 5.0, 10.0) == 0.5);
  // b == c
  CHECK(eval_trimf(10.0, 5.0, 10.0, 10.0) == 1.0);
  CHECK(eval_trimf(10.001, 5.0, 10.0, 10.0) == 0.0);
  CHECK(eval_trimf(7.5, 5.0, 10.0, 10.0) == 0.5);
  // a == b == c
  CHECK(eval_trimf(3.0, 3.0, 3.0, 3.0) == 1.0);
  CHECK(eval_trimf(3.1, 3.0, 3.0, 3.0) == 0.0);
}

TEST_CASE("trimf rejects out-of-order breakpoints") {
  CHECK_THROWS_AS(eval_trimf(0.0, 1.0, 0.0, 2.0), std::invalid_argument);
  CHECK_THROWS_AS(eval_trimf(0.0, 0.0, 3.0, 2.0), std::invalid_argument);
}

TEST_CASE("gaussmf center, one-sigma and formula cross-check") {
  CHECK(eval_gaussmf(100.0, 0.8493, 100.0) == 1.0);
  CHECK(eval_gaussmf(100.8493, 0.8493, 100.0) == doctest::Approx(std::exp(-0.5)).epsilon(1e-9));
  CHECK(eval_gaussmf(100.8493, 0.8493, 100.0) == doctest::Approx(0.6065).epsilon(1e-4));

  // Same curve through two algebraic routes.
  const double direct = eval_gaussmf(97.5, 0.8493, 100.0);
  const double route_a = std::exp(-(2.5 * 2.5) / (2.0 * 0.8493 * 0.8493));
  const double route_b = std::exp(-0.5 * (2.5 / 0.8493) * (2.5 / 0.8493));
  CHECK(direct == doctest::Approx(route_a).epsilon(1e-12));
  CHECK(direct == doctest::Approx(route_b).epsilon(1e-12));
  CHECK(direct == doctest::Approx(0.013136084648618164).epsilon(1e-12));
}

TEST_CASE("gaussmf rejects non-positive sigma") {
  CHECK_THROWS_AS(eval_gaussmf(0.0, 0.0, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(eval_gaussmf(0.0, -1.0, 0.0), std::invalid_argument);
}

TEST_CASE("MembershipFunction::evaluate dispatches and checks arity") {
  MembershipFunction tri{"Clean", MfKind::triangular, {35.0, 50.0, 66.0}};
  CHECK(tri.evaluate(50.0) == 1.0);
  MembershipFunction gau{"Best", MfKind::gaussian, {0.8493, 100.0}};
  CHECK(gau.evaluate(100.0) == 1.0);

  MembershipFunction bad_tri{"x", MfKind::triangular, {1.0, 2.0}};
  CHECK_THROWS_AS(bad_tri.evaluate(0.0), std::invalid_argument);
  MembershipFunction bad_gau{"y", MfKind::gaussian, {1.0, 2.0, 3.0}};
  CHECK_THROWS_AS(bad_gau.evaluate(0.0), std::invalid_argument);
}

TEST_CASE("property: degrees stay in [0,1] for randomized inputs") {
  std::mt19937 rng(20240521);
  std::uniform_real_distribution<double> value(-1e4, 1e4);
  std::uniform_real_distribution<double> sigma(1e-3, 1e3);
  for (int i = 0; i < 1000; ++i) {
    double p[3] = {value(rng), value(rng), value(rng)};
    std::sort(p, p + 3);
    const double x = value(rng);
    const double dt = eval_trimf(x, p[0], p[1], p[2]);
    CHECK(dt >= 0.0);
    CHECK(dt <= 1.0);
    const double dg = eval_gaussmf(x, sigma(rng), value(rng));
    CHECK(dg >= 0.0);
    CHECK(dg <= 1.0);
  }
}

TEST_CASE("property: trimf is symmetric under mirroring about the apex") {
  std::mt19937 rng(7011);
  std::uniform_real_distribution<double> value(-100.0, 100.0);
  for (int i = 0; i < 1000; ++i) {
    double p[3] = {value(rng), value(rng), value(rng)};
    std::sort(p, p + 3);
    const double a = p[0], b = p[1], c = p[2];
    const double x = value(rng);
    const double lhs = eval_trimf(x, a, b, c);
    const double rhs = eval_trimf(2.0 * b - x, 2.0 * b - c, b, 2.0 * b - a);
    CHECK(lhs == doctest::Approx(rhs).epsilon(1e-12));
  }
}
