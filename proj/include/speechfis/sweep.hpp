// speechfis/sweep.hpp
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

#ifndef SPEECHFIS_SWEEP_HPP_
#define SPEECHFIS_SWEEP_HPP_

#include <iosfwd>
#include <vector>

#include "speechfis/fuzzy.hpp"

namespace speechfis {

struct AxisSpec {
  double lo = 0.0;
  double hi = 0.0;
  double step = 1.0;
};

/// Strictly increasing evaluation axes over (environment SNR dB, window size
/// in samples, frame overlap %).
struct SweepGrid {
  std::vector<double> env_axis;
  std::vector<double> win_axis;
  std::vector<double> overlap_axis;

  std::size_t size() const {
    return env_axis.size() * win_axis.size() * overlap_axis.size();
  }
};

struct SurfacePoint {
  double env = 0.0;
  double win = 0.0;
  double overlap = 0.0;
  double accuracy = 0.0;
  bool fired = false;

  bool operator==(const SurfacePoint&) const = default;
};

/// Axis-aligned bounding ranges of all points at or above an accuracy
/// threshold.
struct FeasibleRegion {
  double env_lo = 0.0, env_hi = 0.0;
  double win_lo = 0.0, win_hi = 0.0;
  double overlap_lo = 0.0, overlap_hi = 0.0;
  double threshold = 0.0;
};

/// Inclusive arithmetic progressions lo, lo+step, ...; hi is included when
/// (hi - lo) is an integer multiple of step to within 1e-9.
SweepGrid build_grid(AxisSpec env, AxisSpec win, AxisSpec overlap);

/// Crisp FIS output over every grid cell, in lexicographic
/// (env, win, overlap) order. `threads` = 0 uses the hardware concurrency;
/// results are identical to the sequential evaluation regardless of thread
/// count. The FIS must have exactly three inputs ordered
/// (environment, window size, overlap).
std::vector<SurfacePoint> evaluate_surface(const FisDefinition& fis,
                                           const SweepGrid& grid,
                                           int resolution = kDefaultResolution,
                                           int threads = 1);

/// Point with maximal accuracy; ties go to the lexicographically smallest
/// (env, win, overlap). Throws std::invalid_argument on an empty list.
SurfacePoint argmax(const std::vector<SurfacePoint>& points);

/// Per-axis min/max over all points with accuracy >= threshold. Throws
/// std::runtime_error when no point qualifies.
FeasibleRegion feasible_region(const std::vector<SurfacePoint>& points,
                               double threshold);

/// CSV with header `env,win,overlap,accuracy,fired`, full-precision values.
void write_surface_csv(std::ostream& out, const std::vector<SurfacePoint>& points);

/// JSON array of objects with the same field names as the CSV columns.
void write_surface_json(std::ostream& out, const std::vector<SurfacePoint>& points);

}  // namespace speechfis

#endif  // SPEECHFIS_SWEEP_HPP_
