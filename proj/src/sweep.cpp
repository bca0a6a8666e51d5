// speechfis/sweep.cpp
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

#include "speechfis/sweep.hpp"

#include <cmath>
#include <ostream>
#include <stdexcept>
#include <thread>
#include <tuple>

#include "json.hpp"

#include "speechfis/fis_config.hpp"

namespace speechfis {

namespace {

std::vector<double> make_axis(const char* name, AxisSpec spec) {
  if (!(spec.step > 0.0)) {
    throw std::invalid_argument(std::string(name) + " axis: step must be > 0");
  }
  if (spec.lo > spec.hi) {
    throw std::invalid_argument(std::string(name) + " axis: lo must be <= hi");
  }
  const auto count = static_cast<long long>(std::floor((spec.hi - spec.lo) / spec.step + 1e-9));
  std::vector<double> axis;
  axis.reserve(static_cast<std::size_t>(count) + 1);
  for (long long k = 0; k <= count; ++k) {
    double v = spec.lo + static_cast<double>(k) * spec.step;
    if (std::abs(v - spec.hi) <= 1e-9 * std::max(1.0, std::abs(spec.hi))) v = spec.hi;
    axis.push_back(v);
  }
  return axis;
}

std::tuple<double, double, double> point_key(const SurfacePoint& p) {
  return {p.env, p.win, p.overlap};
}

}  // namespace

SweepGrid build_grid(AxisSpec env, AxisSpec win, AxisSpec overlap) {
  SweepGrid grid;
  grid.env_axis = make_axis("env", env);
  grid.win_axis = make_axis("win", win);
  grid.overlap_axis = make_axis("overlap", overlap);
  return grid;
}

std::vector<SurfacePoint> evaluate_surface(const FisDefinition& fis, const SweepGrid& grid,
                                           int resolution, int threads) {
  if (fis.inputs.size() != 3) {
    throw std::invalid_argument("evaluate_surface: FIS must have exactly 3 inputs "
                                "(environment, window size, overlap)");
  }
  if (grid.env_axis.empty() || grid.win_axis.empty() || grid.overlap_axis.empty()) {
    throw std::invalid_argument("evaluate_surface: all grid axes must be non-empty");
  }
  if (threads < 0) {
    throw std::invalid_argument("evaluate_surface: thread count must be >= 0");
  }

  const std::size_t n_win = grid.win_axis.size();
  const std::size_t n_overlap = grid.overlap_axis.size();
  const std::size_t total = grid.size();
  std::vector<SurfacePoint> points(total);

  auto eval_range = [&](std::size_t begin, std::size_t end) {
    std::vector<double> inputs(3);
    for (std::size_t flat = begin; flat < end; ++flat) {
      const std::size_t e = flat / (n_win * n_overlap);
      const std::size_t w = (flat / n_overlap) % n_win;
      const std::size_t o = flat % n_overlap;
      inputs[0] = grid.env_axis[e];
      inputs[1] = grid.win_axis[w];
      inputs[2] = grid.overlap_axis[o];
      const InferenceTrace trace = infer(fis, inputs, resolution);
      points[flat] = SurfacePoint{inputs[0], inputs[1], inputs[2], trace.crisp, trace.fired};
    }
  };

  std::size_t n_threads = threads == 0 ? std::thread::hardware_concurrency()
                                       : static_cast<std::size_t>(threads);
  if (n_threads == 0) n_threads = 1;
  n_threads = std::min(n_threads, total);

  if (n_threads <= 1) {
    eval_range(0, total);
  } else {
    std::vector<std::thread> workers;
    workers.reserve(n_threads);
    const std::size_t chunk = (total + n_threads - 1) / n_threads;
    for (std::size_t t = 0; t < n_threads; ++t) {
      const std::size_t begin = t * chunk;
      const std::size_t end = std::min(begin + chunk, total);
      if (begin >= end) break;
      workers.emplace_back(eval_range, begin, end);
    }
    for (std::thread& worker : workers) worker.join();
  }
  return points;
}

SurfacePoint argmax(const std::vector<SurfacePoint>& points) {
  if (points.empty()) {
    throw std::invalid_argument("argmax: empty point list");
  }
  const SurfacePoint* best = &points.front();
  for (const SurfacePoint& p : points) {
    if (p.accuracy > best->accuracy ||
        (p.accuracy == best->accuracy && point_key(p) < point_key(*best))) {
      best = &p;
    }
  }
  return *best;
}

FeasibleRegion feasible_region(const std::vector<SurfacePoint>& points, double threshold) {
  FeasibleRegion region;
  region.threshold = threshold;
  bool any = false;
  for (const SurfacePoint& p : points) {
    if (p.accuracy < threshold) continue;
    if (!any) {
      region.env_lo = region.env_hi = p.env;
      region.win_lo = region.win_hi = p.win;
      region.overlap_lo = region.overlap_hi = p.overlap;
      any = true;
    } else {
      region.env_lo = std::min(region.env_lo, p.env);
      region.env_hi = std::max(region.env_hi, p.env);
      region.win_lo = std::min(region.win_lo, p.win);
      region.win_hi = std::max(region.win_hi, p.win);
      region.overlap_lo = std::min(region.overlap_lo, p.overlap);
      region.overlap_hi = std::max(region.overlap_hi, p.overlap);
    }
  }
  if (!any) {
    throw std::runtime_error("feasible_region: no point reaches threshold " +
                             format_number(threshold));
  }
  return region;
}

void write_surface_csv(std::ostream& out, const std::vector<SurfacePoint>& points) {
  out << "env,win,overlap,accuracy,fired\n";
  for (const SurfacePoint& p : points) {
    out << format_number(p.env) << ',' << format_number(p.win) << ','
        << format_number(p.overlap) << ',' << format_number(p.accuracy) << ','
        << (p.fired ? "true" : "false") << '\n';
  }
}

void write_surface_json(std::ostream& out, const std::vector<SurfacePoint>& points) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const SurfacePoint& p : points) {
    arr.push_back({{"env", p.env},
                   {"win", p.win},
                   {"overlap", p.overlap},
                   {"accuracy", p.accuracy},
                   {"fired", p.fired}});
  }
  out << arr.dump(2) << '\n';
}

}  // namespace speechfis
