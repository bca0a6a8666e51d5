// speechfis/framing.hpp
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

#ifndef SPEECHFIS_FRAMING_HPP_
#define SPEECHFIS_FRAMING_HPP_

#include <cstddef>
#include <span>
#include <vector>

namespace speechfis {

struct SignalSpec {
  int sampling_rate_hz = 8000;
  std::size_t length_samples = 0;
};

/// Derived framing geometry. hop = round(window * (1 - overlap_pct/100)),
/// clamped to at least 1; frame_count drops any trailing partial frame.
struct FramePlan {
  int window = 0;
  double overlap_pct = 0.0;
  int hop = 0;
  std::size_t frame_count = 0;
};

/// Frame-size figure computed as
/// (sample_length / window) * (overlap_pct / 100).
struct PaperFrameSize {
  double value = 0.0;
};

/// round(window_len_ms / 1000 * fs_hz). Both arguments must be positive.
int window_size_samples(double window_len_ms, double fs_hz);

/// Hamming coefficients w[k] = 0.54 - 0.46*cos(2*pi*k/(n-1)), symmetric by
/// construction; n == 1 yields {1.0}.
std::vector<double> hamming(int n);

FramePlan frame_plan(std::size_t length, int window, double overlap_pct);

PaperFrameSize frame_size_paper(double sample_length, int window, double overlap_pct);

/// Slices the signal into plan.frame_count windows of plan.window samples at
/// stride plan.hop, each multiplied elementwise by window_fn.
std::vector<std::vector<double>> segment(std::span<const double> signal,
                                         const FramePlan& plan,
                                         std::span<const double> window_fn);

/// 10*log10(sum(signal^2) / sum(noise^2)). All-zero signal gives -infinity;
/// all-zero noise throws std::domain_error.
double snr_db(std::span<const double> signal, std::span<const double> noise);

/// 100 * recognized / tested.
double word_accuracy(long long recognized, long long tested);

}  // namespace speechfis

#endif  // SPEECHFIS_FRAMING_HPP_
