// speechfis/framing.cpp
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

#include "speechfis/framing.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace speechfis {

int window_size_samples(double window_len_ms, double fs_hz) {
  if (!(window_len_ms > 0.0)) {
    throw std::invalid_argument("window_size_samples: window length must be > 0 ms");
  }
  if (!(fs_hz > 0.0)) {
    throw std::invalid_argument("window_size_samples: sampling rate must be > 0 Hz");
  }
  return static_cast<int>(std::llround(window_len_ms / 1000.0 * fs_hz));
}

std::vector<double> hamming(int n) {
  if (n < 1) {
    throw std::invalid_argument("hamming: length must be >= 1");
  }
  if (n == 1) return {1.0};
  std::vector<double> w(static_cast<std::size_t>(n));
  const double step = 2.0 * std::numbers::pi / (n - 1);
  // Mirror the upper half so w[k] == w[n-1-k] holds bit for bit.
  for (int k = 0; k <= (n - 1) / 2; ++k) {
    const double v = 0.54 - 0.46 * std::cos(step * k);
    w[static_cast<std::size_t>(k)] = v;
    w[static_cast<std::size_t>(n - 1 - k)] = v;
  }
  return w;
}

FramePlan frame_plan(std::size_t length, int window, double overlap_pct) {
  if (window < 1) {
    throw std::invalid_argument("frame_plan: window must be >= 1 sample");
  }
  if (!(overlap_pct >= 0.0 && overlap_pct < 100.0)) {
    throw std::invalid_argument("frame_plan: overlap must be in [0, 100) percent");
  }
  FramePlan plan;
  plan.window = window;
  plan.overlap_pct = overlap_pct;
  const long long hop = std::llround(window * (1.0 - overlap_pct / 100.0));
  plan.hop = static_cast<int>(hop < 1 ? 1 : hop);
  if (length >= static_cast<std::size_t>(window)) {
    plan.frame_count = (length - static_cast<std::size_t>(window)) /
                           static_cast<std::size_t>(plan.hop) +
                       1;
  } else {
    plan.frame_count = 0;
  }
  return plan;
}

PaperFrameSize frame_size_paper(double sample_length, int window, double overlap_pct) {
  if (window < 1) {
    throw std::invalid_argument("frame_size_paper: window must be >= 1 sample");
  }
  return PaperFrameSize{sample_length / window * (overlap_pct / 100.0)};
}

std::vector<std::vector<double>> segment(std::span<const double> signal,
                                         const FramePlan& plan,
                                         std::span<const double> window_fn) {
  if (window_fn.size() != static_cast<std::size_t>(plan.window)) {
    throw std::invalid_argument("segment: window function length does not match plan window");
  }
  if (plan.frame_count > 0) {
    const std::size_t needed = (plan.frame_count - 1) * static_cast<std::size_t>(plan.hop) +
                               static_cast<std::size_t>(plan.window);
    if (signal.size() < needed) {
      throw std::invalid_argument("segment: signal shorter than required by plan");
    }
  }
  std::vector<std::vector<double>> frames(plan.frame_count);
  for (std::size_t f = 0; f < plan.frame_count; ++f) {
    const std::size_t start = f * static_cast<std::size_t>(plan.hop);
    frames[f].resize(static_cast<std::size_t>(plan.window));
    for (std::size_t k = 0; k < static_cast<std::size_t>(plan.window); ++k) {
      frames[f][k] = signal[start + k] * window_fn[k];
    }
  }
  return frames;
}

double snr_db(std::span<const double> signal, std::span<const double> noise) {
  if (signal.size() != noise.size()) {
    throw std::invalid_argument("snr_db: signal and noise lengths differ");
  }
  double p_signal = 0.0;
  double p_noise = 0.0;
  for (std::size_t i = 0; i < signal.size(); ++i) {
    p_signal += signal[i] * signal[i];
    p_noise += noise[i] * noise[i];
  }
  if (p_noise == 0.0) {
    throw std::domain_error("snr_db: noise power is zero, SNR undefined");
  }
  if (p_signal == 0.0) {
    return -std::numeric_limits<double>::infinity();
  }
  return 10.0 * std::log10(p_signal / p_noise);
}

double word_accuracy(long long recognized, long long tested) {
  if (tested < 1) {
    throw std::invalid_argument("word_accuracy: tested count must be >= 1");
  }
  if (recognized < 0 || recognized > tested) {
    throw std::invalid_argument("word_accuracy: recognized must be in [0, tested]");
  }
  return 100.0 * static_cast<double>(recognized) / static_cast<double>(tested);
}

}  // namespace speechfis
