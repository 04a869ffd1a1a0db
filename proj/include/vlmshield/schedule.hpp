// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <vector>

namespace vlmshield {

/// Per-step noise retention factors for the diffusion recursion. alphas[s-1]
/// is the factor applied at step s; every value lies in (0,1]. An empty
/// schedule (S = 0) is the identity.
class NoiseSchedule {
 public:
  NoiseSchedule() = default;
  explicit NoiseSchedule(std::vector<double> alphas);

  int step_count() const { return static_cast<int>(alphas_.size()); }
  const std::vector<double>& alphas() const { return alphas_; }

  /// alpha at 1-based step s.
  double alpha(int s) const { return alphas_[static_cast<std::size_t>(s) - 1]; }

  /// Cumulative product of alphas through 1-based step s; alpha_bar(0) == 1.
  double alpha_bar(int s) const {
    return alpha_bars_[static_cast<std::size_t>(s)];
  }

  bool operator==(const NoiseSchedule& other) const {
    return alphas_ == other.alphas_;
  }

 private:
  std::vector<double> alphas_;
  std::vector<double> alpha_bars_;  // length S+1, alpha_bars_[0] = 1
};

/// S factors linearly interpolated from alpha_max down to alpha_min.
NoiseSchedule linear_schedule(int steps, double alpha_min, double alpha_max);

/// Pipeline default: 50 steps, alpha from 0.9999 down to 0.98.
NoiseSchedule default_schedule();

}  // namespace vlmshield
