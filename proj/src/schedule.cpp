// SPDX-License-Identifier: Apache-2.0
#include "vlmshield/schedule.hpp"

#include <string>

#include "vlmshield/error.hpp"

namespace vlmshield {

NoiseSchedule::NoiseSchedule(std::vector<double> alphas)
    : alphas_(std::move(alphas)) {
  alpha_bars_.reserve(alphas_.size() + 1);
  alpha_bars_.push_back(1.0);
  for (std::size_t i = 0; i < alphas_.size(); ++i) {
    const double a = alphas_[i];
    if (!(a > 0.0 && a <= 1.0)) {
      throw ValidationError("schedule alpha at step " + std::to_string(i + 1) +
                            " must lie in (0,1], got " + std::to_string(a));
    }
    alpha_bars_.push_back(alpha_bars_.back() * a);
  }
}

NoiseSchedule linear_schedule(int steps, double alpha_min, double alpha_max) {
  if (steps < 0) {
    throw ValidationError("schedule step count must be >= 0");
  }
  if (!(alpha_min > 0.0) || !(alpha_min <= alpha_max) || !(alpha_max <= 1.0)) {
    throw ValidationError("schedule bounds must satisfy 0 < min <= max <= 1");
  }
  std::vector<double> alphas;
  alphas.reserve(static_cast<std::size_t>(steps));
  for (int s = 0; s < steps; ++s) {
    const double t =
        steps == 1 ? 0.0 : static_cast<double>(s) / (steps - 1);
    alphas.push_back(alpha_max + t * (alpha_min - alpha_max));
  }
  return NoiseSchedule(std::move(alphas));
}

NoiseSchedule default_schedule() { return linear_schedule(50, 0.98, 0.9999); }

}  // namespace vlmshield
