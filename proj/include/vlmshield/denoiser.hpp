// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <memory>

#include "vlmshield/image.hpp"
#include "vlmshield/schedule.hpp"

namespace vlmshield {

/// One reverse-diffusion step. Implementations must preserve shape and be
/// deterministic for fixed inputs; the reverse loop enforces the shape part.
class Denoiser {
 public:
  virtual ~Denoiser() = default;

  /// Produce the step-(s-1) state from the step-s state, 1-based s.
  virtual ImageTensor denoise_step(const ImageTensor& x, int step) const = 0;
};

/// Passes the state through untouched.
class IdentityDenoiser : public Denoiser {
 public:
  ImageTensor denoise_step(const ImageTensor& x, int step) const override;
};

/// Closed-form Gaussian posterior mean conditioned on the true clean image.
/// Test-only reference: running the reverse chain with it reconstructs the
/// clean image it holds.
class OraclePosteriorDenoiser : public Denoiser {
 public:
  OraclePosteriorDenoiser(ImageTensor clean, NoiseSchedule schedule);

  ImageTensor denoise_step(const ImageTensor& x, int step) const override;

 private:
  ImageTensor clean_;
  NoiseSchedule schedule_;
};

/// Linear shrinkage denoiser. Each step first undoes the forward drift
/// (divides by sqrt(alpha_s)) and then shrinks toward a mean estimate:
/// either a configured constant intensity or the local 3x3 neighbourhood
/// mean. The local mode acts as a smoothness prior, so repeated steps wash
/// out high-frequency perturbations while leaving smooth content mostly
/// intact.
class ToyLinearDenoiser : public Denoiser {
 public:
  enum class MeanMode { kConstant, kLocal };

  ToyLinearDenoiser(NoiseSchedule schedule, double shrink,
                    MeanMode mode = MeanMode::kLocal,
                    double constant_mean = 0.5);

  ImageTensor denoise_step(const ImageTensor& x, int step) const override;

 private:
  NoiseSchedule schedule_;
  double shrink_;
  MeanMode mode_;
  double constant_mean_;
};

}  // namespace vlmshield
