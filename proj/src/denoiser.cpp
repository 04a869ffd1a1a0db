// SPDX-License-Identifier: Apache-2.0
#include "vlmshield/denoiser.hpp"

#include <cmath>
#include <string>

#include "vlmshield/error.hpp"

namespace vlmshield {

ImageTensor IdentityDenoiser::denoise_step(const ImageTensor& x,
                                           int /*step*/) const {
  return x;
}

OraclePosteriorDenoiser::OraclePosteriorDenoiser(ImageTensor clean,
                                                 NoiseSchedule schedule)
    : clean_(std::move(clean)), schedule_(std::move(schedule)) {}

ImageTensor OraclePosteriorDenoiser::denoise_step(const ImageTensor& x,
                                                  int step) const {
  if (step < 1 || step > schedule_.step_count()) {
    throw ValidationError("denoise step " + std::to_string(step) +
                          " outside schedule of length " +
                          std::to_string(schedule_.step_count()));
  }
  if (!x.same_shape(clean_)) {
    throw ValidationError("oracle denoiser clean image shape mismatch");
  }
  const double alpha = schedule_.alpha(step);
  const double abar = schedule_.alpha_bar(step);
  const double abar_prev = schedule_.alpha_bar(step - 1);
  // No noise has entered the chain yet: the state is a pure rescaling of the
  // clean image, so invert that rescaling directly.
  if (1.0 - abar < 1e-14) {
    ImageTensor out = x;
    const double inv = 1.0 / std::sqrt(alpha);
    for (double& v : out.data()) v *= inv;
    return out;
  }
  const double clean_coeff =
      std::sqrt(abar_prev) * (1.0 - alpha) / (1.0 - abar);
  const double state_coeff =
      std::sqrt(alpha) * (1.0 - abar_prev) / (1.0 - abar);
  ImageTensor out = x;
  for (std::size_t i = 0; i < out.size(); ++i) {
    out.data()[i] = clean_coeff * clean_.data()[i] + state_coeff * x.data()[i];
  }
  return out;
}

ToyLinearDenoiser::ToyLinearDenoiser(NoiseSchedule schedule, double shrink,
                                     MeanMode mode, double constant_mean)
    : schedule_(std::move(schedule)),
      shrink_(shrink),
      mode_(mode),
      constant_mean_(constant_mean) {
  if (!(shrink >= 0.0 && shrink <= 1.0)) {
    throw ValidationError("toy denoiser shrink must lie in [0,1]");
  }
}

ImageTensor ToyLinearDenoiser::denoise_step(const ImageTensor& x,
                                            int step) const {
  if (step < 1 || step > schedule_.step_count()) {
    throw ValidationError("denoise step " + std::to_string(step) +
                          " outside schedule of length " +
                          std::to_string(schedule_.step_count()));
  }
  const double inv_drift = 1.0 / std::sqrt(schedule_.alpha(step));
  ImageTensor lifted = x;
  for (double& v : lifted.data()) v *= inv_drift;

  ImageTensor out(x.height(), x.width(), x.channels());
  if (mode_ == MeanMode::kLocal) {
    const ImageTensor local = box_blur3(lifted);
    for (std::size_t i = 0; i < out.size(); ++i) {
      out.data()[i] =
          (1.0 - shrink_) * lifted.data()[i] + shrink_ * local.data()[i];
    }
  } else {
    for (std::size_t i = 0; i < out.size(); ++i) {
      out.data()[i] =
          (1.0 - shrink_) * lifted.data()[i] + shrink_ * constant_mean_;
    }
  }
  return out;
}

}  // namespace vlmshield
