// SPDX-License-Identifier: Apache-2.0
#include "vlmshield/image.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "vlmshield/error.hpp"

namespace vlmshield {

ImageTensor::ImageTensor(int height, int width, int channels)
    : height_(height), width_(width), channels_(channels) {
  if (height < 0 || width < 0 || channels < 0) {
    throw ValidationError("image dimensions must be non-negative");
  }
  data_.assign(static_cast<std::size_t>(height) * width * channels, 0.0);
}

ImageTensor ImageTensor::from_data(int height, int width, int channels,
                                   std::vector<double> data) {
  ImageTensor img(height, width, channels);
  if (data.size() != img.data_.size()) {
    throw ValidationError("image data size does not match " +
                          std::to_string(height) + "x" +
                          std::to_string(width) + "x" +
                          std::to_string(channels));
  }
  for (double v : data) {
    if (!std::isfinite(v)) {
      throw ValidationError("image data contains a non-finite value");
    }
  }
  img.data_ = std::move(data);
  return img;
}

ImageTensor clamp01(const ImageTensor& image) {
  ImageTensor out = image;
  for (double& v : out.data()) v = std::clamp(v, 0.0, 1.0);
  return out;
}

double l2_distance(const ImageTensor& a, const ImageTensor& b) {
  if (!a.same_shape(b)) {
    throw ValidationError("l2_distance requires same-shape images");
  }
  double acc = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double d = a.data()[i] - b.data()[i];
    acc += d * d;
  }
  return std::sqrt(acc);
}

double laplacian_energy(const ImageTensor& image) {
  const int h = image.height();
  const int w = image.width();
  const int c = image.channels();
  if (h < 3 || w < 3 || c == 0) return 0.0;
  double acc = 0.0;
  std::size_t count = 0;
  for (int y = 1; y + 1 < h; ++y) {
    for (int x = 1; x + 1 < w; ++x) {
      for (int ch = 0; ch < c; ++ch) {
        const double response = 4.0 * image.at(y, x, ch) -
                                image.at(y - 1, x, ch) -
                                image.at(y + 1, x, ch) -
                                image.at(y, x - 1, ch) -
                                image.at(y, x + 1, ch);
        acc += response * response;
        ++count;
      }
    }
  }
  return acc / static_cast<double>(count);
}

ImageTensor box_blur3(const ImageTensor& image) {
  const int h = image.height();
  const int w = image.width();
  const int c = image.channels();
  ImageTensor out(h, w, c);
  auto clampi = [](int v, int lo, int hi) { return std::clamp(v, lo, hi); };
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) {
      for (int ch = 0; ch < c; ++ch) {
        double acc = 0.0;
        for (int dy = -1; dy <= 1; ++dy) {
          for (int dx = -1; dx <= 1; ++dx) {
            acc += image.at(clampi(y + dy, 0, h - 1), clampi(x + dx, 0, w - 1),
                            ch);
          }
        }
        out.at(y, x, ch) = acc / 9.0;
      }
    }
  }
  return out;
}

}  // namespace vlmshield
