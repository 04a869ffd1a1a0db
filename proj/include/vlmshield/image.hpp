// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <vector>

namespace vlmshield {

/// Dense H x W x C image of doubles, row-major with channels innermost.
/// Values are normalized intensities; purification math runs on unbounded
/// reals, so the container itself only enforces finiteness. Public pipeline
/// outputs are clamped back into [0,1] by the operations that promise it.
class ImageTensor {
 public:
  ImageTensor() = default;
  ImageTensor(int height, int width, int channels);

  static ImageTensor from_data(int height, int width, int channels,
                               std::vector<double> data);

  int height() const { return height_; }
  int width() const { return width_; }
  int channels() const { return channels_; }
  std::size_t size() const { return data_.size(); }

  double& at(int y, int x, int c) {
    return data_[(static_cast<std::size_t>(y) * width_ + x) * channels_ + c];
  }
  double at(int y, int x, int c) const {
    return data_[(static_cast<std::size_t>(y) * width_ + x) * channels_ + c];
  }

  std::vector<double>& data() { return data_; }
  const std::vector<double>& data() const { return data_; }

  bool same_shape(const ImageTensor& other) const {
    return height_ == other.height_ && width_ == other.width_ &&
           channels_ == other.channels_;
  }

  bool operator==(const ImageTensor& other) const = default;

 private:
  int height_ = 0;
  int width_ = 0;
  int channels_ = 0;
  std::vector<double> data_;
};

/// Copy with every element clamped into [0,1].
ImageTensor clamp01(const ImageTensor& image);

/// Euclidean distance between two same-shape images.
double l2_distance(const ImageTensor& a, const ImageTensor& b);

/// Mean squared 4-neighbour Laplacian response over interior pixels and all
/// channels. Zero when the image has no interior (height or width < 3).
/// This is the high-frequency energy statistic the simulated target gates on.
double laplacian_energy(const ImageTensor& image);

/// 3x3 box blur with replicate borders, per channel.
ImageTensor box_blur3(const ImageTensor& image);

}  // namespace vlmshield
