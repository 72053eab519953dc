#pragma once

#include <cstdint>
#include <vector>

namespace slimcal {

// 8-bit grayscale raster, row-major. The universal currency of the pipeline.
class Image {
 public:
  Image() = default;
  // Throws Error if width or height < 1.
  Image(int width, int height, std::uint8_t fill = 0);

  int width() const { return width_; }
  int height() const { return height_; }
  std::size_t size() const { return pixels_.size(); }
  bool empty() const { return pixels_.empty(); }

  std::uint8_t& at(int x, int y) {
    return pixels_[static_cast<std::size_t>(y) * width_ + x];
  }
  std::uint8_t at(int x, int y) const {
    return pixels_[static_cast<std::size_t>(y) * width_ + x];
  }

  std::uint8_t* data() { return pixels_.data(); }
  const std::uint8_t* data() const { return pixels_.data(); }
  std::vector<std::uint8_t>& pixels() { return pixels_; }
  const std::vector<std::uint8_t>& pixels() const { return pixels_; }

  bool same_size(const Image& other) const {
    return width_ == other.width_ && height_ == other.height_;
  }
  bool in_bounds(int x, int y) const {
    return x >= 0 && x < width_ && y >= 0 && y < height_;
  }

  bool operator==(const Image& other) const = default;

 private:
  int width_ = 0;
  int height_ = 0;
  std::vector<std::uint8_t> pixels_;
};

// Population mean over all pixels.
double image_mean(const Image& img);

// Throws DimensionMismatch unless a and b share dimensions; `what` names the
// operation in the message.
void require_same_size(const Image& a, const Image& b, const char* what);

}  // namespace slimcal
