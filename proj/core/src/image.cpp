#include "slimcal/image.hpp"

#include <string>

#include "slimcal/error.hpp"

namespace slimcal {

Image::Image(int width, int height, std::uint8_t fill)
    : width_(width), height_(height) {
  if (width < 1 || height < 1) {
    throw Error("image dimensions must be >= 1, got " + std::to_string(width) +
                "x" + std::to_string(height));
  }
  pixels_.assign(static_cast<std::size_t>(width) * height, fill);
}

double image_mean(const Image& img) {
  if (img.empty()) return 0.0;
  std::uint64_t sum = 0;
  for (std::uint8_t v : img.pixels()) sum += v;
  return static_cast<double>(sum) / static_cast<double>(img.size());
}

void require_same_size(const Image& a, const Image& b, const char* what) {
  if (!a.same_size(b)) {
    throw DimensionMismatch(std::string(what) + ": " +
                            std::to_string(a.width()) + "x" +
                            std::to_string(a.height()) + " vs " +
                            std::to_string(b.width()) + "x" +
                            std::to_string(b.height()));
  }
}

}  // namespace slimcal
