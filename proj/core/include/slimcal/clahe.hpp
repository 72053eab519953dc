#pragma once

#include "slimcal/image.hpp"

namespace slimcal::calib {

struct ClaheSettings {
  int tiles_x = 8;
  int tiles_y = 8;
  double clip_limit = 2.0;  // multiple of the mean bin height, >= 1

  bool operator==(const ClaheSettings&) const = default;
};

// Contrast-limited adaptive histogram equalization.
//
// The image is split into tiles_x x tiles_y tiles with boundaries at
// floor(i*N/tiles). Each tile's 256-bin histogram is clipped at
// clip_limit * area / 256 (kept in double precision) and the excess is spread
// uniformly over all bins. A tile maps value v to
//
//   round(255 * (cdf(v) - h(v)/2) / area)
//
// i.e. the mid-bin cumulative rule, which leaves a constant tile within one
// gray level of itself at the default clip limit. Pixels are remapped by
// bilinear interpolation between the four nearest tile mappings (clamped at
// the borders). All arithmetic is double precision in a fixed order, so the
// result is deterministic.
Image clahe(const Image& input, const ClaheSettings& settings);

}  // namespace slimcal::calib
