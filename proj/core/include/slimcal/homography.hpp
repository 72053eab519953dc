#pragma once

#include <array>

#include "slimcal/vec2.hpp"

namespace slimcal::calib {

// 3x3 projective transform, row-major, normalized so m[8] == 1.
class Homography {
 public:
  // Identity by default.
  Homography();

  // Normalizes the last entry to 1 and verifies invertibility
  // (|det| > 1e-12). Throws DegenerateCorrespondence otherwise.
  static Homography from_row_major(const std::array<double, 9>& m);

  static Homography identity() { return Homography(); }

  Vec2 apply(const Vec2& p) const;
  Homography inverse() const;
  double determinant() const;

  const std::array<double, 9>& coeffs() const { return m_; }

  bool operator==(const Homography&) const = default;

 private:
  std::array<double, 9> m_;
};

// Exact four-point estimate: solves the 8x8 linear system mapping src[i] to
// dst[i]. Point order must correspond. Throws DegenerateCorrespondence when
// any three of either quad are collinear or the system is singular.
Homography estimate_homography(const std::array<Vec2, 4>& src,
                               const std::array<Vec2, 4>& dst);

}  // namespace slimcal::calib
