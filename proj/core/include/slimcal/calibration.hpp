#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <string>

#include "slimcal/clahe.hpp"
#include "slimcal/homography.hpp"
#include "slimcal/image.hpp"
#include "slimcal/vec2.hpp"

namespace slimcal::calib {

// Axis-aligned pixel rectangle in destination (rectified) coordinates.
struct CropRect {
  int x = 0;
  int y = 0;
  int width = 0;
  int height = 0;

  bool operator==(const CropRect&) const = default;
};

// One detected calibration square.
struct Quad {
  // Extremal points of the connected component, ordered TL, TR, BL, BR.
  Vec2 tl, tr, bl, br;
  Vec2 centroid;
  long area_px = 0;
};

// The four-square calibration pattern as seen by the sensor, plus the known
// physical size of the rectangle spanned by the squares' outer corners.
struct QuadTarget {
  std::array<Quad, 4> squares;  // ordered TL, TR, BL, BR by centroid
  double pattern_width_mm = 0.0;
  double pattern_height_mm = 0.0;

  // TL.tl, TR.tr, BL.bl, BR.br: the pattern's outermost corners, the
  // correspondence anchors for the perspective estimate.
  std::array<Vec2, 4> outer_corners() const;
};

// Components smaller than this are noise, not calibration squares.
inline constexpr long kMinSquareAreaPx = 50;

// Finds the four brightest squares: global threshold (strictly greater),
// 8-connected components, the four largest taken as the squares. Corners are
// the components' extremal pixels along the two diagonal directions.
// Throws TargetNotFound when fewer than four components of at least
// kMinSquareAreaPx survive.
QuadTarget detect_squares(const Image& raw, std::uint8_t threshold);

// Destination points for the pattern's outer corners: the crop rectangle
// corners, ordered TL, TR, BL, BR.
std::array<Vec2, 4> canonical_corners(const CropRect& crop);

// Canonical rectangle for a pattern of the given physical size at a fixed
// metric scale (default 10 px/mm), so rectified frames are comparable across
// sensors.
CropRect canonical_crop(double pattern_width_mm, double pattern_height_mm,
                        double px_per_mm = 10.0);

// Rectifies: output pixel (x, y) is the bilinear sample of src at
// t^-1 * (crop.x + x, crop.y + y). Samples outside the source are 0.
Image warp_and_crop(const Image& src, const Homography& t,
                    const CropRect& crop);

// Strong Gaussian blur isolating the illumination pattern: separable kernel
// of radius ceil(3*sigma), borders handled by edge replication, double
// arithmetic with a single final rounding. sigma must be > 0.
Image estimate_background(const Image& noncontact_warped, double sigma);

inline constexpr double kDefaultBackgroundSigma = 25.0;

// Everything recorded once after manufacture. Immutable thereafter: on-line
// maintenance derives fresh backgrounds but never rewrites the profile.
struct CalibrationProfile {
  Homography transform;              // source -> rectified
  Image background;                  // blurred non-contact reference, crop-sized
  double brightness_reference = 0.0; // mean of the warped non-contact frame
  CropRect crop;
  double gaussian_sigma = kDefaultBackgroundSigma;
  ClaheSettings clahe;
};

// Manufacture correction: detect the four-square target in contact_raw,
// estimate the perspective transform onto `canonical`, rectify the
// non-contact frame, and record the brightness reference (its pre-blur mean)
// and blurred background. Propagates TargetNotFound and
// DegenerateCorrespondence.
CalibrationProfile create_profile(const Image& contact_raw,
                                  const Image& noncontact_raw,
                                  const std::array<Vec2, 4>& canonical,
                                  const CropRect& crop, double sigma,
                                  const ClaheSettings& clahe_settings,
                                  std::uint8_t detect_threshold = 200);

// out = clamp(warped - current_background + brightness_reference) with the
// sum taken in signed arithmetic before rounding and clamping, so nothing
// wraps. Throws DimensionMismatch.
Image correct_brightness(const Image& warped, const Image& current_background,
                         double brightness_reference);

// Rectifies a fresh non-contact frame with the stored transform and re-blurs
// it with the stored sigma. The stored brightness reference is deliberately
// untouched: it anchors lifetime brightness.
Image refresh_background(const CalibrationProfile& profile,
                         const Image& fresh_noncontact_raw);

// Local contrast restoration: blends the CLAHE-equalized image back into the
// input with the per-pixel weight
//
//   w = clamp((brightness_reference - current_background) /
//             brightness_reference, 0, 1)
//
// so regions whose illumination has collapsed receive full equalization and
// nominal regions pass through untouched. Throws DimensionMismatch.
Image enhance_contrast(const Image& brightness_corrected,
                       const Image& current_background,
                       double brightness_reference,
                       const ClaheSettings& settings);

// On-line maintenance for one frame: rectify, brightness-correct against the
// supplied background, then restore local contrast.
Image apply_maintenance(const Image& raw, const CalibrationProfile& profile,
                        const Image& current_background);

// --- Persistence -----------------------------------------------------------

inline constexpr const char* kProfileSchemaTag = "gelslim-profile/1";

// Writes the profile text file (full double precision) plus the background
// PGM next to it, both via write-to-temp + rename. The profile stores
// background_filename as a relative path.
void save_profile(const CalibrationProfile& profile,
                  const std::filesystem::path& profile_path,
                  const std::string& background_filename = "background.pgm");

// Throws IoError / ParseError (including on a schema tag mismatch).
CalibrationProfile load_profile(const std::filesystem::path& profile_path);

}  // namespace slimcal::calib
