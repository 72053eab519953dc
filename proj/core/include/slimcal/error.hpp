#pragma once

#include <stdexcept>
#include <string>

namespace slimcal {

// Base class for every failure the library reports. The subclasses map 1:1
// onto the failure modes named in the public API contracts, so callers can
// catch precisely what they care about.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// A trigonometric denominator vanished; the requested configuration has no
// finite solution.
class DegenerateGeometry : public Error {
  using Error::Error;
};

// A ray missed the modeled aperture of a reflector.
class NoIntersection : public Error {
  using Error::Error;
};

// A design-space sweep produced no point satisfying the constraints.
class EmptyFeasibleSet : public Error {
  using Error::Error;
};

// The four-square calibration pattern could not be located in a frame.
class TargetNotFound : public Error {
  using Error::Error;
};

// Point correspondences are collinear or otherwise unusable for estimating
// a projective transform.
class DegenerateCorrespondence : public Error {
  using Error::Error;
};

// Two images that must share dimensions do not.
class DimensionMismatch : public Error {
  using Error::Error;
};

// A ball-array cell mask falls outside the frame.
class GridOutOfBounds : public Error {
  using Error::Error;
};

// Filesystem-level failure (missing file, short read, failed rename).
class IoError : public Error {
  using Error::Error;
};

// A config, profile, or image file exists but its contents are malformed.
class ParseError : public Error {
  using Error::Error;
};

}  // namespace slimcal
