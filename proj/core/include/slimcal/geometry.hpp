#pragma once

#include <filesystem>
#include <iosfwd>
#include <vector>

namespace slimcal::geom {

// Denominators closer to zero than this are treated as degenerate. Far below
// any physically meaningful angle resolution, far above double noise.
inline constexpr double kDegenerateDenominator = 1e-9;

// Camera viewing constraints: field of view plus the shortest and longest
// in-focus light paths. Their difference is the usable depth of field.
class CameraSpec {
 public:
  // fov in radians, paths in mm. Throws Error unless 0 < fov < pi and
  // 0 < near < far.
  CameraSpec(double fov, double near_path_mm, double far_path_mm);

  double fov() const { return fov_; }
  double near_path() const { return near_; }
  double far_path() const { return far_; }
  double depth_of_field() const { return far_ - near_; }

 private:
  double fov_;
  double near_;
  double far_;
};

// The two free angles of the single-reflection finger: the mirror tilt and
// the camera tilt relative to the base. Both must lie strictly inside
// (0, pi/2); boundary values are degenerate and rejected at construction.
class DesignVariables {
 public:
  DesignVariables(double mirror_angle, double camera_angle);

  double mirror_angle() const { return mirror_angle_; }
  double camera_angle() const { return camera_angle_; }

 private:
  double mirror_angle_;
  double camera_angle_;
};

struct DesignResult {
  double gel_length_mm = 0.0;
  double optical_thickness_mm = 0.0;
  bool feasible = false;
};

// --- Raw-angle formula layer ---------------------------------------------
//
// The closed-form relations over plain radians, with no range restriction
// beyond non-degenerate denominators. The typed API below narrows the domain
// to physically buildable fingers; sweeps, oracles, and algebraic edge cases
// (e.g. camera_angle - 2*mirror_angle exactly pi/2) use this layer directly.

// Gel pad length along the finger cross-section. Sign is preserved: a
// negative value marks a geometrically inverted configuration.
// Throws DegenerateGeometry when sin(camera_angle - 2*mirror_angle) vanishes.
double gel_length_formula(double fov, double mirror_angle, double camera_angle,
                          double depth_of_field_mm);

// Thickness of the optical region for a given gel length.
// Throws DegenerateGeometry when cos(fov/2 - camera_angle + mirror_angle)
// vanishes.
double optical_thickness_formula(double gel_length_mm, double fov,
                                 double mirror_angle, double camera_angle);

// --- Typed API -------------------------------------------------------------

double gel_length(const CameraSpec& cam, const DesignVariables& dv);
double optical_thickness(double gel_length_mm, const CameraSpec& cam,
                         const DesignVariables& dv);

// Composes both relations. Never throws: degenerate denominators yield
// feasible=false with NaN fields, and negative lengths are reported as-is
// (feasible=false) so sweeps can tabulate them.
DesignResult evaluate_design(const CameraSpec& cam, const DesignVariables& dv);

struct DesignPoint {
  DesignVariables variables;
  DesignResult result;
};

// Closed interval in radians.
struct AngleRange {
  double lo = 0.0;
  double hi = 0.0;
};

// Evaluates an inclusive grid_steps x grid_steps grid over the two angle
// ranges and returns the feasible designs with gel_length >= min_gel_length,
// sorted ascending by optical thickness with (mirror, camera) lexicographic
// tie-break. Both ranges must lie strictly inside (0, pi/2) and grid_steps
// must be >= 2. Throws EmptyFeasibleSet when no grid point qualifies.
std::vector<DesignPoint> sweep_design_space(const CameraSpec& cam,
                                            AngleRange mirror_range,
                                            AngleRange camera_range,
                                            int grid_steps,
                                            double min_gel_length_mm);

inline constexpr const char* kSweepCsvHeader =
    "alpha_deg,beta_deg,gel_length_mm,thickness_mm,feasible";

// Emits the sweep as CSV (angles in degrees, full double precision).
// top_n == 0 means all rows.
void write_sweep_csv(std::ostream& out, const std::vector<DesignPoint>& rows,
                     std::size_t top_n = 0);

// --- Config ----------------------------------------------------------------

// Sweep and scene parameters as accepted from the structured-text config.
// Angles in degrees here; the CLI boundary converts to radians.
struct GeometryConfig {
  double fov_deg = 60.0;
  double near_mm = 60.0;
  double far_mm = 100.0;
  double alpha_range_deg[2] = {5.0, 40.0};
  double beta_range_deg[2] = {30.0, 85.0};
  int grid_steps = 50;
  double min_gel_mm = 50.0;
  double n_guide = 1.49;
  double n_ambient = 1.0;
  double parabola_focal_mm = 5.0;
};

// Loads a JSON config; unknown keys are rejected so typos fail loudly.
// Throws IoError / ParseError.
GeometryConfig load_geometry_config(const std::filesystem::path& path);

}  // namespace slimcal::geom
