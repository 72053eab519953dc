#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <string_view>
#include <vector>

#include "slimcal/calibration.hpp"
#include "slimcal/homography.hpp"
#include "slimcal/image.hpp"
#include "slimcal/metrics.hpp"
#include "slimcal/vec2.hpp"

namespace slimcal::wear {

// Calibration targets the simulator can press into the synthetic gel.
enum class Target { kNone, kSquares, kDome, kBallArray };

std::string_view to_string(Target target);

// --- Scene layout (canonical/gel coordinates, px at px_per_mm) -------------

struct SquaresSpec {
  double size_px = 40.0;     // side length of each corner square
  double amplitude = 60.0;   // added brightness under contact
};

struct DomeSpec {
  Vec2 center{240.0, 180.0};
  double radius_px = 60.0;
  double amplitude = 70.0;   // peak brightness, cosine falloff to the rim
};

struct BallArraySpec {
  Vec2 center{240.0, 180.0};
  double spacing_px = 60.0;
  double radius_px = 18.0;
  double amplitude = 70.0;
};

struct TargetLayout {
  int canonical_width = 480;   // rectified frame size; outer square corners
  int canonical_height = 360;  // sit exactly on this rectangle's corners
  double px_per_mm = 10.0;
  SquaresSpec squares;
  DomeSpec dome;
  BallArraySpec balls;

  double pattern_width_mm() const { return canonical_width / px_per_mm; }
  double pattern_height_mm() const { return canonical_height / px_per_mm; }

  // Row-major 5x5 ball centers in canonical coordinates.
  std::array<Vec2, 25> ball_centers() const;
};

// --- Sensor model -----------------------------------------------------------

// The pristine sensor: a per-pixel illumination field in camera space (the
// sides of the frame are lit more brightly than the center), a perspective
// distortion mapping canonical gel coordinates into the camera frame, and
// the sensor noise level.
struct SensorModel {
  int width = 640;
  int height = 480;
  std::vector<float> illumination;  // width*height, camera space
  calib::Homography distortion;     // canonical -> camera
  double noise_stdev = 2.0;         // gray levels
  TargetLayout layout;
};

// Horizontal vignette: side columns at side_level, center column at
// center_level, quadratic in between.
std::vector<float> vignette_field(int width, int height, double center_level,
                                  double side_level);

// 640x480 model with the default layout, a gentle perspective distortion,
// and the default vignette.
SensorModel default_model();

// --- Wear model --------------------------------------------------------------

enum class WearShape {
  kCenterDistal,    // radial bump at the gel center plus a distal edge band
  kHorizontalBand,  // Gaussian band around a fixed camera row
};

struct WearFieldSpec {
  WearShape shape = WearShape::kCenterDistal;
  // kCenterDistal parameters (fractions of the frame size).
  double center_weight = 0.6;
  double distal_weight = 0.4;
  double center_sigma_frac = 0.30;
  double distal_sigma_frac = 0.15;
  // kHorizontalBand parameters (camera pixels).
  double band_center_y = 240.0;
  double band_sigma = 45.0;
};

// Spatial degradation field, evaluated on demand: multiplier(x, y) =
// 1 - depth * bump(x, y) with the bump shape fixed by the spec.
struct WearField {
  WearFieldSpec spec;
  double depth = 0.0;  // 0 = pristine

  double multiplier(double x, double y, int width, int height) const;
};

// Step change injected at a specific grasp count (e.g. an especially
// aggressive grasp damaging the optical path).
struct WearEvent {
  long grasp = 0;
  double brightness_drop = 0.0;
  double contrast_drop = 0.0;
  double wear_depth_step = 0.0;
  long extra_dead = 0;
};

struct WearState {
  long grasp_count = 0;
  double brightness_factor = 1.0;  // (0, 1]
  double contrast_factor = 1.0;    // (0, 1]
  WearField wear;
  std::vector<long> dead_pixels;   // linear camera-frame indices, arrival order
  std::vector<WearEvent> applied_events;
};

// Linear loss rates per 1000 grasps, with a knee where wear accelerates.
struct DecayRates {
  double per_1k_before = 0.0;
  double per_1k_after = 0.0;
};

struct WearScenario {
  int frame_width = 640;
  int frame_height = 480;
  long total_grasps = 3300;
  long knee_grasp = 1750;
  DecayRates brightness_decay{0.020, 0.130};
  DecayRates contrast_decay{0.010, 0.060};
  DecayRates wear_depth_growth{0.008, 0.040};
  WearFieldSpec wear_shape;
  double dead_rate_per_grasp = 0.05;
  std::vector<WearEvent> events;
  std::uint64_t seed = 1;
};

WearScenario default_scenario();

// Deterministic state at the requested grasp count, Events at or before the
// grasp are applied. Throws Error when to_grasp exceeds the scenario total or
// is negative.
WearState evolve(const WearScenario& scenario, long to_grasp);

// Renders one frame: illumination x brightness x wear, plus the target
// imprint scaled by the contrast factor (looked up through the inverse
// perspective distortion), dead pixels forced to 0, seeded Gaussian noise on
// the live pixels. Bit-identical for identical (model, state, target, seed).
Image render_frame(const SensorModel& model, const WearState& state,
                   Target target, std::uint64_t seed);

// --- Trajectories -------------------------------------------------------------

enum class Pipeline { kRaw, kCalibrated };

struct CalibrationOptions {
  double sigma = calib::kDefaultBackgroundSigma;
  calib::ClaheSettings clahe;
  std::uint8_t detect_threshold = 220;
};

// Builds the manufacture-correction profile from the scenario's grasp-0
// frames (four-square target + non-contact).
calib::CalibrationProfile make_profile(const SensorModel& model,
                                       const WearScenario& scenario,
                                       const CalibrationOptions& options);

// Receives every frame at the pipeline's output stage, keyed by checkpoint
// and target; used by the CLI to dump PGMs.
using FrameSink =
    std::function<void(long grasp, Target, const Image& frame)>;

// Renders all four targets at every checkpoint (0, interval, 2*interval, ...
// up to total_grasps) and assembles the metrics series.
//
// Raw pipeline: metrics on camera frames, ball masks centered through the
// perspective distortion. Calibrated pipeline: per checkpoint the background
// is refreshed from the fresh non-contact frame, illumination and gel metrics
// are measured after brightness correction, and strength metrics after
// contrast restoration — matching what each metric is defined to observe.
// `profile` is required for the calibrated pipeline.
std::vector<metrics::MetricsRecord> run_trajectory(
    const SensorModel& model, const WearScenario& scenario,
    long checkpoint_interval, Pipeline pipeline,
    const calib::CalibrationProfile* profile = nullptr,
    const FrameSink& sink = {});

// Ball-array disk geometry in canonical coordinates (mask radius defaults to
// 4/3 of the ball radius) and its image under the perspective distortion.
metrics::GridGeometry canonical_grid_geometry(const TargetLayout& layout);
metrics::GridGeometry camera_grid_geometry(const SensorModel& model);

// --- Scenario files ------------------------------------------------------------

struct SimulationSetup {
  SensorModel model;
  WearScenario scenario;
  CalibrationOptions calibration;
  long checkpoint_interval = 100;
};

SimulationSetup default_setup();

// JSON scenario file; every field optional with the defaults above. Unknown
// keys are rejected with a diagnostic naming the offending key. Throws
// IoError / ParseError.
SimulationSetup load_simulation_setup(const std::filesystem::path& path);

}  // namespace slimcal::wear
