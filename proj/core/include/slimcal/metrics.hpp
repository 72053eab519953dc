#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "slimcal/image.hpp"
#include "slimcal/vec2.hpp"

namespace slimcal::metrics {

// Metric I: mean and spatial standard deviation of a non-contact frame.
struct LightStats {
  double mean = 0.0;
  double stdev = 0.0;
};

// Metric II: dynamic-range score of a contact region.
struct SignalStrength {
  double value = 0.0;
  double region_mean = 0.0;
  double region_stdev = 0.0;
  long region_pixel_count = 0;
};

// Metric III: per-cell strengths over the 5x5 ball array plus their spread.
struct StrengthGrid {
  std::array<SignalStrength, 25> cells;  // row-major in gel coordinates
  double dispersion = 0.0;               // population stdev of the 25 values
};

// Metric IV: dead-pixel accounting.
struct GelCondition {
  long dead_pixel_count = 0;
  long total_pixels = 0;
  double percentage = 0.0;  // 100 * dead / total
};

enum class PipelineStage { kRaw, kBrightnessCorrected, kFullyCalibrated };

std::string_view to_string(PipelineStage stage);
// Throws ParseError on an unknown name.
PipelineStage stage_from_string(std::string_view name);

struct MetricsRecord {
  long grasp_count = 0;
  PipelineStage stage = PipelineStage::kRaw;
  LightStats light;
  SignalStrength dome_strength;
  StrengthGrid grid;
  GelCondition gel;
};

// Pixel membership mask for a contact region.
struct Mask {
  int width = 0;
  int height = 0;
  std::vector<std::uint8_t> on;  // 0/1 per pixel, row-major
  long count = 0;

  bool empty() const { return count == 0; }
};

// Fixed disk masks for the 25 expected ball imprints.
struct GridGeometry {
  std::array<Vec2, 25> centers;  // row-major
  double radius = 24.0;

  // Regular 5x5 lattice around `center` with the given pitch.
  static GridGeometry regular(const Vec2& center, double spacing,
                              double radius);
};

// Strength-score parameters: the stdev gate and normalizer.
inline constexpr double kDefaultStdevGate = 5.0;        // m
inline constexpr double kDefaultStdevNormalizer = 30.0; // n

// Contact segmentation defaults (background-difference threshold in gray
// levels and minimum component area in pixels).
inline constexpr int kDefaultContactDelta = 12;
inline constexpr long kDefaultContactMinArea = 200;

// Pixels at or below this in a calibrated non-contact frame count as dead.
inline constexpr std::uint8_t kDefaultDeadThreshold = 10;

// The strength formula on region statistics: 0 unless stdev exceeds the gate
// strictly, otherwise 2*mean/255 + stdev/normalizer.
double signal_value(double mean, double stdev,
                    double stdev_gate = kDefaultStdevGate,
                    double stdev_normalizer = kDefaultStdevNormalizer);

// Population mean / stdev over all pixels.
LightStats light_stats(const Image& noncontact);

// Largest 8-connected component of |frame - background| > delta_threshold,
// provided it reaches min_area; empty mask otherwise. Throws
// DimensionMismatch.
Mask segment_contact(const Image& frame, const Image& background,
                     int delta_threshold = kDefaultContactDelta,
                     long min_area = kDefaultContactMinArea);

// Region statistics over the masked pixels. An empty mask yields a zero
// record (value 0, zero counts).
SignalStrength signal_strength(const Image& frame, const Mask& mask,
                               double stdev_gate = kDefaultStdevGate,
                               double stdev_normalizer = kDefaultStdevNormalizer);

// Per-cell strength over fixed disk masks. Throws GridOutOfBounds when any
// disk leaves the frame.
StrengthGrid strength_grid(const Image& frame, const GridGeometry& geometry,
                           double stdev_gate = kDefaultStdevGate,
                           double stdev_normalizer = kDefaultStdevNormalizer);

// Dead-pixel count: pixels with intensity <= dead_threshold. The percentage
// is the exact ratio of integer counts.
GelCondition gel_condition(const Image& noncontact_calibrated,
                           std::uint8_t dead_threshold = kDefaultDeadThreshold);

struct MetricParams {
  double stdev_gate = kDefaultStdevGate;
  double stdev_normalizer = kDefaultStdevNormalizer;
  int contact_delta = kDefaultContactDelta;
  long contact_min_area = kDefaultContactMinArea;
  std::uint8_t dead_threshold = kDefaultDeadThreshold;
  GridGeometry grid;
};

// Assembles one checkpoint from frames already processed to the declared
// stage. The non-contact frame doubles as the segmentation background for
// the dome frame. The stage is caller-declared metadata.
MetricsRecord record_checkpoint(long grasp_count, const Image& noncontact,
                                const Image& dome, const Image& ball_array,
                                const MetricParams& params,
                                PipelineStage stage);

// --- Series persistence ------------------------------------------------------

inline constexpr const char* kMetricsCsvHeader =
    "grasp_count,stage,light_mean,light_std,dome_S,dome_mu,dome_sigma,"
    "grid_dispersion,dead_count,dead_pct";

std::string metrics_csv_row(const MetricsRecord& record);

// Appends one row, creating the file with the header when absent. The row is
// written in a single call so a crash cannot leave a torn record.
void append_metrics_csv(const std::filesystem::path& path,
                        const MetricsRecord& record);

// Reads a series back. Grid cells are not persisted, so only the dispersion
// field of `grid` is populated. Throws IoError / ParseError.
std::vector<MetricsRecord> read_metrics_series(
    const std::filesystem::path& path);

// Column names accepted by metric_series.
std::vector<std::string> metric_series_names();

// (grasp_count, value) pairs for one named metric column, for external
// plotting. Throws ParseError on an unknown name.
std::vector<std::pair<long, double>> metric_series(
    const std::vector<MetricsRecord>& records, std::string_view metric_name);

}  // namespace slimcal::metrics
