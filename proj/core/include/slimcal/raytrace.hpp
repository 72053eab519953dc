#pragma once

#include <optional>
#include <vector>

#include "slimcal/vec2.hpp"

namespace slimcal::geom {

// Planar ray. The finger's optics are derived in its cross-section plane, so
// 2D is sufficient to verify every stated property of the light path.
struct Ray2D {
  Vec2 origin;
  Vec2 direction;  // unit norm within 1e-12

  // Normalizes; throws Error on a zero direction.
  static Ray2D make(Vec2 origin, Vec2 direction);
};

enum class SurfaceKind {
  kMirror,     // painted mirror finish: always specular
  kGuideWall,  // acrylic/air boundary: total internal reflection or escape
  kGel,        // the gel plane: terminates the trace
};

struct Surface {
  Vec2 a;
  Vec2 b;
  SurfaceKind kind = SurfaceKind::kMirror;
};

// Cross-section scene: an optional parabolic reflector (vertex at the origin,
// axis +y, profile y = x^2 / (4*focal)), a point light source, and a set of
// line-segment surfaces.
struct OpticalScene {
  double parabola_focal_mm = 0.0;     // 0 disables the reflector
  double parabola_aperture_mm = 0.0;  // half-width; 0 means 2 * focal
  Vec2 source;                        // put at (0, focal) for parallel output
  double refractive_index_guide = 1.49;   // acrylic (PMMA)
  double refractive_index_ambient = 1.0;  // air
  std::vector<Surface> surfaces;
};

// Reflects a ray off the parabola y = x^2/(4f). The aperture is the arc with
// |x| <= aperture_half_width (defaulting to 2f, the arc up to focus height).
// Rays emitted from the focus leave parallel to the axis. Throws
// NoIntersection when the ray misses the aperture.
Ray2D reflect_parabola(const Ray2D& ray, double focal_length_mm,
                       double aperture_half_width_mm = 0.0);

enum class InteractionKind { kReflected, kRefracted };

struct Interaction {
  InteractionKind kind = InteractionKind::kRefracted;
  Ray2D ray;
};

// Snell interaction at a planar interface with the given unit normal (either
// orientation). Incidence beyond the critical angle asin(n2/n1) reflects
// totally; exactly at or below it refracts. n1 is the medium the ray travels
// in, n2 the far side.
Interaction interface_interaction(const Ray2D& ray, const Vec2& surface_normal,
                                  double n1, double n2);

enum class TraceEnd {
  kGelPlane,   // reached a kGel surface
  kEscaped,    // refracted out of the guide or flew past every surface
  kTruncated,  // bounce budget exhausted
};

struct TracedPath {
  // One entry per straight leg, in order; segments[0] is the input ray.
  std::vector<Ray2D> segments;
  // Junction points between consecutive legs (size = segments.size() - 1).
  std::vector<Vec2> vertices;
  TraceEnd end = TraceEnd::kEscaped;
  // Hit point on the gel plane when end == kGelPlane.
  std::optional<Vec2> end_point;
};

// Marches a ray through the scene: parabola reflection, mirror bounces, total
// internal reflection at guide walls (refraction records the exit leg and
// stops). max_bounces >= 1 caps the number of surface interactions;
// exhausting it is reported in the output, not raised.
TracedPath trace_ray(const OpticalScene& scene, const Ray2D& ray,
                     int max_bounces);

}  // namespace slimcal::geom
