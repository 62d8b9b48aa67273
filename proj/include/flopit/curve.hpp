/**
 * @file curve.hpp
 * @brief Per-cell elevation to exceedance-probability curves.
 *
 * A curve is a set of knots (water-surface elevation, probability) with
 * elevation strictly increasing and probability strictly decreasing: a
 * higher flood surface is a rarer flood. Interpolation is carried out on
 * ln p, either piecewise linearly (log-linear) or with a Fritsch-Carlson
 * monotone cubic Hermite spline. Queries outside the knot range are clamped
 * to the end probabilities and flagged.
 */
#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace flopit {

enum class InterpolationMethod { MonotoneCubic, LogLinear };

/// Which side of the knot range a query fell on. High means the query was
/// below the most frequent flood surface, so p was clamped to the highest
/// input probability; Low is the rare-flood end.
enum class Clamp { No = 0, High = 1, Low = 2 };

struct CurvePoint {
  double elevation;
  double probability;
};

struct Knot {
  double elevation;
  double probability;
  double log_p;
};

struct ClampedResult {
  double p;
  Clamp clamped;
};

class HazardCurve {
public:
  std::span<const Knot> knots() const noexcept { return knots_; }
  /// d(ln p)/dz at each knot, from fritsch_carlson_derivatives.
  std::span<const double> slopes() const noexcept { return slopes_; }
  std::size_t size() const noexcept { return knots_.size(); }

private:
  friend std::optional<HazardCurve> make_curve(std::span<const CurvePoint> points, std::size_t* dropped);
  explicit HazardCurve(std::vector<Knot> knots);

  std::vector<Knot> knots_;
  std::vector<double> slopes_;
};

/// Sorts points by descending probability and keeps each point only if its
/// elevation is strictly above (and probability strictly below) the last
/// kept point. Returns nullopt when fewer than two points survive.
/// Throws DomainError for a probability outside (0, 1) or a non-finite
/// elevation. `dropped`, when given, receives the number of removed points.
std::optional<HazardCurve> make_curve(std::span<const CurvePoint> points, std::size_t* dropped = nullptr);

/// Allocation-free form of the monotonicity repair for points already in
/// descending-probability order. Appends survivors to `out` (cleared first)
/// and returns the number of points dropped. No domain checks.
std::size_t repair_knots(std::span<const CurvePoint> descending, std::vector<Knot>& out);

/// Slopes for a monotone piecewise cubic Hermite interpolant of ln p over
/// elevation. `slopes` must have one entry per knot.
void fritsch_carlson_derivatives(std::span<const Knot> knots, std::span<double> slopes);
std::vector<double> fritsch_carlson_derivatives(const HazardCurve& curve);

/// Evaluates at elevation `z`. Knot elevations return the stored knot
/// probability exactly. `slopes` is ignored for LogLinear.
ClampedResult evaluate(std::span<const Knot> knots, std::span<const double> slopes, InterpolationMethod method,
                       double z);

ClampedResult eval_curve(const HazardCurve& curve, InterpolationMethod method, double z);

} // namespace flopit
