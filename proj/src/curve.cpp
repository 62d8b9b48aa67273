#include "flopit/curve.hpp"

#include "flopit/error.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace flopit {

HazardCurve::HazardCurve(std::vector<Knot> knots) : knots_(std::move(knots)), slopes_(knots_.size()) {
  fritsch_carlson_derivatives(knots_, slopes_);
}

std::size_t repair_knots(std::span<const CurvePoint> descending, std::vector<Knot>& out) {
  out.clear();
  std::size_t dropped = 0;
  for (const CurvePoint& pt : descending) {
    if (!out.empty() && !(pt.elevation > out.back().elevation && pt.probability < out.back().probability)) {
      ++dropped;
      continue;
    }
    out.push_back({pt.elevation, pt.probability, std::log(pt.probability)});
  }
  return dropped;
}

std::optional<HazardCurve> make_curve(std::span<const CurvePoint> points, std::size_t* dropped) {
  for (const CurvePoint& pt : points) {
    if (!(pt.probability > 0.0 && pt.probability < 1.0)) {
      throw DomainError("exceedance probability must lie in (0, 1), got " + std::to_string(pt.probability));
    }
    if (!std::isfinite(pt.elevation)) throw DomainError("curve elevation must be finite");
  }
  std::vector<CurvePoint> sorted(points.begin(), points.end());
  std::stable_sort(sorted.begin(), sorted.end(),
                   [](const CurvePoint& a, const CurvePoint& b) { return a.probability > b.probability; });

  std::vector<Knot> knots;
  const std::size_t removed = repair_knots(sorted, knots);
  if (dropped) *dropped = removed;
  if (knots.size() < 2) return std::nullopt;
  return HazardCurve(std::move(knots));
}

void fritsch_carlson_derivatives(std::span<const Knot> knots, std::span<double> m) {
  const std::size_t n = knots.size();
  if (n < 2 || m.size() != n) throw DomainError("derivatives need at least two knots and one slot per knot");

  auto h = [&](std::size_t k) { return knots[k + 1].elevation - knots[k].elevation; };
  auto secant = [&](std::size_t k) { return (knots[k + 1].log_p - knots[k].log_p) / h(k); };

  if (n == 2) {
    m[0] = m[1] = secant(0);
    return;
  }

  // Interior: weighted harmonic mean of the adjacent secants.
  for (std::size_t k = 1; k + 1 < n; ++k) {
    const double d0 = secant(k - 1);
    const double d1 = secant(k);
    if (d0 * d1 <= 0.0) {
      m[k] = 0.0;
      continue;
    }
    const double w1 = 2.0 * h(k) + h(k - 1);
    const double w2 = h(k) + 2.0 * h(k - 1);
    m[k] = (w1 + w2) / (w1 / d0 + w2 / d1);
  }

  // Ends: one-sided three-point estimate, kept shape-preserving.
  auto end_slope = [](double h0, double h1, double d0, double d1) {
    const double s = ((2.0 * h0 + h1) * d0 - h0 * d1) / (h0 + h1);
    if (std::signbit(s) != std::signbit(d0) || s == 0.0) return 0.0;
    if (std::signbit(d0) != std::signbit(d1) && std::abs(s) > 3.0 * std::abs(d0)) return 3.0 * d0;
    return s;
  };
  m[0] = end_slope(h(0), h(1), secant(0), secant(1));
  m[n - 1] = end_slope(h(n - 2), h(n - 3), secant(n - 2), secant(n - 3));

  // Fritsch-Carlson limiter: alpha^2 + beta^2 <= 9 on every interval.
  for (std::size_t k = 0; k + 1 < n; ++k) {
    const double d = secant(k);
    if (d == 0.0) {
      m[k] = m[k + 1] = 0.0;
      continue;
    }
    const double alpha = m[k] / d;
    const double beta = m[k + 1] / d;
    const double r = alpha * alpha + beta * beta;
    if (r > 9.0) {
      const double tau = 3.0 / std::sqrt(r);
      m[k] = tau * alpha * d;
      m[k + 1] = tau * beta * d;
    }
  }
}

std::vector<double> fritsch_carlson_derivatives(const HazardCurve& curve) {
  return {curve.slopes().begin(), curve.slopes().end()};
}

ClampedResult evaluate(std::span<const Knot> knots, std::span<const double> slopes, InterpolationMethod method,
                       double z) {
  if (std::isnan(z)) throw DomainError("cannot evaluate a curve at NaN");
  const Knot& first = knots.front();
  const Knot& last = knots.back();
  if (z < first.elevation) return {first.probability, Clamp::High};
  if (z > last.elevation) return {last.probability, Clamp::Low};

  // First knot strictly above z; z lies in [k-1, k) unless it is the last knot.
  const auto above = std::upper_bound(knots.begin(), knots.end(), z,
                                      [](double v, const Knot& kn) { return v < kn.elevation; });
  const auto k = static_cast<std::size_t>(above - knots.begin());
  const Knot& lo = knots[k - 1];
  if (z == lo.elevation) return {lo.probability, Clamp::No};
  const Knot& hi = knots[k];

  const double h = hi.elevation - lo.elevation;
  const double t = (z - lo.elevation) / h;
  double y = 0.0;
  if (method == InterpolationMethod::LogLinear) {
    y = lo.log_p + t * (hi.log_p - lo.log_p);
  } else {
    const double t2 = t * t;
    const double t3 = t2 * t;
    const double h00 = 2.0 * t3 - 3.0 * t2 + 1.0;
    const double h10 = t3 - 2.0 * t2 + t;
    const double h01 = -2.0 * t3 + 3.0 * t2;
    const double h11 = t3 - t2;
    y = h00 * lo.log_p + h10 * h * slopes[k - 1] + h01 * hi.log_p + h11 * h * slopes[k];
  }
  // The monotone interpolant stays between its bracketing knots.
  y = std::clamp(y, hi.log_p, lo.log_p);
  return {std::clamp(std::exp(y), hi.probability, lo.probability), Clamp::No};
}

ClampedResult eval_curve(const HazardCurve& curve, InterpolationMethod method, double z) {
  return evaluate(curve.knots(), curve.slopes(), method, z);
}

} // namespace flopit
