#pragma once

// Textbook Fritsch-Carlson monotone cubic, written straight from the method
// description and independently of src/curve.cpp. Test-only oracle.

#include <cmath>
#include <cstddef>
#include <vector>

namespace reference {

struct Pchip {
  std::vector<double> x, y, m;
  bool limiter_fired = false;
};

inline Pchip build_pchip(const std::vector<double>& x, const std::vector<double>& y) {
  Pchip c{x, y, std::vector<double>(x.size(), 0.0)};
  const std::size_t n = x.size();
  std::vector<double> dx(n - 1), delta(n - 1);
  for (std::size_t i = 0; i + 1 < n; ++i) {
    dx[i] = x[i + 1] - x[i];
    delta[i] = (y[i + 1] - y[i]) / dx[i];
  }
  if (n == 2) {
    c.m[0] = c.m[1] = delta[0];
    return c;
  }
  for (std::size_t i = 1; i + 1 < n; ++i) {
    if (delta[i - 1] == 0.0 || delta[i] == 0.0 || (delta[i - 1] > 0.0) != (delta[i] > 0.0)) continue;
    // 3(h0 + h1) / ((2 h1 + h0) / d0 + (h1 + 2 h0) / d1)
    c.m[i] = 3.0 * (dx[i - 1] + dx[i]) /
             ((2.0 * dx[i] + dx[i - 1]) / delta[i - 1] + (dx[i] + 2.0 * dx[i - 1]) / delta[i]);
  }
  auto endpoint = [](double h0, double h1, double d0, double d1) {
    double s = ((2.0 * h0 + h1) * d0 - h0 * d1) / (h0 + h1);
    if (s * d0 <= 0.0) return 0.0;
    if (d0 * d1 < 0.0 && std::fabs(s) > 3.0 * std::fabs(d0)) s = 3.0 * d0;
    return s;
  };
  c.m[0] = endpoint(dx[0], dx[1], delta[0], delta[1]);
  c.m[n - 1] = endpoint(dx[n - 2], dx[n - 3], delta[n - 2], delta[n - 3]);
  for (std::size_t i = 0; i + 1 < n; ++i) {
    const double a = c.m[i] / delta[i];
    const double b = c.m[i + 1] / delta[i];
    const double r = std::sqrt(a * a + b * b);
    if (r > 3.0) {
      c.limiter_fired = true;
      c.m[i] = 3.0 * a / r * delta[i];
      c.m[i + 1] = 3.0 * b / r * delta[i];
    }
  }
  return c;
}

/// Evaluation inside [x0, xn]; cubic in power form about the left knot.
inline double eval_pchip(const Pchip& c, double z) {
  std::size_t i = 0;
  while (i + 2 < c.x.size() && z >= c.x[i + 1]) ++i;
  const double h = c.x[i + 1] - c.x[i];
  const double d = (c.y[i + 1] - c.y[i]) / h;
  const double s = z - c.x[i];
  const double c2 = (3.0 * d - 2.0 * c.m[i] - c.m[i + 1]) / h;
  const double c3 = (c.m[i] + c.m[i + 1] - 2.0 * d) / (h * h);
  return c.y[i] + s * (c.m[i] + s * (c2 + s * c3));
}

} // namespace reference
