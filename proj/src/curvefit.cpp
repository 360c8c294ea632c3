// Copyright 2026 The ktune Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "ktune/curvefit.h"

#include <algorithm>
#include <cmath>
#include <limits>

#include <Eigen/Dense>

#include "ktune/errors.h"

namespace ktune {

namespace {

constexpr double kDomainSlack = 1e-9;  // absorbs round-trip noise at the ends

// Snaps near-integer rates before taking ceil/floor so that e.g.
// 10^log10(1000) = 999.9999... still yields 1000.
long snapped_ceil(double x) {
  double r = std::nearbyint(x);
  if (std::abs(x - r) < 1e-6 * std::max(1.0, std::abs(x))) return static_cast<long>(r);
  return static_cast<long>(std::ceil(x));
}

long snapped_floor(double x) {
  double r = std::nearbyint(x);
  if (std::abs(x - r) < 1e-6 * std::max(1.0, std::abs(x))) return static_cast<long>(r);
  return static_cast<long>(std::floor(x));
}

}  // namespace

double LogRateFit::eval(double u) const {
  if (u < domain_lo - kDomainSlack || u > domain_hi + kDomainSlack) {
    throw Error("fit evaluated outside its domain");
  }
  // Horner, ascending coeffs.
  return coeffs[0] + u * (coeffs[1] + u * (coeffs[2] + u * coeffs[3]));
}

LogRateFit fit_curve(std::span<const RDPoint> points, FitOrientation orientation) {
  const int n = static_cast<int>(points.size());
  if (n < kMinCurvePoints) {
    throw TooFewPointsError("cubic fit needs at least 4 points");
  }

  Eigen::VectorXd u(n), y(n);
  for (int i = 0; i < n; ++i) {
    if (orientation == FitOrientation::kDistortionOfLogRate) {
      u(i) = std::log10(points[i].bitrate);
      y(i) = points[i].distortion;
    } else {
      u(i) = points[i].distortion;
      y(i) = std::log10(points[i].bitrate);
    }
  }

  const double lo = u.minCoeff();
  const double hi = u.maxCoeff();
  if (hi - lo < 1e-9) {
    throw SingularFitError("independent variable has no spread");
  }

  Eigen::MatrixXd vand(n, 4);
  for (int i = 0; i < n; ++i) {
    vand(i, 0) = 1.0;
    vand(i, 1) = u(i);
    vand(i, 2) = u(i) * u(i);
    vand(i, 3) = u(i) * u(i) * u(i);
  }

  Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(vand);
  if (qr.rank() < 4) {
    throw SingularFitError("rank-deficient design matrix in cubic fit");
  }
  Eigen::Vector4d c = qr.solve(y);

  LogRateFit fit;
  fit.coeffs = {c(0), c(1), c(2), c(3)};
  fit.domain_lo = lo;
  fit.domain_hi = hi;
  fit.orientation = orientation;
  return fit;
}

SampledCurve sample_curve(const LogRateFit& fit, double k) {
  if (fit.orientation != FitOrientation::kDistortionOfLogRate) {
    throw Error("sample_curve requires a distortion-of-log-rate fit");
  }
  const double r_lo = std::pow(10.0, fit.domain_lo);
  const double r_hi = std::pow(10.0, fit.domain_hi);
  const long first = snapped_ceil(r_lo);
  const long last = snapped_floor(r_hi);
  if (first > last) {
    throw EmptyGridError("no integer kbps rate inside fit domain");
  }

  SampledCurve out;
  out.k = k;
  out.rate_grid.reserve(last - first + 1);
  out.distortions.reserve(last - first + 1);
  for (long r = first; r <= last; ++r) {
    double u = std::log10(static_cast<double>(r));
    u = std::clamp(u, fit.domain_lo, fit.domain_hi);
    out.rate_grid.push_back(static_cast<int>(r));
    out.distortions.push_back(fit.eval(u));
  }
  return out;
}

ParetoEnvelope pareto_envelope(std::span<const SampledCurve> curves) {
  if (curves.empty()) {
    throw NoCurvesError("pareto_envelope over zero curves");
  }
  int grid_lo = std::numeric_limits<int>::max();
  int grid_hi = std::numeric_limits<int>::min();
  for (const SampledCurve& c : curves) {
    if (c.rate_grid.empty() || c.rate_grid.size() != c.distortions.size()) {
      throw Error("malformed sampled curve");
    }
    grid_lo = std::min(grid_lo, c.rate_grid.front());
    grid_hi = std::max(grid_hi, c.rate_grid.back());
  }

  const size_t width = static_cast<size_t>(grid_hi - grid_lo + 1);
  std::vector<double> best(width, -std::numeric_limits<double>::infinity());
  std::vector<double> best_k(width, 0.0);
  std::vector<char> covered(width, 0);

  auto prefer = [](double cand_k, double cur_k) {
    double dc = std::abs(cand_k - 1.0);
    double du = std::abs(cur_k - 1.0);
    if (dc != du) return dc < du;
    return cand_k < cur_k;
  };

  for (const SampledCurve& c : curves) {
    for (size_t i = 0; i < c.rate_grid.size(); ++i) {
      const size_t slot = static_cast<size_t>(c.rate_grid[i] - grid_lo);
      const double d = c.distortions[i];
      if (!covered[slot] || d > best[slot]) {
        best[slot] = d;
        best_k[slot] = c.k;
        covered[slot] = 1;
      } else if (d == best[slot] && prefer(c.k, best_k[slot])) {
        best_k[slot] = c.k;
      }
    }
  }

  ParetoEnvelope env;
  for (size_t i = 0; i < width; ++i) {
    if (!covered[i]) continue;
    env.rate_grid.push_back(grid_lo + static_cast<int>(i));
    env.best_distortion.push_back(best[i]);
    env.argmax_k.push_back(best_k[i]);
  }
  return env;
}

SampledCurve envelope_as_curve(const ParetoEnvelope& env, double k) {
  for (size_t i = 1; i < env.rate_grid.size(); ++i) {
    if (env.rate_grid[i] != env.rate_grid[i - 1] + 1) {
      throw Error("envelope grid is not contiguous");
    }
  }
  SampledCurve out;
  out.k = k;
  out.rate_grid = env.rate_grid;
  out.distortions = env.best_distortion;
  return out;
}

}  // namespace ktune
