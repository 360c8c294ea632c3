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
//
// Cubic fits in log-rate coordinates, dense 1 kbps sampling of fitted
// curves, and Pareto-envelope construction over sampled curves.

#ifndef KTUNE_CURVEFIT_H_
#define KTUNE_CURVEFIT_H_

#include <array>
#include <span>
#include <vector>

#include "ktune/types.h"

namespace ktune {

// D_OF_LOGR fits distortion as a cubic in log10(bitrate); LOGR_OF_D fits
// log10(bitrate) as a cubic in distortion.
enum class FitOrientation { kDistortionOfLogRate, kLogRateOfDistortion };

// A cubic polynomial valid only on [domain_lo, domain_hi] of its
// independent variable. No extrapolation: evaluation outside the domain
// throws.
struct LogRateFit {
  std::array<double, 4> coeffs{};  // ascending degree
  double domain_lo = 0.0;
  double domain_hi = 0.0;
  FitOrientation orientation = FitOrientation::kDistortionOfLogRate;

  double eval(double u) const;
};

// A curve sampled on an integer kbps grid with unit step.
struct SampledCurve {
  double k = 1.0;
  std::vector<int> rate_grid;
  std::vector<double> distortions;
};

// Per-rate supremum over a set of sampled curves. argmax_k[i] records the
// k attaining best_distortion[i]; ties go to the k closest to 1.0, then
// to the smaller k. The grid covers only rates where at least one curve
// is defined.
struct ParetoEnvelope {
  std::vector<int> rate_grid;
  std::vector<double> best_distortion;
  std::vector<double> argmax_k;
};

// Least-squares cubic through the points transformed per `orientation`.
// With exactly four points the fit interpolates. Throws SingularFitError
// when the independent variable has spread < 1e-9 or the design matrix is
// rank deficient.
LogRateFit fit_curve(std::span<const RDPoint> points, FitOrientation orientation);

// Samples a kDistortionOfLogRate fit on the integer kbps grid covered by
// its domain. Throws EmptyGridError when no integer rate lies inside.
SampledCurve sample_curve(const LogRateFit& fit, double k);

ParetoEnvelope pareto_envelope(std::span<const SampledCurve> curves);

// Views an envelope as a single sampled curve (labelled with `k`) so it
// can re-enter envelope construction or sampled BD-Rate computation.
// Requires a contiguous grid.
SampledCurve envelope_as_curve(const ParetoEnvelope& env, double k);

}  // namespace ktune

#endif  // KTUNE_CURVEFIT_H_
