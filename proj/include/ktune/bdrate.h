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
// Bjontegaard delta-rate between two RD curves: average log10-bitrate
// difference at equal quality over the overlapping quality range,
// reported as a percent bitrate change (negative = savings).

#ifndef KTUNE_BDRATE_H_
#define KTUNE_BDRATE_H_

#include <span>

#include "ktune/curvefit.h"
#include "ktune/types.h"

namespace ktune {

struct BDRateResult {
  double percent = 0.0;  // negative means the test curve saves bitrate
  double overlap_lo = 0.0;
  double overlap_hi = 0.0;
};

// Closed-form variant: cubic log10(rate)-of-distortion fits on both
// curves, integrated exactly over the shared quality range. Throws
// NoOverlapError when the shared range is below the per-metric floor
// (0.01 dB for PSNR, 0.001 for SSIM).
BDRateResult bd_rate(const RDCurve& reference, const RDCurve& test);

// Same computation on raw validated point sets (used where no range
// label applies, e.g. full-span curves).
BDRateResult bd_rate_points(std::span<const RDPoint> reference,
                            std::span<const RDPoint> test, MetricKind metric);

// Sampled variant: inverts two dense curves to log10(rate) by piecewise
// linear interpolation over a uniform 1,000-sample distortion grid
// spanning the overlap and trapezoid-integrates the difference.
// Non-monotone samples are repaired by running max before inversion.
BDRateResult bd_rate_sampled(const SampledCurve& reference,
                             const SampledCurve& test, MetricKind metric);
BDRateResult bd_rate_sampled(const ParetoEnvelope& reference,
                             const ParetoEnvelope& test, MetricKind metric);
BDRateResult bd_rate_sampled(std::span<const int> ref_rates,
                             std::span<const double> ref_dist,
                             std::span<const int> test_rates,
                             std::span<const double> test_dist,
                             MetricKind metric);

// Minimum usable quality span before NoOverlap is raised.
double min_overlap_span(MetricKind metric);

}  // namespace ktune

#endif  // KTUNE_BDRATE_H_
