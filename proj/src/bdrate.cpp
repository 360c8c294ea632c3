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

#include "ktune/bdrate.h"

#include <algorithm>
#include <cmath>
#include <vector>

#include "ktune/errors.h"

namespace ktune {

namespace {

constexpr int kInversionSamples = 1000;

// Definite integral of a cubic (ascending coeffs) over [lo, hi].
double integrate_cubic(const std::array<double, 4>& c, double lo, double hi) {
  auto anti = [&](double x) {
    return x * (c[0] + x * (c[1] / 2.0 + x * (c[2] / 3.0 + x * c[3] / 4.0)));
  };
  return anti(hi) - anti(lo);
}

double percent_from_avg_log_diff(double avg_diff) {
  return (std::pow(10.0, avg_diff) - 1.0) * 100.0;
}

// log10(rate) at a target distortion, by piecewise-linear interpolation
// over a non-decreasing distortion array.
double invert_at(std::span<const double> log_rates, std::span<const double> dist,
                 double target) {
  auto it = std::lower_bound(dist.begin(), dist.end(), target);
  if (it == dist.begin()) return log_rates.front();
  if (it == dist.end()) return log_rates.back();
  const size_t j = static_cast<size_t>(it - dist.begin());
  const double d0 = dist[j - 1], d1 = dist[j];
  if (d1 == d0) return log_rates[j - 1];
  const double t = (target - d0) / (d1 - d0);
  return log_rates[j - 1] + t * (log_rates[j] - log_rates[j - 1]);
}

}  // namespace

double min_overlap_span(MetricKind metric) {
  return metric == MetricKind::kPsnr ? 0.01 : 0.001;
}

BDRateResult bd_rate_points(std::span<const RDPoint> reference,
                            std::span<const RDPoint> test, MetricKind metric) {
  const LogRateFit fit_ref = fit_curve(reference, FitOrientation::kLogRateOfDistortion);
  const LogRateFit fit_test = fit_curve(test, FitOrientation::kLogRateOfDistortion);

  const double lo = std::max(fit_ref.domain_lo, fit_test.domain_lo);
  const double hi = std::min(fit_ref.domain_hi, fit_test.domain_hi);
  if (hi - lo < min_overlap_span(metric)) {
    throw NoOverlapError("curves share no usable quality range");
  }

  const double integral = integrate_cubic(fit_test.coeffs, lo, hi) -
                          integrate_cubic(fit_ref.coeffs, lo, hi);
  const double avg_diff = integral / (hi - lo);
  return {percent_from_avg_log_diff(avg_diff), lo, hi};
}

BDRateResult bd_rate(const RDCurve& reference, const RDCurve& test) {
  if (reference.metric != test.metric) {
    throw Error("BD-Rate across different metrics");
  }
  return bd_rate_points(reference.points, test.points, reference.metric);
}

BDRateResult bd_rate_sampled(std::span<const int> ref_rates,
                             std::span<const double> ref_dist,
                             std::span<const int> test_rates,
                             std::span<const double> test_dist,
                             MetricKind metric) {
  if (ref_rates.size() != ref_dist.size() || test_rates.size() != test_dist.size() ||
      ref_rates.size() < 2 || test_rates.size() < 2) {
    throw Error("sampled BD-Rate needs two curves of at least 2 samples");
  }

  // Running-max repair, then log10 rates for inversion.
  auto prepare = [](std::span<const int> rates, std::span<const double> dist,
                    std::vector<double>* log_rates, std::vector<double>* mono) {
    log_rates->resize(rates.size());
    mono->resize(dist.size());
    double run = -std::numeric_limits<double>::infinity();
    for (size_t i = 0; i < rates.size(); ++i) {
      (*log_rates)[i] = std::log10(static_cast<double>(rates[i]));
      run = std::max(run, dist[i]);
      (*mono)[i] = run;
    }
  };
  std::vector<double> ref_lr, ref_d, test_lr, test_d;
  prepare(ref_rates, ref_dist, &ref_lr, &ref_d);
  prepare(test_rates, test_dist, &test_lr, &test_d);

  const double lo = std::max(ref_d.front(), test_d.front());
  const double hi = std::min(ref_d.back(), test_d.back());
  if (hi - lo < min_overlap_span(metric)) {
    throw NoOverlapError("sampled curves share no usable quality range");
  }

  // Trapezoid over a uniform distortion grid.
  double acc = 0.0;
  double prev = 0.0;
  for (int i = 0; i < kInversionSamples; ++i) {
    const double d = lo + (hi - lo) * i / (kInversionSamples - 1);
    const double diff = invert_at(test_lr, test_d, d) - invert_at(ref_lr, ref_d, d);
    if (i > 0) acc += 0.5 * (diff + prev);
    prev = diff;
  }
  const double avg_diff = acc / (kInversionSamples - 1);
  return {percent_from_avg_log_diff(avg_diff), lo, hi};
}

BDRateResult bd_rate_sampled(const SampledCurve& reference, const SampledCurve& test,
                             MetricKind metric) {
  return bd_rate_sampled(reference.rate_grid, reference.distortions, test.rate_grid,
                         test.distortions, metric);
}

BDRateResult bd_rate_sampled(const ParetoEnvelope& reference, const ParetoEnvelope& test,
                             MetricKind metric) {
  return bd_rate_sampled(reference.rate_grid, reference.best_distortion, test.rate_grid,
                         test.best_distortion, metric);
}

}  // namespace ktune
