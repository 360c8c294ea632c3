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

#include "ktune/types.h"

#include <algorithm>
#include <cmath>
#include <limits>

#include "ktune/errors.h"

namespace ktune {

const char* to_string(MetricKind m) {
  return m == MetricKind::kPsnr ? "PSNR" : "SSIM";
}

const char* to_string(RateControlMode m) {
  return m == RateControlMode::kCrf ? "CRF" : "CBR";
}

const char* to_string(RangeLabel l) {
  switch (l) {
    case RangeLabel::kLow: return "LOW";
    case RangeLabel::kMed: return "MED";
    case RangeLabel::kHigh: return "HIGH";
  }
  return "?";
}

MetricKind metric_from_string(const std::string& s) {
  if (s == "PSNR" || s == "psnr") return MetricKind::kPsnr;
  if (s == "SSIM" || s == "ssim") return MetricKind::kSsim;
  throw ConfigError("unknown metric: " + s);
}

RateControlMode mode_from_string(const std::string& s) {
  if (s == "CRF" || s == "crf") return RateControlMode::kCrf;
  if (s == "CBR" || s == "cbr") return RateControlMode::kCbr;
  throw ConfigError("unknown rate-control mode: " + s);
}

RangeLabel range_label_from_string(const std::string& s) {
  if (s == "LOW") return RangeLabel::kLow;
  if (s == "MED") return RangeLabel::kMed;
  if (s == "HIGH") return RangeLabel::kHigh;
  throw ConfigError("unknown range label: " + s);
}

bool operating_point_valid(const OperatingPoint& op) {
  if (op.mode == RateControlMode::kCrf) return op.value >= 0 && op.value <= 51;
  return op.value > 0;
}

namespace {

std::vector<OperatingPoint> crf_run(int first, int step, int last) {
  std::vector<OperatingPoint> out;
  for (int v = first; v <= last; v += step) {
    out.push_back({RateControlMode::kCrf, v});
  }
  return out;
}

std::vector<OperatingPoint> cbr_run(std::initializer_list<int> kbps) {
  std::vector<OperatingPoint> out;
  for (int v : kbps) out.push_back({RateControlMode::kCbr, v});
  return out;
}

}  // namespace

std::vector<BitrateRange> range_presets(RateControlMode mode) {
  std::vector<BitrateRange> ranges(3);
  ranges[0].label = RangeLabel::kLow;
  ranges[1].label = RangeLabel::kMed;
  ranges[2].label = RangeLabel::kHigh;
  if (mode == RateControlMode::kCrf) {
    ranges[0].points = crf_run(22, 2, 32);
    ranges[1].points = crf_run(27, 2, 37);
    ranges[2].points = crf_run(32, 2, 42);
  } else {
    ranges[0].points = cbr_run({256, 512, 1000, 2000, 4000});
    ranges[1].points = cbr_run({1000, 2000, 4000, 6000, 8000});
    ranges[2].points = cbr_run({4000, 6000, 8000, 10000, 12000});
  }
  return ranges;
}

std::vector<RDPoint> validate_curve(std::vector<RDPoint> raw_points) {
  for (const RDPoint& p : raw_points) {
    if (!(p.bitrate > 0.0) || !std::isfinite(p.bitrate)) {
      throw NonPositiveBitrateError("RD point with non-positive bitrate");
    }
    if (!std::isfinite(p.distortion)) {
      throw Error("RD point with non-finite distortion");
    }
  }
  std::sort(raw_points.begin(), raw_points.end(),
            [](const RDPoint& a, const RDPoint& b) {
              if (a.bitrate != b.bitrate) return a.bitrate < b.bitrate;
              return a.distortion < b.distortion;
            });

  // Collapse duplicate bitrates, keeping the best distortion.
  std::vector<RDPoint> dedup;
  for (const RDPoint& p : raw_points) {
    if (!dedup.empty() && dedup.back().bitrate == p.bitrate) {
      dedup.back().distortion = std::max(dedup.back().distortion, p.distortion);
    } else {
      dedup.push_back(p);
    }
  }

  // Drop points strictly dominated by a cheaper point. The survivors are
  // non-decreasing in distortion.
  std::vector<RDPoint> repaired;
  double running_max = -std::numeric_limits<double>::infinity();
  for (const RDPoint& p : dedup) {
    if (p.distortion < running_max) continue;
    running_max = p.distortion;
    repaired.push_back(p);
  }

  if (repaired.size() < static_cast<size_t>(kMinCurvePoints)) {
    throw TooFewPointsError("curve has fewer than 4 points after repair");
  }
  return repaired;
}

}  // namespace ktune
