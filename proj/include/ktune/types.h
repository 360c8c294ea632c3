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
// Core domain types shared by every other module: metrics, rate-control
// modes, operating-point presets and measured rate/distortion curves.

#ifndef KTUNE_TYPES_H_
#define KTUNE_TYPES_H_

#include <string>
#include <vector>

namespace ktune {

// Distortion/quality metric attached to a curve. Curves with different
// metrics are never compared.
enum class MetricKind { kPsnr, kSsim };

enum class RateControlMode { kCrf, kCbr };

enum class RangeLabel { kLow, kMed, kHigh };

const char* to_string(MetricKind m);
const char* to_string(RateControlMode m);
const char* to_string(RangeLabel l);

MetricKind metric_from_string(const std::string& s);
RateControlMode mode_from_string(const std::string& s);
RangeLabel range_label_from_string(const std::string& s);

// One encoder target: a CRF index in [0, 51] or a CBR target in kbps.
struct OperatingPoint {
  RateControlMode mode = RateControlMode::kCbr;
  int value = 0;

  bool operator==(const OperatingPoint&) const = default;
};

// Checks the mode-specific value bounds.
bool operating_point_valid(const OperatingPoint& op);

// A named run of operating points, strictly increasing in value.
struct BitrateRange {
  RangeLabel label = RangeLabel::kLow;
  std::vector<OperatingPoint> points;
};

struct ClipDescriptor {
  std::string id;
  std::string source_path;
  int frame_count = 0;
  int width = 0;
  int height = 0;
};

// One measured point. The bitrate is the achieved bitrate, never the
// requested one; distortion is dB for PSNR and a value in (0,1] for SSIM.
struct RDPoint {
  double bitrate = 0.0;
  double distortion = 0.0;
};

// A validated set of RD points measured at one k value.
struct RDCurve {
  double k = 1.0;
  RateControlMode mode = RateControlMode::kCbr;
  MetricKind metric = MetricKind::kPsnr;
  RangeLabel range = RangeLabel::kLow;
  std::vector<RDPoint> points;
};

// The three per-mode operating-point presets (LOW, MED, HIGH).
std::vector<BitrateRange> range_presets(RateControlMode mode);

// Sorts by bitrate, collapses duplicate bitrates (keeping the higher
// distortion) and drops points strictly dominated by a cheaper point.
// Throws NonPositiveBitrateError or, if fewer than four points survive,
// TooFewPointsError.
std::vector<RDPoint> validate_curve(std::vector<RDPoint> raw_points);

constexpr int kMinCurvePoints = 4;  // a cubic fit needs four points

}  // namespace ktune

#endif  // KTUNE_TYPES_H_
