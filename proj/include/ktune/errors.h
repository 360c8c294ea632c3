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

#ifndef KTUNE_ERRORS_H_
#define KTUNE_ERRORS_H_

#include <stdexcept>
#include <string>

namespace ktune {

// Base class for all domain errors raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Curve validation left fewer than the minimum number of points.
class TooFewPointsError : public Error {
 public:
  using Error::Error;
};

// A measured point carried a bitrate <= 0.
class NonPositiveBitrateError : public Error {
 public:
  using Error::Error;
};

// The independent variable of a fit is rank deficient or has no spread.
class SingularFitError : public Error {
 public:
  using Error::Error;
};

// A fit domain holds no integer-kbps grid point.
class EmptyGridError : public Error {
 public:
  using Error::Error;
};

// Envelope construction was asked to combine zero curves.
class NoCurvesError : public Error {
 public:
  using Error::Error;
};

// Two curves share no usable quality range.
class NoOverlapError : public Error {
 public:
  using Error::Error;
};

// Optimizer search bounds are not an interval.
class InvalidBoundsError : public Error {
 public:
  using Error::Error;
};

// Optimizer evaluation budget below the three seed probes.
class BudgetZeroError : public Error {
 public:
  using Error::Error;
};

// QP outside the codec's [0, 51] range.
class QpOutOfRangeError : public Error {
 public:
  using Error::Error;
};

// External encoder process exited nonzero or timed out.
class ProcessFailedError : public Error {
 public:
  using Error::Error;
};

// Stats extraction could not locate a required field.
class StatsParseError : public Error {
 public:
  using Error::Error;
};

// A k != 1 request against a command template without a {k} placeholder.
class KUnsupportedError : public Error {
 public:
  using Error::Error;
};

// Aggregation over an empty result set.
class EmptyCorpusError : public Error {
 public:
  using Error::Error;
};

// Bad run configuration (paths, flags, manifests).
class ConfigError : public Error {
 public:
  using Error::Error;
};

}  // namespace ktune

#endif  // KTUNE_ERRORS_H_
