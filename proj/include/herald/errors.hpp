// Copyright 2026 The heraldsim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef HERALD_ERRORS_HPP
#define HERALD_ERRORS_HPP

#include <stdexcept>

namespace herald {

/// Base class for domain-specific failures. Plain precondition violations
/// (bad sizes, out-of-range indices) throw std::invalid_argument directly.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Collective raising applied to a state with no ground-level population.
class RaisingOnFullError : public Error {
 public:
  using Error::Error;
};

/// Normalization of a (numerically) zero state vector.
class DegenerateStateError : public Error {
 public:
  using Error::Error;
};

/// Brute-force oracle requested beyond its supported atom count.
class SizeLimitError : public Error {
 public:
  using Error::Error;
};

/// Integration grid coarser than the stability bound allows.
class GridTooCoarseError : public Error {
 public:
  using Error::Error;
};

/// Step-halving check failed: the integration did not converge.
class NonConvergenceError : public Error {
 public:
  using Error::Error;
};

/// A numerical routine (e.g. root refinement) failed its accuracy contract.
class NumericFailure : public Error {
 public:
  using Error::Error;
};

/// The requested quantity diverges (e.g. expected repetitions at zero
/// success probability).
class InfeasibleError : public Error {
 public:
  using Error::Error;
};

}  // namespace herald

#endif  // HERALD_ERRORS_HPP
