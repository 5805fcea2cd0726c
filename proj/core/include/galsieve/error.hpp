// Copyright 2026 The galsieve Authors.
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

#ifndef GALSIEVE_ERROR_HPP_
#define GALSIEVE_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace galsieve {

// Root of every exception thrown by the library. The CLI maps the concrete
// subclasses onto exit codes (config errors -> 1, data errors -> 2).
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An argument lies outside the mathematical domain of an operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

// A documented precondition (beyond simple domain checks) does not hold.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// A request would exceed a desk-scale enumeration or memory limit.
class CapacityError : public Error {
 public:
  using Error::Error;
};

// The backend cannot perform the requested operation (e.g. class partition
// of a sampling-only group).
class UnsupportedOperation : public Error {
 public:
  using Error::Error;
};

// An iterative numeric routine failed to converge.
class NumericError : public Error {
 public:
  using Error::Error;
};

// A proven identity failed to hold: always an implementation bug.
class InvariantViolation : public Error {
 public:
  using Error::Error;
};

// Persistent data is malformed (bad magic, checksum, or record).
class FormatError : public Error {
 public:
  using Error::Error;
};

// Cached data does not cover the requested range.
class DataGapError : public Error {
 public:
  using Error::Error;
};

// Stored or computed data contradicts a consistency requirement.
class DataCorruptionError : public Error {
 public:
  using Error::Error;
};

}  // namespace galsieve

#endif  // GALSIEVE_ERROR_HPP_
