// Copyright (C) 2026 The shoc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace shoc {

/// Base for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Bad argument to a library call (wrong sizes, non-conformable fields, ...).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// A configuration value failed validation. `field()` names the offending key.
class ConfigError : public Error {
 public:
  ConfigError(std::string field, const std::string& what)
      : Error(field + ": " + what), field_(std::move(field)) {}
  const std::string& field() const noexcept { return field_; }

 private:
  std::string field_;
};

/// The time integration produced non-finite values or exceeded the blow-up
/// threshold.
class InstabilityError : public Error {
 public:
  InstabilityError(const std::string& what, std::size_t step, double time, double k,
                   double k_max)
      : Error(what), step_(step), time_(time), k_(k), k_max_(k_max) {}
  std::size_t step() const noexcept { return step_; }
  double time() const noexcept { return time_; }
  double k() const noexcept { return k_; }
  double k_max() const noexcept { return k_max_; }

 private:
  std::size_t step_;
  double time_;
  double k_;
  double k_max_;
};

class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace shoc
