/*
* Copyright 2026 The mincode Authors
*
* Licensed under the Apache License, Version 2.0 (the "License");
* you may not use this file except in compliance with the License.
* You may obtain a copy of the License at
*
*      http://www.apache.org/licenses/LICENSE-2.0
*
* Unless required by applicable law or agreed to in writing, software
* distributed under the License is distributed on an "AS IS" BASIS,
* WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
* See the License for the specific language governing permissions and
* limitations under the License.
*/

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace mincode {

enum class ErrorKind {
  NotAPrimePower,
  UnsupportedOrder,
  DivisionByZero,
  DimensionMismatch,
  RankDeficient,
  EnumerationTooLarge,
  DimensionTooSmall,
  WrongCharacteristic,
  NotACodeword,
  ZeroCodeword,
  NotProjective,
  ColumnNotFound,
  InvalidProfile,
  LengthTooSmall,
  ABConditionFails,
  BadValuesLength,
  NotSelfOrthogonal,
  PaddingExhausted,
  UnsupportedDegree,
  InconsistentInputs,
  UnknownFamily,
  ConstraintViolated,
  ParseError,
  IoError,
  UnknownTable,
};

std::string_view to_string(ErrorKind kind);

/// All library failures are reported through this exception; `kind()` is the
/// stable, machine-checkable part and `what()` carries the details.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace mincode
