// Copyright 2026 The qtower Authors
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

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace qtower {

enum class ErrorKind {
  NotHermitian,
  NotPSD,
  DimensionMismatch,
  NotIsometry,
  ArityMismatch,
  ShapeMismatch,
  LevelViolation,
  SplitOutOfRange,
  NotContraction,
  ObjectMismatch,
  InvalidChannel,
  ChannelsDiffer,
  AncillaOrder,
  BadPartition,
  NoKnownPartition,
  AbsorptionFails,
  SyntaxError,
  TypeMismatch,
  LevelError,
  LevelTooLow,
  InvalidJson,
  NumericalFailure,
};

std::string_view to_string(ErrorKind kind);

// Every failure raised by the library carries a kind so callers (and the CLI
// exit-code logic) can dispatch without parsing messages.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

inline std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NotHermitian: return "NotHermitian";
    case ErrorKind::NotPSD: return "NotPSD";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::NotIsometry: return "NotIsometry";
    case ErrorKind::ArityMismatch: return "ArityMismatch";
    case ErrorKind::ShapeMismatch: return "ShapeMismatch";
    case ErrorKind::LevelViolation: return "LevelViolation";
    case ErrorKind::SplitOutOfRange: return "SplitOutOfRange";
    case ErrorKind::NotContraction: return "NotContraction";
    case ErrorKind::ObjectMismatch: return "ObjectMismatch";
    case ErrorKind::InvalidChannel: return "InvalidChannel";
    case ErrorKind::ChannelsDiffer: return "ChannelsDiffer";
    case ErrorKind::AncillaOrder: return "AncillaOrder";
    case ErrorKind::BadPartition: return "BadPartition";
    case ErrorKind::NoKnownPartition: return "NoKnownPartition";
    case ErrorKind::AbsorptionFails: return "AbsorptionFails";
    case ErrorKind::SyntaxError: return "SyntaxError";
    case ErrorKind::TypeMismatch: return "TypeMismatch";
    case ErrorKind::LevelError: return "LevelError";
    case ErrorKind::LevelTooLow: return "LevelTooLow";
    case ErrorKind::InvalidJson: return "InvalidJson";
    case ErrorKind::NumericalFailure: return "NumericalFailure";
  }
  return "Unknown";
}

}  // namespace qtower
