/*
   Copyright 2026 The convgoppa Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef CONVGOPPA_ERROR_HPP
#define CONVGOPPA_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace convgoppa {

enum class ErrorKind {
    InvalidArgument,
    NotPrime,
    Reducible,
    TooLarge,
    FieldMismatch,
    DivisionByZero,
    BothZero,
    ShapeError,
    RankDeficient,
    NotBasic,
    EnumerationCap,
    OutsideParameterSpace,
    PreconditionViolated,
    DegeneratePoint,
    F2Zero,
    BaseNotMds,
    HypothesisFailed,
    Parse,
    Internal,
};

constexpr std::string_view to_string(ErrorKind kind) noexcept {
    switch (kind) {
        case ErrorKind::InvalidArgument: return "InvalidArgument";
        case ErrorKind::NotPrime: return "NotPrime";
        case ErrorKind::Reducible: return "Reducible";
        case ErrorKind::TooLarge: return "TooLarge";
        case ErrorKind::FieldMismatch: return "FieldMismatch";
        case ErrorKind::DivisionByZero: return "DivisionByZero";
        case ErrorKind::BothZero: return "BothZero";
        case ErrorKind::ShapeError: return "ShapeError";
        case ErrorKind::RankDeficient: return "RankDeficient";
        case ErrorKind::NotBasic: return "NotBasic";
        case ErrorKind::EnumerationCap: return "EnumerationCap";
        case ErrorKind::OutsideParameterSpace: return "OutsideParameterSpace";
        case ErrorKind::PreconditionViolated: return "PreconditionViolated";
        case ErrorKind::DegeneratePoint: return "DegeneratePoint";
        case ErrorKind::F2Zero: return "F2Zero";
        case ErrorKind::BaseNotMds: return "BaseNotMds";
        case ErrorKind::HypothesisFailed: return "HypothesisFailed";
        case ErrorKind::Parse: return "Parse";
        case ErrorKind::Internal: return "Internal";
    }
    return "Unknown";
}

/// Every failure raised by the library carries a machine-checkable kind.
class Error : public std::runtime_error {
  public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

  private:
    ErrorKind kind_;
};

}  // namespace convgoppa

#endif
