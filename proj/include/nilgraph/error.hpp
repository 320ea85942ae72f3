// Copyright 2026 The nilgraph Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef NILGRAPH_ERROR_HPP
#define NILGRAPH_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace nilgraph {

enum class ErrorCode {
  // ring-kernel
  OrderCapExceeded,
  IdealCapExceeded,
  RingAxiom,
  NotCommutative,
  NonMonicModulus,
  InvalidArgument,
  // morphisms
  TableSize,
  NotAdditive,
  NotMultiplicative,
  UnitNotFixed,
  LeibnizFails,
  // spbw-engine
  InvalidSigma,
  InvalidDelta,
  ZeroQ,
  AssociativityFail,
  DegreeCapExceeded,
  PreconditionUnverified,
  ParseError,
  // graph-engine
  UnknownVertex,
  // cli
  ConfigError,
  UnknownId,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Module that owns an error code ("ring-kernel", "morphisms", ...).
std::string_view module_of(ErrorCode code) noexcept;

/// Every failure in the library surfaces as this exception. what() reads
/// "<module>/<code>: <detail>" so callers never lose the originating error.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& detail);

  ErrorCode code() const noexcept { return code_; }
  const std::string& detail() const noexcept { return detail_; }

 private:
  ErrorCode code_;
  std::string detail_;
};

}  // namespace nilgraph

#endif  // NILGRAPH_ERROR_HPP
