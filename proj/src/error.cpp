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

#include "nilgraph/error.hpp"

namespace nilgraph {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::OrderCapExceeded: return "OrderCapExceeded";
    case ErrorCode::IdealCapExceeded: return "IdealCapExceeded";
    case ErrorCode::RingAxiom: return "RingAxiom";
    case ErrorCode::NotCommutative: return "NotCommutative";
    case ErrorCode::NonMonicModulus: return "NonMonicModulus";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::TableSize: return "TableSize";
    case ErrorCode::NotAdditive: return "NotAdditive";
    case ErrorCode::NotMultiplicative: return "NotMultiplicative";
    case ErrorCode::UnitNotFixed: return "UnitNotFixed";
    case ErrorCode::LeibnizFails: return "LeibnizFails";
    case ErrorCode::InvalidSigma: return "InvalidSigma";
    case ErrorCode::InvalidDelta: return "InvalidDelta";
    case ErrorCode::ZeroQ: return "ZeroQ";
    case ErrorCode::AssociativityFail: return "AssociativityFail";
    case ErrorCode::DegreeCapExceeded: return "DegreeCapExceeded";
    case ErrorCode::PreconditionUnverified: return "PreconditionUnverified";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::UnknownVertex: return "UnknownVertex";
    case ErrorCode::ConfigError: return "ConfigError";
    case ErrorCode::UnknownId: return "UnknownId";
  }
  return "Unknown";
}

std::string_view module_of(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::OrderCapExceeded:
    case ErrorCode::IdealCapExceeded:
    case ErrorCode::RingAxiom:
    case ErrorCode::NotCommutative:
    case ErrorCode::NonMonicModulus:
    case ErrorCode::InvalidArgument:
      return "ring-kernel";
    case ErrorCode::TableSize:
    case ErrorCode::NotAdditive:
    case ErrorCode::NotMultiplicative:
    case ErrorCode::UnitNotFixed:
    case ErrorCode::LeibnizFails:
      return "morphisms";
    case ErrorCode::InvalidSigma:
    case ErrorCode::InvalidDelta:
    case ErrorCode::ZeroQ:
    case ErrorCode::AssociativityFail:
    case ErrorCode::DegreeCapExceeded:
    case ErrorCode::PreconditionUnverified:
    case ErrorCode::ParseError:
      return "spbw-engine";
    case ErrorCode::UnknownVertex:
      return "graph-engine";
    case ErrorCode::ConfigError:
    case ErrorCode::UnknownId:
      return "cli";
  }
  return "unknown";
}

namespace {

std::string format_message(ErrorCode code, const std::string& detail) {
  std::string msg(module_of(code));
  msg += '/';
  msg += to_string(code);
  msg += ": ";
  msg += detail;
  return msg;
}

}  // namespace

Error::Error(ErrorCode code, const std::string& detail)
    : std::runtime_error(format_message(code, detail)), code_(code), detail_(detail) {}

}  // namespace nilgraph
